#ifndef NETCALC_STEP_HPP
#define NETCALC_STEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "netcalc/net_module.hpp"

namespace netcalc {

// A single occurrence of a transition: a net module with exactly one
// transition u, whose places mirror, label for label, the arc pattern
// around u's label in the host module.
struct Step {
  NetModule net;
  Label host_transition_label;  // Transition kind; equals the label of u
};

struct StepCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

// True iff S has exactly one transition u and for every place p of S:
// arc (p,u) exists iff (label(p), label(u)) is a label-level arc of M, and
// arc (u,p) exists iff (label(u), label(p)) is one. Places with labels not
// adjacent to label(u) in M satisfy both conditions vacuously.
StepCheck is_step_of(const NetModule& m, const NetModule& s);

// The canonical step of transition t: one place per distinct label adjacent
// to label(t) at label level, ordered by first occurrence in M's element
// order. Pre-only places form the left interface, post-only places the
// right; self-loop places carry both arcs and sit in neither interface; the
// transition is interior. Throws std::invalid_argument for an unknown or
// non-transition id.
Step basic_step(const NetModule& m, ElementId t);

struct StepEnumeration {
  std::vector<Step> steps;
  bool truncated = false;
};

// All steps sharing basic_step(m, t)'s element/arc skeleton, with every
// element (places and the transition) assigned to one of left / right /
// neither. Deterministic base-3 order over skeleton elements; interface
// order within each side follows skeleton element order; duplicate-free
// under canonical form; truncated at `budget`.
StepEnumeration enumerate_steps(const NetModule& m, ElementId t,
                                std::size_t budget);

}  // namespace netcalc

#endif
