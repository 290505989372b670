#ifndef NETCALC_RUN_HPP
#define NETCALC_RUN_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "netcalc/canonical.hpp"
#include "netcalc/compose.hpp"
#include "netcalc/net_module.hpp"
#include "netcalc/result.hpp"
#include "netcalc/step.hpp"

namespace netcalc {

// A run: an acyclic net module with unbranched places, built inductively by
// composing steps. Provenance stores each step's canonical form in
// composition order; folding the decoded steps reproduces the net up to
// isomorphism.
struct Run {
  NetModule net;
  std::vector<CanonicalForm> provenance;
};

// Strict enforces acyclicity and unbranched places on every extension.
// OrderOnly drops the unbranchedness requirement, keeping only the partial
// order condition; for experimentation, not the default.
enum class RunDiscipline { Strict, OrderOnly };

// Which steps drive enumeration: the finite canonical steps (one per
// transition label pattern), or every interface designation of each
// skeleton, truncated per transition at `step_budget`.
struct StepUniverse {
  enum Kind { Basic, All };
  Kind kind = Basic;
  std::size_t step_budget = 4096;  // per transition, All only

  static StepUniverse basic() { return StepUniverse{Basic, 0}; }
  static StepUniverse all(std::size_t budget = 4096) {
    return StepUniverse{All, budget};
  }
};

// The deduplicated steps of the chosen universe, in deterministic order.
std::vector<Step> step_universe_of(const NetModule& m, const StepUniverse& u,
                                   bool* truncated = nullptr);

// Composes R with step S; accepts iff the result is acyclic and (Strict)
// all places remain unbranched. Failure reasons: "cycle introduced",
// "place branching introduced", or a propagated composition failure.
Result<Run> extend_run(const Run& r, const Step& s,
                       RunDiscipline discipline = RunDiscipline::Strict);

Run empty_run();

// A finite window onto runs(M): canonical forms of every run with at most
// `bound` transitions over the enumeration universe. `truncated` marks a
// sound under-approximation after budget exhaustion.
struct RunClassSet {
  std::set<CanonicalForm> classes;
  std::size_t bound = 0;
  bool truncated = false;

  bool contains(const CanonicalForm& c) const { return classes.count(c) != 0; }
  std::size_t size() const { return classes.size(); }
};

// Breadth-first inductive extension, deduplicating by canonical form.
// Always contains the empty run's class. `work_budget` caps composition
// attempts. Representatives (one replayable Run per class) are exposed via
// the optional out parameter.
RunClassSet runs_upto(const NetModule& m, std::size_t bound,
                      const StepUniverse& universe,
                      std::size_t work_budget = 2'000'000,
                      std::vector<Run>* representatives = nullptr,
                      RunDiscipline discipline = RunDiscipline::Strict);

// True iff left(R) is exactly the places without ingoing arcs and right(R)
// exactly the places without outgoing arcs (as sets), with no transition in
// either interface.
bool is_basic_run(const NetModule& net);
inline bool is_basic_run(const Run& r) { return is_basic_run(r.net); }

// Def-9 style set composition: all pairwise compositions that are defined
// and are runs (acyclic, unbranched); others are filtered, not errors.
RunClassSet compose_run_sets(const RunClassSet& a, const RunClassSet& b);

// Searches for a sequence of steps of M whose left fold is isomorphic to R,
// within the step universe; nullopt when none exists. Backtracking over
// admissible next steps, pruned by canonical-form memoization and by
// element/label-count monotonicity.
std::optional<std::vector<Step>> recognize_run(const NetModule& m,
                                               const NetModule& r,
                                               const StepUniverse& universe);

}  // namespace netcalc

#endif
