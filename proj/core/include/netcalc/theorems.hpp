#ifndef NETCALC_THEOREMS_HPP
#define NETCALC_THEOREMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netcalc/canonical.hpp"
#include "netcalc/net_module.hpp"
#include "netcalc/run.hpp"

namespace netcalc {

enum class Claim { Theorem1, CompositionTheorem, Associativity, Identity };

const char* to_string(Claim c);

// Everything needed to reproduce a failure: the operand modules, the seed
// they came from, and human-readable notes (differing canonical forms,
// violated obligations).
struct Witness {
  std::vector<NetModule> operands;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
};

struct Verdict {
  Claim claim = Claim::Identity;
  bool holds = false;
  bool applicable = true;     // false: preconditions not met (not a failure)
  bool inconclusive = false;  // true: an enumeration was truncated
  std::vector<std::size_t> bounds;
  std::uint64_t seed = 0;
  std::string detail;
  std::optional<Witness> witness;  // present whenever holds is false
};

// Deterministic module generator. Same params, same module.
struct GenParams {
  std::uint64_t seed = 0;
  std::size_t max_places = 4;
  std::size_t max_transitions = 3;
  std::size_t max_arcs = 6;
  std::size_t max_interface = 3;
  std::size_t label_alphabet_size = 4;
};

// Valid-by-construction random module within the bounds: bipartite arcs,
// well-formed interfaces. The distribution covers empty interfaces,
// transitions in interfaces, left/right overlap, and branching places.
NetModule random_module(const GenParams& p);

// A random basic run of `m` with at most `max_steps` steps, grown by
// composing basic steps (failed extensions are skipped).
Run random_basic_run(const NetModule& m, std::uint64_t seed,
                     std::size_t max_steps);

// Checks the closure of basic runs under composition on one pair: the
// composition must be acyclic, its left interface exactly the places
// without ingoing arcs, its right interface exactly those without outgoing
// arcs, and no arc may point from the second operand's part into the
// first's. Precondition: both operands basic runs (else "operands not basic
// runs"); an undefined composition yields a not-applicable verdict.
Verdict check_theorem1(const Run& r, const Run& s);

// Compares runs_upto(compose(M,N), k) with the pairwise compositions of
// runs_upto(M, k) and runs_upto(N, k) that are runs with at most k
// transitions, as canonical-class sets. By the decomposition argument,
// k-bounded factors suffice: a transition of the composition maps to a
// transition of M, of N, or a fused pair, so each factor needs at most k.
// Truncation anywhere makes the verdict inconclusive instead of false.
// detail reports class counts and whether the right side is a subset of the
// left (the inclusion direction that holds unconditionally).
Verdict check_composition_theorem(const NetModule& m, const NetModule& n,
                                  std::size_t k, const StepUniverse& universe,
                                  std::size_t work_budget = 2'000'000);

// compose(compose(A,B),C) vs compose(A,compose(B,C)), up to isomorphism.
// Cases where exactly one grouping is defined count as not applicable.
Verdict check_associativity(const NetModule& a, const NetModule& b,
                            const NetModule& c);

// compose(M, empty) and compose(empty, M) are both isomorphic to M.
Verdict check_identity(const NetModule& m);

// Greedy witness shrinking: drops arcs, interface entries, and elements of
// the operand modules while `still_fails` keeps returning true; stops at a
// local minimum. Throws std::invalid_argument ("stale witness") when the
// witness does not fail to begin with.
using FailurePredicate = std::function<bool(const std::vector<NetModule>&)>;
Witness shrink(const Witness& w, const FailurePredicate& still_fails);

// Shrinks with the canned predicate for the verdict's claim (identity /
// associativity re-checked on the shrunken operands).
Witness shrink(const Verdict& failed);

}  // namespace netcalc

#endif
