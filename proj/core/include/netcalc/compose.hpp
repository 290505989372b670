#ifndef NETCALC_COMPOSE_HPP
#define NETCALC_COMPOSE_HPP

#include <span>
#include <vector>

#include "netcalc/interface.hpp"
#include "netcalc/net_module.hpp"
#include "netcalc/result.hpp"

namespace netcalc {

// Where each element of a composition result came from.
enum class ElementOrigin { FromLeftOperand, FromRightOperand, Fused };

struct TraceEntry {
  ElementOrigin origin = ElementOrigin::FromLeftOperand;
  ElementId in_left = 0;   // valid for FromLeftOperand and Fused
  ElementId in_right = 0;  // valid for FromRightOperand and Fused
};

struct ComposeTrace {
  std::vector<TraceEntry> entries;      // indexed by result element id
  std::vector<MatchPair> fused_pairs;   // matches(right(M), left(N))
};

// The composition M . N. Matching partners of right(M) and left(N) fuse into
// fresh interior elements; all other elements survive; arcs are inherited
// with fused endpoints redirected (coinciding inherited arcs collapse, arcs
// form a set). left(M.N) = left(M) then matchfree(left(N), right(M));
// right(M.N) = right(N) then matchfree(right(M), left(N)).
//
// Failure reasons:
//   "invalid operand: ..."            validation failure in M or N
//   "ambiguous interface overlap: ..."  a matched element of right(M) also
//       lies in left(M), or a matched element of left(N) also lies in
//       right(N); it would be interior and interface at once.
Result<NetModule> try_compose(const NetModule& m, const NetModule& n,
                              ComposeTrace* trace = nullptr);

// Unwrapping convenience; throws std::runtime_error on failure.
NetModule compose(const NetModule& m, const NetModule& n);

// Left fold of compose over a nonempty sequence.
Result<NetModule> try_compose_all(std::span<const NetModule> ms);
NetModule compose_all(std::span<const NetModule> ms);

}  // namespace netcalc

#endif
