#ifndef NETCALC_CANONICAL_HPP
#define NETCALC_CANONICAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netcalc/net_module.hpp"

namespace netcalc {

// Identity-free encoding of a net module. Two modules have equal canonical
// bytes exactly when they are isomorphic. The bytes are a well-formed
// serialized module document, so canonical forms can be decoded again.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes <=> b.bytes;
  }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const {
    return std::hash<std::string>{}(c.bytes);
  }
};

// Module isomorphism: a bijection on elements preserving kind, label, arcs,
// interface membership, and the order of equally labeled entries within each
// interface (equivalently, every interface element keeps its degree).
// Entries of distinct labels may trade absolute positions; the matching
// algebra never observes those, and run-set comparisons require ignoring
// them. A witness bijection (M element -> N element) is produced on success.
bool is_isomorphic(const NetModule& m, const NetModule& n,
                   std::vector<ElementId>* witness = nullptr);

// Deterministic canonical encoding. Interface anchors pin interface
// elements; interior vertices are resolved by iterative neighborhood-label
// refinement with backtracking on ties, taking the least certificate.
// Throws std::invalid_argument when validate(m) reports violations.
CanonicalForm canonical_form(const NetModule& m);

// Parses canonical bytes back into a module (the canonical representative).
NetModule decode_canonical(const CanonicalForm& c);

}  // namespace netcalc

#endif
