#ifndef NETCALC_INTERFACE_HPP
#define NETCALC_INTERFACE_HPP

#include <cstdint>
#include <vector>

#include "netcalc/label.hpp"

namespace netcalc {

// Elements are identified by their position in the owning module's element
// table; interface views carry (id, label) pairs so the algebra also works on
// free-standing interfaces.
using ElementId = std::uint32_t;

struct InterfaceEntry {
  ElementId id = 0;
  Label label;

  friend bool operator==(const InterfaceEntry&, const InterfaceEntry&) = default;
};

// A finite, totally ordered, labeled set. The sequence order is the order.
class InterfaceView {
 public:
  InterfaceView() = default;
  explicit InterfaceView(std::vector<InterfaceEntry> entries)
      : entries_(std::move(entries)) {}

  const std::vector<InterfaceEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const InterfaceEntry& at(std::size_t pos) const { return entries_.at(pos); }

  // Position of an element id, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position_of(ElementId id) const;
  bool contains(ElementId id) const { return position_of(id) != npos; }

  friend bool operator==(const InterfaceView&, const InterfaceView&) = default;

 private:
  std::vector<InterfaceEntry> entries_;
};

// A pair of equally labeled, equally ranked elements of two interfaces,
// fused into one element by composition.
struct MatchPair {
  ElementId left_element = 0;   // element of the first interface
  ElementId right_element = 0;  // element of the second interface
  Label shared_label;
  int shared_degree = 0;

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

// 1-based rank of the entry at `pos` among equally labeled entries of A.
int degree_at(const InterfaceView& a, std::size_t pos);

// 1-based rank of element `x` in A. Throws std::invalid_argument ("not a
// member") if x is not an entry of A.
int degree(const InterfaceView& a, ElementId x);

// Every (a in A, b in B) with equal label and equal degree, ordered by the
// position of a in A. The pairing is a partial bijection.
std::vector<MatchPair> matches(const InterfaceView& a, const InterfaceView& b);

// The subsequence of A whose entries have no matching partner in B.
InterfaceView matchfree(const InterfaceView& a, const InterfaceView& b);

}  // namespace netcalc

#endif
