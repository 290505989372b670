#ifndef NETCALC_NET_MODULE_HPP
#define NETCALC_NET_MODULE_HPP

#include <string>
#include <vector>

#include "netcalc/interface.hpp"
#include "netcalc/label.hpp"

namespace netcalc {

struct Arc {
  ElementId src = 0;
  ElementId dst = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A bipartite net graph over places and transitions, together with an
// ordered, labeled left and right interface. The same structure models
// systems, steps, and runs. Element ids are positions in `elements`.
struct NetModule {
  std::vector<Label> elements;
  std::vector<Arc> arcs;            // kept sorted and duplicate-free by all operations
  std::vector<ElementId> left;      // listing order is the interface order
  std::vector<ElementId> right;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty() && arcs.empty() && left.empty() && right.empty(); }

  bool is_place(ElementId e) const { return elements[e].kind == NodeKind::Place; }
  bool is_transition(ElementId e) const { return elements[e].kind == NodeKind::Transition; }
  const Label& label_of(ElementId e) const { return elements[e]; }

  std::size_t place_count() const;
  std::size_t transition_count() const;

  bool has_arc(ElementId src, ElementId dst) const;
  std::size_t in_degree(ElementId e) const;
  std::size_t out_degree(ElementId e) const;

  InterfaceView left_view() const;
  InterfaceView right_view() const;

  // Elements in neither interface. Computed on demand, never stored.
  std::vector<ElementId> interior() const;

  friend bool operator==(const NetModule&, const NetModule&) = default;
};

// The empty net module.
NetModule empty_module();

// Normalizes the arc set (sort, dedupe). Operations producing modules call
// this; parsers report duplicates instead.
void normalize_arcs(NetModule& m);

struct Violation {
  std::string rule;    // e.g. "bipartiteness", "dangling interface reference"
  std::string detail;  // offending element/arc, human readable
};

// All structural violations of `m`; empty means the module is well formed.
// Left/right overlap is legal and reported separately via `overlap_warning`.
std::vector<Violation> validate(const NetModule& m);

// True when some element sits in both interfaces. Composition refuses to
// fuse such an element; everything else tolerates the overlap.
bool has_interface_overlap(const NetModule& m);

// No directed arc cycle.
bool is_acyclic(const NetModule& m);

// Every place has at most one ingoing and one outgoing arc.
bool has_unbranched_places(const NetModule& m);

}  // namespace netcalc

#endif
