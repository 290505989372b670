#include "netcalc/net_module.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace netcalc {

std::size_t NetModule::place_count() const {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(),
                    [](const Label& l) { return l.kind == NodeKind::Place; }));
}

std::size_t NetModule::transition_count() const {
  return elements.size() - place_count();
}

bool NetModule::has_arc(ElementId src, ElementId dst) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{src, dst});
}

std::size_t NetModule::in_degree(ElementId e) const {
  std::size_t d = 0;
  for (const Arc& a : arcs)
    if (a.dst == e) ++d;
  return d;
}

std::size_t NetModule::out_degree(ElementId e) const {
  std::size_t d = 0;
  for (const Arc& a : arcs)
    if (a.src == e) ++d;
  return d;
}

InterfaceView NetModule::left_view() const {
  std::vector<InterfaceEntry> es;
  es.reserve(left.size());
  for (ElementId e : left) es.push_back(InterfaceEntry{e, elements[e]});
  return InterfaceView(std::move(es));
}

InterfaceView NetModule::right_view() const {
  std::vector<InterfaceEntry> es;
  es.reserve(right.size());
  for (ElementId e : right) es.push_back(InterfaceEntry{e, elements[e]});
  return InterfaceView(std::move(es));
}

std::vector<ElementId> NetModule::interior() const {
  std::set<ElementId> iface(left.begin(), left.end());
  iface.insert(right.begin(), right.end());
  std::vector<ElementId> out;
  for (ElementId e = 0; e < elements.size(); ++e)
    if (!iface.count(e)) out.push_back(e);
  return out;
}

NetModule empty_module() { return NetModule{}; }

void normalize_arcs(NetModule& m) {
  std::sort(m.arcs.begin(), m.arcs.end());
  m.arcs.erase(std::unique(m.arcs.begin(), m.arcs.end()), m.arcs.end());
}

namespace {

std::string describe(const NetModule& m, ElementId e) {
  if (e >= m.size()) return "element #" + std::to_string(e);
  return std::string(to_string(m.elements[e].kind)) + " #" +
         std::to_string(e) + " \"" + m.elements[e].name + "\"";
}

}  // namespace

std::vector<Violation> validate(const NetModule& m) {
  std::vector<Violation> out;
  const std::size_t n = m.size();

  for (const Arc& a : m.arcs) {
    if (a.src >= n || a.dst >= n) {
      out.push_back({"dangling arc endpoint",
                     "arc " + std::to_string(a.src) + " -> " + std::to_string(a.dst)});
      continue;
    }
    if (m.elements[a.src].kind == m.elements[a.dst].kind)
      out.push_back({"bipartiteness",
                     "arc " + describe(m, a.src) + " -> " + describe(m, a.dst)});
  }
  for (std::size_t i = 0; i + 1 < m.arcs.size(); ++i)
    if (m.arcs[i] == m.arcs[i + 1])
      out.push_back({"duplicate arc", "arc " + std::to_string(m.arcs[i].src) +
                                          " -> " + std::to_string(m.arcs[i].dst)});
  if (!std::is_sorted(m.arcs.begin(), m.arcs.end())) {
    // tolerate unsorted arc storage but still detect duplicates
    std::vector<Arc> sorted = m.arcs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1])
        out.push_back({"duplicate arc",
                       "arc " + std::to_string(sorted[i].src) + " -> " +
                           std::to_string(sorted[i].dst)});
  }

  const char* side[2] = {"left", "right"};
  const std::vector<ElementId>* ifaces[2] = {&m.left, &m.right};
  for (int s = 0; s < 2; ++s) {
    std::set<ElementId> seen;
    for (ElementId e : *ifaces[s]) {
      if (e >= n) {
        out.push_back({"dangling interface reference",
                       std::string(side[s]) + " interface cites element #" +
                           std::to_string(e)});
        continue;
      }
      if (!seen.insert(e).second)
        out.push_back({"duplicate interface entry",
                       std::string(side[s]) + " interface lists " + describe(m, e) +
                           " twice"});
    }
  }
  return out;
}

bool has_interface_overlap(const NetModule& m) {
  std::set<ElementId> l(m.left.begin(), m.left.end());
  for (ElementId e : m.right)
    if (l.count(e)) return true;
  return false;
}

bool is_acyclic(const NetModule& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<ElementId>> adj(n);
  for (const Arc& a : m.arcs)
    if (a.src < n && a.dst < n) adj[a.src].push_back(a.dst);
  // iterative three-color DFS
  std::vector<char> state(n, 0);  // 0 new, 1 open, 2 done
  std::vector<std::pair<ElementId, std::size_t>> stack;
  for (ElementId root = 0; root < n; ++root) {
    if (state[root]) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        ElementId w = adj[v][next++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool has_unbranched_places(const NetModule& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> ind(n, 0), outd(n, 0);
  for (const Arc& a : m.arcs) {
    if (a.src < n) ++outd[a.src];
    if (a.dst < n) ++ind[a.dst];
  }
  for (ElementId e = 0; e < n; ++e)
    if (m.is_place(e) && (ind[e] > 1 || outd[e] > 1)) return false;
  return true;
}

}  // namespace netcalc
