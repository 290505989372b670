#include "netcalc/dot.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netcalc {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void emit_node(std::ostringstream& out, const NetModule& m, ElementId e,
               const std::string& indent) {
  out << indent << "n" << e << " [label=\"" << escape(m.elements[e].name)
      << "\", shape=" << (m.is_place(e) ? "circle" : "box") << "];\n";
}

// Longest-path topological level of every node; arcs are acyclic here.
std::vector<std::size_t> topo_levels(const NetModule& m) {
  std::vector<std::size_t> level(m.size(), 0);
  std::vector<std::size_t> indeg(m.size(), 0);
  for (const Arc& a : m.arcs) ++indeg[a.dst];
  std::vector<ElementId> queue;
  for (ElementId e = 0; e < m.size(); ++e)
    if (indeg[e] == 0) queue.push_back(e);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId v = queue[i];
    for (const Arc& a : m.arcs) {
      if (a.src != v) continue;
      level[a.dst] = std::max(level[a.dst], level[v] + 1);
      if (--indeg[a.dst] == 0) queue.push_back(a.dst);
    }
  }
  return level;
}

}  // namespace

std::string to_dot(const NetModule& m, DotStyle style, const std::string& name) {
  std::vector<Violation> v = validate(m);
  if (!v.empty())
    throw std::invalid_argument("to_dot: invalid module: " + v.front().rule);
  if (style == DotStyle::Run && !is_acyclic(m))
    throw std::invalid_argument("to_dot: run style requires an acyclic module");

  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n";
  out << "  rankdir=LR;\n";

  std::set<ElementId> in_left(m.left.begin(), m.left.end());
  std::set<ElementId> drawn;

  if (!m.left.empty()) {
    out << "  subgraph cluster_left {\n"
        << "    label=\"left\";\n    style=dashed;\n";
    for (ElementId e : m.left) {
      emit_node(out, m, e, "    ");
      drawn.insert(e);
    }
    out << "  }\n";
  }
  if (!m.right.empty()) {
    bool any = false;
    std::ostringstream cluster;
    for (ElementId e : m.right) {
      if (in_left.count(e)) continue;  // a node joins one cluster only
      emit_node(cluster, m, e, "    ");
      drawn.insert(e);
      any = true;
    }
    if (any)
      out << "  subgraph cluster_right {\n"
          << "    label=\"right\";\n    style=dashed;\n"
          << cluster.str() << "  }\n";
  }

  for (ElementId e = 0; e < m.size(); ++e)
    if (!drawn.count(e)) emit_node(out, m, e, "  ");

  if (style == DotStyle::Run && m.size() > 0) {
    std::vector<std::size_t> level = topo_levels(m);
    std::size_t depth = 0;
    for (std::size_t l : level) depth = std::max(depth, l + 1);
    for (std::size_t l = 0; l < depth; ++l) {
      std::vector<ElementId> members;
      for (ElementId e = 0; e < m.size(); ++e)
        if (level[e] == l && !drawn.count(e)) members.push_back(e);
      if (members.size() < 2) continue;
      out << "  { rank=same;";
      for (ElementId e : members) out << " n" << e << ";";
      out << " }\n";
    }
  }

  for (const Arc& a : m.arcs)
    out << "  n" << a.src << " -> n" << a.dst << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace netcalc
