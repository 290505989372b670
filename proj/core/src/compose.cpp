#include "netcalc/compose.hpp"

#include <set>
#include <stdexcept>

namespace netcalc {

Result<NetModule> try_compose(const NetModule& m, const NetModule& n,
                              ComposeTrace* trace) {
  {
    std::vector<Violation> vm = validate(m);
    if (!vm.empty())
      return Result<NetModule>::fail("invalid operand: left: " + vm.front().rule +
                                     " (" + vm.front().detail + ")");
    std::vector<Violation> vn = validate(n);
    if (!vn.empty())
      return Result<NetModule>::fail("invalid operand: right: " + vn.front().rule +
                                     " (" + vn.front().detail + ")");
  }

  const std::vector<MatchPair> fused = matches(m.right_view(), n.left_view());

  std::set<ElementId> m_matched, n_matched;
  for (const MatchPair& p : fused) {
    m_matched.insert(p.left_element);
    n_matched.insert(p.right_element);
  }
  // A matched element may not also sit in the same module's opposite
  // interface: it would be interior and interface of the result at once.
  for (ElementId e : m.left)
    if (m_matched.count(e))
      return Result<NetModule>::fail(
          "ambiguous interface overlap: matched element \"" +
          m.elements[e].name + "\" of the left operand's right interface also "
          "lies in its left interface");
  for (ElementId e : n.right)
    if (n_matched.count(e))
      return Result<NetModule>::fail(
          "ambiguous interface overlap: matched element \"" +
          n.elements[e].name + "\" of the right operand's left interface also "
          "lies in its right interface");

  // Layout: M survivors, N survivors, then one fused element per match.
  const ElementId none = static_cast<ElementId>(-1);
  std::vector<ElementId> mmap(m.size(), none), nmap(n.size(), none);
  NetModule out;
  std::vector<TraceEntry> entries;
  for (ElementId e = 0; e < m.size(); ++e) {
    if (m_matched.count(e)) continue;
    mmap[e] = static_cast<ElementId>(out.elements.size());
    out.elements.push_back(m.elements[e]);
    entries.push_back({ElementOrigin::FromLeftOperand, e, 0});
  }
  for (ElementId e = 0; e < n.size(); ++e) {
    if (n_matched.count(e)) continue;
    nmap[e] = static_cast<ElementId>(out.elements.size());
    out.elements.push_back(n.elements[e]);
    entries.push_back({ElementOrigin::FromRightOperand, 0, e});
  }
  for (const MatchPair& p : fused) {
    ElementId id = static_cast<ElementId>(out.elements.size());
    mmap[p.left_element] = id;
    nmap[p.right_element] = id;
    out.elements.push_back(p.shared_label);
    entries.push_back({ElementOrigin::Fused, p.left_element, p.right_element});
  }

  // Arcs are inherited; a fused element takes over the arcs of both origins.
  for (const Arc& a : m.arcs) out.arcs.push_back({mmap[a.src], mmap[a.dst]});
  for (const Arc& a : n.arcs) out.arcs.push_back({nmap[a.src], nmap[a.dst]});
  normalize_arcs(out);

  const InterfaceView left_rest = matchfree(n.left_view(), m.right_view());
  const InterfaceView right_rest = matchfree(m.right_view(), n.left_view());
  for (ElementId e : m.left) out.left.push_back(mmap[e]);
  for (const InterfaceEntry& e : left_rest.entries()) out.left.push_back(nmap[e.id]);
  for (ElementId e : n.right) out.right.push_back(nmap[e]);
  for (const InterfaceEntry& e : right_rest.entries()) out.right.push_back(mmap[e.id]);

  if (trace) {
    trace->entries = std::move(entries);
    trace->fused_pairs = fused;
  }
  return Result<NetModule>::ok(std::move(out));
}

NetModule compose(const NetModule& m, const NetModule& n) {
  Result<NetModule> r = try_compose(m, n);
  if (!r) throw std::runtime_error("compose: " + r.reason());
  return std::move(r).take();
}

Result<NetModule> try_compose_all(std::span<const NetModule> ms) {
  if (ms.empty())
    return Result<NetModule>::fail("compose_all: empty sequence");
  NetModule acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) {
    Result<NetModule> r = try_compose(acc, ms[i]);
    if (!r) return r;
    acc = std::move(r).take();
  }
  return Result<NetModule>::ok(std::move(acc));
}

NetModule compose_all(std::span<const NetModule> ms) {
  Result<NetModule> r = try_compose_all(ms);
  if (!r) throw std::runtime_error("compose_all: " + r.reason());
  return std::move(r).take();
}

}  // namespace netcalc
