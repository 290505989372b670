#include "netcalc/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "netcalc/textio.hpp"

namespace netcalc {

namespace {

// Interface entries reordered by (kind, name), stable. Equally labeled
// entries keep their relative order, so degrees are preserved; entries of
// distinct labels are brought into a fixed order. Returns, per element, its
// position in the normalized sequence (-1 when absent).
std::vector<int> normalized_positions(const NetModule& m,
                                      const std::vector<ElementId>& iface) {
  std::vector<ElementId> order(iface);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) {
                     return m.elements[a] < m.elements[b];
                   });
  std::vector<int> pos(m.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = static_cast<int>(i);
  return pos;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const NetModule& m)
      : m_(m),
        lpos_(normalized_positions(m, m.left)),
        rpos_(normalized_positions(m, m.right)),
        in_(m.size()),
        out_(m.size()) {
    for (const Arc& a : m.arcs) {
      out_[a.src].push_back(a.dst);
      in_[a.dst].push_back(a.src);
    }
  }

  std::string run() {
    if (m_.size() == 0) return certificate({});
    search(initial_colors());
    return best_;
  }

 private:
  using Colors = std::vector<int>;

  Colors initial_colors() const {
    using Key = std::tuple<NodeKind, std::string, int, int>;
    std::vector<Key> keys(m_.size());
    for (ElementId e = 0; e < m_.size(); ++e)
      keys[e] = {m_.elements[e].kind, m_.elements[e].name, lpos_[e], rpos_[e]};
    std::vector<Key> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colors c(m_.size());
    for (ElementId e = 0; e < m_.size(); ++e)
      c[e] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[e]) - sorted.begin());
    return c;
  }

  // Iterative neighborhood refinement to a fixpoint.
  void refine(Colors& c) const {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::size_t classes = count_classes(c);
    for (;;) {
      std::vector<Sig> sigs(m_.size());
      for (ElementId e = 0; e < m_.size(); ++e) {
        std::vector<int> ins, outs;
        ins.reserve(in_[e].size());
        outs.reserve(out_[e].size());
        for (ElementId p : in_[e]) ins.push_back(c[p]);
        for (ElementId s : out_[e]) outs.push_back(c[s]);
        std::sort(ins.begin(), ins.end());
        std::sort(outs.begin(), outs.end());
        sigs[e] = {c[e], std::move(ins), std::move(outs)};
      }
      std::vector<Sig> sorted(sigs);
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (ElementId e = 0; e < m_.size(); ++e)
        c[e] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), sigs[e]) - sorted.begin());
      std::size_t now = count_classes(c);
      if (now == classes) return;
      classes = now;
    }
  }

  static std::size_t count_classes(const Colors& c) {
    return std::set<int>(c.begin(), c.end()).size();
  }

  void search(Colors c) {
    refine(c);
    // first non-singleton class, by color value
    std::map<int, std::vector<ElementId>> classes;
    for (ElementId e = 0; e < m_.size(); ++e) classes[c[e]].push_back(e);
    const std::vector<ElementId>* target = nullptr;
    for (const auto& [color, members] : classes)
      if (members.size() > 1) { target = &members; break; }
    if (!target) {
      if (++leaves_ > kLeafBudget)
        throw std::runtime_error("canonical_form: search budget exceeded");
      std::string cert = certificate(c);
      if (best_.empty() || cert < best_) best_ = cert;
      return;
    }
    // Exact structural twins yield identical subtrees; explore one of each.
    std::vector<ElementId> reps;
    for (ElementId e : *target) {
      bool twin = false;
      for (ElementId r : reps)
        if (exact_twins(e, r)) { twin = true; break; }
      if (!twin) reps.push_back(e);
    }
    for (ElementId e : reps) {
      Colors split(c);
      for (int& col : split) col *= 2;
      split[e] -= 1;
      search(std::move(split));
    }
  }

  bool exact_twins(ElementId a, ElementId b) const {
    auto nbrs = [&](const std::vector<ElementId>& adj, ElementId self,
                    ElementId other) {
      std::multiset<ElementId> s;
      for (ElementId x : adj)
        s.insert(x == self || x == other ? static_cast<ElementId>(-1) : x);
      return s;
    };
    return nbrs(in_[a], a, b) == nbrs(in_[b], b, a) &&
           nbrs(out_[a], a, b) == nbrs(out_[b], b, a);
  }

  // Discrete coloring -> element order -> serialized representative.
  std::string certificate(const Colors& c) const {
    std::vector<ElementId> order(m_.size());
    for (ElementId e = 0; e < m_.size(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(),
              [&](ElementId a, ElementId b) { return c[a] < c[b]; });
    std::vector<ElementId> pos(m_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      pos[order[i]] = static_cast<ElementId>(i);

    NetModule rep;
    rep.elements.reserve(m_.size());
    for (ElementId e : order) rep.elements.push_back(m_.elements[e]);
    for (const Arc& a : m_.arcs) rep.arcs.push_back({pos[a.src], pos[a.dst]});
    normalize_arcs(rep);
    rep.left.resize(m_.left.size());
    rep.right.resize(m_.right.size());
    for (ElementId e = 0; e < m_.size(); ++e) {
      if (lpos_[e] >= 0) rep.left[lpos_[e]] = pos[e];
      if (rpos_[e] >= 0) rep.right[rpos_[e]] = pos[e];
    }
    return serialize_module(rep, "C");
  }

  static constexpr std::size_t kLeafBudget = 200000;

  const NetModule& m_;
  std::vector<int> lpos_, rpos_;
  std::vector<std::vector<ElementId>> in_, out_;
  std::string best_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const NetModule& m) {
  std::vector<Violation> v = validate(m);
  if (!v.empty())
    throw std::invalid_argument("canonical_form: validation failed: " +
                                v.front().rule + " (" + v.front().detail + ")");
  return CanonicalForm{Canonicalizer(m).run()};
}

NetModule decode_canonical(const CanonicalForm& c) {
  ParseOutcome out = parse_module(c.bytes);
  if (!out)
    throw std::invalid_argument("decode_canonical: malformed canonical bytes: " +
                                (out.errors.empty() ? std::string("?")
                                                    : out.errors.front().message));
  return out.doc->body;
}

namespace {

// Forced interface anchors: the i-th entry of a given label in M's interface
// must map to the i-th entry of that label in N's. Returns false on
// conflict.
bool anchor_interface(const NetModule& m, const NetModule& n,
                      const std::vector<ElementId>& im,
                      const std::vector<ElementId>& in,
                      std::vector<ElementId>& map,
                      std::vector<char>& used) {
  if (im.size() != in.size()) return false;
  std::map<Label, std::vector<ElementId>> by_label_n;
  for (ElementId e : in) by_label_n[n.elements[e]].push_back(e);
  std::map<Label, std::size_t> next;
  for (ElementId e : im) {
    const Label& l = m.elements[e];
    auto it = by_label_n.find(l);
    if (it == by_label_n.end()) return false;
    std::size_t& rank = next[l];
    if (rank >= it->second.size()) return false;
    ElementId target = it->second[rank++];
    const ElementId none = static_cast<ElementId>(-1);
    if (map[e] != none) {
      if (map[e] != target) return false;
      continue;
    }
    if (used[target]) return false;
    map[e] = target;
    used[target] = 1;
  }
  // all of N's entries must be consumed
  for (auto& [l, v] : by_label_n)
    if (next[l] != v.size()) return false;
  return true;
}

struct IsoSearch {
  const NetModule& m;
  const NetModule& n;
  std::vector<ElementId> map;  // m element -> n element or -1
  std::vector<char> used;      // n side

  bool compatible(ElementId u, ElementId v) const {
    if (!(m.elements[u] == n.elements[v])) return false;
    const ElementId none = static_cast<ElementId>(-1);
    for (ElementId g = 0; g < m.size(); ++g) {
      ElementId h = map[g];
      if (h == none) continue;
      if (m.has_arc(u, g) != n.has_arc(v, h)) return false;
      if (m.has_arc(g, u) != n.has_arc(h, v)) return false;
    }
    return true;
  }

  bool extend(const std::vector<ElementId>& todo, std::size_t i) {
    if (i == todo.size()) return verify();
    ElementId u = todo[i];
    for (ElementId v = 0; v < n.size(); ++v) {
      if (used[v]) continue;
      if (!compatible(u, v)) continue;
      map[u] = v;
      used[v] = 1;
      if (extend(todo, i + 1)) return true;
      map[u] = static_cast<ElementId>(-1);
      used[v] = 0;
    }
    return false;
  }

  bool verify() const {
    if (m.arcs.size() != n.arcs.size()) return false;
    for (const Arc& a : m.arcs)
      if (!n.has_arc(map[a.src], map[a.dst])) return false;
    return true;
  }
};

}  // namespace

bool is_isomorphic(const NetModule& m_in, const NetModule& n_in,
                   std::vector<ElementId>* witness) {
  NetModule m = m_in, n = n_in;  // has_arc needs sorted arcs
  normalize_arcs(m);
  normalize_arcs(n);
  if (m.size() != n.size() || m.arcs.size() != n.arcs.size() ||
      m.left.size() != n.left.size() || m.right.size() != n.right.size())
    return false;
  {
    std::multiset<Label> lm(m.elements.begin(), m.elements.end());
    std::multiset<Label> ln(n.elements.begin(), n.elements.end());
    if (lm != ln) return false;
  }

  IsoSearch s{m, n,
              std::vector<ElementId>(m.size(), static_cast<ElementId>(-1)),
              std::vector<char>(n.size(), 0)};
  if (!anchor_interface(m, n, m.left, n.left, s.map, s.used)) return false;
  if (!anchor_interface(m, n, m.right, n.right, s.map, s.used)) return false;

  // anchored pairs must already be arc-consistent with one another
  for (const Arc& a : m.arcs) {
    const ElementId none = static_cast<ElementId>(-1);
    if (s.map[a.src] != none && s.map[a.dst] != none &&
        !n.has_arc(s.map[a.src], s.map[a.dst]))
      return false;
  }

  std::vector<ElementId> todo;
  for (ElementId e = 0; e < m.size(); ++e)
    if (s.map[e] == static_cast<ElementId>(-1)) todo.push_back(e);
  // most-constrained first: rarer labels early
  std::map<Label, std::size_t> freq;
  for (const Label& l : m.elements) ++freq[l];
  std::stable_sort(todo.begin(), todo.end(), [&](ElementId a, ElementId b) {
    return freq[m.elements[a]] < freq[m.elements[b]];
  });

  if (!s.extend(todo, 0)) return false;
  if (witness) *witness = s.map;
  return true;
}

}  // namespace netcalc
