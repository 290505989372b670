#include "netcalc/interface.hpp"

#include <stdexcept>

namespace netcalc {

std::size_t InterfaceView::position_of(ElementId id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].id == id) return i;
  return npos;
}

int degree_at(const InterfaceView& a, std::size_t pos) {
  const Label& lbl = a.at(pos).label;
  int d = 1;
  for (std::size_t i = 0; i < pos; ++i)
    if (a.at(i).label == lbl) ++d;
  return d;
}

int degree(const InterfaceView& a, ElementId x) {
  std::size_t pos = a.position_of(x);
  if (pos == InterfaceView::npos)
    throw std::invalid_argument("degree: not a member of the interface");
  return degree_at(a, pos);
}

std::vector<MatchPair> matches(const InterfaceView& a, const InterfaceView& b) {
  std::vector<MatchPair> out;
  for (std::size_t pa = 0; pa < a.size(); ++pa) {
    const InterfaceEntry& ea = a.at(pa);
    int da = degree_at(a, pa);
    for (std::size_t pb = 0; pb < b.size(); ++pb) {
      const InterfaceEntry& eb = b.at(pb);
      if (eb.label == ea.label && degree_at(b, pb) == da) {
        out.push_back(MatchPair{ea.id, eb.id, ea.label, da});
        break;  // degrees are unique per label, at most one partner
      }
    }
  }
  return out;
}

InterfaceView matchfree(const InterfaceView& a, const InterfaceView& b) {
  std::vector<MatchPair> m = matches(a, b);
  std::vector<InterfaceEntry> out;
  for (std::size_t pa = 0; pa < a.size(); ++pa) {
    bool matched = false;
    for (const MatchPair& p : m)
      if (p.left_element == a.at(pa).id) { matched = true; break; }
    if (!matched) out.push_back(a.at(pa));
  }
  return InterfaceView(std::move(out));
}

}  // namespace netcalc
