#ifndef NETCALC_LABEL_HPP
#define NETCALC_LABEL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>

namespace netcalc {

// Places and transitions draw their names from two separate alphabets: a
// place label never equals a transition label, even for identical text.
enum class NodeKind : std::uint8_t { Place, Transition };

inline const char* to_string(NodeKind k) {
  return k == NodeKind::Place ? "place" : "transition";
}

struct Label {
  NodeKind kind = NodeKind::Place;
  std::string name;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label& a, const Label& b) {
    return std::tie(a.kind, a.name) <=> std::tie(b.kind, b.name);
  }
};

inline Label place_label(std::string name) {
  return Label{NodeKind::Place, std::move(name)};
}

inline Label transition_label(std::string name) {
  return Label{NodeKind::Transition, std::move(name)};
}

struct LabelHash {
  std::size_t operator()(const Label& l) const {
    std::size_t h = std::hash<std::string>{}(l.name);
    return h * 2u + static_cast<std::size_t>(l.kind);
  }
};

}  // namespace netcalc

#endif
