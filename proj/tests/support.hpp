#ifndef NETCALC_TESTS_SUPPORT_HPP
#define NETCALC_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netcalc/interface.hpp"
#include "netcalc/net_module.hpp"
#include "netcalc/textio.hpp"

namespace netcalc::test {

// Compact module builder: kinds "p"/"t", arcs by index.
inline NetModule mk(const std::vector<std::pair<char, std::string>>& els,
                    const std::vector<std::pair<int, int>>& arcs,
                    const std::vector<int>& left = {},
                    const std::vector<int>& right = {}) {
  NetModule m;
  for (const auto& [kind, name] : els)
    m.elements.push_back(kind == 'p' ? place_label(name)
                                     : transition_label(name));
  for (const auto& [s, d] : arcs)
    m.arcs.push_back({static_cast<ElementId>(s), static_cast<ElementId>(d)});
  normalize_arcs(m);
  for (int e : left) m.left.push_back(static_cast<ElementId>(e));
  for (int e : right) m.right.push_back(static_cast<ElementId>(e));
  return m;
}

// Free-standing interface from (id, place-label) pairs.
inline InterfaceView iface(
    const std::vector<std::pair<int, std::string>>& entries) {
  std::vector<InterfaceEntry> es;
  for (const auto& [id, name] : entries)
    es.push_back(InterfaceEntry{static_cast<ElementId>(id), place_label(name)});
  return InterfaceView(std::move(es));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(NETCALC_FIXTURE_DIR) + "/" + name;
}

inline ModuleDocument load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  ParseOutcome out = parse_module(buf.str());
  if (!out)
    throw std::runtime_error("fixture " + name + " does not parse: " +
                             out.errors.front().to_string());
  return std::move(*out.doc);
}

}  // namespace netcalc::test

#endif
