#ifndef NETCALC_DOT_HPP
#define NETCALC_DOT_HPP

#include <string>

#include "netcalc/net_module.hpp"

namespace netcalc {

enum class DotStyle { System, Run };

// Graphviz text: places as circles, transitions as squares, node text is the
// label, interface members in marked clusters ordered per interface order.
// Run style additionally ranks nodes by topological order. Deterministic,
// byte-stable output. Throws std::invalid_argument on invalid modules.
std::string to_dot(const NetModule& m, DotStyle style,
                   const std::string& name = "M");

}  // namespace netcalc

#endif
