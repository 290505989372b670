#ifndef NETCALC_TEXTIO_HPP
#define NETCALC_TEXTIO_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcalc/net_module.hpp"

namespace netcalc {

// A parsed .netmod file: the module plus its declared element ids and the
// source line of each declaration, for error reporting and faithful
// re-serialization.
struct ModuleDocument {
  std::string name;
  NetModule body;
  std::vector<std::string> ids;        // per element, declaration ids
  std::vector<std::size_t> decl_line;  // per element
};

struct ParseError {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  std::string to_string() const;
};

struct ParseOutcome {
  std::optional<ModuleDocument> doc;
  std::vector<ParseError> errors;

  explicit operator bool() const { return doc.has_value(); }
};

// Parses the line-oriented .netmod format:
//   # comment
//   module <Name>
//   place <id> "<label>"
//   trans <id> "<label>"
//   arc <id> -> <id>
//   left <id> <id> ...
//   right <id> ...
// Ids match [A-Za-z0-9_]+; labels are quoted UTF-8 with \" and \\ escapes.
// At most one left and one right line; absence means the empty interface.
// Never yields a module that fails validate; every structural or
// referential error is reported with its location.
ParseOutcome parse_module(const std::string& text);

// Canonical text for a document: places sorted by id, then transitions
// sorted by id, arcs sorted, interfaces in order. Deterministic; re-parses
// to an isomorphic module with identical declared ids and interface orders.
std::string serialize_module(const ModuleDocument& doc);

// Serializes a bare module under `name`, synthesizing ids (p0..., t0... in
// element order). Throws std::invalid_argument on validation failure.
std::string serialize_module(const NetModule& m, const std::string& name = "M");

// Wraps a module in a document with synthesized ids.
ModuleDocument make_document(const NetModule& m, const std::string& name = "M");

}  // namespace netcalc

#endif
