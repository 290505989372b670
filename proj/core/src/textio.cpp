#include "netcalc/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace netcalc {

std::string ParseError::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t line_no;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size() || s[pos] == '#';
  }
  std::size_t column() const { return pos + 1; }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

ParseOutcome parse_module(const std::string& text) {
  ParseOutcome result;
  std::vector<ParseError>& errors = result.errors;

  ModuleDocument doc;
  std::map<std::string, ElementId> by_id;
  std::vector<std::size_t> arc_line;
  bool saw_module = false, saw_left = false, saw_right = false;

  auto error = [&](std::size_t line, std::size_t col, std::string msg) {
    errors.push_back(ParseError{line, col, std::move(msg)});
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Cursor cur{raw, 0, line_no};
    if (cur.at_end()) continue;

    auto take_word = [&]() -> std::string {
      cur.skip_ws();
      std::size_t start = cur.pos;
      while (cur.pos < raw.size() && is_id_char(raw[cur.pos])) ++cur.pos;
      return raw.substr(start, cur.pos - start);
    };
    auto take_label = [&](bool& ok) -> std::string {
      cur.skip_ws();
      ok = false;
      if (cur.pos >= raw.size() || raw[cur.pos] != '"') {
        error(line_no, cur.column(), "expected quoted label");
        return "";
      }
      ++cur.pos;
      std::string out;
      while (cur.pos < raw.size()) {
        char c = raw[cur.pos++];
        if (c == '\\' && cur.pos < raw.size()) {
          out.push_back(raw[cur.pos++]);
        } else if (c == '"') {
          ok = true;
          return out;
        } else {
          out.push_back(c);
        }
      }
      error(line_no, cur.column(), "unterminated label");
      return out;
    };
    auto declare = [&](NodeKind kind) {
      std::size_t id_col = (cur.skip_ws(), cur.column());
      std::string id = take_word();
      if (id.empty()) {
        error(line_no, id_col, "expected element id ([A-Za-z0-9_]+)");
        return;
      }
      bool ok = false;
      std::string label = take_label(ok);
      if (!ok) return;
      if (label.empty()) {
        error(line_no, id_col, "empty label for id '" + id + "'");
        return;
      }
      if (!cur.at_end()) {
        error(line_no, cur.column(), "trailing input after declaration");
        return;
      }
      if (by_id.count(id)) {
        error(line_no, id_col, "duplicate id '" + id + "'");
        return;
      }
      by_id[id] = static_cast<ElementId>(doc.body.elements.size());
      doc.body.elements.push_back(Label{kind, label});
      doc.ids.push_back(id);
      doc.decl_line.push_back(line_no);
    };
    auto resolve = [&](const std::string& id, std::size_t col,
                       ElementId& out) -> bool {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        error(line_no, col, "dangling reference: unknown id '" + id + "'");
        return false;
      }
      out = it->second;
      return true;
    };

    std::size_t kw_col = (cur.skip_ws(), cur.column());
    std::string kw = take_word();
    if (kw == "module") {
      cur.skip_ws();
      std::size_t name_col = cur.column();
      std::string name = take_word();
      if (name.empty()) {
        error(line_no, name_col, "expected module name");
        continue;
      }
      if (saw_module) {
        error(line_no, kw_col, "repeated module header");
        continue;
      }
      saw_module = true;
      doc.name = name;
    } else if (kw == "place") {
      declare(NodeKind::Place);
    } else if (kw == "trans") {
      declare(NodeKind::Transition);
    } else if (kw == "arc") {
      cur.skip_ws();
      std::size_t src_col = cur.column();
      std::string src = take_word();
      cur.skip_ws();
      bool arrow = raw.compare(cur.pos, 2, "->") == 0;
      if (!arrow) {
        error(line_no, cur.column(), "expected '->'");
        continue;
      }
      cur.pos += 2;
      cur.skip_ws();
      std::size_t dst_col = cur.column();
      std::string dst = take_word();
      if (src.empty() || dst.empty()) {
        error(line_no, src.empty() ? src_col : dst_col, "expected element id");
        continue;
      }
      if (!cur.at_end()) {
        error(line_no, cur.column(), "trailing input after arc");
        continue;
      }
      ElementId s, d;
      if (!resolve(src, src_col, s) || !resolve(dst, dst_col, d)) continue;
      if (doc.body.elements[s].kind == doc.body.elements[d].kind) {
        error(line_no, src_col,
              "bipartiteness violation: arc connects two " +
                  std::string(to_string(doc.body.elements[s].kind)) + "s ('" +
                  src + "' -> '" + dst + "')");
        continue;
      }
      Arc arc{s, d};
      if (std::find(doc.body.arcs.begin(), doc.body.arcs.end(), arc) !=
          doc.body.arcs.end()) {
        error(line_no, src_col, "duplicate arc '" + src + " -> " + dst + "'");
        continue;
      }
      doc.body.arcs.push_back(arc);
      arc_line.push_back(line_no);
    } else if (kw == "left" || kw == "right") {
      bool is_left = kw == "left";
      bool& seen = is_left ? saw_left : saw_right;
      if (seen) {
        error(line_no, kw_col, "repeated '" + kw + "' line");
        continue;
      }
      seen = true;
      std::vector<ElementId>& iface = is_left ? doc.body.left : doc.body.right;
      std::set<ElementId> dedupe;
      while (!cur.at_end()) {
        std::size_t col = (cur.skip_ws(), cur.column());
        std::string id = take_word();
        if (id.empty()) {
          error(line_no, col, "expected element id in interface list");
          break;
        }
        ElementId e;
        if (!resolve(id, col, e)) continue;
        if (!dedupe.insert(e).second) {
          error(line_no, col, "duplicate interface entry '" + id + "'");
          continue;
        }
        iface.push_back(e);
      }
    } else {
      error(line_no, kw_col,
            kw.empty() ? "expected a directive"
                       : "unknown directive '" + kw + "'");
    }
  }

  if (!saw_module) error(1, 1, "missing 'module <Name>' header");

  if (errors.empty()) {
    normalize_arcs(doc.body);
    std::vector<Violation> v = validate(doc.body);
    for (const Violation& viol : v)
      error(0, 0, viol.rule + ": " + viol.detail);
  }
  if (errors.empty()) result.doc = std::move(doc);
  return result;
}

namespace {

std::string render(const ModuleDocument& doc) {
  const NetModule& m = doc.body;
  std::vector<ElementId> order(m.size());
  for (ElementId e = 0; e < m.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (m.elements[a].kind != m.elements[b].kind)
      return m.elements[a].kind < m.elements[b].kind;
    return doc.ids[a] < doc.ids[b];
  });

  std::ostringstream out;
  out << "module " << doc.name << "\n";
  for (ElementId e : order)
    if (m.elements[e].kind == NodeKind::Place)
      out << "place " << doc.ids[e] << " " << quote(m.elements[e].name) << "\n";
  for (ElementId e : order)
    if (m.elements[e].kind == NodeKind::Transition)
      out << "trans " << doc.ids[e] << " " << quote(m.elements[e].name) << "\n";

  std::vector<std::pair<std::string, std::string>> arcs;
  arcs.reserve(m.arcs.size());
  for (const Arc& a : m.arcs) arcs.push_back({doc.ids[a.src], doc.ids[a.dst]});
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [s, d] : arcs) out << "arc " << s << " -> " << d << "\n";

  if (!m.left.empty()) {
    out << "left";
    for (ElementId e : m.left) out << " " << doc.ids[e];
    out << "\n";
  }
  if (!m.right.empty()) {
    out << "right";
    for (ElementId e : m.right) out << " " << doc.ids[e];
    out << "\n";
  }
  return out.str();
}

}  // namespace

ModuleDocument make_document(const NetModule& m, const std::string& name) {
  ModuleDocument doc;
  doc.name = name;
  doc.body = m;
  normalize_arcs(doc.body);
  std::size_t np = 0, nt = 0;
  for (const Label& l : m.elements)
    doc.ids.push_back(l.kind == NodeKind::Place ? "p" + std::to_string(np++)
                                                : "t" + std::to_string(nt++));
  doc.decl_line.assign(m.size(), 0);
  return doc;
}

std::string serialize_module(const ModuleDocument& doc) {
  std::vector<Violation> v = validate(doc.body);
  if (!v.empty())
    throw std::invalid_argument("serialize_module: invalid module: " +
                                v.front().rule);
  if (doc.ids.size() != doc.body.size())
    throw std::invalid_argument("serialize_module: id table size mismatch");
  return render(doc);
}

std::string serialize_module(const NetModule& m, const std::string& name) {
  std::vector<Violation> v = validate(m);
  if (!v.empty())
    throw std::invalid_argument("serialize_module: invalid module: " +
                                v.front().rule);
  return render(make_document(m, name));
}

}  // namespace netcalc
