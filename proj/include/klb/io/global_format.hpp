#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/global_constraint.hpp"
#include "klb/io/csp_format.hpp"
#include "klb/io/text.hpp"

namespace klb::io {

/// Global constraint text format, '#' comments:
///   kind nvalue
///   N 2
///   dom x1 : -1 1
///   dom x2 : 1 2
///   X x1 x2
///   Y
/// Variables are numbered in the order of their 'dom' lines; X and Y name them.
inline GlobalConstraint parse_global(std::string_view text) {
  std::optional<GlobalKind> kind;
  std::optional<int> n_value;
  std::vector<std::string> names;
  std::vector<std::vector<int>> domains;
  std::map<std::string, int> ids;
  std::optional<std::vector<std::string>> x_names, y_names;
  std::size_t x_line = 0, y_line = 0;
  for (const Line &line : tokenize(text, '#', true)) {
    const std::string &kw = line.tokens[0];
    if (kw == "kind") {
      if (kind || line.tokens.size() != 2)
        throw ParseError(line.number, "expected a single 'kind <nvalue|disjoint|uses>'");
      kind = at_line(line.number, [&] { return global_kind_from_string(line.tokens[1]); });
    } else if (kw == "N") {
      if (n_value || line.tokens.size() != 2)
        throw ParseError(line.number, "expected a single 'N <count>'");
      n_value = parse_small_int(line.tokens[1], line.number);
    } else if (kw == "dom") {
      if (line.tokens.size() < 3 || line.tokens[2] != ":")
        throw ParseError(line.number, "expected 'dom <name> : <values>'");
      const std::string &name = line.tokens[1];
      if (!is_identifier(name))
        throw ParseError(line.number, "bad variable name '" + name + "'");
      if (!ids.emplace(name, static_cast<int>(names.size()) + 1).second)
        throw ParseError(line.number, "variable '" + name + "' declared twice");
      std::vector<int> d;
      for (std::size_t i = 3; i < line.tokens.size(); ++i)
        d.push_back(parse_small_int(line.tokens[i], line.number));
      if (d.empty())
        throw ParseError(line.number, "empty domain");
      names.push_back(name);
      domains.push_back(std::move(d));
    } else if (kw == "X" || kw == "Y") {
      auto &target = kw == "X" ? x_names : y_names;
      if (target)
        throw ParseError(line.number, "'" + kw + "' given twice");
      target.emplace(line.tokens.begin() + 1, line.tokens.end());
      (kw == "X" ? x_line : y_line) = line.number;
    } else {
      throw ParseError(line.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!kind)
    throw ParseError(1, "missing 'kind' line");
  auto resolve = [&](const std::optional<std::vector<std::string>> &ns, std::size_t at) {
    std::vector<int> vs;
    if (ns)
      for (const std::string &s : *ns) {
        auto it = ids.find(s);
        if (it == ids.end())
          throw ParseError(at, "undeclared variable '" + s + "'");
        vs.push_back(it->second);
      }
    return vs;
  };
  std::vector<int> x = resolve(x_names, x_line), y = resolve(y_names, y_line);
  const std::size_t at = y_line ? y_line : x_line;
  return at_line(at ? at : 1, [&] {
    return GlobalConstraint(*kind, names, domains, x, y, n_value.value_or(0));
  });
}

inline std::string serialize_global(const GlobalConstraint &g) {
  std::ostringstream os;
  os << "kind " << to_string(g.kind()) << '\n';
  if (g.kind() == GlobalKind::NValue || g.n_value() != 0)
    os << "N " << g.n_value() << '\n';
  for (int v = 1; v <= g.num_vars(); ++v) {
    os << "dom " << g.name(v) << " :";
    for (int d : g.domain(v))
      os << ' ' << d;
    os << '\n';
  }
  os << 'X';
  for (int v : g.x())
    os << ' ' << g.name(v);
  os << "\nY";
  for (int v : g.y())
    os << ' ' << g.name(v);
  os << '\n';
  return os.str();
}

} // namespace klb::io
