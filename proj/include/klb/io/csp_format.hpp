#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/csp.hpp"
#include "klb/io/text.hpp"

namespace klb::io {

namespace detail {

inline std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<std::string> words(const std::string &s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  std::string tok;
  while (is >> tok)
    w.push_back(tok);
  return w;
}

} // namespace detail

/// CSP text format, '#' comments:
///   var 3
///   universe 0 1
///   con 1 2 : 0 1, 1 0
/// Tuples after ':' are comma-separated value lists in scope order. A
/// constraint with an empty relation leaves nothing after ':'; the single
/// tuple of a nullary scope is written ().
inline ConstraintNetwork parse_csp(std::string_view text) {
  std::optional<int> n;
  std::optional<std::vector<int>> universe;
  std::vector<Constraint> cons;
  for (const Line &line : tokenize(text, '#', true)) {
    const std::string &kw = line.tokens[0];
    if (kw == "var") {
      if (n)
        throw ParseError(line.number, "'var' given twice");
      if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected 'var <count>'");
      n = parse_small_int(line.tokens[1], line.number);
      if (*n < 0)
        throw ParseError(line.number, "negative variable count");
    } else if (kw == "universe") {
      if (universe)
        throw ParseError(line.number, "'universe' given twice");
      universe.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        universe->push_back(parse_small_int(line.tokens[i], line.number));
      if (universe->empty())
        throw ParseError(line.number, "empty universe");
    } else if (kw == "con") {
      if (!n || !universe)
        throw ParseError(line.number, "'var' and 'universe' must precede constraints");
      const std::string body = line.text.substr(line.text.find("con") + 3);
      const auto colon = body.find(':');
      if (colon == std::string::npos)
        throw ParseError(line.number, "expected 'con <scope> : <tuples>'");
      std::vector<int> scope;
      for (const std::string &w : detail::words(body.substr(0, colon))) {
        const int v = parse_small_int(w, line.number);
        if (v < 1 || v > *n)
          throw ParseError(line.number, "undeclared variable " + w);
        scope.push_back(v);
      }
      std::vector<Tuple> rel;
      const std::string tuples = body.substr(colon + 1);
      if (!detail::words(tuples).empty()) {
        for (const std::string &part : detail::split(tuples, ',')) {
          const auto ws = detail::words(part);
          Tuple t;
          if (!(ws.size() == 1 && ws[0] == "()"))
            for (const std::string &w : ws)
              t.push_back(parse_small_int(w, line.number));
          if (ws.empty())
            throw ParseError(line.number, "empty tuple (write () for the nullary tuple)");
          if (t.size() != scope.size())
            throw ParseError(line.number, "tuple arity " + std::to_string(t.size()) +
                                              " does not match scope arity " +
                                              std::to_string(scope.size()));
          rel.push_back(std::move(t));
        }
      }
      cons.emplace_back(std::move(scope), std::move(rel));
      const std::size_t at = line.number;
      at_line(at, [&] { return ConstraintNetwork(*n, *universe, {cons.back()}); });
    } else {
      throw ParseError(line.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!n || !universe)
    throw ParseError(1, "missing 'var' or 'universe' line");
  return ConstraintNetwork(*n, std::move(*universe), std::move(cons));
}

inline std::string serialize_csp(const ConstraintNetwork &net) {
  std::ostringstream os;
  os << "var " << net.num_vars() << "\nuniverse";
  for (int x : net.universe())
    os << ' ' << x;
  os << '\n';
  for (const Constraint &c : net.constraints()) {
    os << "con";
    for (int v : c.scope)
      os << ' ' << v;
    os << " :";
    for (std::size_t i = 0; i < c.relation.size(); ++i) {
      os << (i ? ", " : " ");
      if (c.relation[i].empty())
        os << "()";
      for (std::size_t j = 0; j < c.relation[i].size(); ++j)
        os << (j ? " " : "") << c.relation[i][j];
    }
    os << '\n';
  }
  return os.str();
}

} // namespace klb::io
