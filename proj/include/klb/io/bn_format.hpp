#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/bayes_net.hpp"
#include "klb/io/text.hpp"

namespace klb::io {

inline Rational parse_rational(const std::string &tok, std::size_t line) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(tok, line));
  const long long p = parse_int(tok.substr(0, slash), line);
  const long long q = parse_int(tok.substr(slash + 1), line);
  if (q <= 0)
    throw ParseError(line, "denominator must be positive in '" + tok + "'");
  return Rational(p, q);
}

inline std::string format_rational(const Rational &r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Bayesian network text format, '#' comments, one line per node:
///   node a : | -> 1/2
///   node b : a | 0 -> 1/3 1 -> 1
///   query b
/// Parent names come before '|'; each row gives the parent values as a bit
/// string in parent order, then Pr(node = 1). Every one of the 2^s rows must
/// appear once. Parents may be declared after their children. The 'query'
/// line is optional (query 0 when absent).
inline BnQuery parse_bn(std::string_view text) {
  struct Pending {
    std::size_t line;
    std::vector<std::string> parents;
    std::vector<std::pair<std::string, std::string>> rows;
  };
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::vector<Pending> pending;
  std::string query_name;
  std::size_t query_line = 0;

  for (const Line &raw : tokenize(text, '#', true)) {
    std::string spaced;
    for (std::size_t i = 0; i < raw.text.size(); ++i) {
      if (raw.text.compare(i, 2, "->") == 0) {
        spaced += " -> ";
        ++i;
      } else if (raw.text[i] == '|' || raw.text[i] == ':') {
        spaced += std::string(" ") + raw.text[i] + " ";
      } else {
        spaced += raw.text[i];
      }
    }
    const Line line = tokenize(spaced, '#').front();
    const auto &tk = line.tokens;
    const std::size_t at = raw.number;
    if (tk[0] == "query") {
      if (!query_name.empty() || tk.size() != 2)
        throw ParseError(at, "expected a single 'query <node>'");
      query_name = tk[1];
      query_line = at;
      continue;
    }
    if (tk[0] != "node")
      throw ParseError(at, "unknown keyword '" + tk[0] + "'");
    if (tk.size() < 3 || tk[2] != ":")
      throw ParseError(at, "expected 'node <name> : <parents> | <rows>'");
    if (!is_identifier(tk[1]))
      throw ParseError(at, "bad node name '" + tk[1] + "'");
    if (!ids.emplace(tk[1], static_cast<int>(names.size()) + 1).second)
      throw ParseError(at, "node '" + tk[1] + "' declared twice");
    names.push_back(tk[1]);
    Pending p{at, {}, {}};
    std::size_t i = 3;
    for (; i < tk.size() && tk[i] != "|"; ++i)
      p.parents.push_back(tk[i]);
    if (i == tk.size())
      throw ParseError(at, "missing '|' before the table rows");
    for (++i; i < tk.size();) {
      std::string bits;
      if (tk[i] != "->")
        bits = tk[i++];
      if (i + 1 >= tk.size() || tk[i] != "->")
        throw ParseError(at, "expected '<bits> -> <probability>'");
      p.rows.emplace_back(bits, tk[i + 1]);
      i += 2;
    }
    pending.push_back(std::move(p));
  }

  std::vector<std::vector<int>> parents;
  std::vector<std::vector<Rational>> tables;
  for (const Pending &p : pending) {
    std::vector<int> ps;
    for (const std::string &name : p.parents) {
      auto it = ids.find(name);
      if (it == ids.end())
        throw ParseError(p.line, "undeclared parent '" + name + "'");
      ps.push_back(it->second);
    }
    if (ps.size() > 20)
      throw ParseError(p.line, "too many parents");
    const std::size_t rows = std::size_t{1} << ps.size();
    std::vector<Rational> table(rows);
    std::vector<bool> seen(rows, false);
    for (const auto &[bits, prob] : p.rows) {
      if (bits.size() != ps.size())
        throw ParseError(p.line, "row '" + bits + "' does not match " + std::to_string(ps.size()) +
                                     " parents");
      std::size_t r = 0;
      for (char c : bits) {
        if (c != '0' && c != '1')
          throw ParseError(p.line, "row '" + bits + "' is not a bit string");
        r = r * 2 + static_cast<std::size_t>(c - '0');
      }
      if (seen[r])
        throw ParseError(p.line, "row '" + bits + "' given twice");
      seen[r] = true;
      table[r] = parse_rational(prob, p.line);
    }
    for (std::size_t r = 0; r < rows; ++r)
      if (!seen[r])
        throw ParseError(p.line, "table is missing a row");
    parents.push_back(std::move(ps));
    tables.push_back(std::move(table));
  }
  BnQuery out;
  out.net = at_line(pending.empty() ? 1 : pending.back().line,
                    [&] { return BayesNet(names, parents, tables); });
  if (!query_name.empty()) {
    auto it = ids.find(query_name);
    if (it == ids.end())
      throw ParseError(query_line, "undeclared query node '" + query_name + "'");
    out.query = it->second;
  }
  return out;
}

inline std::string serialize_bn(const BayesNet &bn, int query = 0) {
  std::ostringstream os;
  for (int v = 1; v <= bn.num_nodes(); ++v) {
    const auto &ps = bn.parents(v);
    os << "node " << bn.name(v) << " :";
    for (int p : ps)
      os << ' ' << bn.name(p);
    os << " |";
    for (std::size_t r = 0; r < bn.table(v).size(); ++r) {
      os << ' ';
      for (std::size_t j = 0; j < ps.size(); ++j)
        os << ((r >> (ps.size() - 1 - j)) & 1u);
      os << (ps.empty() ? "" : " ") << "-> " << format_rational(bn.table(v)[r]);
    }
    os << '\n';
  }
  if (query)
    os << "query " << bn.name(query) << '\n';
  return os.str();
}

inline std::string serialize_bn(const BnQuery &q) { return serialize_bn(q.net, q.query); }

} // namespace klb::io
