#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/cnf.hpp"
#include "klb/io/text.hpp"

namespace klb::io {

/// DIMACS CNF. Lines starting with 'c' are comments; the header "p cnf n m"
/// precedes the clauses; each clause is a run of nonzero literals closed by
/// 0 and may span lines.
inline CnfFormula parse_dimacs(std::string_view text) {
  const auto lines = tokenize(text, 'c');
  if (lines.empty())
    throw ParseError(1, "missing 'p cnf' header");
  const Line &head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "cnf")
    throw ParseError(head.number, "expected 'p cnf <vars> <clauses>'");
  const int n = parse_small_int(head.tokens[2], head.number);
  const long long m = parse_int(head.tokens[3], head.number);
  if (n < 0 || m < 0)
    throw ParseError(head.number, "negative count in header");

  std::vector<Clause> clauses;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line &line = lines[i];
    for (const std::string &tok : line.tokens) {
      const int code = parse_small_int(tok, line.number);
      if (code == 0) {
        clauses.push_back(at_line(line.number, [&] { return Clause(std::move(pending)); }));
        pending.clear();
        continue;
      }
      if (code > n || code < -n)
        throw ParseError(line.number, "literal " + tok + " exceeds declared variable count " +
                                          std::to_string(n));
      pending.push_back(Lit::from_dimacs(code));
      pending_line = line.number;
    }
  }
  if (!pending.empty())
    throw ParseError(pending_line, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != m)
    throw ParseError(head.number, "header declares " + std::to_string(m) + " clauses, found " +
                                      std::to_string(clauses.size()));
  return CnfFormula(n, std::move(clauses));
}

inline std::string serialize_dimacs(const CnfFormula &f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause &c : f.clauses()) {
    for (Lit l : c)
      os << l.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

} // namespace klb::io
