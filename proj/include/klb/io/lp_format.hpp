#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/io/csp_format.hpp"
#include "klb/io/text.hpp"
#include "klb/logic_program.hpp"

namespace klb::io {

/// Logic program text format, '#' comments, one rule per line:
///   atoms a b c
///   a :- b, not c.
///   b.
/// The optional 'atoms' line fixes atom numbering and must then declare every
/// atom; without it atoms are numbered by first occurrence.
inline LogicProgram parse_lp(std::string_view text) {
  std::vector<std::string> atoms;
  std::map<std::string, int> ids;
  bool declared = false;
  std::vector<Rule> rules;
  bool any_rule = false;

  auto atom_id = [&](const std::string &name, std::size_t at) {
    if (!is_identifier(name))
      throw ParseError(at, "bad atom name '" + name + "'");
    if (auto it = ids.find(name); it != ids.end())
      return it->second;
    if (declared)
      throw ParseError(at, "undeclared atom '" + name + "'");
    atoms.push_back(name);
    return ids[name] = static_cast<int>(atoms.size());
  };

  for (const Line &line : tokenize(text, '#', true)) {
    if (line.tokens[0] == "atoms") {
      if (declared || any_rule)
        throw ParseError(line.number, "'atoms' must come once, before the rules");
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const std::string &a = line.tokens[i];
        if (!is_identifier(a))
          throw ParseError(line.number, "bad atom name '" + a + "'");
        if (ids.count(a))
          throw ParseError(line.number, "atom '" + a + "' declared twice");
        atoms.push_back(a);
        ids[a] = static_cast<int>(atoms.size());
      }
      declared = true;
      continue;
    }
    any_rule = true;
    std::string s = line.text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    if (s.empty() || s.back() != '.')
      throw ParseError(line.number, "rule must end with '.'");
    s.pop_back();
    const auto arrow = s.find(":-");
    const auto head_words = detail::words(s.substr(0, arrow));
    if (head_words.size() != 1)
      throw ParseError(line.number, "rule needs exactly one head atom");
    const int head = atom_id(head_words[0], line.number);
    std::vector<int> pos, neg;
    if (arrow != std::string::npos) {
      for (const std::string &lit : detail::split(s.substr(arrow + 2), ',')) {
        const auto w = detail::words(lit);
        if (w.size() == 1)
          pos.push_back(atom_id(w[0], line.number));
        else if (w.size() == 2 && w[0] == "not")
          neg.push_back(atom_id(w[1], line.number));
        else
          throw ParseError(line.number, "bad body literal '" + lit + "'");
      }
    }
    rules.emplace_back(head, std::move(pos), std::move(neg));
  }
  return LogicProgram(std::move(atoms), std::move(rules));
}

inline std::string serialize_lp(const LogicProgram &p) {
  std::ostringstream os;
  os << "atoms";
  for (const std::string &a : p.atoms())
    os << ' ' << a;
  os << '\n';
  for (const Rule &r : p.rules()) {
    os << p.atom(r.head);
    const char *sep = " :- ";
    for (int a : r.pos) {
      os << sep << p.atom(a);
      sep = ", ";
    }
    for (int b : r.neg) {
      os << sep << "not " << p.atom(b);
      sep = ", ";
    }
    os << ".\n";
  }
  return os.str();
}

} // namespace klb::io
