#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/io/text.hpp"

namespace klb::io {

/// Backdoor, cutset and feedback-set certificates: one identifier per line,
/// '#' comments. Backdoors list variable numbers; cutsets and feedback sets
/// list node or atom names.
inline std::vector<std::string> parse_certificate(std::string_view text) {
  std::vector<std::string> ids;
  for (const Line &line : tokenize(text, '#', true)) {
    if (line.tokens.size() != 1)
      throw ParseError(line.number, "expected one identifier per line");
    if (!is_identifier(line.tokens[0]))
      throw ParseError(line.number, "bad identifier '" + line.tokens[0] + "'");
    ids.push_back(line.tokens[0]);
  }
  return ids;
}

/// Certificate lines as variable numbers in 1..num_vars.
inline std::vector<int> parse_variable_certificate(std::string_view text, int num_vars) {
  std::vector<int> vars;
  for (const Line &line : tokenize(text, '#', true)) {
    if (line.tokens.size() != 1)
      throw ParseError(line.number, "expected one variable per line");
    const int v = parse_small_int(line.tokens[0], line.number);
    if (v < 1 || v > num_vars)
      throw ParseError(line.number, "variable " + line.tokens[0] + " out of range");
    vars.push_back(v);
  }
  return vars;
}

inline std::string serialize_certificate(const std::vector<std::string> &ids) {
  std::string out;
  for (const std::string &s : ids)
    out += s + '\n';
  return out;
}

inline std::string serialize_certificate(const std::vector<int> &vars) {
  std::string out;
  for (int v : vars)
    out += std::to_string(v) + '\n';
  return out;
}

} // namespace klb::io
