#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "klb/error.hpp"

namespace klb::io {

/// One non-blank, non-comment input line split on whitespace.
struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
  std::string text; // the line with any inline comment removed
};

/// Splits text into lines of tokens. A line whose first token starts with
/// `comment` is skipped; with `strip_inline`, text after `comment` anywhere
/// on the line is dropped as well.
inline std::vector<Line> tokenize(std::string_view text, char comment, bool strip_inline = false) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (strip_inline)
      if (auto c = raw.find(comment); c != std::string_view::npos)
        raw = raw.substr(0, c);
    std::istringstream is{std::string(raw)};
    Line line{number, {}, std::string(raw)};
    std::string tok;
    while (is >> tok)
      line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == comment)
      continue;
    out.push_back(std::move(line));
    if (end == text.size())
      break;
  }
  return out;
}

inline long long parse_int(const std::string &tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

inline int parse_small_int(const std::string &tok, std::size_t line) {
  long long v = parse_int(tok, line);
  if (v < -(1LL << 30) || v > (1LL << 30))
    throw ParseError(line, "integer out of range: " + tok);
  return static_cast<int>(v);
}

inline bool is_identifier(const std::string &s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
      return false;
  return true;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out << content;
}

/// Rethrows construction errors of a parsed object as a parse error at `line`.
template <class F>
auto at_line(std::size_t line, F &&make) {
  try {
    return make();
  } catch (const ParseError &) {
    throw;
  } catch (const InvalidInput &e) {
    throw ParseError(line, e.what());
  }
}

} // namespace klb::io
