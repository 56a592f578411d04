#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// Edge-list text format: one "u v" pair per line, 1-based labels.
/// Blank lines and lines starting with '#' are skipped.
inline std::vector<std::pair<int, int>> parse_edge_lines(std::istream& in) {
  std::vector<std::pair<int, int>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    int u, v;
    std::istringstream tok(first);
    char extra;
    if (!(tok >> u) || tok.get() != std::char_traits<char>::eof() || !(ls >> v) ||
        (ls >> extra))
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    if (u < 1 || v < 1)
      throw ParseError("edge list line " + std::to_string(lineno) + ": labels are 1-based");
    out.emplace_back(u, v);
  }
  return out;
}

inline std::vector<std::pair<int, int>> load_edge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge file: " + path);
  return parse_edge_lines(in);
}

/// Inline pair syntax "1-2,2-3".
inline std::vector<std::pair<int, int>> parse_inline_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw ParseError("inline pair '" + item + "': expected 'a-b'");
    try {
      std::size_t ia = 0, ib = 0;
      int a = std::stoi(item.substr(0, dash), &ia);
      int b = std::stoi(item.substr(dash + 1), &ib);
      if (ia != dash || ib != item.size() - dash - 1 || a < 1 || b < 1)
        throw ParseError("inline pair '" + item + "': bad point");
      out.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw ParseError("inline pair '" + item + "': bad point");
    }
  }
  if (out.empty()) throw ParseError("empty transposition list: '" + text + "'");
  return out;
}

inline bool looks_like_inline_pairs(const std::string& text) {
  bool digit = false, dash = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') digit = true;
    else if (c == '-') dash = true;
    else if (c != ',') return false;
  }
  return digit && dash;
}

}  // namespace cayley
