#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncgroup/error.hpp"
#include "ncgroup/group.hpp"
#include "ncgroup/permutation.hpp"

namespace ncgroup {

// Cayley table text format: first token n, then n rows of n 0-based indices.

inline std::string write_cayley_table(const GroupTable& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto row = g.row(static_cast<Element>(a));
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << '\n';
  }
  return out.str();
}

inline std::vector<std::vector<std::int64_t>> parse_cayley_text(std::istream& in) {
  std::int64_t n = 0;
  if (!(in >> n) || n <= 0) throw GroupError(Errc::parse_error, "cayley file must start with a positive order");
  if (static_cast<std::size_t>(n) > max_checked_raw_order)
    throw GroupError(Errc::order_cap_exceeded, "cayley files are limited to " + std::to_string(max_checked_raw_order) +
                                                   " elements");
  std::vector<std::vector<std::int64_t>> raw(static_cast<std::size_t>(n), std::vector<std::int64_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (!(in >> raw[i][j]))
        throw GroupError(Errc::parse_error, "cayley file ended early at row " + std::to_string(i + 1) + ", column " +
                                                std::to_string(j + 1));
  std::string extra;
  if (in >> extra) throw GroupError(Errc::parse_error, "unexpected trailing token '" + extra + "' in cayley file");
  return raw;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GroupError(Errc::io_error, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GroupError(Errc::io_error, "cannot write " + path);
  out << content;
  if (!out) throw GroupError(Errc::io_error, "write to " + path + " failed");
}

inline GroupTable read_cayley_file(const std::string& path) {
  std::istringstream in(read_file(path));
  return from_cayley_table(parse_cayley_text(in));
}

/// One generator per line in disjoint-cycle notation; blank lines and lines
/// starting with '#' are skipped.
inline std::vector<Permutation> parse_generator_text(const std::string& text) {
  std::vector<Permutation> gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    gens.push_back(parse_cycles(line));
  }
  return gens;
}

inline GroupTable read_generator_file(const std::string& path, std::size_t cap = default_order_cap) {
  return from_permutation_generators(parse_generator_text(read_file(path)), cap);
}

}  // namespace ncgroup
