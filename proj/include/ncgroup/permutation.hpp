#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncgroup/error.hpp"

namespace ncgroup {

/// Permutation of {0, ..., m-1} as an image vector. Products compose left to
/// right: (x * y)(i) = y(x(i)), i.e. x is applied first.
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

inline Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

inline Permutation inverse(const Permutation& x) {
  Permutation r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[x[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Permutation extend_degree(Permutation p, std::size_t degree) {
  for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<std::uint32_t>(i));
  return p;
}

/// Parses disjoint-cycle notation over positive points, e.g. "(1 2)(3 4)" or
/// "()". Points not mentioned are fixed. The result has degree equal to the
/// largest point mentioned.
inline Permutation parse_cycles(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw GroupError(Errc::parse_error, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::uint32_t degree = 0;
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(std::string("unexpected character '") + text[i] + "'");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1'000'000) fail("point too large");
        ++i;
      }
      if (v == 0) fail("points are positive integers");
      cycle.push_back(static_cast<std::uint32_t>(v));
      if (v > degree) degree = static_cast<std::uint32_t>(v);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  Permutation p = identity_permutation(degree);
  std::vector<bool> seen(degree + 1, false);
  for (const auto& c : cycles) {
    for (auto pt : c) {
      if (seen[pt]) fail("point " + std::to_string(pt) + " repeated; cycles must be disjoint");
      seen[pt] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  }
  return p;
}

/// Disjoint-cycle notation with 1-based points; the identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    any = true;
    out << '(';
    std::size_t cur = start;
    bool first = true;
    while (!done[cur]) {
      done[cur] = true;
      if (!first) out << ' ';
      out << cur + 1;
      first = false;
      cur = p[cur];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace ncgroup
