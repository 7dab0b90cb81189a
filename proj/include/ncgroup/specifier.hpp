#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncgroup/constructors.hpp"
#include "ncgroup/error.hpp"
#include "ncgroup/group.hpp"
#include "ncgroup/io.hpp"

namespace ncgroup {

// Group specifiers:
//   cyclic:n  elemab:q,beta  mna:p,alpha,q  metacyclic:p,m,n  q8  dihedral:n
//   product:<spec>,<spec>  file:<cayley path>  perm:<generator path>
//   gens:<cycles>|<cycles>|...   (inline generators, e.g. gens:(1 2 3 4)|(1 2))

namespace detail {

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  GroupTable parse_all() {
    GroupTable g = parse(false);
    if (pos_ != text_.size()) fail("unexpected trailing text '" + std::string(text_.substr(pos_)) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw GroupError(Errc::parse_error, "in group spec '" + std::string(text_) + "': " + why);
  }

  std::string word() {
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number(const std::string& kind) {
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 1'000'000'000) fail("number too large in " + kind);
      ++pos_;
    }
    if (pos_ == start) {
      const auto end = text_.find(',', pos_);
      const std::string token(text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_));
      fail(kind + " expects an integer, got '" + token + "'");
    }
    return v;
  }

  std::vector<std::uint64_t> numbers(const std::string& kind, std::size_t arity) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < arity; ++i) {
      if (i > 0) {
        if (pos_ >= text_.size() || text_[pos_] != ',')
          fail(kind + " expects " + std::to_string(arity) + " arguments, got " + std::to_string(i));
        ++pos_;
      }
      out.push_back(number(kind));
    }
    return out;
  }

  void expect_colon(const std::string& kind) {
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':' after '" + kind + "'");
    ++pos_;
  }

  /// Path or inline generators: runs to the end, or to the first comma outside
  /// parentheses when more input must follow.
  std::string operand(bool stop_at_comma) {
    const auto start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0 && stop_at_comma) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  GroupTable parse(bool nested_first) {
    const std::string kind = word();
    if (kind.empty()) fail("expected a group kind at offset " + std::to_string(pos_));
    if (kind == "q8") return quaternion8();
    expect_colon(kind);
    if (kind == "cyclic") return cyclic(numbers(kind, 1)[0], cap_);
    if (kind == "dihedral") return dihedral(numbers(kind, 1)[0], cap_);
    if (kind == "elemab") {
      const auto a = numbers(kind, 2);
      return elementary_abelian(a[0], static_cast<unsigned>(a[1]), cap_);
    }
    if (kind == "mna") {
      const auto a = numbers(kind, 3);
      return minimal_nonabelian_pq(a[0], static_cast<unsigned>(a[1]), a[2], cap_);
    }
    if (kind == "metacyclic") {
      const auto a = numbers(kind, 3);
      return metacyclic_minimal_p_group(a[0], static_cast<unsigned>(a[1]), static_cast<unsigned>(a[2]), cap_);
    }
    if (kind == "product") {
      GroupTable left = parse(true);
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("product expects two specs separated by ','");
      ++pos_;
      GroupTable right = parse(nested_first);
      return direct_product(left, right, cap_);
    }
    if (kind == "file") {
      const auto path = operand(nested_first);
      if (path.empty()) fail("file: needs a path");
      return read_cayley_file(path);
    }
    if (kind == "perm") {
      const auto path = operand(nested_first);
      if (path.empty()) fail("perm: needs a path");
      return read_generator_file(path, cap_);
    }
    if (kind == "gens") {
      const auto body = operand(nested_first);
      std::vector<Permutation> gens;
      std::size_t start = 0;
      while (start <= body.size()) {
        auto bar = body.find('|', start);
        if (bar == std::string::npos) bar = body.size();
        const auto piece = body.substr(start, bar - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(parse_cycles(piece));
        start = bar + 1;
      }
      return from_permutation_generators(gens, cap_);
    }
    fail("unknown group kind '" + kind + "'");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupTable parse_group_spec(std::string_view spec, std::size_t cap = default_order_cap) {
  return detail::SpecParser(spec, cap).parse_all();
}

}  // namespace ncgroup
