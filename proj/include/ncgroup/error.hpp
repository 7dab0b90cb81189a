#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncgroup {

enum class Errc {
  not_latin_square,
  no_identity,
  not_associative,
  no_inverse,
  order_cap_exceeded,
  invalid_argument,
  not_prime,
  primes_equal,
  search_space_exceeded,
  prime_does_not_divide_order,
  not_a_subgroup,
  not_normal,
  trivial_subgroup,
  not_minimal_non_abelian,
  structure_violation,
  decomposition_mismatch,
  is_p_group,
  abelian_group,
  empty_graph,
  not_ac_group,
  no_cover,
  parse_error,
  io_error,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_latin_square: return "NotLatinSquare";
    case Errc::no_identity: return "NoIdentity";
    case Errc::not_associative: return "NotAssociative";
    case Errc::no_inverse: return "NoInverse";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::primes_equal: return "PrimesEqual";
    case Errc::search_space_exceeded: return "SearchSpaceExceeded";
    case Errc::prime_does_not_divide_order: return "PrimeDoesNotDivideOrder";
    case Errc::not_a_subgroup: return "NotASubgroup";
    case Errc::not_normal: return "NotNormal";
    case Errc::trivial_subgroup: return "TrivialSubgroup";
    case Errc::not_minimal_non_abelian: return "NotMinimalNonAbelian";
    case Errc::structure_violation: return "StructureViolation";
    case Errc::decomposition_mismatch: return "DecompositionMismatch";
    case Errc::is_p_group: return "IsPGroup";
    case Errc::abelian_group: return "AbelianGroup";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::not_ac_group: return "NotACGroup";
    case Errc::no_cover: return "NoCover";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message is prefixed with the
/// error name so command-line output can be grepped for it.
class GroupError : public std::runtime_error {
 public:
  GroupError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ncgroup
