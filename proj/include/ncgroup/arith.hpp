#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "ncgroup/error.hpp"

namespace ncgroup {

inline constexpr std::size_t default_order_cap = 10'000;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// base^exp, saturating to UINT64_MAX once the result would pass `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                                 std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

/// Least k >= 1 with q^k == 1 (mod p); requires gcd(p, q) == 1 and p > 1.
inline unsigned multiplicative_order(std::uint64_t q, std::uint64_t p) {
  if (p < 2 || q % p == 0) throw GroupError(Errc::invalid_argument, "multiplicative order undefined");
  std::uint64_t x = q % p;
  unsigned k = 1;
  while (x != 1 % p) {
    x = (x * q) % p;
    ++k;
  }
  return k;
}

/// True iff n is a power p^k (k >= 0) of the prime p.
inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace ncgroup
