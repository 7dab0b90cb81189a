#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncgroup/arith.hpp"
#include "ncgroup/error.hpp"
#include "ncgroup/group.hpp"

namespace ncgroup {

// ---------------------------------------------------------------------------
// Arithmetic over F_q
// ---------------------------------------------------------------------------

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
  std::uint64_t r = 1, base = a % q, e = q - 2;
  while (e > 0) {
    if (e & 1U) r = r * base % q;
    base = base * base % q;
    e >>= 1U;
  }
  return r;
}

/// Polynomial over F_q, coefficients lowest degree first, no trailing zeros.
struct FieldPoly {
  std::uint64_t q = 2;
  std::vector<std::uint64_t> coefficients;

  FieldPoly() = default;
  FieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : q(modulus), coefficients(std::move(coeffs)) {
    for (auto& c : coefficients) c %= q;
    trim();
  }

  /// 1 + x + ... + x^(p-1)
  static FieldPoly all_ones(std::uint64_t p, std::uint64_t q) { return {q, std::vector<std::uint64_t>(p, 1)}; }

  bool is_zero() const noexcept { return coefficients.empty(); }
  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }

  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;
};

/// Remainder of a divided by b over F_q.
inline FieldPoly poly_mod(FieldPoly a, const FieldPoly& b) {
  if (b.is_zero()) throw GroupError(Errc::invalid_argument, "polynomial division by zero");
  const auto q = b.q;
  const auto lead_inv = mod_inverse(b.coefficients.back(), q);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    const auto factor = a.coefficients.back() * lead_inv % q;
    for (std::size_t i = 0; i < b.coefficients.size(); ++i) {
      auto& c = a.coefficients[i + shift];
      c = (c + q - factor * b.coefficients[i] % q) % q;
    }
    a.trim();
  }
  return a;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-q digits of `rank`, most significant digit on the constant term. So
/// increasing rank walks (c0, c1, ...) in lexicographic order.
inline FieldPoly monic_by_rank(std::uint64_t q, unsigned degree, std::uint64_t rank) {
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = 1;
  for (unsigned k = degree; k-- > 0;) {
    c[k] = rank % q;
    rank /= q;
  }
  return {q, std::move(c)};
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const FieldPoly& f) {
  if (f.degree() < 1) return false;
  const auto q = f.q;
  for (unsigned d = 1; d <= static_cast<unsigned>(f.degree()) / 2; ++d) {
    const auto count = checked_pow(q, d);
    for (std::uint64_t r = 0; r < count; ++r)
      if (poly_mod(f, monic_by_rank(q, d, r)).is_zero()) return false;
  }
  return true;
}

/// Square matrix over F_q acting on row vectors from the right.
struct FqMatrix {
  std::uint64_t q = 2;
  std::size_t dim = 0;
  std::vector<std::uint64_t> entries;  // row-major

  static FqMatrix identity(std::uint64_t q, std::size_t dim) {
    FqMatrix m{q, dim, std::vector<std::uint64_t>(dim * dim, 0)};
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  std::uint64_t& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

inline FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix r{a.q, a.dim, std::vector<std::uint64_t>(a.dim * a.dim, 0)};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t j = 0; j < a.dim; ++j) r.at(i, j) = (r.at(i, j) + a.at(i, k) * b.at(k, j)) % a.q;
  return r;
}

inline FqMatrix matrix_power(const FqMatrix& m, std::uint64_t e) {
  FqMatrix r = FqMatrix::identity(m.q, m.dim);
  for (std::uint64_t i = 0; i < e; ++i) r = r * m;
  return r;
}

/// v * M for a row vector v.
inline std::vector<std::uint64_t> row_times(const std::vector<std::uint64_t>& v, const FqMatrix& m) {
  std::vector<std::uint64_t> r(m.dim, 0);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) r[j] = (r[j] + v[i] * m.at(i, j)) % m.q;
  return r;
}

/// Companion matrix of a monic f: basis 1, x, ..., x^(d-1) and row vectors, so
/// row i < d-1 is e_(i+1) and the last row holds -c_0, ..., -c_(d-1).
inline FqMatrix companion_matrix(const FieldPoly& f) {
  const auto d = static_cast<std::size_t>(f.degree());
  if (f.degree() < 1 || f.coefficients.back() != 1)
    throw GroupError(Errc::invalid_argument, "companion matrix needs a monic polynomial of positive degree");
  FqMatrix m{f.q, d, std::vector<std::uint64_t>(d * d, 0)};
  for (std::size_t i = 0; i + 1 < d; ++i) m.at(i, i + 1) = 1;
  for (std::size_t j = 0; j < d; ++j) m.at(d - 1, j) = (f.q - f.coefficients[j]) % f.q;
  return m;
}

/// Rank over F_q of a list of vectors.
inline std::size_t rank_mod_q(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t q) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto inv = mod_inverse(rows[rank][c], q);
    for (auto& x : rows[rank]) x = x * inv % q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + q - f * rows[rank][k] % q) % q;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::uint64_t> vector_by_index(std::uint64_t index, std::uint64_t q, std::size_t dim) {
  std::vector<std::uint64_t> v(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    v[k] = index % q;
    index /= q;
  }
  return v;
}

inline std::uint64_t index_of_vector(const std::vector<std::uint64_t>& v, std::uint64_t q) {
  std::uint64_t index = 0;
  for (std::size_t k = v.size(); k-- > 0;) index = index * q + v[k];
  return index;
}

/// No proper nonzero subspace is invariant: every nonzero v has a cyclic
/// span {v, vM, vM^2, ...} of full dimension. Brute force over all vectors.
inline bool acts_irreducibly(const FqMatrix& m) {
  const auto count = checked_pow(m.q, static_cast<unsigned>(m.dim));
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<std::vector<std::uint64_t>> orbit{vector_by_index(idx, m.q, m.dim)};
    for (std::size_t k = 1; k < m.dim; ++k) orbit.push_back(row_times(orbit.back(), m));
    if (rank_mod_q(orbit, m.q) != m.dim) return false;
  }
  return true;
}

struct SemidirectSpec {
  std::uint64_t p = 0;
  unsigned alpha = 1;
  std::uint64_t q = 0;
  unsigned beta = 0;
  FieldPoly polynomial;
  FqMatrix action_matrix;
};

inline void require_prime(std::uint64_t x) {
  if (!is_prime(x)) throw GroupError(Errc::not_prime, std::to_string(x) + " is not prime");
}

/// beta = ord_p(q); the matrix is the companion matrix of the first monic
/// degree-beta divisor of 1 + x + ... + x^(p-1) over F_q (lexicographic in
/// the coefficients, constant term first) that is irreducible.
inline SemidirectSpec irreducible_action_matrix(std::uint64_t p, std::uint64_t q,
                                                std::size_t cap = default_order_cap) {
  require_prime(p);
  require_prime(q);
  if (p == q) throw GroupError(Errc::primes_equal, "p and q must differ");
  const unsigned beta = multiplicative_order(q, p);
  const auto space = checked_pow(q, beta, cap);
  if (space > cap)
    throw GroupError(Errc::search_space_exceeded, "q^beta = " + std::to_string(q) + "^" + std::to_string(beta) +
                                                      " exceeds the cap of " + std::to_string(cap));
  const FieldPoly target = FieldPoly::all_ones(p, q);
  for (std::uint64_t r = 0; r < space; ++r) {
    FieldPoly f = monic_by_rank(q, beta, r);
    if (!poly_mod(target, f).is_zero() || !is_irreducible(f)) continue;
    SemidirectSpec spec;
    spec.p = p;
    spec.q = q;
    spec.beta = beta;
    spec.polynomial = f;
    spec.action_matrix = companion_matrix(f);
    return spec;
  }
  throw GroupError(Errc::structure_violation, "no irreducible divisor of degree " + std::to_string(beta) + " found");
}

// ---------------------------------------------------------------------------
// Group constructors
// ---------------------------------------------------------------------------

inline void require_within_cap(std::uint64_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw GroupError(Errc::order_cap_exceeded,
                     what + " has order " + (order == UINT64_MAX ? std::string("beyond 2^64") : std::to_string(order)) +
                         ", above the cap of " + std::to_string(cap));
}

inline GroupTable cyclic(std::uint64_t n, std::size_t cap = default_order_cap) {
  if (n < 1) throw GroupError(Errc::invalid_argument, "cyclic group order must be positive");
  require_within_cap(n, cap, "cyclic(" + std::to_string(n) + ")");
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroupTable::from_product(
      n, 0, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, std::move(labels));
}

/// (F_q)^beta under addition; element index is the base-q number with digit
/// k the k-th coordinate.
inline GroupTable elementary_abelian(std::uint64_t q, unsigned beta, std::size_t cap = default_order_cap) {
  require_prime(q);
  if (beta < 1) throw GroupError(Errc::invalid_argument, "beta must be positive");
  const auto n = checked_pow(q, beta, cap);
  require_within_cap(n, cap, "elementary abelian group");
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::string s;
    for (auto d : vector_by_index(i, q, beta)) s += std::to_string(d) + (q > 10 ? "," : "");
    if (q > 10) s.pop_back();
    labels.push_back("[" + s + "]");
  }
  return GroupTable::from_product(
      n, 0,
      [q, beta](Element a, Element b) {
        auto u = vector_by_index(a, q, beta), v = vector_by_index(b, q, beta);
        for (std::size_t k = 0; k < beta; ++k) u[k] = (u[k] + v[k]) % q;
        return static_cast<Element>(index_of_vector(u, q));
      },
      std::move(labels));
}

/// Componentwise product; (g, h) has index g * |H| + h.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t cap = default_order_cap) {
  const std::uint64_t n = std::uint64_t{g.order()} * h.order();
  require_within_cap(n, cap, "direct product");
  const auto m = h.order();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < m; ++b)
      labels.push_back("(" + g.label(static_cast<Element>(a)) + "," + h.label(static_cast<Element>(b)) + ")");
  const auto e = static_cast<Element>(g.identity() * m + h.identity());
  return GroupTable::from_product(
      n, e,
      [&g, &h, m](Element x, Element y) {
        return static_cast<Element>(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
      },
      std::move(labels));
}

/// C_(p^alpha) acting on (F_q)^beta through the irreducible companion action.
/// Element (i, v) has index i * q^beta + index(v) and
///   (i, v)(j, w) = (i + j mod p^alpha, v M^j + w).
/// Since M^p = I only j mod p matters.
inline GroupTable minimal_nonabelian_pq(std::uint64_t p, unsigned alpha, std::uint64_t q,
                                        std::size_t cap = default_order_cap) {
  if (alpha < 1) throw GroupError(Errc::invalid_argument, "alpha must be positive");
  const SemidirectSpec spec = irreducible_action_matrix(p, q, cap);
  const auto cyc = checked_pow(p, alpha, cap);
  const auto vec = checked_pow(q, spec.beta, cap);
  const auto n = (cyc > cap || cyc > cap / vec) ? UINT64_MAX : cyc * vec;
  require_within_cap(n, cap, "mna:" + std::to_string(p) + "," + std::to_string(alpha) + "," + std::to_string(q));

  // act[r][v] = index of v M^r
  std::vector<std::vector<Element>> act(p, std::vector<Element>(vec));
  FqMatrix power = FqMatrix::identity(q, spec.beta);
  for (std::uint64_t r = 0; r < p; ++r) {
    for (std::uint64_t v = 0; v < vec; ++v)
      act[r][v] = static_cast<Element>(index_of_vector(row_times(vector_by_index(v, q, spec.beta), power), q));
    power = power * spec.action_matrix;
  }
  std::vector<Element> add(vec * vec);
  for (std::uint64_t a = 0; a < vec; ++a)
    for (std::uint64_t b = 0; b < vec; ++b) {
      auto u = vector_by_index(a, q, spec.beta), w = vector_by_index(b, q, spec.beta);
      for (std::size_t k = 0; k < spec.beta; ++k) u[k] = (u[k] + w[k]) % q;
      add[a * vec + b] = static_cast<Element>(index_of_vector(u, q));
    }

  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < cyc; ++i)
    for (std::uint64_t v = 0; v < vec; ++v) {
      std::string s = "(" + std::to_string(i) + ";";
      for (auto d : vector_by_index(v, q, spec.beta)) s += std::to_string(d) + (q > 10 ? " " : "");
      if (q > 10) s.pop_back();
      labels.push_back(s + ")");
    }
  return GroupTable::from_product(
      n, 0,
      [&](Element x, Element y) {
        const auto i = x / vec, v = x % vec, j = y / vec, w = y % vec;
        return static_cast<Element>(((i + j) % cyc) * vec + add[act[j % p][v] * vec + w]);
      },
      std::move(labels));
}

/// <a, b | a^(p^m) = b^(p^n) = 1, b^-1 a b = a^(1 + p^(m-1))>. Element
/// b^j a^i has index j * p^m + i, and b^j a^i . b^l a^k = b^(j+l) a^(i r^l + k)
/// with r = 1 + p^(m-1).
inline GroupTable metacyclic_minimal_p_group(std::uint64_t p, unsigned m, unsigned n,
                                             std::size_t cap = default_order_cap) {
  require_prime(p);
  if (m < 2 || n < 1) throw GroupError(Errc::invalid_argument, "metacyclic group needs m >= 2 and n >= 1");
  const auto order = checked_pow(p, m + n, cap);
  require_within_cap(order, cap, "metacyclic group");
  const auto pm = checked_pow(p, m), pn = checked_pow(p, n);
  const auto r = 1 + checked_pow(p, m - 1);
  // rpow[l] = r^l mod p^m
  std::vector<std::uint64_t> rpow(pn);
  rpow[0] = 1 % pm;
  for (std::uint64_t l = 1; l < pn; ++l) rpow[l] = rpow[l - 1] * r % pm;
  std::vector<std::string> labels;
  for (std::uint64_t j = 0; j < pn; ++j)
    for (std::uint64_t i = 0; i < pm; ++i) {
      if (i == 0 && j == 0) {
        labels.emplace_back("e");
        continue;
      }
      std::string s;
      if (j != 0) s += "b^" + std::to_string(j);
      if (i != 0) s += (s.empty() ? "" : " ") + std::string("a^") + std::to_string(i);
      labels.push_back(s);
    }
  return GroupTable::from_product(
      order, 0,
      [&](Element x, Element y) {
        const auto j = x / pm, i = x % pm, l = y / pm, k = y % pm;
        return static_cast<Element>(((j + l) % pn) * pm + (i * rpow[l] + k) % pm);
      },
      std::move(labels));
}

/// Quaternion units ordered 1, -1, i, -i, j, -j, k, -k.
inline GroupTable quaternion8() {
  // unit products: u * v = sign * w over {1, i, j, k} = {0, 1, 2, 3}
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return GroupTable::from_product(
      8, 0,
      [](Element x, Element y) {
        const auto u = x / 2, v = y / 2;
        const auto s = (x % 2 + y % 2 + static_cast<unsigned>(sign[u][v])) % 2;
        return static_cast<Element>(2 * unit[u][v] + s);
      },
      std::move(labels));
}

/// Symmetries of the n-gon. r^k s^f has index k + n f, with s r = r^-1 s.
inline GroupTable dihedral(std::uint64_t n, std::size_t cap = default_order_cap) {
  if (n < 3) throw GroupError(Errc::invalid_argument, "dihedral(n) needs n >= 3");
  require_within_cap(n > cap ? UINT64_MAX : 2 * n, cap, "dihedral(" + std::to_string(n) + ")");
  std::vector<std::string> labels;
  for (std::uint64_t f = 0; f < 2; ++f)
    for (std::uint64_t k = 0; k < n; ++k) {
      std::string s = k == 0 ? (f == 0 ? "e" : "") : "r^" + std::to_string(k);
      if (f == 1) s += s.empty() ? "s" : " s";
      labels.push_back(s);
    }
  return GroupTable::from_product(
      2 * n, 0,
      [n](Element x, Element y) {
        const auto k = x % n, f = x / n, l = y % n, g = y / n;
        const auto rot = f == 0 ? (k + l) % n : (k + n - l) % n;
        return static_cast<Element>(rot + n * ((f + g) % 2));
      },
      std::move(labels));
}

}  // namespace ncgroup
