#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncgroup/arith.hpp"
#include "ncgroup/element_set.hpp"
#include "ncgroup/error.hpp"
#include "ncgroup/permutation.hpp"

namespace ncgroup {

/// Raw tables above this size are refused: the exhaustive associativity scan
/// is cubic. Build larger groups from generators instead.
inline constexpr std::size_t max_checked_raw_order = 512;

/// A finite group as a dense multiplication table over element indices.
/// Immutable once built.
class GroupTable {
 public:
  /// Takes a table that is already known to come from a group (constructors,
  /// generator closure). Only inverses are derived here; run
  /// find_axiom_violation() to check everything else.
  static GroupTable from_trusted_table(std::size_t n, std::vector<Element> table, Element identity,
                                       std::vector<std::string> labels = {}) {
    GroupTable g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.identity_ = identity;
    g.labels_ = std::move(labels);
    g.inverse_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      bool found = false;
      for (std::size_t y = 0; y < n; ++y) {
        if (g.table_[x * n + y] == identity && g.table_[y * n + x] == identity) {
          g.inverse_[x] = static_cast<Element>(y);
          found = true;
          break;
        }
      }
      if (!found) throw GroupError(Errc::no_inverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }
    return g;
  }

  /// Builds the table by evaluating `mul(a, b)` on every pair.
  template <class Mul>
  static GroupTable from_product(std::size_t n, Element identity, Mul&& mul, std::vector<std::string> labels = {}) {
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    return from_trusted_table(n, std::move(table), identity, std::move(labels));
  }

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  bool commutes(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  std::span<const Element> row(Element a) const noexcept { return {table_.data() + std::size_t{a} * n_, n_}; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Element x) const { return labels_.empty() ? std::to_string(x) : labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  ElementSet everything() const { return ElementSet::all(n_); }

 private:
  GroupTable() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<std::string> labels_;
};

/// Exhaustive check of the group axioms on a flat row-major table. Returns the
/// first violation found (Latin square, identity, inverses, associativity, in
/// that order) or nullopt. Cubic in n.
inline std::optional<std::pair<Errc, std::string>> find_axiom_violation(std::size_t n, std::span<const Element> t) {
  auto at = [&](std::size_t i, std::size_t j) { return t[i * n + j]; };
  if (n == 0) return std::pair{Errc::invalid_argument, std::string("empty table")};
  std::vector<std::size_t> seen(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto v = at(i, j);
      if (v >= n)
        return std::pair{Errc::not_latin_square,
                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v) +
                             " out of range"};
      if (seen[v] == i)
        return std::pair{Errc::not_latin_square,
                         "row " + std::to_string(i) + " repeats " + std::to_string(v) + " at column " + std::to_string(j)};
      seen[v] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), SIZE_MAX);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      auto v = at(i, j);
      if (seen[v] == j)
        return std::pair{Errc::not_latin_square,
                         "column " + std::to_string(j) + " repeats " + std::to_string(v) + " at row " + std::to_string(i)};
      seen[v] = j;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) return std::pair{Errc::no_identity, std::string("no element acts as a two-sided identity")};
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = false;
    for (std::size_t y = 0; y < n && !ok; ++y) ok = at(x, y) == *identity && at(y, x) == *identity;
    if (!ok) return std::pair{Errc::no_inverse, "element " + std::to_string(x) + " has no two-sided inverse"};
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto xy = at(x, y);
      for (std::size_t z = 0; z < n; ++z)
        if (at(xy, z) != at(x, at(y, z)))
          return std::pair{Errc::not_associative, "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                      std::to_string(z) + ") fails associativity"};
    }
  return std::nullopt;
}

/// Re-runs the full axiom scan on an already built group.
inline std::optional<std::pair<Errc, std::string>> find_axiom_violation(const GroupTable& g) {
  std::vector<Element> flat;
  flat.reserve(g.order() * g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto r = g.row(static_cast<Element>(a));
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return find_axiom_violation(g.order(), flat);
}

/// Validates a raw n x n Cayley table. Elements keep their input indices.
inline GroupTable from_cayley_table(const std::vector<std::vector<std::int64_t>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw GroupError(Errc::invalid_argument, "empty table");
  if (n > max_checked_raw_order)
    throw GroupError(Errc::order_cap_exceeded, "raw tables are limited to " + std::to_string(max_checked_raw_order) +
                                                   " elements; build larger groups from generators");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw GroupError(Errc::not_latin_square, "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                                                   " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      auto v = raw[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw GroupError(Errc::not_latin_square, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                                     std::to_string(v) + " out of range");
      flat.push_back(static_cast<Element>(v));
    }
  }
  if (auto bad = find_axiom_violation(n, flat)) throw GroupError(bad->first, bad->second);
  Element e = 0;
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = flat[c * n + x] == x;
    if (ok) {
      e = static_cast<Element>(c);
      break;
    }
  }
  return GroupTable::from_trusted_table(n, std::move(flat), e);
}

/// Breadth-first closure of the generators under composition. Element 0 is
/// the identity permutation; labels are cycle notation.
inline GroupTable from_permutation_generators(const std::vector<Permutation>& gens,
                                              std::size_t cap = default_order_cap) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<Permutation> generators;
  for (const auto& g : gens) {
    std::vector<bool> hit(g.size(), false);
    for (auto v : g) {
      if (v >= g.size() || hit[v]) throw GroupError(Errc::invalid_argument, "generator is not a bijection");
      hit[v] = true;
    }
    generators.push_back(extend_degree(g, degree));
  }

  std::vector<Permutation> elements{identity_permutation(degree)};
  std::map<Permutation, Element> index{{elements[0], 0}};
  // parent[j] and via[j]: elements[j] = elements[parent[j]] * generators[via[j]]
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation next = compose(elements[head], generators[k]);
      if (index.contains(next)) continue;
      if (elements.size() >= cap)
        throw GroupError(Errc::order_cap_exceeded, "generated group exceeds the order cap of " + std::to_string(cap));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
      parent.push_back(static_cast<Element>(head));
      via.push_back(k);
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> right(generators.size(), std::vector<Element>(n));
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) right[k][i] = index.at(compose(elements[i], generators[k]));

  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) table[i * n + j] = right[via[j]][table[i * n + parent[j]]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(format_cycles(p));
  return GroupTable::from_trusted_table(n, std::move(table), 0, std::move(labels));
}

inline void check_element(const GroupTable& g, Element x) {
  if (x >= g.order())
    throw GroupError(Errc::invalid_argument,
                     "element " + std::to_string(x) + " outside group of order " + std::to_string(g.order()));
}

inline std::size_t element_order(const GroupTable& g, Element x) {
  check_element(g, x);
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// x^-1 y^-1 x y
inline Element commutator(const GroupTable& g, Element x, Element y) {
  check_element(g, x);
  check_element(g, y);
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

/// g^-1 x g
inline Element conjugate(const GroupTable& g, Element x, Element by) { return g.mul(g.mul(g.inv(by), x), by); }

inline ElementSet conjugate_set(const GroupTable& g, const ElementSet& s, Element by) {
  ElementSet r(g.order());
  for (Element x : s) r.insert(conjugate(g, x, by));
  r.mark_subgroup(s.is_subgroup());
  return r;
}

inline ElementSet center(const GroupTable& g) {
  ElementSet z(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.commutes(a, b);
    if (central) z.insert(a);
  }
  return z.mark_subgroup();
}

inline ElementSet centralizer(const GroupTable& g, Element x) {
  check_element(g, x);
  ElementSet c(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.commutes(x, y)) c.insert(y);
  return c.mark_subgroup();
}

/// Elements commuting with every member of s.
inline ElementSet centralizer_of_set(const GroupTable& g, const ElementSet& s) {
  ElementSet c(g.order());
  for (Element y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Element x : s) {
      if (!g.commutes(x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) c.insert(y);
  }
  return c.mark_subgroup();
}

/// Setwise product {st : s in a, t in b}.
inline ElementSet product_set(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  ElementSet r(g.order());
  for (Element x : a)
    for (Element y : b) r.insert(g.mul(x, y));
  return r;
}

/// Smallest subgroup containing s.
inline ElementSet subgroup_closure(const GroupTable& g, const ElementSet& s) {
  ElementSet h(g.order());
  std::vector<Element> gens;
  for (Element x : s) {
    check_element(g, x);
    if (x != g.identity()) gens.push_back(x);
  }
  std::vector<Element> queue{g.identity()};
  h.insert(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element x : gens) {
      Element y = g.mul(queue[head], x);
      if (!h.contains(y)) {
        h.insert(y);
        queue.push_back(y);
      }
    }
  }
  return h.mark_subgroup();
}

inline bool is_closed_subgroup(const GroupTable& g, const ElementSet& s) {
  if (s.universe_order() != g.order() || !s.contains(g.identity())) return false;
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

inline void require_subgroup(const GroupTable& g, const ElementSet& s) {
  if (s.universe_order() != g.order())
    throw GroupError(Errc::not_a_subgroup, "set belongs to a universe of order " + std::to_string(s.universe_order()));
  if (!s.is_subgroup() && !is_closed_subgroup(g, s))
    throw GroupError(Errc::not_a_subgroup, "set is not closed under the group product");
}

inline ElementSet derived_subgroup(const GroupTable& g) {
  ElementSet comms(g.order());
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) comms.insert(commutator(g, x, y));
  return subgroup_closure(g, comms);
}

inline ElementSet normal_closure(const GroupTable& g, const ElementSet& s) {
  ElementSet conj(g.order());
  for (Element x : s)
    for (Element by = 0; by < g.order(); ++by) conj.insert(conjugate(g, x, by));
  return subgroup_closure(g, conj);
}

inline bool is_abelian(const GroupTable& g, const ElementSet& s) {
  require_subgroup(g, s);
  for (Element a : s)
    for (Element b : s) {
      if (b >= a) break;
      if (!g.commutes(a, b)) return false;
    }
  return true;
}

inline bool is_abelian(const GroupTable& g) { return is_abelian(g, g.everything()); }

inline bool is_normal(const GroupTable& g, const ElementSet& s) {
  require_subgroup(g, s);
  for (Element by = 0; by < g.order(); ++by)
    for (Element x : s)
      if (!s.contains(conjugate(g, x, by))) return false;
  return true;
}

/// {g : g^-1 s g = s}
inline ElementSet normalizer(const GroupTable& g, const ElementSet& s) {
  ElementSet n(g.order());
  for (Element by = 0; by < g.order(); ++by) {
    bool ok = true;
    for (Element x : s) {
      if (!s.contains(conjugate(g, x, by))) {
        ok = false;
        break;
      }
    }
    if (ok) n.insert(by);
  }
  return n.mark_subgroup();
}

/// A Sylow p-subgroup grown through normalizers: start from the first element
/// of order p, then repeatedly adjoin the first p-element of N(P) outside P.
inline ElementSet sylow_subgroup(const GroupTable& g, std::uint64_t p) {
  if (!is_prime(p)) throw GroupError(Errc::not_prime, std::to_string(p) + " is not prime");
  if (g.order() % p != 0)
    throw GroupError(Errc::prime_does_not_divide_order,
                     std::to_string(p) + " does not divide the group order " + std::to_string(g.order()));
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;

  auto is_p_element = [&](Element x) { return is_power_of(element_order(g, x), p); };
  ElementSet sub(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (element_order(g, x) == p) {
      sub = subgroup_closure(g, ElementSet(g.order(), {x}));
      break;
    }
  }
  while (sub.size() < target) {
    ElementSet norm = normalizer(g, sub);
    std::optional<Element> grow;
    for (Element x : norm) {
      if (!sub.contains(x) && is_p_element(x)) {
        grow = x;
        break;
      }
    }
    if (!grow) throw GroupError(Errc::structure_violation, "normalizer growth stalled below Sylow order");
    ElementSet gens = sub;
    gens.insert(*grow);
    sub = subgroup_closure(g, gens);
  }
  return sub;
}

/// Distinct conjugates g^-1 P g in first-encounter order over g = 0, 1, ...
inline std::vector<ElementSet> sylow_conjugates(const GroupTable& g, const ElementSet& p) {
  require_subgroup(g, p);
  std::vector<ElementSet> out;
  for (Element by = 0; by < g.order(); ++by) {
    ElementSet c = conjugate_set(g, p, by).mark_subgroup();
    bool known = false;
    for (const auto& o : out) {
      if (o == c) {
        known = true;
        break;
      }
    }
    if (!known) out.push_back(std::move(c));
  }
  return out;
}

struct SubgroupShape {
  bool is_cyclic = false;
  std::optional<std::uint64_t> elementary_abelian_prime;
};

inline SubgroupShape subgroup_shape(const GroupTable& g, const ElementSet& s) {
  require_subgroup(g, s);
  SubgroupShape shape;
  const std::size_t size = s.size();
  for (Element x : s) {
    if (element_order(g, x) == size) {
      shape.is_cyclic = true;
      break;
    }
  }
  auto f = factorize(size);
  if (f.size() == 1 && is_abelian(g, s)) {
    const auto q = f[0].first;
    bool all_q = true;
    for (Element x : s)
      if (x != g.identity() && element_order(g, x) != q) all_q = false;
    if (all_q) shape.elementary_abelian_prime = q;
  }
  return shape;
}

}  // namespace ncgroup
