#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncgroup/arith.hpp"
#include "ncgroup/error.hpp"
#include "ncgroup/group.hpp"
#include "ncgroup/omega.hpp"

namespace ncgroup {

enum class GroupKind { p_group, pq_group, not_applicable };

constexpr std::string_view kind_name(GroupKind k) noexcept {
  switch (k) {
    case GroupKind::p_group: return "p-group";
    case GroupKind::pq_group: return "PQ-group";
    case GroupKind::not_applicable: return "not-applicable";
  }
  return "unknown";
}

/// Non-abelian, and every non-commuting pair generates the whole group. A
/// proper non-abelian subgroup would contain a non-commuting pair generating
/// a proper subgroup, so this matches "every proper subgroup is abelian".
inline bool is_minimal_non_abelian(const GroupTable& g) {
  const auto n = g.order();
  bool non_abelian = false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (g.commutes(x, y)) continue;
      non_abelian = true;
      if (subgroup_closure(g, ElementSet(n, {x, y})).size() != n) return false;
    }
  }
  return non_abelian;
}

/// True iff s is generated, as a normal subgroup, by each of its nonidentity
/// elements.
inline bool is_minimal_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_normal(g, s)) throw GroupError(Errc::not_normal, "subgroup is not normal");
  if (s.size() <= 1) throw GroupError(Errc::trivial_subgroup, "subgroup is trivial");
  for (Element x : s) {
    if (x == g.identity()) continue;
    if (!(normal_closure(g, ElementSet(g.order(), {x})) == s)) return false;
  }
  return true;
}

/// Conclusions about a minimal non-abelian group that is not of prime-power
/// order: the order has exactly two prime divisors, the Sylow p-subgroup is
/// cyclic, and the Sylow q-subgroup is elementary abelian, normal and minimal
/// normal.
struct PQStructureChecks {
  bool two_primes = false;
  bool cyclic_p = false;
  bool elementary_abelian_q = false;
  bool normal_q = false;
  bool minimal_normal_q = false;

  bool all() const noexcept { return two_primes && cyclic_p && elementary_abelian_q && normal_q && minimal_normal_q; }
};

struct PQDecomposition {
  std::uint64_t p = 0;
  unsigned alpha = 0;
  std::uint64_t q = 0;
  unsigned beta = 0;
  ElementSet P;
  ElementSet Q;
  Element P_generator = 0;
  /// Number of Sylow p-subgroups.
  std::size_t m = 0;
  ElementSet Z;
  PQStructureChecks checks;
};

struct Decomposition {
  GroupKind kind = GroupKind::not_applicable;
  /// The prime for a p-group; p of the decomposition otherwise.
  std::uint64_t prime = 0;
  std::optional<PQDecomposition> pq;
};

/// Splits a minimal non-abelian group. Throws StructureViolation if any of
/// the expected structural conclusions fails, since that can only be a bug.
inline Decomposition decompose(const GroupTable& g) {
  if (!is_minimal_non_abelian(g)) throw GroupError(Errc::not_minimal_non_abelian, "group is not minimal non-abelian");
  const auto factors = factorize(g.order());
  if (factors.size() == 1) return {GroupKind::p_group, factors[0].first, std::nullopt};
  if (factors.size() != 2)
    throw GroupError(Errc::structure_violation,
                     "order " + std::to_string(g.order()) + " has " + std::to_string(factors.size()) + " prime divisors");

  ElementSet sylow[2] = {sylow_subgroup(g, factors[0].first), sylow_subgroup(g, factors[1].first)};
  const bool normal[2] = {is_normal(g, sylow[0]), is_normal(g, sylow[1])};
  if (normal[0] == normal[1])
    throw GroupError(Errc::structure_violation, normal[0] ? "both Sylow subgroups are normal"
                                                          : "neither Sylow subgroup is normal");
  const int qi = normal[0] ? 0 : 1, pi = 1 - qi;

  PQDecomposition d;
  d.p = factors[pi].first;
  d.alpha = factors[pi].second;
  d.q = factors[qi].first;
  d.beta = factors[qi].second;
  d.P = sylow[pi];
  d.Q = sylow[qi];
  d.Z = center(g);
  d.m = sylow_conjugates(g, d.P).size();
  const auto p_size = d.P.size();
  for (Element x : d.P) {
    if (element_order(g, x) == p_size) {
      d.P_generator = x;
      break;
    }
  }

  d.checks.two_primes = true;
  d.checks.cyclic_p = subgroup_shape(g, d.P).is_cyclic;
  d.checks.elementary_abelian_q = subgroup_shape(g, d.Q).elementary_abelian_prime == d.q;
  d.checks.normal_q = normal[qi];
  d.checks.minimal_normal_q = is_minimal_normal(g, d.Q);
  if (!d.checks.all()) {
    std::string failed;
    if (!d.checks.cyclic_p) failed += " cyclic-P";
    if (!d.checks.elementary_abelian_q) failed += " elementary-abelian-Q";
    if (!d.checks.minimal_normal_q) failed += " minimal-normal-Q";
    throw GroupError(Errc::structure_violation, "decomposition checks failed:" + failed);
  }
  return {GroupKind::pq_group, d.p, std::move(d)};
}

/// Derived subgroup, center, Sylow p normalizer and centralizers of Q for a
/// PQ decomposition.
struct PQLemmaChecks {
  /// G' = Q
  bool derived_is_q = false;
  /// G' meets Z(G) trivially and Z(G) is a p-group
  bool derived_meets_center_trivially = false;
  /// C_G(P) = N_G(P) = P
  bool p_self_normalizing = false;
  /// C_G(b) = Z(G) Q with |C_G(b)| = |Z(G)| |Q| for every 1 != b in Q
  bool q_centralizers_split = false;

  bool all() const noexcept {
    return derived_is_q && derived_meets_center_trivially && p_self_normalizing && q_centralizers_split;
  }
};

inline PQLemmaChecks check_pq_lemma(const GroupTable& g, const PQDecomposition& d) {
  const auto n = g.order();
  if (d.P.universe_order() != n || d.Q.universe_order() != n || d.Z.universe_order() != n ||
      d.P.size() * d.Q.size() != n || !is_closed_subgroup(g, d.P) || !is_closed_subgroup(g, d.Q))
    throw GroupError(Errc::decomposition_mismatch, "decomposition does not describe this group");
  PQLemmaChecks c;
  const ElementSet derived = derived_subgroup(g);
  c.derived_is_q = derived == d.Q;
  const ElementSet z = center(g);
  c.derived_meets_center_trivially = derived.intersection(z).size() == 1 && is_power_of(z.size(), d.p);
  c.p_self_normalizing = centralizer_of_set(g, d.P) == d.P && normalizer(g, d.P) == d.P;
  const ElementSet zq = product_set(g, z, d.Q);
  c.q_centralizers_split = true;
  for (Element b : d.Q) {
    if (b == g.identity()) continue;
    const ElementSet cb = centralizer(g, b);
    if (!(cb == zq) || cb.size() != z.size() * d.Q.size()) {
      c.q_centralizers_split = false;
      break;
    }
  }
  return c;
}

/// omega for a minimal non-abelian group: p + 1 for a p-group, |Q| + 1
/// otherwise.
inline OmegaResult omega_formula(const GroupTable& g) {
  const Decomposition d = decompose(g);
  OmegaResult r;
  r.method = OmegaMethod::formula;
  if (d.kind == GroupKind::p_group) {
    r.value = d.prime + 1;
    r.derivation = "p + 1 = " + std::to_string(d.prime) + " + 1";
  } else {
    r.value = d.pq->Q.size() + 1;
    r.derivation = "q^beta + 1 = " + std::to_string(d.pq->q) + "^" + std::to_string(d.pq->beta) + " + 1";
  }
  return r;
}

struct StructureReport {
  std::string group;
  std::size_t order = 0;
  std::size_t center_order = 0;
  bool minimal_non_abelian = false;
  GroupKind kind = GroupKind::not_applicable;
  std::uint64_t p = 0;
  std::optional<PQDecomposition> decomposition;
  std::optional<PQStructureChecks> structure_checks;
  std::optional<PQLemmaChecks> lemma_checks;
};

inline StructureReport analyze(const GroupTable& g, std::string group_id = {}) {
  StructureReport r;
  r.group = std::move(group_id);
  r.order = g.order();
  r.center_order = center(g).size();
  r.minimal_non_abelian = is_minimal_non_abelian(g);
  if (!r.minimal_non_abelian) return r;
  Decomposition d = decompose(g);
  r.kind = d.kind;
  r.p = d.prime;
  if (d.pq) {
    r.structure_checks = d.pq->checks;
    r.lemma_checks = check_pq_lemma(g, *d.pq);
    r.decomposition = std::move(d.pq);
  }
  return r;
}

/// ln |G : Z(G)| / omega, reported alongside omega as a diagnostic.
inline double pyber_ratio(std::size_t order, std::size_t center_order, std::size_t omega) {
  if (omega == 0 || center_order == 0) return 0.0;
  return std::log(static_cast<double>(order) / static_cast<double>(center_order)) / static_cast<double>(omega);
}

}  // namespace ncgroup
