#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncgroup/constructors.hpp"
#include "ncgroup/structure.hpp"
#include "oracles.hpp"

using namespace ncgroup;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GroupError";
  return Errc::io_error;
}

std::size_t count_of_order(const GroupTable& g, std::size_t k) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += element_order(g, x) == k;
  return c;
}

}  // namespace

TEST(Cyclic, Examples) {
  EXPECT_EQ(cyclic(1).order(), 1U);
  const auto c2 = cyclic(2);
  for (Element x = 0; x < 2; ++x) EXPECT_EQ(c2.inv(x), x);
  const auto c6 = cyclic(6);
  EXPECT_TRUE(is_abelian(c6));
  EXPECT_GE(count_of_order(c6, 6), 1U);
  EXPECT_EQ(error_of([] { cyclic(20'000); }), Errc::order_cap_exceeded);
  EXPECT_EQ(cyclic(20'000, 20'000).order(), 20'000U);
}

TEST(ElementaryAbelian, Examples) {
  const auto v4 = elementary_abelian(2, 2);
  EXPECT_EQ(v4.order(), 4U);
  EXPECT_EQ(count_of_order(v4, 2), 3U);
  const auto c3 = elementary_abelian(3, 1);
  EXPECT_EQ(c3.order(), 3U);
  EXPECT_EQ(count_of_order(c3, 3), 2U);
  const auto e16 = elementary_abelian(2, 4);
  EXPECT_EQ(e16.order(), 16U);
  EXPECT_EQ(count_of_order(e16, 2), 15U);
  EXPECT_EQ(error_of([] { elementary_abelian(4, 2); }), Errc::not_prime);
  EXPECT_EQ(error_of([] { elementary_abelian(2, 14); }), Errc::order_cap_exceeded);
}

TEST(DirectProduct, Examples) {
  const auto s3 = fixture::s3();
  const auto t = direct_product(cyclic(1), s3);
  ASSERT_EQ(t.order(), 6U);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(t.mul(a, b), s3.mul(a, b));

  EXPECT_GE(count_of_order(direct_product(cyclic(2), cyclic(3)), 6), 1U);

  const auto c2s3 = direct_product(cyclic(2), s3);
  EXPECT_EQ(c2s3.order(), 12U);
  EXPECT_EQ(center(c2s3).size(), 2U);
  EXPECT_EQ(error_of([] { direct_product(cyclic(200), cyclic(200)); }), Errc::order_cap_exceeded);
}

TEST(DirectProduct, CenterIsProductOfCenters) {
  const std::vector<std::pair<GroupTable, GroupTable>> pairs{
      {cyclic(2), fixture::s3()}, {quaternion8(), fixture::s3()}, {dihedral(4), cyclic(3)}};
  for (const auto& [g, h] : pairs) {
    const auto gh = direct_product(g, h);
    EXPECT_EQ(gh.order(), g.order() * h.order());
    const auto zg = center(g), zh = center(h);
    ElementSet expected(gh.order());
    for (Element a : zg)
      for (Element b : zh) expected.insert(static_cast<Element>(a * h.order() + b));
    EXPECT_EQ(center(gh), expected);
  }
}

TEST(FieldPoly, RemainderAndIrreducibility) {
  // over F_2: 1 + x + x^2 + x^3 + x^4 has no root and is not divisible by
  // 1 + x + x^2, the only irreducible quadratic
  const FieldPoly phi5 = FieldPoly::all_ones(5, 2);
  EXPECT_EQ(poly_mod(phi5, FieldPoly(2, {0, 1})), FieldPoly(2, {1}));
  EXPECT_EQ(poly_mod(phi5, FieldPoly(2, {1, 1})), FieldPoly(2, {1}));
  EXPECT_FALSE(poly_mod(phi5, FieldPoly(2, {1, 1, 1})).is_zero());
  EXPECT_TRUE(is_irreducible(phi5));
  // 1 + x^2 = (1 + x)^2 over F_2
  EXPECT_FALSE(is_irreducible(FieldPoly(2, {1, 0, 1})));
  // over F_7, 1 + x + x^2 has roots 2 and 4
  EXPECT_TRUE(poly_mod(FieldPoly::all_ones(3, 7), FieldPoly(7, {5, 1})).is_zero());
}

TEST(IrreducibleActionMatrix, Examples) {
  auto a = irreducible_action_matrix(2, 3);
  EXPECT_EQ(a.beta, 1U);
  EXPECT_EQ(a.action_matrix.entries, (std::vector<std::uint64_t>{2}));

  a = irreducible_action_matrix(3, 2);
  EXPECT_EQ(a.beta, 2U);
  EXPECT_EQ(a.polynomial, FieldPoly::all_ones(3, 2));
  EXPECT_EQ(a.action_matrix.entries, (std::vector<std::uint64_t>{0, 1, 1, 1}));

  a = irreducible_action_matrix(5, 2);
  EXPECT_EQ(a.beta, 4U);
  EXPECT_EQ(a.polynomial, FieldPoly::all_ones(5, 2));

  // 1 + x + x^2 = (x + 3)(x + 5) over F_7; x + 3 comes first
  a = irreducible_action_matrix(3, 7);
  EXPECT_EQ(a.beta, 1U);
  EXPECT_EQ(a.action_matrix.entries, (std::vector<std::uint64_t>{4}));
}

TEST(IrreducibleActionMatrix, SatisfiesActionInvariants) {
  const std::vector<std::pair<int, int>> cases{{2, 3}, {3, 2}, {5, 2}, {3, 7}, {2, 5}, {7, 2}, {5, 3}, {3, 5}};
  for (auto [p, q] : cases) {
    const auto a = irreducible_action_matrix(p, q);
    const auto id = FqMatrix::identity(q, a.beta);
    EXPECT_EQ(a.beta, multiplicative_order(q, p));
    EXPECT_EQ(matrix_power(a.action_matrix, p), id) << p << "," << q;
    EXPECT_NE(a.action_matrix, id) << p << "," << q;
    EXPECT_TRUE(acts_irreducibly(a.action_matrix)) << p << "," << q;
  }
}

TEST(IrreducibleActionMatrix, Errors) {
  EXPECT_EQ(error_of([] { irreducible_action_matrix(3, 3); }), Errc::primes_equal);
  EXPECT_EQ(error_of([] { irreducible_action_matrix(29, 2); }), Errc::search_space_exceeded);
  EXPECT_EQ(error_of([] { irreducible_action_matrix(5, 2, 10); }), Errc::search_space_exceeded);
  EXPECT_EQ(error_of([] { irreducible_action_matrix(4, 3); }), Errc::not_prime);
}

TEST(ActsIrreducibly, DetectsInvariantSubspace) {
  // diag(1, 2) over F_3 fixes the first axis
  FqMatrix m{3, 2, {1, 0, 0, 2}};
  EXPECT_FALSE(acts_irreducibly(m));
}

TEST(MinimalNonabelianPQ, S3) {
  const auto g = minimal_nonabelian_pq(2, 1, 3);
  EXPECT_EQ(g.order(), 6U);
  EXPECT_FALSE(is_abelian(g));  // the only non-abelian group of order 6
  EXPECT_EQ(oracle::naive_omega(g), 4U);
}

TEST(MinimalNonabelianPQ, A4) {
  const auto g = minimal_nonabelian_pq(3, 1, 2);
  EXPECT_EQ(g.order(), 12U);
  // non-abelian of order 12 with trivial center and no element of order 6 is A4
  EXPECT_EQ(center(g).size(), 1U);
  EXPECT_EQ(count_of_order(g, 6), 0U);
  EXPECT_EQ(derived_subgroup(g).size(), 4U);
  EXPECT_EQ(oracle::naive_omega(g), 5U);
}

TEST(MinimalNonabelianPQ, Dicyclic12) {
  const auto g = minimal_nonabelian_pq(2, 2, 3);
  EXPECT_EQ(g.order(), 12U);
  EXPECT_EQ(center(g).size(), 2U);
  EXPECT_GE(count_of_order(g, 4), 1U);
  EXPECT_EQ(oracle::naive_omega(g), 4U);
}

TEST(MinimalNonabelianPQ, Order80) {
  const auto g = minimal_nonabelian_pq(5, 1, 2);
  EXPECT_EQ(g.order(), 80U);
  EXPECT_EQ(sylow_subgroup(g, 2).size(), 16U);
  EXPECT_EQ(center(g).size(), 1U);
}

TEST(MinimalNonabelianPQ, Errors) {
  EXPECT_EQ(error_of([] { minimal_nonabelian_pq(3, 1, 3); }), Errc::primes_equal);
  EXPECT_EQ(error_of([] { minimal_nonabelian_pq(5, 5, 2); }), Errc::order_cap_exceeded);
  EXPECT_EQ(error_of([] { minimal_nonabelian_pq(2, 0, 3); }), Errc::invalid_argument);
}

TEST(MinimalNonabelianPQ, CenterIsGeneratedByThePthPowerOfTheCyclicPart) {
  struct Case {
    std::uint64_t p;
    unsigned alpha;
    std::uint64_t q;
  };
  for (auto c : std::vector<Case>{{2, 1, 3}, {2, 2, 3}, {2, 3, 3}, {3, 2, 2}, {3, 1, 7}, {2, 2, 5}, {5, 1, 2}}) {
    const auto g = minimal_nonabelian_pq(c.p, c.alpha, c.q);
    const auto vec = g.order() / checked_pow(c.p, c.alpha);
    // (p, 0) has index p * q^beta
    const auto gen = static_cast<Element>(c.p * vec);
    const auto z = center(g);
    EXPECT_EQ(z, subgroup_closure(g, ElementSet(g.order(), {gen % static_cast<Element>(g.order())})));
    EXPECT_EQ(z.size(), checked_pow(c.p, c.alpha - 1));
  }
}

TEST(MetacyclicMinimalPGroup, Examples) {
  const auto d8 = metacyclic_minimal_p_group(2, 2, 1);
  EXPECT_EQ(d8.order(), 8U);
  // non-abelian of order 8 with five involutions is D8
  EXPECT_EQ(count_of_order(d8, 2), 5U);
  EXPECT_EQ(oracle::naive_omega(d8), 3U);

  const auto m27 = metacyclic_minimal_p_group(3, 2, 1);
  EXPECT_EQ(m27.order(), 27U);
  EXPECT_GE(count_of_order(m27, 9), 1U);
  EXPECT_EQ(oracle::naive_omega(m27), 4U);

  const auto m16 = metacyclic_minimal_p_group(2, 2, 2);
  EXPECT_EQ(m16.order(), 16U);
  EXPECT_TRUE(oracle::definitional_minimal_non_abelian(m16));
  EXPECT_EQ(oracle::naive_omega(m16), 3U);

  EXPECT_EQ(error_of([] { metacyclic_minimal_p_group(2, 1, 1); }), Errc::invalid_argument);
  EXPECT_EQ(error_of([] { metacyclic_minimal_p_group(2, 10, 10); }), Errc::order_cap_exceeded);
}

TEST(Quaternion8, Examples) {
  const auto q8 = quaternion8();
  EXPECT_EQ(center(q8), ElementSet(8, {0, 1}));
  EXPECT_EQ(q8.label(1), "-1");
  for (Element x = 0; x < 8; ++x) {
    const auto h = subgroup_closure(q8, ElementSet(8, {x}));
    if (h.size() != 4) continue;
    EXPECT_TRUE(subgroup_shape(q8, h).is_cyclic);
    EXPECT_TRUE(is_abelian(q8, h));
  }
  EXPECT_EQ(count_of_order(q8, 4), 6U);
  // omega = p + 1 with p = 2
  EXPECT_EQ(oracle::naive_omega(q8), 3U);
}

TEST(Dihedral, Examples) {
  EXPECT_TRUE(oracle::definitional_minimal_non_abelian(dihedral(4)));
  EXPECT_FALSE(oracle::definitional_minimal_non_abelian(dihedral(6)));
  const auto d6 = dihedral(3);
  EXPECT_EQ(d6.order(), 6U);
  EXPECT_FALSE(is_abelian(d6));
  EXPECT_EQ(error_of([] { dihedral(2); }), Errc::invalid_argument);
  EXPECT_EQ(error_of([] { dihedral(6000); }), Errc::order_cap_exceeded);
}

TEST(ConstructorInvariants, EveryOutputIsAGroup) {
  std::vector<GroupTable> groups{cyclic(1),
                                 cyclic(7),
                                 elementary_abelian(3, 2),
                                 direct_product(quaternion8(), cyclic(3)),
                                 minimal_nonabelian_pq(2, 1, 3),
                                 minimal_nonabelian_pq(3, 1, 2),
                                 minimal_nonabelian_pq(2, 2, 3),
                                 minimal_nonabelian_pq(3, 1, 7),
                                 minimal_nonabelian_pq(5, 1, 2),
                                 minimal_nonabelian_pq(2, 1, 5),
                                 metacyclic_minimal_p_group(2, 2, 1),
                                 metacyclic_minimal_p_group(3, 2, 1),
                                 metacyclic_minimal_p_group(2, 2, 2),
                                 metacyclic_minimal_p_group(2, 3, 1),
                                 quaternion8(),
                                 dihedral(3),
                                 dihedral(6)};
  for (const auto& g : groups) {
    const auto bad = find_axiom_violation(g);
    EXPECT_FALSE(bad.has_value()) << (bad ? bad->second : "");
  }
}

TEST(ConstructorInvariants, PQGroupsAreMinimalWithDerivedSubgroupTheSylowQ) {
  struct Case {
    std::uint64_t p;
    unsigned alpha;
    std::uint64_t q;
  };
  for (auto c : std::vector<Case>{{2, 1, 3}, {3, 1, 2}, {2, 2, 3}, {3, 1, 7}, {5, 1, 2}, {2, 1, 5}, {3, 2, 2}}) {
    const auto g = minimal_nonabelian_pq(c.p, c.alpha, c.q);
    EXPECT_TRUE(is_minimal_non_abelian(g));
    const auto sq = sylow_subgroup(g, c.q);
    EXPECT_EQ(sylow_conjugates(g, sq).size(), 1U);
    EXPECT_EQ(derived_subgroup(g), sq);
    EXPECT_EQ(center(g).size(), checked_pow(c.p, c.alpha - 1));
  }
}

TEST(ConstructorInvariants, PGroupExemplarsHaveAbelianMaximalSubgroups) {
  for (const auto& g : {metacyclic_minimal_p_group(2, 2, 1), metacyclic_minimal_p_group(3, 2, 1),
                        metacyclic_minimal_p_group(2, 2, 2), quaternion8()}) {
    EXPECT_TRUE(oracle::definitional_minimal_non_abelian(g));
    EXPECT_TRUE(is_minimal_non_abelian(g));
  }
}
