#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "ncgroup/catalog.hpp"
#include "ncgroup/ncgraph.hpp"
#include "ncgroup/specifier.hpp"
#include "oracles.hpp"

using namespace ncgroup;
using fixture::el;
using fixture::set_of;

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

struct Fixture {
  NonCommutingGraph graph;
  std::vector<std::vector<bool>> adj;
};

Fixture random_graph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) {
        adj[a][b] = adj[b][a] = true;
        edges.emplace_back(a, b);
      }
  std::vector<Element> vs(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    vs[i] = static_cast<Element>(i);
    labels[i] = "v" + std::to_string(i);
  }
  return {NonCommutingGraph(n, vs, labels, edges), adj};
}

std::vector<std::pair<std::string, GroupTable>> small_catalog_groups() {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (const auto& e : parse_catalog(builtin_catalog_text)) {
    auto g = parse_group_spec(e.spec);
    if (g.order() <= 30) out.emplace_back(e.name, std::move(g));
  }
  return out;
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST(BuildGraph, S3) {
  const auto s3 = fixture::s3();
  const auto graph = build_graph(s3);
  EXPECT_EQ(graph.vertex_count(), 5U);
  EXPECT_EQ(graph.edge_count(), 9U);
  const auto& vs = graph.vertices();
  const auto pos = [&](const char* l) {
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), el(s3, l)) - vs.begin());
  };
  EXPECT_FALSE(graph.adjacent(pos("(1 2 3)"), pos("(1 3 2)")));
  for (const char* t : {"(1 2)", "(1 3)", "(2 3)"}) {
    EXPECT_TRUE(graph.adjacent(pos(t), pos("(1 2 3)")));
    EXPECT_TRUE(graph.adjacent(pos(t), pos("(1 3 2)")));
  }
}

TEST(BuildGraph, Q8) {
  const auto q8 = quaternion8();
  const auto graph = build_graph(q8);
  EXPECT_EQ(graph.vertex_count(), 6U);
  EXPECT_EQ(graph.edge_count(), 12U);
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v) {
      if (u == v) continue;
      const auto cyc = subgroup_closure(q8, ElementSet(8, {graph.vertices()[u]}));
      EXPECT_EQ(graph.adjacent(u, v), !cyc.contains(graph.vertices()[v]));
    }
}

TEST(BuildGraph, AbelianIsAnError) { EXPECT_EQ(error_of([] { build_graph(cyclic(5)); }), Errc::abelian_group); }

TEST(BuildGraph, StructuralInvariants) {
  for (const auto& [name, g] : fixture::assorted_groups()) {
    if (is_abelian(g)) continue;
    const auto graph = build_graph(g);
    const auto z = center(g);
    std::size_t degree_sum = 0;
    for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
      const Element x = graph.vertices()[u];
      EXPECT_FALSE(z.contains(x)) << name;
      EXPECT_FALSE(graph.adjacent(u, u)) << name;
      if (u > 0) {
        EXPECT_LT(graph.vertices()[u - 1], x) << name;
      }
      for (std::size_t v = 0; v < graph.vertex_count(); ++v) EXPECT_EQ(graph.adjacent(u, v), graph.adjacent(v, u));
      EXPECT_EQ(graph.degree(u), g.order() - centralizer(g, x).size()) << name;
      degree_sum += graph.degree(u);
    }
    EXPECT_EQ(graph.vertex_count(), g.order() - z.size()) << name;
    EXPECT_EQ(degree_sum, 2 * graph.edge_count()) << name;
  }
}

TEST(MaxClique, Examples) {
  const auto s3 = fixture::s3();
  const auto r = max_clique(build_graph(s3));
  EXPECT_EQ(r.value, 4U);
  EXPECT_EQ(r.method, OmegaMethod::clique);
  ASSERT_TRUE(r.witness);
  std::size_t transpositions = 0;
  for (Element x : *r.witness) transpositions += element_order(s3, x) == 2;
  EXPECT_EQ(transpositions, 3U);
  EXPECT_EQ(max_clique(build_graph(fixture::a4())).value, 5U);
}

TEST(MaxClique, CompleteGraphs) {
  for (std::size_t k = 1; k <= 12; ++k) {
    std::mt19937 rng(0);
    const auto f = random_graph(k, 1.0, rng);
    EXPECT_EQ(max_clique(f.graph).value, k);
  }
}

TEST(MaxClique, EmptyGraphIsAnError) {
  EXPECT_EQ(error_of([] { max_clique(NonCommutingGraph(1, {}, {}, {})); }), Errc::empty_graph);
  EXPECT_EQ(error_of([] { NonCommutingGraph(2, {0, 1}, {"a", "b"}, {{0, 2}}); }), Errc::invalid_argument);
}

TEST(MaxClique, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const double density = 0.15 + 0.8 * (trial % 10) / 10.0;
    const auto f = random_graph(size(rng), density, rng);
    const auto r = max_clique(f.graph);
    EXPECT_EQ(r.value, oracle::naive_clique(f.adj)) << "trial " << trial;
    std::vector<Element> w = r.witness->to_vector();
    ASSERT_EQ(w.size(), r.value);
    for (auto a : w)
      for (auto b : w)
        if (a != b) {
          EXPECT_TRUE(f.adj[a][b]);
        }
  }
}

TEST(MaxClique, AgreesWithBruteForceOnSmallCatalogGroups) {
  auto groups = small_catalog_groups();
  for (auto& [name, g] : fixture::assorted_groups())
    if (g.order() <= 30 && !is_abelian(g)) groups.emplace_back(name, g);
  ASSERT_GE(groups.size(), 10U);
  for (const auto& [name, g] : groups) {
    if (build_graph(g).vertex_count() > 26) continue;
    EXPECT_EQ(max_clique(build_graph(g)).value, oracle::naive_omega(g)) << name;
  }
}

TEST(MaxClique, WitnessIsValidAndNotExtendable) {
  for (const auto& [name, g] : fixture::assorted_groups()) {
    if (is_abelian(g)) continue;
    const auto r = max_clique(build_graph(g));
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->size(), r.value) << name;
    EXPECT_TRUE(is_valid_witness(g, *r.witness)) << name;
    EXPECT_FALSE(find_extension(g, *r.witness).has_value()) << name;
  }
}

TEST(MaxClique, DeterministicAcrossRunsAndThreadCounts) {
  const auto g80 = minimal_nonabelian_pq(5, 1, 2);
  const auto graph = build_graph(g80);
  const auto first = max_clique(graph);
  EXPECT_EQ(first.value, 17U);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(*max_clique(graph).witness, *first.witness);
  for (unsigned t : {2U, 4U, 0U}) {
    const auto r = max_clique(graph, {t});
    EXPECT_EQ(r.value, 17U) << t;
    EXPECT_TRUE(is_valid_witness(g80, *r.witness)) << t;
  }
}

TEST(AcGroup, Examples) {
  EXPECT_TRUE(is_ac_group(fixture::s3()));
  EXPECT_FALSE(is_ac_group(fixture::s4()));
  const auto s4 = fixture::s4();
  EXPECT_EQ(centralizer(s4, el(s4, "(1 2)")).size(), 4U);
  EXPECT_TRUE(is_abelian(s4, centralizer(s4, el(s4, "(1 2)"))));
  EXPECT_FALSE(is_abelian(s4, centralizer(s4, el(s4, "(1 2)(3 4)"))));
  EXPECT_EQ(error_of([] { is_ac_group(cyclic(4)); }), Errc::abelian_group);
}

TEST(AcGroup, MinimalNonAbelianGroupsAreAC) {
  for (const auto& [name, g] : fixture::assorted_groups())
    if (!is_abelian(g) && is_minimal_non_abelian(g)) {
      EXPECT_TRUE(is_ac_group(g)) << name;
    }
}

TEST(AcCriterion, Examples) {
  const auto s3 = check_ac_criterion(fixture::s3());
  EXPECT_TRUE(s3.ac_group && s3.commuting_pairs_share_centralizer && s3.holds());

  const auto s4g = fixture::s4();
  const auto s4 = check_ac_criterion(s4g);
  EXPECT_FALSE(s4.ac_group);
  EXPECT_FALSE(s4.commuting_pairs_share_centralizer);
  EXPECT_TRUE(s4.holds());
  ASSERT_TRUE(s4.counterexample);
  const auto [x, y] = *s4.counterexample;
  EXPECT_TRUE(s4g.commutes(x, y));
  EXPECT_NE(centralizer(s4g, x), centralizer(s4g, y));
  // (1 2) and (3 4) share a centralizer; (1 2) and (1 2)(3 4) do not
  EXPECT_EQ(centralizer(s4g, el(s4g, "(1 2)")), centralizer(s4g, el(s4g, "(3 4)")));
  EXPECT_TRUE(s4g.commutes(el(s4g, "(1 2)"), el(s4g, "(1 2)(3 4)")));
  EXPECT_EQ(centralizer(s4g, el(s4g, "(1 2)")).size(), 4U);
  EXPECT_EQ(centralizer(s4g, el(s4g, "(1 2)(3 4)")).size(), 8U);

  const auto a4 = check_ac_criterion(fixture::a4());
  EXPECT_TRUE(a4.ac_group && a4.commuting_pairs_share_centralizer);
}

TEST(AcCriterion, HoldsOnEveryNonAbelianFixture) {
  for (const auto& [name, g] : fixture::assorted_groups())
    if (!is_abelian(g)) {
      EXPECT_TRUE(check_ac_criterion(g).holds()) << name;
    }
}

TEST(CentralizerFamily, Examples) {
  const auto s3 = centralizer_family(fixture::s3());
  ASSERT_EQ(s3.members.size(), 4U);
  std::vector<std::size_t> sizes;
  for (const auto& m : s3.members) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2, 2, 3}));
  EXPECT_TRUE(s3.covers_group);

  const auto a4 = centralizer_family(fixture::a4());
  EXPECT_EQ(a4.members.size(), 5U);
  EXPECT_TRUE(a4.covers_group);

  const auto dic = centralizer_family(minimal_nonabelian_pq(2, 2, 3));
  sizes.clear();
  for (const auto& m : dic.members) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{4, 4, 4, 6}));
  EXPECT_TRUE(dic.covers_group);
}

TEST(CentralizerFamily, MembersAreDistinctProperCentralizersOfTheirRepresentatives) {
  for (const auto& [name, g] : fixture::assorted_groups()) {
    if (is_abelian(g)) continue;
    const auto f = centralizer_family(g);
    ASSERT_EQ(f.members.size(), f.representatives.size());
    for (std::size_t i = 0; i < f.members.size(); ++i) {
      EXPECT_EQ(f.members[i], centralizer(g, f.representatives[i])) << name;
      EXPECT_LT(f.members[i].size(), g.order()) << name;
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(f.members[i], f.members[j]) << name;
    }
    if (is_ac_group(g)) {
      EXPECT_TRUE(f.pairwise_intersections_are_center) << name;
    }
  }
}

TEST(OmegaViaCentralizers, Examples) {
  EXPECT_EQ(omega_via_centralizers(fixture::s3()).value, 4U);
  const auto g80 = minimal_nonabelian_pq(5, 1, 2);
  const auto r = omega_via_centralizers(g80);
  EXPECT_EQ(r.value, 17U);
  EXPECT_EQ(r.method, OmegaMethod::centralizers);
  EXPECT_EQ(r.covering_centralizers.size(), 17U);
  std::size_t order5 = 0, order16 = 0;
  for (const auto& c : r.covering_centralizers) {
    order5 += c.size() == 5;
    order16 += c.size() == 16;
  }
  EXPECT_EQ(order5, 16U);
  EXPECT_EQ(order16, 1U);
  EXPECT_EQ(error_of([] { omega_via_centralizers(fixture::s4()); }), Errc::not_ac_group);
}

TEST(OmegaViaCentralizers, WitnessIsMaximumAndNotExtendable) {
  for (const auto& [name, g] : fixture::assorted_groups()) {
    if (is_abelian(g) || !is_ac_group(g)) continue;
    const auto r = omega_via_centralizers(g);
    EXPECT_TRUE(is_valid_witness(g, *r.witness)) << name;
    EXPECT_EQ(r.witness->size(), r.value) << name;
    EXPECT_FALSE(find_extension(g, *r.witness).has_value()) << name;
    EXPECT_EQ(max_clique(build_graph(g)).value, r.value) << name;
  }
}

TEST(CoverCount, Examples) {
  const auto s3 = check_cover_count(fixture::s3());
  EXPECT_EQ(s3.m, 3U);
  EXPECT_EQ(s3.counted, 6U);
  EXPECT_EQ(s3.omega_clique, 4U);
  EXPECT_TRUE(s3.all());

  const auto a4 = check_cover_count(fixture::a4());
  EXPECT_EQ(a4.m, 4U);
  EXPECT_EQ(a4.counted, 12U);
  EXPECT_EQ(a4.omega_formula, 5U);
  EXPECT_TRUE(a4.all());

  const auto dic = check_cover_count(minimal_nonabelian_pq(2, 2, 3));
  EXPECT_EQ(dic.center_order, 2U);
  EXPECT_EQ(dic.counted, 12U);
  EXPECT_EQ(dic.omega_centralizers, 4U);
  EXPECT_TRUE(dic.all());

  EXPECT_EQ(error_of([] { check_cover_count(quaternion8()); }), Errc::is_p_group);
  EXPECT_EQ(error_of([] { check_cover_count(dihedral(6)); }), Errc::not_minimal_non_abelian);
}

TEST(CoverCount, HoldsForEveryPQGroup) {
  for (const auto& g : {minimal_nonabelian_pq(3, 1, 7), minimal_nonabelian_pq(5, 1, 2), minimal_nonabelian_pq(2, 1, 5),
                        minimal_nonabelian_pq(2, 3, 3), minimal_nonabelian_pq(3, 2, 2)}) {
    const auto r = check_cover_count(g);
    EXPECT_TRUE(r.all());
    EXPECT_EQ(r.family_size, r.q_beta + 1);
    EXPECT_EQ(r.m, r.q_beta);
  }
}

TEST(ExportGraph, Dimacs) {
  const auto s3 = export_graph(build_graph(fixture::s3()), GraphFormat::dimacs);
  EXPECT_EQ(s3.substr(0, s3.find('\n')), "p edge 5 9");
  EXPECT_EQ(count_lines_starting(s3, "e "), 9U);

  const NonCommutingGraph one(2, {0, 1}, {"a", "b"}, {{0, 1}});
  EXPECT_EQ(export_graph(one, GraphFormat::dimacs), "p edge 2 1\ne 1 2\n");

  const auto q8 = export_graph(build_graph(quaternion8()), GraphFormat::dimacs);
  EXPECT_EQ(q8.substr(0, q8.find('\n')), "p edge 6 12");
}

TEST(ExportGraph, EdgeLinesAreSortedAndOneBased) {
  const auto text = export_graph(build_graph(fixture::a4()), GraphFormat::dimacs);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::pair<int, int> prev{0, 0};
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    char e;
    int u, v;
    ls >> e >> u >> v;
    EXPECT_GE(u, 1);
    EXPECT_LT(u, v);
    EXPECT_LE(v, 11);
    EXPECT_LT(prev, std::make_pair(u, v));
    prev = {u, v};
  }
}

TEST(ExportGraph, Dot) {
  const NonCommutingGraph one(2, {0, 1}, {"a", "b\"c"}, {{0, 1}});
  EXPECT_EQ(export_graph(one, GraphFormat::dot),
            "graph noncommuting {\n  1 [label=\"a\"];\n  2 [label=\"b\\\"c\"];\n  1 -- 2;\n}\n");
  const auto s3 = export_graph(build_graph(fixture::s3()), GraphFormat::dot);
  EXPECT_NE(s3.find("[label=\"(1 2 3)\"]"), std::string::npos);
  EXPECT_EQ(std::count(s3.begin(), s3.end(), '-') / 2, 9);
}

TEST(ExportGraph, ByteStable) {
  const auto g = minimal_nonabelian_pq(5, 1, 2);
  EXPECT_EQ(export_graph(build_graph(g), GraphFormat::dimacs), export_graph(build_graph(g), GraphFormat::dimacs));
  EXPECT_EQ(error_of([] { export_graph(NonCommutingGraph(1, {}, {}, {}), GraphFormat::dot); }), Errc::empty_graph);
}
