#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ncgroup/error.hpp"
#include "ncgroup/group.hpp"
#include "ncgroup/omega.hpp"
#include "ncgroup/structure.hpp"

namespace ncgroup {

/// Graph on G \ Z(G) with u ~ v iff uv != vu. Vertex positions 0..V-1 map
/// to element indices in increasing order. Can also hold an arbitrary
/// fixture graph for testing the clique search.
class NonCommutingGraph {
 public:
  NonCommutingGraph() = default;

  /// Explicit graph: edges are pairs of vertex positions.
  NonCommutingGraph(std::size_t universe, std::vector<Element> vertices, std::vector<std::string> labels,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : universe_(universe), vertices_(std::move(vertices)), labels_(std::move(labels)) {
    init_rows();
    for (auto [u, v] : edges) {
      if (u >= vertices_.size() || v >= vertices_.size() || u == v)
        throw GroupError(Errc::invalid_argument, "bad edge in graph fixture");
      connect(u, v);
    }
  }

  static NonCommutingGraph of_group(const GroupTable& g) {
    NonCommutingGraph graph;
    graph.universe_ = g.order();
    const ElementSet z = center(g);
    for (Element x = 0; x < g.order(); ++x) {
      if (z.contains(x)) continue;
      graph.vertices_.push_back(x);
      graph.labels_.push_back(g.label(x));
    }
    graph.init_rows();
    const auto& vs = graph.vertices_;
    for (std::size_t u = 0; u < vs.size(); ++u)
      for (std::size_t v = u + 1; v < vs.size(); ++v)
        if (!g.commutes(vs[u], vs[v])) graph.connect(u, v);
    return graph;
  }

  std::size_t universe_order() const noexcept { return universe_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const std::vector<Element>& vertices() const noexcept { return vertices_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return ((rows_[u][v / 64] >> (v % 64)) & 1U) != 0; }
  std::size_t degree(std::size_t u) const noexcept {
    std::size_t d = 0;
    for (auto w : rows_[u]) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }
  const std::vector<std::uint64_t>& row(std::size_t u) const noexcept { return rows_[u]; }

 private:
  void init_rows() {
    if (labels_.size() != vertices_.size()) {
      labels_.clear();
      for (auto v : vertices_) labels_.push_back(std::to_string(v));
    }
    rows_.assign(vertices_.size(), std::vector<std::uint64_t>((vertices_.size() + 63) / 64, 0));
  }
  void connect(std::size_t u, std::size_t v) {
    if (adjacent(u, v)) return;
    rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v][u / 64] |= std::uint64_t{1} << (u % 64);
    ++edges_;
  }

  std::size_t universe_ = 0;
  std::vector<Element> vertices_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::size_t edges_ = 0;
};

inline NonCommutingGraph build_graph(const GroupTable& g) {
  if (is_abelian(g)) throw GroupError(Errc::abelian_group, "abelian group has an empty non-commuting graph");
  return NonCommutingGraph::of_group(g);
}

struct CliqueOptions {
  /// 0 picks hardware concurrency.
  unsigned threads = 1;
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool bits_empty(const Bits& b) {
  for (auto w : b)
    if (w != 0) return false;
  return true;
}

/// Branch and bound over a degree-sorted copy of the graph. Candidate sets
/// are bitsets; greedy sequential colouring bounds every branch.
class CliqueSearch {
 public:
  explicit CliqueSearch(const NonCommutingGraph& graph) : n_(graph.vertex_count()), words_((n_ + 63) / 64) {
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return graph.degree(a) > graph.degree(b); });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bits(words_, 0));
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v)
        if (graph.adjacent(order_[u], order_[v])) adj_[u][v / 64] |= std::uint64_t{1} << (v % 64);
  }

  /// Best clique as original vertex positions.
  std::vector<std::size_t> run(unsigned threads) {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (threads <= 1) {
      std::vector<std::size_t> current;
      Local local{0, {}};
      expand(all, current, local);
      return to_original(local.best);
    }
    // Root branch i takes vertex color_order[i] with candidates restricted to
    // the vertices that precede it in the colouring, exactly as the
    // sequential loop would see them.
    std::vector<std::size_t> order, colors;
    color_sort(all, order, colors);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    Local global{0, {}};
    auto worker = [&] {
      Local local{0, {}};
      std::vector<std::size_t> current;
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= order.size()) break;
        const std::size_t i = order.size() - 1 - k;
        if (colors[i] <= shared_best_.load()) continue;
        Bits cand(words_, 0);
        for (std::size_t j = 0; j < i; ++j) cand[order[j] / 64] |= std::uint64_t{1} << (order[j] % 64);
        const std::size_t v = order[i];
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= adj_[v][w];
        current.assign(1, v);
        local.size = std::max(local.size, shared_best_.load());
        if (bits_empty(cand))
          record(current, local);
        else
          expand(cand, current, local);
      }
      std::lock_guard lock(mu);
      if (local.best.size() > global.best.size()) global = std::move(local);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return to_original(global.best);
  }

 private:
  struct Local {
    std::size_t size;
    std::vector<std::size_t> best;
  };

  void color_sort(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    Bits uncolored = cand;
    std::size_t color = 0;
    while (!bits_empty(uncolored)) {
      ++color;
      Bits avail = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (avail[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(avail[w]));
          avail[w] &= avail[w] - 1;
          uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t k = w; k < words_; ++k) avail[k] &= ~adj_[v][k];
          order.push_back(v);
          colors.push_back(color);
        }
      }
    }
  }

  void record(const std::vector<std::size_t>& current, Local& local) {
    if (current.size() <= local.best.size()) return;
    local.best = current;
    local.size = std::max(local.size, current.size());
    std::size_t seen = shared_best_.load();
    while (seen < current.size() && !shared_best_.compare_exchange_weak(seen, current.size())) {
    }
  }

  void expand(Bits cand, std::vector<std::size_t>& current, Local& local) {
    std::vector<std::size_t> order, colors;
    color_sort(cand, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t bound = std::max(local.size, shared_best_.load());
      if (current.size() + colors[i] <= bound) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & adj_[v][w];
      if (bits_empty(next))
        record(current, local);
      else
        expand(std::move(next), current, local);
      current.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<std::size_t> to_original(const std::vector<std::size_t>& clique) const {
    std::vector<std::size_t> out;
    for (auto v : clique) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<Bits> adj_;
  std::atomic<std::size_t> shared_best_{0};
};

}  // namespace detail

/// Exact clique number with one maximum clique as witness. The witness is
/// canonical for threads == 1; the value does not depend on the thread count.
inline OmegaResult max_clique(const NonCommutingGraph& graph, CliqueOptions options = {}) {
  if (graph.vertex_count() == 0) throw GroupError(Errc::empty_graph, "graph has no vertices");
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  detail::CliqueSearch search(graph);
  const auto clique = search.run(threads);
  OmegaResult r;
  r.method = OmegaMethod::clique;
  r.value = clique.size();
  ElementSet w(graph.universe_order());
  for (auto v : clique) w.insert(graph.vertices()[v]);
  r.witness = std::move(w);
  return r;
}

inline void require_non_abelian(const GroupTable& g) {
  if (is_abelian(g)) throw GroupError(Errc::abelian_group, "group is abelian");
}

/// Every non-central element has an abelian centralizer.
inline bool is_ac_group(const GroupTable& g) {
  require_non_abelian(g);
  const ElementSet z = center(g);
  std::vector<ElementSet> checked;
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    ElementSet c = centralizer(g, x);
    if (std::find(checked.begin(), checked.end(), c) != checked.end()) continue;
    if (!is_abelian(g, c)) return false;
    checked.push_back(std::move(c));
  }
  return true;
}

/// Both sides of the AC criterion: the group is AC iff any two commuting
/// non-central elements have the same centralizer.
struct AcCriterion {
  bool ac_group = false;
  bool commuting_pairs_share_centralizer = false;
  /// Example pair (x, y) with [x, y] = 1 but C(x) != C(y), if any.
  std::optional<std::pair<Element, Element>> counterexample;

  bool holds() const noexcept { return ac_group == commuting_pairs_share_centralizer; }
};

inline AcCriterion check_ac_criterion(const GroupTable& g) {
  AcCriterion r;
  r.ac_group = is_ac_group(g);
  const ElementSet z = center(g);
  std::vector<ElementSet> cent(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (!z.contains(x)) cent[x] = centralizer(g, x);
  r.commuting_pairs_share_centralizer = true;
  for (Element x = 0; x < g.order() && !r.counterexample; ++x) {
    if (z.contains(x)) continue;
    for (Element y = x + 1; y < g.order(); ++y) {
      if (z.contains(y) || !g.commutes(x, y)) continue;
      if (!(cent[x] == cent[y])) {
        r.commuting_pairs_share_centralizer = false;
        r.counterexample = std::pair{x, y};
        break;
      }
    }
  }
  return r;
}

/// The distinct centralizers of non-central elements, each with the first
/// element (by index) that has it.
struct CentralizerFamily {
  std::vector<ElementSet> members;
  std::vector<Element> representatives;
  bool covers_group = false;
  /// Distinct members meet exactly in Z(G).
  bool pairwise_intersections_are_center = false;
};

inline CentralizerFamily centralizer_family(const GroupTable& g) {
  require_non_abelian(g);
  CentralizerFamily f;
  const ElementSet z = center(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    ElementSet c = centralizer(g, x);
    if (std::find(f.members.begin(), f.members.end(), c) != f.members.end()) continue;
    f.members.push_back(std::move(c));
    f.representatives.push_back(x);
  }
  ElementSet covered = z;
  for (const auto& c : f.members) covered = covered.united(c);
  f.covers_group = covered.size() == g.order();
  f.pairwise_intersections_are_center = true;
  for (std::size_t i = 0; i < f.members.size() && f.pairwise_intersections_are_center; ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j)
      if (!(f.members[i].intersection(f.members[j]) == z)) {
        f.pairwise_intersections_are_center = false;
        break;
      }
  return f;
}

/// In an AC-group covered by its distinct proper centralizers, one
/// representative per centralizer is a largest pairwise non-commuting set.
inline OmegaResult omega_via_centralizers(const GroupTable& g) {
  if (!is_ac_group(g))
    throw GroupError(Errc::not_ac_group, "some non-central element has a non-abelian centralizer");
  CentralizerFamily f = centralizer_family(g);
  if (!f.covers_group) throw GroupError(Errc::no_cover, "distinct proper centralizers do not cover the group");
  OmegaResult r;
  r.method = OmegaMethod::centralizers;
  r.value = f.members.size();
  r.witness = ElementSet::from_range(g.order(), f.representatives);
  r.covering_centralizers = std::move(f.members);
  return r;
}

/// Pairwise non-commuting and free of central elements.
inline bool is_valid_witness(const GroupTable& g, const ElementSet& x) {
  const ElementSet z = center(g);
  for (Element a : x) {
    if (z.contains(a)) return false;
    for (Element b : x) {
      if (b >= a) break;
      if (g.commutes(a, b)) return false;
    }
  }
  return true;
}

/// First element that fails to commute with every member of x, if any.
inline std::optional<Element> find_extension(const GroupTable& g, const ElementSet& x) {
  for (Element c = 0; c < g.order(); ++c) {
    if (x.contains(c)) continue;
    bool extends = true;
    for (Element a : x) {
      if (g.commutes(a, c)) {
        extends = false;
        break;
      }
    }
    if (extends) return c;
  }
  return std::nullopt;
}

/// The covering argument for a minimal non-abelian PQ group: the Sylow
/// p-subgroups P_1..P_m with generators a_i, one nonidentity b in Q, and
///   sum_i (|C(a_i)| - |Z|) + |C(b)| = |G|.
struct CoverCountReport {
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  std::size_t m = 0;
  std::size_t q_beta = 0;
  std::size_t family_size = 0;
  std::size_t counted = 0;
  std::size_t omega_clique = 0;
  std::size_t omega_centralizers = 0;
  std::size_t omega_formula = 0;

  bool m_equals_q_beta = false;
  /// C(a_i) = P_i for every Sylow p-subgroup P_i = <a_i>
  bool generators_centralize_own_sylow = false;
  /// |C(b)| = |Z| q^beta for every nonidentity b in Q
  bool q_centralizer_order = false;
  bool count_equals_order = false;
  bool union_is_group = false;
  bool family_size_is_q_beta_plus_one = false;
  bool methods_agree = false;

  bool all() const noexcept {
    return m_equals_q_beta && generators_centralize_own_sylow && q_centralizer_order && count_equals_order &&
           union_is_group && family_size_is_q_beta_plus_one && methods_agree;
  }
};

inline CoverCountReport check_cover_count(const GroupTable& g, CliqueOptions options = {}) {
  const Decomposition d = decompose(g);
  if (d.kind == GroupKind::p_group)
    throw GroupError(Errc::is_p_group, "the covering count applies to groups that are not of prime-power order");
  const PQDecomposition& pq = *d.pq;
  CoverCountReport r;
  r.group_order = g.order();
  r.center_order = pq.Z.size();
  r.q_beta = pq.Q.size();

  const auto sylows = sylow_conjugates(g, pq.P);
  r.m = sylows.size();
  r.m_equals_q_beta = r.m == r.q_beta;

  ElementSet covered(g.order());
  r.generators_centralize_own_sylow = true;
  for (const auto& pi : sylows) {
    std::optional<Element> gen;
    for (Element x : pi)
      if (element_order(g, x) == pi.size()) {
        gen = x;
        break;
      }
    if (!gen) {
      r.generators_centralize_own_sylow = false;
      continue;
    }
    const ElementSet c = centralizer(g, *gen);
    if (!(c == pi)) r.generators_centralize_own_sylow = false;
    r.counted += c.size() - r.center_order;
    covered = covered.united(c);
  }

  Element b = g.identity();
  r.q_centralizer_order = true;
  for (Element x : pq.Q) {
    if (x == g.identity()) continue;
    if (b == g.identity()) b = x;
    if (centralizer(g, x).size() != r.center_order * r.q_beta) r.q_centralizer_order = false;
  }
  const ElementSet cb = centralizer(g, b);
  r.counted += cb.size();
  covered = covered.united(cb);
  r.count_equals_order = r.counted == r.group_order;
  r.union_is_group = covered.size() == r.group_order;

  r.family_size = centralizer_family(g).members.size();
  r.family_size_is_q_beta_plus_one = r.family_size == r.q_beta + 1;

  r.omega_clique = max_clique(build_graph(g), options).value;
  r.omega_centralizers = omega_via_centralizers(g).value;
  r.omega_formula = omega_formula(g).value;
  r.methods_agree = r.omega_clique == r.q_beta + 1 && r.omega_centralizers == r.q_beta + 1 &&
                    r.omega_formula == r.q_beta + 1;
  return r;
}

enum class GraphFormat { dimacs, dot };

inline std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// DIMACS uses 1-based vertex positions; DOT labels nodes with element names.
inline std::string export_graph(const NonCommutingGraph& graph, GraphFormat format) {
  if (graph.vertex_count() == 0) throw GroupError(Errc::empty_graph, "graph has no vertices");
  std::ostringstream out;
  const auto v = graph.vertex_count();
  if (format == GraphFormat::dimacs) {
    out << "p edge " << v << ' ' << graph.edge_count() << '\n';
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        if (graph.adjacent(a, b)) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  } else {
    out << "graph noncommuting {\n";
    for (std::size_t a = 0; a < v; ++a) out << "  " << a + 1 << " [label=\"" << escape_dot(graph.label(a)) << "\"];\n";
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        if (graph.adjacent(a, b)) out << "  " << a + 1 << " -- " << b + 1 << ";\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace ncgroup
