#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "ncgroup/error.hpp"
#include "ncgroup/ncgraph.hpp"
#include "ncgroup/specifier.hpp"
#include "ncgroup/structure.hpp"

namespace ncgroup {

enum class ExpectedKind { p_group, pq_group, negative_control };

constexpr std::string_view expected_kind_name(ExpectedKind k) noexcept {
  switch (k) {
    case ExpectedKind::p_group: return "p-group";
    case ExpectedKind::pq_group: return "PQ-group";
    case ExpectedKind::negative_control: return "negative-control";
  }
  return "unknown";
}

struct CatalogEntry {
  std::string name;
  std::string spec;
  std::optional<std::size_t> expected_omega;
  ExpectedKind expected_kind = ExpectedKind::negative_control;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// One entry per line: `name; spec; expected_omega|-; kind`. Blank lines and
/// '#' comments are skipped. A catalog without entries is an error.
inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t from = 0;
    for (;;) {
      const auto semi = line.find(';', from);
      fields.push_back(trim(std::string_view(line).substr(from, semi == std::string::npos ? std::string::npos : semi - from)));
      if (semi == std::string::npos) break;
      from = semi + 1;
    }
    auto fail = [&](const std::string& why) {
      throw GroupError(Errc::parse_error, "catalog line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 4) fail("expected 4 ';'-separated fields, got " + std::to_string(fields.size()));
    CatalogEntry e;
    e.name = fields[0];
    e.spec = fields[1];
    if (e.name.empty() || e.spec.empty()) fail("name and spec must be non-empty");
    if (fields[2] != "-") {
      if (fields[2].empty() || fields[2].find_first_not_of("0123456789") != std::string::npos)
        fail("expected omega must be an integer or '-', got '" + fields[2] + "'");
      e.expected_omega = std::stoull(fields[2]);
    }
    if (fields[3] == "p-group")
      e.expected_kind = ExpectedKind::p_group;
    else if (fields[3] == "PQ-group")
      e.expected_kind = ExpectedKind::pq_group;
    else if (fields[3] == "negative-control")
      e.expected_kind = ExpectedKind::negative_control;
    else
      fail("unknown kind '" + fields[3] + "'");
    out.push_back(std::move(e));
  }
  if (out.empty()) throw GroupError(Errc::parse_error, "catalog has no entries");
  return out;
}

inline constexpr std::string_view builtin_catalog_text = R"(# name; spec; expected omega; kind
S3;   mna:2,1,3;          4;  PQ-group
A4;   mna:3,1,2;          5;  PQ-group
Dic3; mna:2,2,3;          4;  PQ-group
F21;  mna:3,1,7;          8;  PQ-group
G80;  mna:5,1,2;          17; PQ-group
Q8;   q8;                 3;  p-group
D8;   metacyclic:2,2,1;   3;  p-group
M27;  metacyclic:3,2,1;   4;  p-group
M16;  metacyclic:2,2,2;   3;  p-group
D12;  dihedral:6;         -;  negative-control
S4;   gens:(1 2 3 4)|(1 2); -; negative-control
)";

inline std::vector<CatalogEntry> builtin_catalog() { return parse_catalog(builtin_catalog_text); }

struct StepTiming {
  std::string step;
  double milliseconds = 0.0;
};

struct EntryReport {
  CatalogEntry entry;
  std::optional<std::string> error;

  std::size_t order = 0;
  std::size_t center_order = 0;
  bool abelian = false;
  bool minimal_non_abelian = false;
  GroupKind kind = GroupKind::not_applicable;
  std::optional<PQDecomposition> decomposition;
  std::uint64_t p = 0;

  std::optional<std::size_t> omega_clique;
  std::optional<std::size_t> omega_centralizers;
  std::optional<std::size_t> omega_formula;
  std::optional<std::string> centralizers_unavailable;
  bool methods_agree = false;
  bool witnesses_valid = false;
  bool witnesses_maximal = false;

  std::optional<bool> ac_group;
  std::optional<bool> ac_criterion_holds;
  /// Only evaluated for AC-groups.
  std::optional<bool> intersections_are_center;
  std::optional<PQStructureChecks> structure_checks;
  std::optional<PQLemmaChecks> lemma_checks;
  std::optional<CoverCountReport> cover_count;
  double pyber_ratio = 0.0;

  std::vector<StepTiming> timings;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

namespace detail {

template <class F>
auto timed(std::vector<StepTiming>& log, const std::string& step, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    log.push_back({step, d.count()});
  };
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    finish();
  } else {
    auto r = f();
    finish();
    return r;
  }
}

}  // namespace detail

/// Runs every structural and omega check that applies to the entry. Failures
/// are collected in the report rather than thrown.
inline EntryReport verify_entry(const CatalogEntry& entry, std::size_t cap = default_order_cap) {
  EntryReport r;
  r.entry = entry;
  auto fail = [&](const std::string& why) { r.failures.push_back(why); };
  try {
    const GroupTable g = detail::timed(r.timings, "construct", [&] { return parse_group_spec(entry.spec, cap); });
    r.order = g.order();
    const ElementSet z = center(g);
    r.center_order = z.size();
    r.abelian = r.center_order == r.order;
    r.minimal_non_abelian = detail::timed(r.timings, "minimality", [&] { return is_minimal_non_abelian(g); });

    if (entry.expected_kind == ExpectedKind::negative_control) {
      if (r.minimal_non_abelian) fail("expected a negative control but the group is minimal non-abelian");
    } else if (!r.minimal_non_abelian) {
      fail("expected " + std::string(expected_kind_name(entry.expected_kind)) +
           " but the group is not minimal non-abelian");
    }

    if (r.minimal_non_abelian) {
      Decomposition d = detail::timed(r.timings, "decompose", [&] { return decompose(g); });
      r.kind = d.kind;
      r.p = d.prime;
      if (d.kind == GroupKind::pq_group) {
        r.structure_checks = d.pq->checks;
        r.lemma_checks = detail::timed(r.timings, "pq-lemma", [&] { return check_pq_lemma(g, *d.pq); });
        r.cover_count = detail::timed(r.timings, "cover-count", [&] { return check_cover_count(g); });
        if (!r.structure_checks->all()) fail("PQ structure checks failed");
        if (!r.lemma_checks->all()) fail("PQ lemma checks failed");
        if (!r.cover_count->all()) fail("covering count checks failed");
        r.decomposition = std::move(d.pq);
      }
      const bool kind_ok = (entry.expected_kind == ExpectedKind::p_group && d.kind == GroupKind::p_group) ||
                           (entry.expected_kind == ExpectedKind::pq_group && d.kind == GroupKind::pq_group);
      if (!kind_ok && entry.expected_kind != ExpectedKind::negative_control)
        fail("expected kind " + std::string(expected_kind_name(entry.expected_kind)) + ", computed " +
             std::string(kind_name(d.kind)));
    }

    if (r.abelian) {
      if (entry.expected_omega) fail("abelian group has no omega but one was expected");
      return r;
    }

    const AcCriterion ac = detail::timed(r.timings, "ac-criterion", [&] { return check_ac_criterion(g); });
    r.ac_group = ac.ac_group;
    r.ac_criterion_holds = ac.holds();
    if (!ac.holds()) fail("AC criterion biconditional fails");

    const OmegaResult clique =
        detail::timed(r.timings, "omega-clique", [&] { return max_clique(build_graph(g)); });
    r.omega_clique = clique.value;
    r.witnesses_valid = is_valid_witness(g, *clique.witness) && clique.witness->size() == clique.value;
    r.witnesses_maximal = !find_extension(g, *clique.witness);

    if (ac.ac_group) {
      const CentralizerFamily fam = centralizer_family(g);
      r.intersections_are_center = fam.pairwise_intersections_are_center;
      if (!fam.pairwise_intersections_are_center) fail("distinct centralizers meet outside the center");
    }
    try {
      const OmegaResult cent =
          detail::timed(r.timings, "omega-centralizers", [&] { return omega_via_centralizers(g); });
      r.omega_centralizers = cent.value;
      r.witnesses_valid = r.witnesses_valid && is_valid_witness(g, *cent.witness) && cent.witness->size() == cent.value;
      r.witnesses_maximal = r.witnesses_maximal && !find_extension(g, *cent.witness);
    } catch (const GroupError& e) {
      r.centralizers_unavailable = e.what();
    }
    if (r.minimal_non_abelian) r.omega_formula = omega_formula(g).value;

    r.methods_agree = (!r.omega_centralizers || *r.omega_centralizers == clique.value) &&
                      (!r.omega_formula || *r.omega_formula == clique.value);
    if (!r.methods_agree) fail("omega methods disagree");
    if (!r.witnesses_valid) fail("a witness set is not pairwise non-commuting");
    if (!r.witnesses_maximal) fail("a witness set can be extended by one element");
    if (entry.expected_omega && *entry.expected_omega != clique.value)
      fail("expected omega " + std::to_string(*entry.expected_omega) + ", computed " + std::to_string(clique.value));
    r.pyber_ratio = pyber_ratio(r.order, r.center_order, clique.value);
  } catch (const GroupError& e) {
    r.error = e.what();
    fail(e.what());
  }
  return r;
}

struct RunReport {
  std::vector<EntryReport> entries;

  bool all_passed() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.passed(); });
  }
};

/// Entries may be verified concurrently; the report keeps catalog order.
inline RunReport run_catalog(const std::vector<CatalogEntry>& catalog, unsigned threads = 1,
                             std::size_t cap = default_order_cap) {
  RunReport report;
  report.entries.resize(catalog.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, catalog.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < catalog.size();) report.entries[i] = verify_entry(catalog[i], cap);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace ncgroup
