#pragma once

#include <json.hpp>

#include "ncgroup/catalog.hpp"
#include "ncgroup/ncgraph.hpp"
#include "ncgroup/omega.hpp"
#include "ncgroup/structure.hpp"

// JSON views of the reports. nlohmann::json keeps keys sorted, so output is
// byte-stable for identical inputs.

namespace ncgroup {

using Json = nlohmann::json;

inline Json element_list(const GroupTable& g, const ElementSet& s) {
  Json out = Json::array();
  for (Element x : s) out.push_back({{"index", x}, {"label", g.label(x)}});
  return out;
}

inline Json to_json(const GroupTable& g, const OmegaResult& r) {
  Json j;
  j["value"] = r.value;
  j["method"] = std::string(method_name(r.method));
  j["witness"] = r.witness ? element_list(g, *r.witness) : Json(nullptr);
  if (r.method == OmegaMethod::centralizers) {
    Json cover = Json::array();
    std::size_t i = 0;
    for (Element a : *r.witness) {
      cover.push_back({{"representative", a}, {"order", r.covering_centralizers.at(i).size()}});
      ++i;
    }
    j["certificate"] = cover;
  } else if (r.method == OmegaMethod::formula) {
    j["certificate"] = r.derivation;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

inline Json to_json(const PQStructureChecks& c) {
  return {{"two_primes", c.two_primes},
          {"cyclic_p", c.cyclic_p},
          {"elementary_abelian_q", c.elementary_abelian_q},
          {"normal_q", c.normal_q},
          {"minimal_normal_q", c.minimal_normal_q}};
}

inline Json to_json(const PQLemmaChecks& c) {
  return {{"derived_is_q", c.derived_is_q},
          {"derived_meets_center_trivially", c.derived_meets_center_trivially},
          {"p_self_normalizing", c.p_self_normalizing},
          {"q_centralizers_split", c.q_centralizers_split}};
}

inline Json to_json(const CoverCountReport& c) {
  return {{"m", c.m},
          {"q_beta", c.q_beta},
          {"family_size", c.family_size},
          {"counted", c.counted},
          {"group_order", c.group_order},
          {"m_equals_q_beta", c.m_equals_q_beta},
          {"generators_centralize_own_sylow", c.generators_centralize_own_sylow},
          {"q_centralizer_order", c.q_centralizer_order},
          {"count_equals_order", c.count_equals_order},
          {"union_is_group", c.union_is_group},
          {"family_size_is_q_beta_plus_one", c.family_size_is_q_beta_plus_one},
          {"methods_agree", c.methods_agree}};
}

inline Json nullable(const auto& opt) { return opt ? Json(*opt) : Json(nullptr); }

/// Flat structure report; p/alpha/q/beta/m are null where they do not apply.
inline Json to_json(const StructureReport& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["minimal_non_abelian"] = r.minimal_non_abelian;
  j["kind"] = std::string(kind_name(r.kind));
  j["p"] = r.kind == GroupKind::not_applicable ? Json(nullptr) : Json(r.p);
  j["alpha"] = r.decomposition ? Json(r.decomposition->alpha) : Json(nullptr);
  j["q"] = r.decomposition ? Json(r.decomposition->q) : Json(nullptr);
  j["beta"] = r.decomposition ? Json(r.decomposition->beta) : Json(nullptr);
  j["m"] = r.decomposition ? Json(r.decomposition->m) : Json(nullptr);
  j["lemma_2_4"] = r.lemma_checks ? to_json(*r.lemma_checks) : Json(nullptr);
  j["theorem_2_3"] = r.structure_checks ? to_json(*r.structure_checks) : Json(nullptr);
  return j;
}

inline Json to_json(const EntryReport& r, bool with_timings) {
  Json j;
  j["name"] = r.entry.name;
  j["spec"] = r.entry.spec;
  j["expected_kind"] = std::string(expected_kind_name(r.entry.expected_kind));
  j["expected_omega"] = nullable(r.entry.expected_omega);
  j["error"] = nullable(r.error);
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["minimal_non_abelian"] = r.minimal_non_abelian;
  j["kind"] = std::string(kind_name(r.kind));
  j["p"] = r.kind == GroupKind::not_applicable ? Json(nullptr) : Json(r.p);
  j["alpha"] = r.decomposition ? Json(r.decomposition->alpha) : Json(nullptr);
  j["q"] = r.decomposition ? Json(r.decomposition->q) : Json(nullptr);
  j["beta"] = r.decomposition ? Json(r.decomposition->beta) : Json(nullptr);
  j["m"] = r.decomposition ? Json(r.decomposition->m) : Json(nullptr);
  j["omega"] = {{"clique", nullable(r.omega_clique)},
                {"centralizers", nullable(r.omega_centralizers)},
                {"formula", nullable(r.omega_formula)}};
  j["methods_agree"] = r.methods_agree;
  j["witnesses_valid"] = r.witnesses_valid;
  j["witnesses_maximal"] = r.witnesses_maximal;
  j["ac_group"] = nullable(r.ac_group);
  j["ac_criterion"] = nullable(r.ac_criterion_holds);
  j["centralizer_intersections_are_center"] = nullable(r.intersections_are_center);
  j["theorem_2_3"] = r.structure_checks ? to_json(*r.structure_checks) : Json(nullptr);
  j["lemma_2_4"] = r.lemma_checks ? to_json(*r.lemma_checks) : Json(nullptr);
  j["cover_count"] = r.cover_count ? to_json(*r.cover_count) : Json(nullptr);
  j["pyber_ratio"] = r.pyber_ratio;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  if (with_timings) {
    Json t = Json::object();
    for (const auto& s : r.timings) t[s.step] = s.milliseconds;
    j["timings_ms"] = t;
  }
  return j;
}

inline Json to_json(const RunReport& r, bool with_timings) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e, with_timings));
  return {{"entries", entries}, {"all_passed", r.all_passed()}};
}

}  // namespace ncgroup
