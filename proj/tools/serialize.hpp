#pragma once

#include <json.hpp>

#include "qlat/bounds.hpp"
#include "qlat/search.hpp"
#include "qlat/verify.hpp"

namespace qlat {

// BigNat values are rendered as decimal strings so no reader has to guess an
// integer width.

inline nlohmann::json to_json(const BigNat& v) { return v.str(); }

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["params"] = r.params;
  j["q"] = r.q;
  j["value"] = r.value.str();
  j["hypothesis_ok"] = r.hypothesis_ok;
  j["conjectural"] = r.conjectural;
  j["formula"] = r.formula;
  if (!r.branch.empty()) j["branch"] = r.branch;
  return j;
}

inline nlohmann::json to_json(const search::Constraints& cs) {
  nlohmann::json j;
  j["s_union"] = cs.s_union ? nlohmann::json(*cs.s_union) : nlohmann::json();
  j["t_intersecting"] =
      cs.t_intersecting ? nlohmann::json(*cs.t_intersecting) : nlohmann::json();
  j["antichain"] = cs.antichain;
  j["union_same_dim_only"] = cs.union_same_dim_only;
  return j;
}

inline nlohmann::json to_json(const search::Certificate& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["q"] = c.q;
  j["constraints"] = to_json(c.constraints);
  j["exclusion_count"] = c.exclusion_count;
  j["maximum"] = c.maximum;
  j["nodes"] = c.nodes;
  j["complete"] = c.complete;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& fam : c.witnesses) w.push_back(fam.to_text());
  j["witnesses"] = w;
  return j;
}

inline nlohmann::json to_json(const search::ConjectureReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["d"] = r.d;
  j["optimal"] = to_json(r.optimal);
  j["suboptimal"] = to_json(r.suboptimal);
  j["conjectured_value"] = r.conjectured_value.str();
  j["value_matches"] = r.value_matches;
  j["witnesses_match_B"] = r.witnesses_match_B;
  return j;
}

inline nlohmann::json to_json(const verify::Report& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["cases_checked"] = r.cases_checked;
  j["equality_cases"] = r.equality_cases;
  j["counterexamples"] = r.counterexamples;
  j["structure_ok"] = r.structure_ok;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  return j;
}

}  // namespace qlat
