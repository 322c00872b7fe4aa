#include "nsg/json_io.hpp"

namespace nsg {

Json to_json(const NumericalSemigroup& h) { return Json{{"generators", h.generators()}}; }

Json to_json(const SemigroupInvariants& inv) {
  return Json{{"frobenius", inv.frobenius},
              {"conductor", inv.conductor},
              {"genus", inv.genus},
              {"multiplicity", inv.multiplicity},
              {"embedding_dim", inv.embedding_dim},
              {"pseudo_frobenius", inv.pseudo_frobenius},
              {"type", inv.type},
              {"symmetric", inv.symmetric}};
}

Json to_json(const RelativeIdeal& e) {
  return Json{{"base", to_json(e.base())}, {"gens", e.gens()}};
}

Json to_json(const HilbertData& d) {
  return Json{{"e0", d.e0},
              {"e1", d.e1},
              {"values", d.values},
              {"reduction_number", d.reduction_number},
              {"reduction_valuation", d.reduction_element}};
}

Json to_json(const KRStructure& st) {
  return Json{{"pf_without_f", st.pf_without_f},
              {"tags", st.tags},
              {"l", st.ell},
              {"m", st.m},
              {"direct_sum_asserted", st.direct_sum_asserted}};
}

Json to_json(const PfSymmetryReport& rep) {
  return Json{{"b", rep.b},
              {"free_part", rep.free_part},
              {"nonfree_part", rep.nonfree_part},
              {"free_symmetry", rep.free_symmetry},
              {"nonfree_symmetry", rep.nonfree_symmetry},
              {"freeness_matches_pairing", rep.freeness_matches_pairing}};
}

Json to_json(const ClassificationReport& rep) {
  Json j{{"sally_rank", rep.sally_rank},
         {"gorenstein", rep.gorenstein},
         {"agl", rep.agl},
         {"two_agl", rep.two_agl},
         {"conditions",
          Json{{"canonical_square_stable", rep.canonical_square_stable},
               {"ideal_power_stable", rep.ideal_power_stable},
               {"blowup_socle_length_one", rep.blowup_socle_length_one},
               {"blowup_colength_two", rep.blowup_colength_two},
               {"conductor_colength_two", rep.conductor_colength_two}}},
         {"kr_decomposition", Json{{"l", rep.kr_ell}, {"m", rep.kr_m}, {"free", rep.kr_free}}},
         {"type", rep.type},
         {"multiplicity_minimal", rep.multiplicity_minimal},
         {"s_gorenstein", rep.s_gorenstein},
         {"lengths",
          Json{{"S_over_K", rep.len_S_over_K},
               {"R_over_c", rep.len_R_over_c},
               {"K_over_R", rep.len_K_over_R}}},
         {"canonical_gens", rep.canonical_gens},
         {"blowup_gens", rep.blowup_gens},
         {"conductor_gens", rep.conductor_gens},
         {"invariants", to_json(rep.inv)}};
  if (rep.len_K2_over_K) j["lengths"]["K2_over_K"] = *rep.len_K2_over_K;
  return j;
}

Json to_json(const UlrichVerdict& v) {
  Json j{{"generators", v.gens},
         {"is_ulrich", v.is_ulrich},
         {"reduction_valuation", v.reduction_valuation},
         {"mu", v.mu},
         {"len_R_mod_I", v.len_R_mod_I},
         {"len_I_mod_I2", v.len_I_mod_I2},
         {"i_equals_reduction", v.i_equals_reduction},
         {"square_stable", v.square_stable},
         {"free_check", v.free_check}};
  if (v.witness_c) j["witness_c"] = *v.witness_c;
  return j;
}

Json to_json(const UlrichEnumeration& e) {
  Json list = Json::array();
  for (const auto& v : e.found) list.push_back(to_json(v));
  return Json{{"bound", e.bound}, {"bound_warning", e.bound_warning}, {"ideals", list}};
}

Json to_json(const ExtensionReport& rep) {
  return Json{{"T", rep.t.generators()},
              {"I", rep.i.gens()},
              {"len_R_mod_I", rep.len_RI},
              {"len_T_mod_K", rep.len_TK},
              {"is_2agl", rep.is_2agl},
              {"r_A", rep.r_A},
              {"t_equals_S", rep.t_equals_S},
              {"i_equals_c", rep.i_equals_c}};
}

Json to_json(const ExtensionCanonicalCertificate& cert) {
  return Json{{"N", cert.n},
              {"dim_B", cert.dim_B},
              {"dim_L", cert.dim_L},
              {"power_stabilized_at", cert.power_stabilized_at},
              {"A_L_equals_B", cert.al_equals_b},
              {"len_AL_over_L", cert.len_AL_over_L},
              {"len_T_over_K", cert.len_T_over_K},
              {"lengths_agree", cert.lengths_agree},
              {"ok", cert.ok}};
}

Json to_json(const GeneralUlrichVerdict& v) {
  Json j{{"is_ulrich", v.is_ulrich},
         {"reduction", v.reduction},
         {"mu", v.mu},
         {"len_R_mod_I", v.len_R_mod_I},
         {"len_I_mod_I2", v.len_I_mod_I2},
         {"i_equals_reduction", v.i_equals_reduction},
         {"square_stable", v.square_stable},
         {"free_check", v.free_check},
         {"square_zero", v.square_zero}};
  if (v.witness_c) j["witness_c"] = *v.witness_c;
  return j;
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

Json to_json(const FamilyScanReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json params = Json::array();
    for (const auto& p : e.params) params.push_back(rational_str(p));
    std::string outcome = e.outcome == ScanOutcome::ulrich
                              ? "ulrich"
                              : (e.outcome == ScanOutcome::not_ulrich ? "not_ulrich"
                                                                      : "no_reduction");
    Json je{{"params", params}, {"outcome", outcome}};
    if (e.outcome != ScanOutcome::no_reduction) je["verdict"] = to_json(e.verdict);
    entries.push_back(std::move(je));
  }
  Json j{{"param_names", rep.param_names},
         {"entries", entries},
         {"all_ulrich", rep.all_ulrich}};
  if (rep.distinct_checked) j["distinct_ok"] = rep.distinct_ok;
  return j;
}

Json to_json(const GluingUlrichSet& s) {
  Json pairs = Json::array();
  for (const auto& [p, q] : s.pairs) pairs.push_back(Json::array({p, q}));
  return Json{{"glued", s.glued.generators()},
              {"two_generated_monomial_ulrich", pairs},
              {"matches_enumeration", s.matches_enumeration}};
}

Json to_json(const GorensteinCorrespondence& c) {
  Json pairs = Json::array();
  for (const auto& [t, v] : c.pairs)
    pairs.push_back(Json{{"overring", t.generators()}, {"ideal", to_json(v)}});
  return Json{{"pairs", pairs},
              {"matches_enumeration", c.matches_enumeration},
              {"colon_recovers_overring", c.colon_recovers_overring}};
}

Json to_json(const MinMultXr& x) {
  return Json{{"kr_free", x.kr_free},
              {"predicted", x.predicted},
              {"matches_enumeration", x.matches_enumeration}};
}

Json to_json(const KernelEvidence& e) {
  return Json{{"ok", e.ok},
              {"first_mismatch_degree", e.first_mismatch_degree},
              {"quotient_dims", e.quotient_dims},
              {"valuation_dims", e.valuation_dims}};
}

NumericalSemigroup semigroup_from_json(const Json& j) {
  if (!j.contains("generators")) throw MalformedCase("semigroup JSON needs \"generators\"");
  return NumericalSemigroup(j.at("generators").get<std::vector<long long>>());
}

RelativeIdeal ideal_from_json(const Json& j) {
  if (!j.contains("base") || !j.contains("gens"))
    throw MalformedCase("ideal JSON needs \"base\" and \"gens\"");
  return RelativeIdeal(semigroup_from_json(j.at("base")),
                       j.at("gens").get<std::vector<long long>>());
}

}  // namespace nsg
