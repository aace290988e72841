#include "symfam/json.hpp"

namespace symfam {

std::string exact_string(const Dyadic& value) {
  const Rational q = value.to_rational();
  const BigInt den = boost::multiprecision::denominator(q);
  std::string out = to_decimal(boost::multiprecision::numerator(q));
  if (den != 1) out += "/" + to_decimal(den);
  return out;
}

Json sets_to_json(const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask m : sets) {
    Json elements = Json::array();
    for (int i = 0; m != 0; ++i, m >>= 1)
      if (m & 1) elements.push_back(i + 1);
    out.push_back(std::move(elements));
  }
  return out;
}

Json to_json(const BiasedMeasureValue& value) {
  Json out;
  out["value"] = value.value;
  out["exact"] = value.exact ? Json(exact_string(*value.exact)) : Json(nullptr);
  return out;
}

Json to_json(const SizeReport& report) {
  Json out;
  out["descriptor"] = report.descriptor;
  out["n"] = report.n;
  out["exact_count"] = to_decimal(report.exact_count);
  out["log2_count"] = report.log2_count;
  out["deficiency"] = report.deficiency;
  out["predicted_deficiency"] = report.predicted_deficiency ? Json(*report.predicted_deficiency) : Json(nullptr);
  return out;
}

Json to_json(const ThresholdWindow& window) {
  Json out;
  out["epsilon"] = window.epsilon;
  out["p_lo"] = window.p_lo;
  out["p_hi"] = window.p_hi;
  out["width"] = window.width;
  return out;
}

Json to_json(const CrossLemmaReport& report) {
  Json out;
  out["n"] = report.n;
  out["p"] = report.p;
  out["applicable"] = report.applicable;
  out["mechanism_ok"] = report.mechanism_ok;
  out["mu_a"] = to_json(report.mu_a);
  out["mu_b"] = to_json(report.mu_b);
  out["sum"] = report.sum;
  out["exact_sum"] = report.exact_sum ? Json(exact_string(*report.exact_sum)) : Json(nullptr);
  out["holds"] = report.holds;
  return out;
}

Json to_json(const LemmaIntReport& report) {
  Json out;
  out["n"] = report.n;
  out["delta"] = exact_string(report.delta);
  out["holds"] = report.holds;
  out["mu_quarter"] = exact_string(*report.mu_quarter.exact);
  out["weighted_sum"] = to_decimal(report.weighted_sum);
  out["counts"] = report.counts;
  out["pair_count_ok"] = report.pair_count_ok;
  out["identity_ok"] = report.identity_ok;
  return out;
}

Json to_json(const ProofChainReport& report) {
  Json out;
  out["n"] = report.n;
  out["upset_size"] = report.upset_size;
  out["delta"] = exact_string(report.delta);
  out["cross_ok"] = report.cross_ok;
  out["mu_three_quarters"] = exact_string(*report.mu_three_quarters.exact);
  out["bound_ok"] = report.bound_ok;
  out["holds"] = report.cross_ok && report.bound_ok;
  return out;
}

Json to_json(const SearchResult& result, bool exact) {
  Json out;
  out["n"] = result.n;
  out["r"] = result.r;
  out["group"] = result.group;
  out["size"] = result.size;
  out["exact"] = exact;
  out["orbit_reps"] = sets_to_json(result.orbit_reps);
  return out;
}

Json to_json(const FrSearchResult& result) {
  Json out = to_json(result.best, result.exact);
  Json groups = Json::array();
  for (const auto& [label, size] : result.per_group) groups.push_back(Json{{"group", label}, {"size", size}});
  out["per_group"] = std::move(groups);
  return out;
}

Json to_json(const CertificationReport& report) {
  Json out;
  out["n"] = report.n;
  out["r"] = report.r;
  out["size"] = to_decimal(report.size);
  out["r_wise"] = to_string(report.r_wise);
  out["symmetric"] = to_string(report.symmetric);
  out["symmetry_method"] = report.symmetry_method;
  out["mu_half"] = report.mu_half;
  out["mu_half_exact"] = exact_string(report.mu_half_exact);
  out["proof_chain"] = report.proof_chain ? to_json(*report.proof_chain) : Json(nullptr);
  if (report.seed) out["seed"] = *report.seed;
  return out;
}

Json to_json(const ProjectiveGeometry& geometry) {
  Json out;
  out["q"] = geometry.q;
  out["r"] = geometry.r;
  out["points"] = geometry.points.size();
  out["hyperplanes"] = geometry.hyperplanes.size();
  return out;
}

}  // namespace symfam
