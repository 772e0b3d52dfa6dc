#include "crackecon/serialize.hpp"

namespace crackecon {

using nlohmann::json;

namespace {

json fit_skeleton() {
  return json{{"method", nullptr}, {"y", nullptr},         {"r", nullptr},
              {"s", nullptr},      {"C", nullptr},         {"z", nullptr},
              {"r_squared", nullptr}, {"ks", nullptr},     {"cutoff", nullptr}};
}

}  // namespace

json to_json(const CdfZipfFit& fit) {
  json j = fit_skeleton();
  j["method"] = fit.method == CdfFitMethod::kLls ? "cdf-lls" : "cdf-gss-nested";
  j["y"] = fit.y;
  j["r"] = fit.r;
  j["r_squared"] = fit.r_squared;
  j["ks"] = fit.ks;
  return j;
}

json to_json(const PdfZipfFit& fit) {
  json j = fit_skeleton();
  j["method"] = "pdf-lls";
  j["s"] = fit.s;
  j["C"] = std::pow(10.0, fit.log_c);
  j["z"] = fit.z;
  j["r_squared"] = fit.r_squared;
  j["cutoff"] = fit.cutoff;
  return j;
}

json to_json(const AttackOutcome& outcome) {
  return json{
      {"t_star", outcome.t_star},
      {"fraction_cracked", outcome.fraction_cracked},
      {"utility", outcome.utility},
      {"mode", outcome.mode == AttackMode::kMarginalScan ? "marginal" : "brute"},
  };
}

json to_json(const CdfThresholdResult& result) {
  return json{
      {"T", result.threshold},
      {"Z", result.cutoff},
      {"t_peak", result.t_peak},
  };
}

json to_json(const PdfThresholdResult& result, bool with_bounds) {
  json j{{"T_all", result.t_all}, {"t_peak", result.t_peak}};
  if (with_bounds) {
    j["bracket_lo"] = result.bracket_lo;
    j["bracket_hi"] = result.bracket_hi;
    j["fraction_lo"] = result.fraction_lo;
    j["fraction_hi"] = result.fraction_hi;
  }
  return j;
}

json to_json(const BoundsResult& result) {
  return json{
      {"bound_count", result.bound_count},
      {"bound_fraction", result.bound_fraction},
      {"raw_count", result.raw_count},
      {"mu", result.mu},
      {"failure_prob", result.failure_prob},
      {"v_over_k", result.v_over_k},
  };
}

json to_json(const FitImpactStudy& study) {
  json params = json::object();
  for (const auto& [name, st] : study.stats) {
    params[name] = json{{"mean", st.mean}, {"std", st.stddev}};
  }
  return json{
      {"params", params},
      {"n_trials", study.n_trials},
      {"epsilon", study.epsilon_dp},
      {"mechanism", study.mechanism},
  };
}

}  // namespace crackecon
