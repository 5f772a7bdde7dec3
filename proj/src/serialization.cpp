#include "modcount/serialization.hpp"

#include <bit>
#include <iomanip>
#include <sstream>

#include "modcount/error.hpp"

namespace modcount {

std::string to_string(const BigInt& v) { return v.str(); }

Json to_json(const PackingReport& r) {
  Json j;
  j["X"] = r.x;
  j["Z"] = r.z;
  j["Y_greedy"] = r.y_greedy;
  j["Y_exact"] = r.y_exact ? Json(*r.y_exact) : Json(nullptr);
  j["turan_bound"] = r.turan_bound;
  return j;
}

Json to_json(const SamplerMetadata& meta) {
  Json constants = Json::object();
  for (const auto& [k, v] : meta.constants) constants[k] = v;
  return {{"generator", meta.generator},
          {"seeding", meta.seeding},
          {"constants", constants},
          {"master_seed", meta.master_seed}};
}

namespace {

Json cell_list(std::uint32_t q, std::size_t k, std::size_t cells, const auto& value_of) {
  CellIndexer idx(q, k);
  Json out = Json::array();
  for (std::size_t c = 0; c < cells; ++c) out.push_back({{"cell", idx.coordinates(c)}, value_of(c)});
  return out;
}

}  // namespace

Json to_json(const EmpiricalDist& dist) {
  auto tv = tv_to_uniform(dist);
  Json j;
  j["q"] = dist.q;
  j["k"] = dist.k;
  j["trials"] = dist.trials;
  j["histogram"] = cell_list(dist.q, dist.k, dist.counts.size(), [&](std::size_t c) {
    return std::pair<std::string, Json>("count", dist.counts[c]);
  });
  j["tv"] = tv.tv;
  j["bias_scale"] = tv.bias_scale.value_or(0.0);
  return j;
}

Json to_json(const ExactDist& dist) {
  Json j;
  j["q"] = dist.q;
  j["k"] = dist.k;
  j["probabilities"] = cell_list(dist.q, dist.k, dist.probabilities.size(), [&](std::size_t c) {
    return std::pair<std::string, Json>("probability", dist.probabilities[c]);
  });
  j["tv"] = tv_to_uniform(dist).tv;
  return j;
}

Json to_json(const XorBound& b) {
  return {{"epsilon", b.epsilon}, {"bound", b.bound}, {"actual_tv", b.actual_tv}, {"holds", b.holds}};
}

Json to_json(const CharSumResult& r) {
  return {{"real", r.value.real()},
          {"imag", r.value.imag()},
          {"modulus", r.modulus},
          {"error_bound", r.error_bound},
          {"components", r.components},
          {"largest_component", r.largest_component}};
}

Json to_json(const LemmaCheck& c) {
  return {{"holds", c.holds()},
          {"block_sizes", c.block_sizes},
          {"coefficients", c.coefficients},
          {"disjoint", c.disjoint},
          {"outside_small", c.outside_small},
          {"diagnostics", c.diagnostics}};
}

Json to_json(const DecayStudy& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"n", r.n}, {"p", r.p}, {"log_phi", r.log_phi}, {"tv", r.tv}, {"bias_scale", r.bias_scale}});
  }
  return {{"rows", rows},
          {"warnings", s.warnings},
          {"tv_non_increasing_within_bias", tv_non_increasing_within_bias(s.rows)}};
}

Json to_json(const CorollarySplit& s) {
  return {{"alpha", s.alpha.to_string()}, {"I", s.below}, {"J", s.above}};
}

Json to_json(const CorollaryReport& r) {
  return {{"split", to_json(r.split)},
          {"p", r.p},
          {"joint", to_json(r.joint)},
          {"fraction_J_zero", r.fraction_j_zero},
          {"marginal_I", to_json(r.marginal)},
          {"marginal_tv", r.marginal_tv},
          {"marginal_bias_scale", r.marginal_bias_scale},
          {"thresholds",
           {{"min_fraction_J_zero", r.thresholds.min_fraction_j_zero},
            {"max_marginal_tv", r.thresholds.max_marginal_tv}}},
          {"fraction_ok", r.fraction_ok},
          {"marginal_ok", r.marginal_ok},
          {"passed", r.passed()}};
}

Json to_json(const ExperimentConfig& cfg) {
  Json family = Json::array();
  for (const auto& g : cfg.family) family.push_back(g.label().empty() ? serialize(g) : g.label());
  return {{"n", cfg.n},
          {"q", cfg.q},
          {"trials", cfg.trials},
          {"p_spec", cfg.p.describe()},
          {"family", family},
          {"master_seed", cfg.master_seed},
          {"sampler", cfg.sampler == Sampler::TwoStep ? "two-step" : "direct"}};
}

Json to_json(const CharPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& t : poly.terms()) {
    Json vars = Json::array();
    for (std::uint64_t rest = t.monomial; rest != 0; rest &= rest - 1) vars.push_back(std::countr_zero(rest));
    terms.push_back(Json::array({t.coefficient, vars}));
  }
  return {{"q", poly.q()}, {"m", poly.variable_count()}, {"terms", terms}};
}

CharPolynomial polynomial_from_json(const Json& j) {
  try {
    auto q = j.at("q").get<std::uint32_t>();
    int m = j.at("m").get<int>();
    if (m < 0 || m > kMaxVariables) throw Error(ErrorCode::BudgetExceeded, "too many variables");
    std::vector<Term> terms;
    for (const auto& entry : j.at("terms")) {
      if (!entry.is_array() || entry.size() != 2) throw Error(ErrorCode::InvalidArgument, "term must be [coef, [vars]]");
      Term t{entry[0].get<std::uint32_t>(), 0};
      for (const auto& v : entry[1]) {
        int var = v.get<int>();
        if (var < 0 || var >= m) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
        std::uint64_t bit = std::uint64_t{1} << var;
        if (t.monomial & bit) throw Error(ErrorCode::InvalidArgument, "repeated variable in monomial");
        t.monomial |= bit;
      }
      terms.push_back(t);
    }
    return CharPolynomial::from_terms(q, m, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
  }
}

std::string decay_csv(const DecayStudy& s) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "n,p,log_phi,tv,bias_scale\n";
  for (const auto& r : s.rows) out << r.n << ',' << r.p << ',' << r.log_phi << ',' << r.tv << ',' << r.bias_scale << '\n';
  return out.str();
}

}  // namespace modcount
