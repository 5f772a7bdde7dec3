#include "modcount/montecarlo.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "modcount/error.hpp"
#include "modcount/gensample.hpp"
#include "modcount/parallel.hpp"
#include "modcount/subcount.hpp"

namespace modcount {

// ------------------------------------------------------------------ PSpec

PSpec PSpec::fixed(double p) {
  PSpec s;
  s.kind = Kind::Constant;
  s.constant = p;
  return s;
}

PSpec PSpec::power(Rational exponent, double scale) {
  PSpec s;
  s.kind = Kind::Power;
  s.exponent = exponent;
  s.scale = scale;
  return s;
}

PSpec PSpec::threshold_scaled(double c) {
  PSpec s;
  s.kind = Kind::ThresholdScaled;
  s.scale = c;
  return s;
}

double PSpec::evaluate(const GraphFamily& family, std::int64_t n) const {
  double p = 0;
  switch (kind) {
    case Kind::Constant: p = constant; break;
    case Kind::Power: p = scale * std::pow(static_cast<double>(n), exponent.to_double()); break;
    case Kind::ThresholdScaled: p = scale * family_threshold(family, n).value; break;
  }
  if (!(p > 0 && p <= 1)) {
    std::ostringstream msg;
    msg << "edge probability " << p << " from " << describe() << " at n=" << n << " is outside (0,1]";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  return p;
}

std::string PSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Constant: out << "p=" << constant; break;
    case Kind::Power: out << "p=" << scale << "*n^(" << exponent << ")"; break;
    case Kind::ThresholdScaled: out << "p=" << scale << "*p_family(n)"; break;
  }
  return out.str();
}

// ------------------------------------------------------------------ trials

namespace {

HostGraph draw(const ExperimentConfig& cfg, double p, std::uint64_t trial) {
  SeedSpec seed{cfg.master_seed, trial};
  if (cfg.sampler == Sampler::TwoStep) return sample_two_step(cfg.n, p, seed).g;
  return sample_gnp(cfg.n, p, seed);
}

}  // namespace

EmpiricalDist run_trials(const ExperimentConfig& cfg, unsigned threads) {
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  if (cfg.n < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  if (cfg.family.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty family");
  double p = cfg.p.evaluate(cfg.family, cfg.n);
  CellIndexer cells(cfg.q, cfg.family.size());
  auto prepared = prepare_family(cfg.family);

  // Worker w handles trials w, w + W, ...; integer histograms make the
  // reduction independent of the partition.
  unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, threads), cfg.trials));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(cells.cells(), 0));
  parallel_for(workers, workers, [&](std::size_t w) {
    for (std::uint64_t t = w; t < cfg.trials; t += workers) {
      auto g = draw(cfg, p, t);
      auto xi = xi_vector(g, prepared, cfg.q);
      ++partial[w][cells.index(xi.values)];
    }
  });

  auto dist = EmpiricalDist::zeros(cfg.q, cfg.family.size());
  for (const auto& part : partial)
    for (std::size_t c = 0; c < part.size(); ++c) dist.counts[c] += part[c];
  dist.trials = cfg.trials;
  return dist;
}

ExactDist exact_xi_distribution(int n, double p, const GraphFamily& family, std::uint32_t q, unsigned threads) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
  int pairs = n * (n - 1) / 2;
  if (pairs > 24) {
    throw Error(ErrorCode::BudgetExceeded, "exact law needs C(n,2) <= 24 (n <= 7), got n=" + std::to_string(n));
  }
  CellIndexer cells(q, family.size());
  auto prepared = prepare_family(family);

  std::vector<Edge> pair_list;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) pair_list.emplace_back(u, w);
  std::vector<double> weight(static_cast<std::size_t>(pairs) + 1);
  for (int e = 0; e <= pairs; ++e) weight[static_cast<std::size_t>(e)] = std::pow(p, e) * std::pow(1 - p, pairs - e);

  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::size_t chunks = cells.cells() <= 4096 ? static_cast<std::size_t>(std::min<std::uint64_t>(64, total)) : 1;
  const std::uint64_t per_chunk = (total + chunks - 1) / chunks;
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(cells.cells(), 0.0));
  std::vector<std::vector<double>> carry(chunks, std::vector<double>(cells.cells(), 0.0));

  parallel_for(chunks, std::max(1U, threads), [&](std::size_t chunk) {
    auto& sum = partial[chunk];
    auto& comp = carry[chunk];
    std::uint64_t hi = std::min(total, (chunk + 1) * per_chunk);
    for (std::uint64_t mask = chunk * per_chunk; mask < hi; ++mask) {
      HostGraph::Builder b(n);
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        auto [u, w] = pair_list[static_cast<std::size_t>(std::countr_zero(rest))];
        b.add_edge(u, w);
      }
      auto g = std::move(b).build();
      auto idx = cells.index(xi_vector(g, prepared, q).values);
      // Kahan summation per cell.
      double y = weight[static_cast<std::size_t>(std::popcount(mask))] - comp[idx];
      double t = sum[idx] + y;
      comp[idx] = (t - sum[idx]) - y;
      sum[idx] = t;
    }
  });

  std::vector<double> probs(cells.cells(), 0.0);
  for (const auto& part : partial)
    for (std::size_t c = 0; c < part.size(); ++c) probs[c] += part[c];
  return ExactDist::from_probabilities(q, family.size(), std::move(probs));
}

// ------------------------------------------------------------------- decay

std::vector<std::string> regime_warnings(const PSpec& p, const GraphFamily& family) {
  std::vector<std::string> out;
  Rational threshold_exponent = -family_max_density(family).reciprocal();
  switch (p.kind) {
    case PSpec::Kind::Constant:
      out.push_back("p does not depend on n (" + p.describe() + ")");
      break;
    case PSpec::Kind::Power:
      if (!(p.exponent > threshold_exponent)) {
        out.push_back("not ω(p_Γ): exponent " + p.exponent.to_string() + " <= threshold exponent " +
                      threshold_exponent.to_string());
      }
      break;
    case PSpec::Kind::ThresholdScaled:
      out.push_back("not ω(p_Γ): " + p.describe() + " is a constant multiple of the threshold n^(" +
                    threshold_exponent.to_string() + ")");
      break;
  }
  return out;
}

DecayStudy decay_study(const ExperimentConfig& base, const std::vector<int>& n_grid, unsigned threads) {
  if (n_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty n grid");
  DecayStudy study;
  study.warnings = regime_warnings(base.p, base.family);
  for (int n : n_grid) {
    ExperimentConfig cfg = base;
    cfg.n = n;
    double p = cfg.p.evaluate(cfg.family, n);
    auto dist = run_trials(cfg, threads);
    auto tv = tv_to_uniform(dist);
    study.rows.push_back({n, p, phi(cfg.family, n, p).log_phi, tv.tv, tv.bias_scale.value_or(0.0)});
  }
  return study;
}

bool tv_non_increasing_within_bias(const std::vector<DecayRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double slack = std::max(rows[i - 1].bias_scale, rows[i].bias_scale);
    if (rows[i].tv > rows[i - 1].tv + slack) return false;
  }
  return true;
}

// --------------------------------------------------------------- corollary

EmpiricalDist marginal(const EmpiricalDist& dist, const std::vector<std::size_t>& coordinates) {
  CellIndexer full(dist.q, dist.k);
  CellIndexer sub(dist.q, coordinates.size());
  auto out = EmpiricalDist::zeros(dist.q, coordinates.size());
  out.trials = dist.trials;
  std::vector<std::uint32_t> projected(coordinates.size());
  for (std::size_t c = 0; c < dist.counts.size(); ++c) {
    if (dist.counts[c] == 0) continue;
    auto a = full.coordinates(c);
    for (std::size_t i = 0; i < coordinates.size(); ++i) projected[i] = a[coordinates[i]];
    out.counts[sub.index(projected)] += dist.counts[c];
  }
  return out;
}

CorollaryReport corollary_experiment(const GraphFamily& family, const Rational& alpha, int n, std::uint32_t q,
                                     std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                     CorollaryThresholds thresholds) {
  CorollaryReport report;
  report.split = classify_corollary(family, alpha);
  report.thresholds = thresholds;

  ExperimentConfig cfg{n, q, trials, PSpec::power(-alpha), family, seed, Sampler::Direct};
  report.p = cfg.p.evaluate(family, n);
  report.joint = run_trials(cfg, threads);

  CellIndexer cells(q, family.size());
  std::uint64_t zero_on_j = 0;
  for (std::size_t c = 0; c < report.joint.counts.size(); ++c) {
    auto a = cells.coordinates(c);
    bool all_zero = true;
    for (auto j : report.split.above) all_zero = all_zero && a[j] == 0;
    if (all_zero) zero_on_j += report.joint.counts[c];
  }
  report.fraction_j_zero = static_cast<double>(zero_on_j) / static_cast<double>(trials);

  report.marginal = marginal(report.joint, report.split.below);
  auto tv = tv_to_uniform(report.marginal);
  report.marginal_tv = tv.tv;
  report.marginal_bias_scale = tv.bias_scale.value_or(0.0);
  report.fraction_ok = report.fraction_j_zero >= thresholds.min_fraction_j_zero;
  report.marginal_ok = report.marginal_tv <= thresholds.max_marginal_tv;
  return report;
}

}  // namespace modcount
