#ifndef MODCOUNT_MONTECARLO_HPP
#define MODCOUNT_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcount/distribution.hpp"
#include "modcount/invariants.hpp"
#include "modcount/isomorphism.hpp"
#include "modcount/rational.hpp"

namespace modcount {

/// Edge probability as a function of n.
struct PSpec {
  enum class Kind { Constant, Power, ThresholdScaled };

  Kind kind = Kind::Constant;
  double constant = 0.5;       // Constant
  double scale = 1.0;          // Power: scale * n^exponent; ThresholdScaled: scale * p_family(n)
  Rational exponent = Rational(0);

  static PSpec fixed(double p);
  static PSpec power(Rational exponent, double scale = 1.0);
  static PSpec threshold_scaled(double c);

  double evaluate(const GraphFamily& family, std::int64_t n) const;
  std::string describe() const;
};

enum class Sampler { Direct, TwoStep };

struct ExperimentConfig {
  int n = 0;
  std::uint32_t q = 2;
  std::uint64_t trials = 1;
  PSpec p;
  GraphFamily family;
  std::uint64_t master_seed = 0;
  Sampler sampler = Sampler::Direct;
};

/// Histogram of xi over Z_q^k; trial t uses SeedSpec{master_seed, t}.
EmpiricalDist run_trials(const ExperimentConfig& cfg, unsigned threads = 1);

/// Exact law of xi by enumerating all 2^C(n,2) graphs (n <= 7).
ExactDist exact_xi_distribution(int n, double p, const GraphFamily& family, std::uint32_t q, unsigned threads = 1);

struct DecayRow {
  int n = 0;
  double p = 0;
  double log_phi = 0;
  double tv = 0;
  double bias_scale = 0;
};

struct DecayStudy {
  std::vector<DecayRow> rows;
  std::vector<std::string> warnings;
};

/// Empty when p is n-dependent and grows faster than the family threshold;
/// otherwise the reasons it does not.
std::vector<std::string> regime_warnings(const PSpec& p, const GraphFamily& family);

DecayStudy decay_study(const ExperimentConfig& base, const std::vector<int>& n_grid, unsigned threads = 1);

/// True when each TV exceeds its predecessor by at most the larger of the
/// two bias scales.
bool tv_non_increasing_within_bias(const std::vector<DecayRow>& rows);

struct CorollaryThresholds {
  double min_fraction_j_zero = 0.9;
  double max_marginal_tv = 0.1;
};

struct CorollaryReport {
  CorollarySplit split;
  double p = 0;
  EmpiricalDist joint;
  double fraction_j_zero = 0;   // trials with xi_j = 0 for every j in J
  EmpiricalDist marginal;       // law of (xi_i)_{i in I}
  double marginal_tv = 0;
  double marginal_bias_scale = 0;
  CorollaryThresholds thresholds;
  bool fraction_ok = false;
  bool marginal_ok = false;

  bool passed() const noexcept { return fraction_ok && marginal_ok; }
};

/// Trials at p = n^(-alpha). Throws BoundaryAlpha when some m(G_i) = 1/alpha.
CorollaryReport corollary_experiment(const GraphFamily& family, const Rational& alpha, int n, std::uint32_t q,
                                     std::uint64_t trials, std::uint64_t seed, unsigned threads = 1,
                                     CorollaryThresholds thresholds = {});

/// Projects a histogram over Z_q^k onto the listed coordinates.
EmpiricalDist marginal(const EmpiricalDist& dist, const std::vector<std::size_t>& coordinates);

}  // namespace modcount

#endif
