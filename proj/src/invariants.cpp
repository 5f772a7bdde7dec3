#include "modcount/invariants.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "modcount/error.hpp"

namespace modcount {

Rational density(const PatternGraph& h) { return Rational(h.edge_count(), h.vertex_count()); }

DensityProfile max_density(const PatternGraph& h) {
  int v = h.vertex_count();
  if (v > kPatternCap) {
    throw Error(ErrorCode::SizeCapExceeded, "max_density supports at most " + std::to_string(kPatternCap) +
                                                " vertices");
  }
  DensityProfile out{density(h), Rational(0), 0};
  std::uint32_t full = (1U << v) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    Rational r(h.induced_edge_count(s), std::popcount(s));
    // Ties keep the smallest mask, so the witness is deterministic.
    if (out.witness == 0 || r > out.m) {
      out.m = r;
      out.witness = s;
    }
  }
  return out;
}

Rational family_max_density(const GraphFamily& family) {
  Rational best(0);
  for (const auto& g : family) {
    auto m = max_density(g).m;
    if (m > best) best = m;
  }
  return best;
}

Threshold family_threshold(const GraphFamily& family, std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "threshold needs n >= 2");
  Rational exponent = -family_max_density(family).reciprocal();
  return {exponent, std::pow(static_cast<double>(n), exponent.to_double())};
}

std::optional<double> PhiResult::value() const {
  if (std::abs(log_phi) >= 500) return std::nullopt;
  return std::exp(log_phi);
}

PhiResult phi(const GraphFamily& family, std::int64_t n, double p) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "phi needs n >= 1");
  if (!(p > 0) || p > 1) throw Error(ErrorCode::InvalidArgument, "phi needs 0 < p <= 1");
  double ln_n = std::log(static_cast<double>(n));
  double ln_p = std::log(p);
  PhiResult best{std::numeric_limits<double>::infinity(), 0, 0};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& g = family[i];
    std::uint32_t full = (1U << g.vertex_count()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
      double value = std::popcount(s) * ln_n + g.induced_edge_count(s) * ln_p;
      if (value < best.log_phi) best = {value, i, s};
    }
  }
  return best;
}

CorollarySplit classify_corollary(const GraphFamily& family, const Rational& alpha) {
  if (alpha <= Rational(0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  Rational limit = alpha.reciprocal();
  CorollarySplit split{alpha, {}, {}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto m = max_density(family[i]).m;
    if (m == limit) {
      throw Error(ErrorCode::BoundaryAlpha,
                  "m(G_" + std::to_string(i) + ") = " + m.to_string() + " equals 1/alpha", {static_cast<int>(i)});
    }
    (m < limit ? split.below : split.above).push_back(i);
  }
  return split;
}

}  // namespace modcount
