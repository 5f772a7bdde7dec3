#ifndef MODCOUNT_INVARIANTS_HPP
#define MODCOUNT_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "modcount/graph.hpp"
#include "modcount/isomorphism.hpp"
#include "modcount/rational.hpp"

namespace modcount {

/// Edge/vertex ratio e_H / v_H.
Rational density(const PatternGraph& h);

struct DensityProfile {
  Rational rho;
  Rational m;                   // max density over nonempty subgraphs
  std::uint32_t witness = 0;    // vertex subset (bitmask) attaining m
};

/// Maximum subgraph density. Only vertex subsets are enumerated: for a fixed
/// vertex set the induced edges give the largest ratio.
DensityProfile max_density(const PatternGraph& h);

/// m(family) = max over members.
Rational family_max_density(const GraphFamily& family);

struct Threshold {
  Rational exponent;  // -1/m(family)
  double value = 0;   // n^exponent
};

Threshold family_threshold(const GraphFamily& family, std::int64_t n);

/// log of min over members G and nonempty vertex subsets S of n^|S| p^e(S).
struct PhiResult {
  double log_phi = 0;
  std::size_t member = 0;
  std::uint32_t subset = 0;

  /// exp(log_phi), or nullopt when |log_phi| >= 500.
  std::optional<double> value() const;
};

PhiResult phi(const GraphFamily& family, std::int64_t n, double p);

struct CorollarySplit {
  Rational alpha;
  std::vector<std::size_t> below;  // I: m(G_i) < 1/alpha
  std::vector<std::size_t> above;  // J: m(G_i) > 1/alpha
};

/// Exact classification of members against 1/alpha; throws BoundaryAlpha
/// (carrying the index) on equality.
CorollarySplit classify_corollary(const GraphFamily& family, const Rational& alpha);

}  // namespace modcount

#endif
