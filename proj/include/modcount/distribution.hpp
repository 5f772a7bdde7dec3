#ifndef MODCOUNT_DISTRIBUTION_HPP
#define MODCOUNT_DISTRIBUTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace modcount {

inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 20;

/// Mixed-radix addressing of Z_q^k; coordinate 0 is the least significant.
class CellIndexer {
public:
  CellIndexer(std::uint32_t q, std::size_t k);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t cells() const noexcept { return cells_; }

  std::size_t index(std::span<const std::uint32_t> a) const;
  std::vector<std::uint32_t> coordinates(std::size_t index) const;

private:
  std::uint32_t q_;
  std::size_t k_;
  std::size_t cells_;
};

struct EmpiricalDist {
  std::uint32_t q = 2;
  std::size_t k = 1;
  std::vector<std::uint64_t> counts;  // q^k cells
  std::uint64_t trials = 0;

  static EmpiricalDist zeros(std::uint32_t q, std::size_t k);
  std::vector<double> probabilities() const;
};

struct ExactDist {
  std::uint32_t q = 2;
  std::size_t k = 1;
  std::vector<double> probabilities;  // q^k cells, sum 1 within 1e-12

  /// Checks shape, nonnegativity and normalization.
  static ExactDist from_probabilities(std::uint32_t q, std::size_t k, std::vector<double> probabilities);
};

struct TvReport {
  double tv = 0;
  std::optional<double> bias_scale;  // sqrt((q^k - 1) / (4T)), empirical input only
};

/// Half the L1 distance to the uniform law on Z_q^k.
TvReport tv_to_uniform(const EmpiricalDist& dist);
TvReport tv_to_uniform(const ExactDist& dist);
double tv_to_uniform(std::span<const double> probabilities);

}  // namespace modcount

#endif
