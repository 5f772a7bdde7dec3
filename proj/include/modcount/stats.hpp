#ifndef MODCOUNT_STATS_HPP
#define MODCOUNT_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace modcount {

struct ChiSquareResult {
  double statistic = 0;
  int degrees_of_freedom = 0;
  double p_value = 1;
  std::size_t bins = 0;  // after merging

  bool rejects(double significance) const noexcept { return p_value < significance; }
};

/// Two-sample chi-square homogeneity test on binned counts. Adjacent bins
/// are merged left to right until both samples expect at least
/// `min_expected` observations per bin.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                      double min_expected = 5.0);

/// Same test on raw integer observations (histogrammed over their joint range).
ChiSquareResult chi_square_two_sample_values(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                             double min_expected = 5.0);

}  // namespace modcount

#endif
