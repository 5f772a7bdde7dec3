#include "modcount/stats.hpp"

#include <algorithm>

#include <boost/math/distributions/chi_squared.hpp>

#include "modcount/error.hpp"

namespace modcount {

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                      double min_expected) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "samples must share bins");
  double na = 0;
  double nb = 0;
  for (auto x : a) na += static_cast<double>(x);
  for (auto x : b) nb += static_cast<double>(x);
  if (na == 0 || nb == 0) throw Error(ErrorCode::InvalidArgument, "empty sample");
  double n = na + nb;

  std::vector<std::pair<double, double>> merged;
  double ca = 0;
  double cb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca += static_cast<double>(a[i]);
    cb += static_cast<double>(b[i]);
    double pooled = ca + cb;
    if (pooled * std::min(na, nb) / n >= min_expected) {
      merged.emplace_back(ca, cb);
      ca = cb = 0;
    }
  }
  if (ca + cb > 0) {
    if (merged.empty()) {
      merged.emplace_back(ca, cb);
    } else {
      merged.back().first += ca;
      merged.back().second += cb;
    }
  }

  ChiSquareResult out;
  out.bins = merged.size();
  for (auto [oa, ob] : merged) {
    double pooled = oa + ob;
    double ea = pooled * na / n;
    double eb = pooled * nb / n;
    out.statistic += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  out.degrees_of_freedom = static_cast<int>(merged.size()) - 1;
  if (out.degrees_of_freedom < 1) {
    out.p_value = 1.0;
    return out;
  }
  boost::math::chi_squared dist(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

ChiSquareResult chi_square_two_sample_values(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                             double min_expected) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "empty sample");
  auto [amin, amax] = std::minmax_element(a.begin(), a.end());
  auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
  std::int64_t lo = std::min(*amin, *bmin);
  std::int64_t hi = std::max(*amax, *bmax);
  std::vector<std::uint64_t> ha(static_cast<std::size_t>(hi - lo + 1), 0);
  std::vector<std::uint64_t> hb(ha.size(), 0);
  for (auto x : a) ++ha[static_cast<std::size_t>(x - lo)];
  for (auto x : b) ++hb[static_cast<std::size_t>(x - lo)];
  return chi_square_two_sample(ha, hb, min_expected);
}

}  // namespace modcount
