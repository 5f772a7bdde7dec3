#include "modcount/distribution.hpp"

#include <cmath>

#include "modcount/error.hpp"

namespace modcount {

CellIndexer::CellIndexer(std::uint32_t q, std::size_t k) : q_(q), k_(k), cells_(1) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
  for (std::size_t i = 0; i < k; ++i) {
    cells_ *= q;
    if (cells_ > kMaxCells) {
      throw Error(ErrorCode::BudgetExceeded, "q^k exceeds the cell budget of 2^20");
    }
  }
}

std::size_t CellIndexer::index(std::span<const std::uint32_t> a) const {
  std::size_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * q_ + a[i];
  return idx;
}

std::vector<std::uint32_t> CellIndexer::coordinates(std::size_t index) const {
  std::vector<std::uint32_t> out(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    out[i] = static_cast<std::uint32_t>(index % q_);
    index /= q_;
  }
  return out;
}

EmpiricalDist EmpiricalDist::zeros(std::uint32_t q, std::size_t k) {
  CellIndexer cells(q, k);
  return {q, k, std::vector<std::uint64_t>(cells.cells(), 0), 0};
}

std::vector<double> EmpiricalDist::probabilities() const {
  std::vector<double> out(counts.size(), 0.0);
  if (trials == 0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<double>(counts[i]) / static_cast<double>(trials);
  return out;
}

ExactDist ExactDist::from_probabilities(std::uint32_t q, std::size_t k, std::vector<double> probabilities) {
  CellIndexer cells(q, k);
  if (probabilities.size() != cells.cells()) {
    throw Error(ErrorCode::InvalidArgument, "probability vector has wrong number of cells");
  }
  double total = 0;
  for (double p : probabilities) {
    if (!(p >= 0)) throw Error(ErrorCode::InvalidArgument, "negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "probabilities do not sum to 1");
  return {q, k, std::move(probabilities)};
}

double tv_to_uniform(std::span<const double> probabilities) {
  if (probabilities.empty()) return 0;
  double u = 1.0 / static_cast<double>(probabilities.size());
  double sum = 0;
  for (double p : probabilities) sum += std::abs(p - u);
  return 0.5 * sum;
}

TvReport tv_to_uniform(const ExactDist& dist) { return {tv_to_uniform(dist.probabilities), std::nullopt}; }

TvReport tv_to_uniform(const EmpiricalDist& dist) {
  auto probs = dist.probabilities();
  double cells = static_cast<double>(dist.counts.size());
  double bias = dist.trials == 0 ? 0.0 : std::sqrt((cells - 1.0) / (4.0 * static_cast<double>(dist.trials)));
  return {tv_to_uniform(probs), bias};
}

}  // namespace modcount
