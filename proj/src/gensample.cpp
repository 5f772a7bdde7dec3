#include "modcount/gensample.hpp"

#include "modcount/error.hpp"

namespace modcount {

HostGraph sample_gnp(int n, double p, const SeedSpec& seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sample_gnp needs n >= 1");
  if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidArgument, "edge probability outside [0,1]");
  auto rng = Xoshiro256StarStar::for_trial(seed);
  HostGraph::Builder b(n);
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex w = u + 1; w < static_cast<Vertex>(n); ++w)
      if (rng.bernoulli(p)) b.add_edge(u, w);
  return std::move(b).build();
}

TwoStepSample sample_two_step(int n, double p, const SeedSpec& seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sample_two_step needs n >= 1");
  if (!(p >= 0 && p <= 0.5)) throw Error(ErrorCode::InvalidArgument, "two-step exposure needs 0 <= p <= 1/2");
  auto rng = Xoshiro256StarStar::for_trial(seed);
  HostGraph::Builder outer(n);
  std::vector<Edge> exposed;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    for (Vertex w = u + 1; w < static_cast<Vertex>(n); ++w) {
      if (rng.bernoulli(2 * p)) {
        outer.add_edge(u, w);
        exposed.emplace_back(u, w);
      }
    }
  }
  HostGraph::Builder inner(n);
  for (auto [u, w] : exposed)
    if (rng.bernoulli(0.5)) inner.add_edge(u, w);
  return {std::move(outer).build(), std::move(inner).build()};
}

}  // namespace modcount
