#ifndef MODCOUNT_GENSAMPLE_HPP
#define MODCOUNT_GENSAMPLE_HPP

#include "modcount/graph.hpp"
#include "modcount/random.hpp"

namespace modcount {

/// G(n,p): one Bernoulli draw per pair, pairs in lexicographic order.
HostGraph sample_gnp(int n, double p, const SeedSpec& seed);

struct TwoStepSample {
  HostGraph gprime;  // G(n, 2p)
  HostGraph g;       // each edge of gprime kept independently with probability 1/2
};

/// Two-round exposure; requires 0 <= p <= 1/2. g is marginally G(n,p).
TwoStepSample sample_two_step(int n, double p, const SeedSpec& seed);

}  // namespace modcount

#endif
