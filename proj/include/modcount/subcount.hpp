#ifndef MODCOUNT_SUBCOUNT_HPP
#define MODCOUNT_SUBCOUNT_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modcount/graph.hpp"
#include "modcount/isomorphism.hpp"

namespace modcount {

using BigInt = boost::multiprecision::cpp_int;

/// Pattern plus its matching order and automorphism count. Build once and
/// reuse across hosts.
class PreparedPattern {
public:
  explicit PreparedPattern(PatternGraph h);
  PreparedPattern(PatternGraph h, std::uint64_t automorphisms);

  const PatternGraph& pattern() const noexcept { return h_; }
  std::uint64_t automorphisms() const noexcept { return aut_; }

  /// Pattern vertices in matching order: each vertex has the most neighbors
  /// among those already placed (ties: higher degree, then lower index).
  const std::vector<int>& order() const noexcept { return order_; }

  /// For position i of order(): positions j < i adjacent to order()[i].
  const std::vector<std::vector<int>>& back_neighbors() const noexcept { return back_; }

private:
  void build_order();

  PatternGraph h_;
  std::uint64_t aut_ = 1;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
};

/// Injective edge-preserving maps V(H) -> V(G).
BigInt count_embeddings(const HostGraph& g, const PatternGraph& h);
BigInt count_embeddings(const HostGraph& g, const PreparedPattern& h);

struct CopyCount {
  BigInt embeddings;
  BigInt copies;  // embeddings / |Aut(H)|
};

CopyCount count_copies(const HostGraph& g, const PatternGraph& h);
CopyCount count_copies(const HostGraph& g, const PreparedPattern& h);

/// N(G,H) mod q in machine words: embeddings are accumulated modulo
/// q*|Aut(H)| and the residue divided by |Aut(H)|. Requires 2 <= q <= 2^16.
std::uint32_t count_copies_mod(const HostGraph& g, const PatternGraph& h, std::uint32_t q);
std::uint32_t count_copies_mod(const HostGraph& g, const PreparedPattern& h, std::uint32_t q);

struct ModVector {
  std::uint32_t q = 2;
  std::vector<std::uint32_t> values;

  friend bool operator==(const ModVector&, const ModVector&) = default;
};

ModVector xi_vector(const HostGraph& g, const GraphFamily& family, std::uint32_t q);
ModVector xi_vector(const HostGraph& g, std::span<const PreparedPattern> family, std::uint32_t q);

std::vector<PreparedPattern> prepare_family(const GraphFamily& family);

/// Visits every embedding; image[v] is the host vertex of pattern vertex v.
/// Returning false from the visitor stops the enumeration.
void for_each_embedding(const HostGraph& g, const PreparedPattern& h,
                        const std::function<bool(std::span<const Vertex> image)>& visit);

}  // namespace modcount

#endif
