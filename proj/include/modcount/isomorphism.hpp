#ifndef MODCOUNT_ISOMORPHISM_HPP
#define MODCOUNT_ISOMORPHISM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "modcount/graph.hpp"

namespace modcount {

bool is_connected(const PatternGraph& h);

/// Backtracking over vertex maps, pruned by degree and by adjacency to the
/// already-mapped prefix. Both graphs must have at most kPatternCap vertices.
bool is_isomorphic(const PatternGraph& a, const PatternGraph& b);

/// |Aut(H)| by exhaustive search with the same pruning as is_isomorphic.
std::uint64_t automorphism_count(const PatternGraph& h);

/// Ordered list of pairwise nonisomorphic connected patterns, each with at
/// least two vertices. Only validate_family constructs one.
class GraphFamily {
public:
  std::size_t size() const noexcept { return patterns_.size(); }
  const PatternGraph& operator[](std::size_t i) const { return patterns_[i]; }
  const std::vector<PatternGraph>& patterns() const noexcept { return patterns_; }

  /// |Aut(G_i)|, computed once during validation.
  std::uint64_t automorphisms(std::size_t i) const { return automorphisms_[i]; }

  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }

private:
  friend GraphFamily validate_family(std::span<const PatternGraph> patterns);
  std::vector<PatternGraph> patterns_;
  std::vector<std::uint64_t> automorphisms_;
};

/// Throws DisconnectedMember, TooSmallMember (with the member index) or
/// IsomorphicPair (with both indices).
GraphFamily validate_family(std::span<const PatternGraph> patterns);

}  // namespace modcount

#endif
