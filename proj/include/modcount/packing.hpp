#ifndef MODCOUNT_PACKING_HPP
#define MODCOUNT_PACKING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "modcount/graph.hpp"
#include "modcount/subcount.hpp"

namespace modcount {

/// One copy of H in a host: identified by its edge set; the sorted vertex
/// image is what disjointness is tested on.
struct Copy {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct CopyList {
  PatternGraph pattern;
  std::vector<Copy> copies;
  bool truncated = false;  // more copies exist than were kept
};

inline constexpr std::size_t kDefaultCopyCap = 1'000'000;
inline constexpr std::size_t kExactPackingLimit = 24;

/// Distinct copies in first-seen order of the embedding search, up to cap.
CopyList enumerate_copies(const HostGraph& g, const PatternGraph& h, std::size_t cap = kDefaultCopyCap);
CopyList enumerate_copies(const HostGraph& g, const PreparedPattern& h, std::size_t cap = kDefaultCopyCap);

/// Keeps a copy iff it is vertex-disjoint from every copy kept before it.
std::vector<Copy> greedy_disjoint_packing(const CopyList& list);

/// Unordered pairs of copies sharing at least one vertex. Throws
/// TruncatedInput on a truncated list.
std::uint64_t count_overlapping_pairs(const CopyList& list);

/// X^2 / (X + 2Z); zero when X = 0.
double turan_lower_bound(std::uint64_t x, std::uint64_t z);

/// Maximum number of pairwise vertex-disjoint copies (maximum independent
/// set of the conflict graph, branch and bound). Requires at most
/// kExactPackingLimit copies and an untruncated list.
int max_disjoint_packing_exact(const CopyList& list);

struct PackingReport {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::uint64_t y_greedy = 0;
  std::optional<std::uint64_t> y_exact;
  double turan_bound = 0;
};

/// All quantities for one host; y_exact is filled when X <= kExactPackingLimit.
PackingReport packing_report(const HostGraph& g, const PatternGraph& h, std::size_t cap = kDefaultCopyCap);
PackingReport packing_report(const CopyList& list);

}  // namespace modcount

#endif
