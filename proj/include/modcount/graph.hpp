#ifndef MODCOUNT_GRAPH_HPP
#define MODCOUNT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modcount {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Largest pattern the operations accept (permutation search budget).
inline constexpr int kPatternCap = 10;
/// Largest pattern that can be stored; catalog cycles go up to C12.
inline constexpr int kPatternStorage = 32;

/// Small pattern graph H with one 32-bit adjacency row per vertex.
class PatternGraph {
public:
  PatternGraph() = default;

  /// Validates loops, duplicates and ranges; edges may be given in any order
  /// and orientation. Throws modcount::Error.
  static PatternGraph from_edges(int vertex_count, std::span<const Edge> edges, std::string label = {});

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::uint32_t row(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int w) const noexcept { return (rows_[static_cast<std::size_t>(u)] >> w) & 1U; }
  int degree(int v) const noexcept;

  /// Edges induced by a vertex subset given as a bitmask.
  int induced_edge_count(std::uint32_t subset) const noexcept;

  /// Catalog name or user-supplied label; empty for anonymous graphs.
  const std::string& label() const noexcept { return label_; }

  /// Relabel: vertex v becomes perm[v].
  PatternGraph relabeled(std::span<const int> perm) const;

  /// Same vertex set with one extra edge.
  PatternGraph with_edge(int u, int w) const;

  friend bool operator==(const PatternGraph& a, const PatternGraph& b) noexcept {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> rows_;
  std::string label_;
};

/// Host graph on n vertices; immutable, rows stored as packed 64-bit words.
class HostGraph {
public:
  class Builder;

  HostGraph() = default;

  /// Validating constructor (same rules as PatternGraph::from_edges).
  static HostGraph from_edges(int n, std::span<const Edge> edges);
  static HostGraph empty(int n);
  static HostGraph complete(int n);

  int vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edge_count_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  bool has_edge(Vertex u, Vertex w) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (w >> 6)] >> (w & 63U)) & 1U;
  }
  int degree(Vertex v) const noexcept;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Vertex v becomes perm[v].
  HostGraph relabeled(std::span<const int> perm) const;

  /// Vertices of b are shifted by a.vertex_count().
  static HostGraph disjoint_union(const HostGraph& a, const HostGraph& b);

  friend bool operator==(const HostGraph& a, const HostGraph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Unchecked incremental construction for samplers. Adding the same pair
/// twice is harmless; callers guarantee u != w.
class HostGraph::Builder {
public:
  explicit Builder(int n);
  void add_edge(Vertex u, Vertex w) noexcept;
  HostGraph build() &&;

private:
  HostGraph g_;
};

/// Parsed form of the text format before it becomes a pattern or a host.
struct GraphText {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

/// Strict reader for the "v e" header plus e lines "u w" (0 <= u < w < v).
/// The final newline may be omitted; nothing else is tolerated.
GraphText parse_graph_text(std::string_view text);

/// Catalog name (K3, C5, P4, S3, ...) or text format; vertices 0..v-1.
PatternGraph parse_graph(std::string_view text);

HostGraph parse_host_graph(std::string_view text);

/// Inverse of parse_graph_text; edges in stored (lexicographic) order,
/// newline-terminated.
std::string serialize(const PatternGraph& g);
std::string serialize(const HostGraph& g);

/// Kn (2..8), Cn (3..12), Pn (2..10, n vertices), Sn (3..8, n leaves).
PatternGraph catalog_graph(std::string_view name);
bool is_catalog_name(std::string_view name);
std::vector<std::string> catalog_names();

}  // namespace modcount

#endif
