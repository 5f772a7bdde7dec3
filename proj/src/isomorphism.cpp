#include "modcount/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "modcount/error.hpp"

namespace modcount {

namespace {

void check_cap(const PatternGraph& g) {
  if (g.vertex_count() > kPatternCap) {
    throw Error(ErrorCode::SizeCapExceeded, "pattern has " + std::to_string(g.vertex_count()) +
                                                " vertices; limit is " + std::to_string(kPatternCap));
  }
}

// Counts (or detects) bijections f: V(a) -> V(b) with uv in E(a) <=> f(u)f(v) in E(b).
// Vertices of `a` are placed in BFS order so adjacency checks prune early.
class MapSearch {
public:
  MapSearch(const PatternGraph& a, const PatternGraph& b) : a_(a), b_(b), n_(a.vertex_count()) {
    std::uint32_t seen = 0;
    for (int root = 0; root < n_; ++root) {
      if ((seen >> root) & 1U) continue;
      seen |= 1U << root;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        int v = order_[head++];
        for (std::uint32_t nb = a_.row(v) & ~seen; nb != 0; nb &= nb - 1) {
          int w = std::countr_zero(nb);
          seen |= 1U << w;
          order_.push_back(w);
        }
      }
    }
  }

  std::uint64_t count(bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    found_ = 0;
    image_.fill(-1);
    extend(0, 0);
    return found_;
  }

private:
  void extend(int depth, std::uint32_t used) {
    if (depth == n_) {
      ++found_;
      return;
    }
    int v = order_[static_cast<std::size_t>(depth)];
    int deg = a_.degree(v);
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1U || b_.degree(w) != deg) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        int u = order_[static_cast<std::size_t>(i)];
        ok = a_.has_edge(u, v) == b_.has_edge(image_[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(v)] = w;
      extend(depth + 1, used | (1U << w));
      if (stop_at_first_ && found_ > 0) return;
    }
  }

  const PatternGraph& a_;
  const PatternGraph& b_;
  int n_;
  std::vector<int> order_;
  std::array<int, kPatternCap> image_{};
  bool stop_at_first_ = false;
  std::uint64_t found_ = 0;
};

std::vector<int> sorted_degrees(const PatternGraph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool is_connected(const PatternGraph& h) {
  int n = h.vertex_count();
  if (n <= 1) return true;
  std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  std::uint32_t reached = 1U;
  std::uint32_t frontier = 1U;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= h.row(std::countr_zero(f));
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

bool is_isomorphic(const PatternGraph& a, const PatternGraph& b) {
  check_cap(a);
  check_cap(b);
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return MapSearch(a, b).count(true) > 0;
}

std::uint64_t automorphism_count(const PatternGraph& h) {
  check_cap(h);
  return MapSearch(h, h).count(false);
}

GraphFamily validate_family(std::span<const PatternGraph> patterns) {
  if (patterns.empty()) throw Error(ErrorCode::InvalidArgument, "family must be nonempty");
  GraphFamily family;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& g = patterns[i];
    int idx = static_cast<int>(i);
    if (g.vertex_count() < 2) {
      throw Error(ErrorCode::TooSmallMember, "member " + std::to_string(i) + " has fewer than two vertices", {idx});
    }
    if (!is_connected(g)) {
      throw Error(ErrorCode::DisconnectedMember, "member " + std::to_string(i) + " is disconnected", {idx});
    }
    check_cap(g);
  }
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      if (is_isomorphic(patterns[i], patterns[j])) {
        throw Error(ErrorCode::IsomorphicPair,
                    "members " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic",
                    {static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  family.patterns_.assign(patterns.begin(), patterns.end());
  for (const auto& g : family.patterns_) family.automorphisms_.push_back(automorphism_count(g));
  return family;
}

}  // namespace modcount
