#include "modcount/packing.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "modcount/error.hpp"

namespace modcount {

namespace {

struct EdgeKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto k : key) {
      h ^= k;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool share_vertex(const Copy& a, const Copy& b) {
  auto i = a.vertices.begin();
  auto j = b.vertices.begin();
  while (i != a.vertices.end() && j != b.vertices.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

CopyList enumerate_copies(const HostGraph& g, const PreparedPattern& h, std::size_t cap) {
  CopyList out{h.pattern(), {}, false};
  std::unordered_set<std::vector<std::uint64_t>, EdgeKeyHash> seen;
  const auto& pattern_edges = h.pattern().edges();
  auto n = static_cast<std::uint64_t>(g.vertex_count());

  for_each_embedding(g, h, [&](std::span<const Vertex> image) {
    std::vector<Edge> edges;
    edges.reserve(pattern_edges.size());
    for (auto [a, b] : pattern_edges) {
      Vertex u = image[a];
      Vertex w = image[b];
      edges.emplace_back(std::min(u, w), std::max(u, w));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::uint64_t> key;
    key.reserve(edges.size() + image.size());
    for (auto [u, w] : edges) key.push_back(u * n + w);
    // Patterns with isolated vertices need the vertex image in the identity too.
    std::vector<Vertex> vertices(image.begin(), image.end());
    std::sort(vertices.begin(), vertices.end());
    key.push_back(~std::uint64_t{0});
    for (auto v : vertices) key.push_back(v);

    if (seen.contains(key)) return true;
    if (out.copies.size() == cap) {
      out.truncated = true;
      return false;
    }
    seen.insert(std::move(key));
    out.copies.push_back({std::move(vertices), std::move(edges)});
    return true;
  });
  return out;
}

CopyList enumerate_copies(const HostGraph& g, const PatternGraph& h, std::size_t cap) {
  return enumerate_copies(g, PreparedPattern(h), cap);
}

std::vector<Copy> greedy_disjoint_packing(const CopyList& list) {
  std::vector<Copy> kept;
  std::vector<bool> used;
  for (const auto& c : list.copies) {
    bool free = std::none_of(c.vertices.begin(), c.vertices.end(),
                             [&](Vertex v) { return v < used.size() && used[v]; });
    if (!free) continue;
    for (auto v : c.vertices) {
      if (v >= used.size()) used.resize(static_cast<std::size_t>(v) + 1, false);
      used[v] = true;
    }
    kept.push_back(c);
  }
  return kept;
}

std::uint64_t count_overlapping_pairs(const CopyList& list) {
  if (list.truncated) throw Error(ErrorCode::TruncatedInput, "overlap count needs the complete copy list");
  const auto& copies = list.copies;
  Vertex max_vertex = 0;
  for (const auto& c : copies)
    for (auto v : c.vertices) max_vertex = std::max(max_vertex, v);

  // Inverted index vertex -> copies containing it; each pair is counted once
  // from its smaller index using a per-row stamp.
  std::vector<std::vector<std::uint32_t>> incident(static_cast<std::size_t>(max_vertex) + 1);
  for (std::uint32_t i = 0; i < copies.size(); ++i)
    for (auto v : copies[i].vertices) incident[v].push_back(i);

  std::vector<std::uint32_t> stamp(copies.size(), 0);
  std::uint64_t pairs = 0;
  for (std::uint32_t i = 0; i < copies.size(); ++i) {
    for (auto v : copies[i].vertices) {
      for (auto j : incident[v]) {
        if (j <= i || stamp[j] == i + 1) continue;
        stamp[j] = i + 1;
        ++pairs;
      }
    }
  }
  return pairs;
}

double turan_lower_bound(std::uint64_t x, std::uint64_t z) {
  if (x == 0) return 0.0;
  auto xd = static_cast<double>(x);
  return xd * xd / (xd + 2.0 * static_cast<double>(z));
}

namespace {

void best_independent(const std::vector<std::uint32_t>& conflicts, std::uint32_t candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  int v = std::countr_zero(candidates);
  std::uint32_t bit = 1U << v;
  best_independent(conflicts, candidates & ~bit & ~conflicts[static_cast<std::size_t>(v)], size + 1, best);
  best_independent(conflicts, candidates & ~bit, size, best);
}

}  // namespace

int max_disjoint_packing_exact(const CopyList& list) {
  if (list.truncated) throw Error(ErrorCode::TruncatedInput, "exact packing needs the complete copy list");
  std::size_t x = list.copies.size();
  if (x > kExactPackingLimit) {
    throw Error(ErrorCode::SizeCapExceeded, "exact packing supports at most " + std::to_string(kExactPackingLimit) +
                                                " copies, got " + std::to_string(x));
  }
  std::vector<std::uint32_t> conflicts(x, 0);
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t j = i + 1; j < x; ++j)
      if (share_vertex(list.copies[i], list.copies[j])) {
        conflicts[i] |= 1U << j;
        conflicts[j] |= 1U << i;
      }
  int best = 0;
  std::uint32_t all = x == 32 ? ~0U : (1U << x) - 1;
  best_independent(conflicts, all, 0, best);
  return best;
}

PackingReport packing_report(const CopyList& list) {
  PackingReport r;
  r.x = list.copies.size();
  r.z = count_overlapping_pairs(list);
  r.y_greedy = greedy_disjoint_packing(list).size();
  if (r.x <= kExactPackingLimit) r.y_exact = static_cast<std::uint64_t>(max_disjoint_packing_exact(list));
  r.turan_bound = turan_lower_bound(r.x, r.z);
  return r;
}

PackingReport packing_report(const HostGraph& g, const PatternGraph& h, std::size_t cap) {
  return packing_report(enumerate_copies(g, h, cap));
}

}  // namespace modcount
