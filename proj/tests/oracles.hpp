// Brute-force reference implementations used only by tests. None of these
// share code paths with the library algorithms they check.
#ifndef MODCOUNT_TESTS_ORACLES_HPP
#define MODCOUNT_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "modcount/graph.hpp"

namespace oracle {

using modcount::Edge;
using modcount::HostGraph;
using modcount::PatternGraph;

/// True if the graph on `vertices` with edge list `edges` (host labels) is
/// isomorphic to h, by trying every permutation.
inline bool matches_by_permutation(const std::vector<modcount::Vertex>& vertices, const std::vector<Edge>& edges,
                                   const PatternGraph& h) {
  int k = h.vertex_count();
  if (static_cast<int>(vertices.size()) != k || static_cast<int>(edges.size()) != h.edge_count()) return false;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
  for (auto [a, b] : edges) {
    auto ia = std::find(vertices.begin(), vertices.end(), a) - vertices.begin();
    auto ib = std::find(vertices.begin(), vertices.end(), b) - vertices.begin();
    adj[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)] = true;
    adj[static_cast<std::size_t>(ib)][static_cast<std::size_t>(ia)] = true;
  }
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < k && ok; ++u)
      for (int w = u + 1; w < k && ok; ++w)
        ok = h.has_edge(u, w) == adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                                    [static_cast<std::size_t>(perm[static_cast<std::size_t>(w)])];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// N(G,H): every v_H-subset S of V(G), every e_H-subset F of the edges of
/// G[S], counted when (S,F) is isomorphic to H.
inline std::uint64_t count_copies(const HostGraph& g, const PatternGraph& h) {
  int n = g.vertex_count();
  int k = h.vertex_count();
  std::uint64_t total = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<modcount::Vertex> verts;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1U) verts.push_back(static_cast<modcount::Vertex>(v));
    std::vector<Edge> induced;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (g.has_edge(verts[i], verts[j])) induced.emplace_back(verts[i], verts[j]);
    auto m = induced.size();
    for (std::uint32_t f = 0; f < (1U << m); ++f) {
      if (std::popcount(f) != h.edge_count()) continue;
      std::vector<Edge> chosen;
      for (std::size_t e = 0; e < m; ++e)
        if ((f >> e) & 1U) chosen.push_back(induced[e]);
      if (matches_by_permutation(verts, chosen, h)) ++total;
    }
  }
  return total;
}

/// Max density by listing every nonempty vertex subset and every edge subset
/// of it (not just induced ones).
inline std::pair<std::int64_t, std::int64_t> max_density(const PatternGraph& h) {
  std::int64_t best_num = 0;
  std::int64_t best_den = 1;
  int k = h.vertex_count();
  const auto& edges = h.edges();
  for (std::uint32_t s = 1; s < (1U << k); ++s) {
    std::vector<std::size_t> inside;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (((s >> edges[e].first) & 1U) && ((s >> edges[e].second) & 1U)) inside.push_back(e);
    for (std::uint32_t f = 0; f < (1U << inside.size()); ++f) {
      std::int64_t num = std::popcount(f);
      std::int64_t den = std::popcount(s);
      if (num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
      }
    }
  }
  auto g = std::gcd(best_num, best_den);
  return {best_num / g, best_den / g};
}

/// E[omega^Q] by plain summation over all 2^m assignments.
inline std::complex<double> char_sum(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& terms, int m,
                                     std::uint32_t q, double p) {
  std::complex<double> total = 0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << m); ++z) {
    std::uint64_t value = 0;
    for (auto [coef, mono] : terms)
      if ((mono & z) == mono) value += coef;
    int ones = std::popcount(z);
    double w = std::pow(p, ones) * std::pow(1 - p, m - ones);
    total += w * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(value % q) / q);
  }
  return total;
}

/// Maximum set of pairwise disjoint vertex sets, by trying every subset.
inline int max_disjoint(const std::vector<std::vector<modcount::Vertex>>& sets) {
  int best = 0;
  auto x = sets.size();
  for (std::uint32_t s = 0; s < (1U << x); ++s) {
    std::vector<modcount::Vertex> used;
    bool ok = true;
    for (std::size_t i = 0; i < x && ok; ++i) {
      if (!((s >> i) & 1U)) continue;
      for (auto v : sets[i]) {
        if (std::find(used.begin(), used.end(), v) != used.end()) ok = false;
        used.push_back(v);
      }
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

/// Deterministic small random graph for corpora (std::mt19937_64 based, so
/// independent of the library sampler).
template <class Rng>
HostGraph random_host(int n, double p, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < p) edges.emplace_back(a, b);
  return HostGraph::from_edges(n, edges);
}

inline HostGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return HostGraph::from_edges(10, edges);
}

}  // namespace oracle

#endif
