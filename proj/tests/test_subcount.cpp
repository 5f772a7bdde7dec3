#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modcount/error.hpp"
#include "modcount/gensample.hpp"
#include "modcount/isomorphism.hpp"
#include "modcount/subcount.hpp"
#include "oracles.hpp"

using namespace modcount;

namespace {

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

HostGraph host_of(const PatternGraph& h) { return HostGraph::from_edges(h.vertex_count(), h.edges()); }

std::vector<PatternGraph> small_patterns() {
  std::vector<PatternGraph> out;
  for (const char* name : {"K2", "P3", "K3", "P4", "S3", "C4", "K4"}) out.push_back(catalog_graph(name));
  std::vector<Edge> paw{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  out.push_back(PatternGraph::from_edges(4, paw, "paw"));
  out.push_back(catalog_graph("C4").with_edge(0, 2));
  std::vector<Edge> matching{{0, 1}, {2, 3}};
  out.push_back(PatternGraph::from_edges(4, matching, "2K2"));
  return out;
}

}  // namespace

TEST_CASE("embedding and copy counts on small examples") {
  auto k4 = HostGraph::complete(4);
  auto k3 = catalog_graph("K3");
  CHECK(count_embeddings(k4, k3) == 24);
  CHECK(count_copies(k4, k3).copies == 4);
  CHECK(count_embeddings(host_of(catalog_graph("C5")), k3) == 0);
  CHECK(count_copies(HostGraph::complete(5), k3).copies == 10);
  CHECK(count_copies(oracle::petersen(), k3).copies == 0);
  CHECK(count_copies(oracle::petersen(), catalog_graph("C5")).copies == 12);
  CHECK(count_copies(oracle::petersen(), catalog_graph("C4")).copies == 0);
  for (int n = 2; n <= 12; ++n) {
    CHECK(count_embeddings(HostGraph::complete(n), catalog_graph("K2")) == n * (n - 1));
  }
  CHECK(count_copies(HostGraph::empty(7), catalog_graph("K2")).copies == 0);
  CHECK(count_copies(HostGraph::complete(3), catalog_graph("K4")).copies == 0);
}

TEST_CASE("modular counts") {
  auto k4 = HostGraph::complete(4);
  auto k3 = catalog_graph("K3");
  CHECK(count_copies_mod(k4, k3, 2) == 0);
  CHECK(count_copies_mod(k4, k3, 3) == 1);
  CHECK_THROWS_AS(count_copies_mod(k4, k3, 1), Error);
  CHECK_THROWS_AS(count_copies_mod(k4, k3, 65537), Error);
  CHECK(count_copies_mod(k4, k3, 65536) == 4);

  std::vector<PatternGraph> members{catalog_graph("K3"), catalog_graph("K4")};
  auto fam = validate_family(members);
  auto xi = xi_vector(HostGraph::complete(5), fam, 3);
  CHECK(xi.q == 3);
  CHECK(xi.values == std::vector<std::uint32_t>{1, 2});  // 10 triangles, 5 K4s
  auto xi2 = xi_vector(HostGraph::complete(4), fam, 2);
  CHECK(xi2.values == std::vector<std::uint32_t>{0, 1});
  auto prepared = prepare_family(fam);
  CHECK(xi_vector(HostGraph::complete(5), prepared, 3) == xi);
}

TEST_CASE("counts agree with brute force on a random corpus") {
  std::mt19937_64 rng(20240611);
  auto patterns = small_patterns();
  const double ps[] = {0.2, 0.5, 0.8};
  for (int i = 0; i < 200; ++i) {
    int n = 4 + i % 5;
    auto g = oracle::random_host(n, ps[i % 3], rng);
    for (const auto& h : patterns) {
      auto expected = oracle::count_copies(g, h);
      INFO("host " << i << " pattern " << h.label() << " n=" << n);
      auto counted = count_copies(g, h);
      REQUIRE(counted.copies == expected);
      REQUIRE(counted.embeddings == expected * automorphism_count(h));
      for (std::uint32_t q : {2U, 3U, 5U, 7U}) REQUIRE(count_copies_mod(g, h, q) == expected % q);
    }
  }
}

TEST_CASE("relabeling the host leaves counts unchanged") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto g = sample_gnp(20, 0.3, {77, static_cast<std::uint64_t>(t)});
    std::vector<int> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = g.relabeled(perm);
    for (const char* name : {"K3", "C4", "P4", "S3", "K4"}) {
      auto pat = catalog_graph(name);
      REQUIRE(count_copies(g, pat).copies == count_copies(h, pat).copies);
    }
  }
}

TEST_CASE("connected patterns are additive over disjoint unions") {
  for (int t = 0; t < 20; ++t) {
    auto a = sample_gnp(15, 0.4, {1, static_cast<std::uint64_t>(t)});
    auto b = sample_gnp(12, 0.5, {2, static_cast<std::uint64_t>(t)});
    auto u = HostGraph::disjoint_union(a, b);
    for (const char* name : {"K3", "C5", "P3", "K4"}) {
      auto pat = catalog_graph(name);
      REQUIRE(count_copies(u, pat).copies == count_copies(a, pat).copies + count_copies(b, pat).copies);
    }
  }
}

TEST_CASE("modular and exact counts agree on larger hosts") {
  for (int t = 0; t < 10; ++t) {
    auto g = sample_gnp(60, 0.3, {9, static_cast<std::uint64_t>(t)});
    for (const char* name : {"K3", "C4", "K4", "P4"}) {
      auto pat = catalog_graph(name);
      BigInt exact = count_copies(g, pat).copies;
      for (std::uint32_t q : {2U, 3U, 10U, 65521U}) {
        REQUIRE(count_copies_mod(g, pat, q) == static_cast<std::uint32_t>(exact % q));
      }
    }
  }
}

TEST_CASE("complete hosts give binomial counts") {
  for (int n : {10, 25, 40}) {
    for (int k : {3, 4, 5}) {
      auto h = catalog_graph("K" + std::to_string(k));
      auto c = count_copies(HostGraph::complete(n), h);
      CHECK(c.copies == binom(n, k));
      CHECK(count_copies_mod(HostGraph::complete(n), h, 7) == binom(n, k) % 7);
    }
  }
  // Host rows wider than one word.
  CHECK(count_copies(HostGraph::complete(130), catalog_graph("K3")).copies == binom(130, 3));
}

TEST_CASE("embedding visitor") {
  PreparedPattern p3(catalog_graph("P3"));
  auto g = HostGraph::complete(5);
  int seen = 0;
  for_each_embedding(g, p3, [&](std::span<const Vertex> img) {
    REQUIRE(img.size() == 3);
    REQUIRE(g.has_edge(img[0], img[1]));
    REQUIRE(g.has_edge(img[1], img[2]));
    ++seen;
    return true;
  });
  CHECK(seen == 60);
  int stopped = 0;
  for_each_embedding(g, p3, [&](std::span<const Vertex>) { return ++stopped < 5; });
  CHECK(stopped == 5);
}

TEST_CASE("matching order") {
  PreparedPattern s(catalog_graph("S4"));
  CHECK(s.automorphisms() == 24);
  CHECK(s.order().front() == 0);
  const auto& back = s.back_neighbors();
  for (std::size_t i = 1; i < back.size(); ++i) CHECK(back[i] == std::vector<int>{0});
  PreparedPattern k4(catalog_graph("K4"));
  for (std::size_t i = 0; i < 4; ++i) CHECK(k4.back_neighbors()[i].size() == i);
}
