#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "modcount/error.hpp"
#include "modcount/gensample.hpp"
#include "modcount/invariants.hpp"
#include "modcount/isomorphism.hpp"
#include "modcount/packing.hpp"
#include "oracles.hpp"

using namespace modcount;

namespace {

HostGraph triangles(int count) {
  auto t = HostGraph::complete(3);
  HostGraph out = HostGraph::empty(0);
  for (int i = 0; i < count; ++i) out = HostGraph::disjoint_union(out, t);
  return out;
}

bool disjoint(const Copy& a, const Copy& b) {
  for (auto v : a.vertices)
    if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) return false;
  return true;
}

std::vector<std::vector<Vertex>> vertex_sets(const CopyList& list) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : list.copies) out.push_back(c.vertices);
  return out;
}

std::uint64_t brute_overlaps(const CopyList& list) {
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < list.copies.size(); ++i)
    for (std::size_t j = i + 1; j < list.copies.size(); ++j) z += disjoint(list.copies[i], list.copies[j]) ? 0 : 1;
  return z;
}

}  // namespace

TEST_CASE("copy enumeration") {
  auto k3 = catalog_graph("K3");
  auto list = enumerate_copies(HostGraph::complete(4), k3, 100);
  CHECK(list.copies.size() == 4);
  CHECK_FALSE(list.truncated);
  for (const auto& c : list.copies) {
    CHECK(c.vertices.size() == 3);
    CHECK(c.edges.size() == 3);
    CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
  }
  CHECK(enumerate_copies(HostGraph::from_edges(5, catalog_graph("C5").edges()), k3, 100).copies.empty());

  auto capped = enumerate_copies(HostGraph::complete(6), k3, 10);
  CHECK(capped.copies.size() == 10);
  CHECK(capped.truncated);
  auto exact_cap = enumerate_copies(HostGraph::complete(6), k3, 20);
  CHECK(exact_cap.copies.size() == 20);
  CHECK_FALSE(exact_cap.truncated);

  // C4 on K4: three copies share one vertex set, distinguished by edges.
  auto c4 = enumerate_copies(HostGraph::complete(4), catalog_graph("C4"));
  CHECK(c4.copies.size() == 3);
  std::set<std::vector<Edge>> distinct;
  for (const auto& c : c4.copies) distinct.insert(c.edges);
  CHECK(distinct.size() == 3);
}

TEST_CASE("enumeration matches counting") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto g = oracle::random_host(8, 0.5, rng);
    for (const char* name : {"K3", "P3", "C4", "S3"}) {
      auto h = catalog_graph(name);
      REQUIRE(enumerate_copies(g, h).copies.size() == oracle::count_copies(g, h));
    }
  }
}

TEST_CASE("greedy packing") {
  auto k3 = catalog_graph("K3");
  CHECK(greedy_disjoint_packing(enumerate_copies(HostGraph::complete(4), k3)).size() == 1);
  CHECK(greedy_disjoint_packing(enumerate_copies(triangles(2), k3)).size() == 2);
  auto k6 = enumerate_copies(HostGraph::complete(6), k3);
  CHECK(greedy_disjoint_packing(k6).size() == 2);
  CHECK(greedy_disjoint_packing(CopyList{k3, {}, false}).empty());

  for (std::uint64_t t = 0; t < 40; ++t) {
    auto list = enumerate_copies(sample_gnp(30, 0.3, {4, t}), k3);
    auto kept = greedy_disjoint_packing(list);
    if (!list.copies.empty()) REQUIRE(kept.size() >= 1);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = i + 1; j < kept.size(); ++j) REQUIRE(disjoint(kept[i], kept[j]));
    // Maximal: every copy meets some kept copy.
    for (const auto& c : list.copies) {
      bool meets = false;
      for (const auto& k : kept) meets = meets || !disjoint(c, k);
      REQUIRE(meets);
    }
  }
}

TEST_CASE("overlapping pairs") {
  auto k3 = catalog_graph("K3");
  CHECK(count_overlapping_pairs(enumerate_copies(HostGraph::complete(4), k3)) == 6);
  CHECK(count_overlapping_pairs(enumerate_copies(triangles(2), k3)) == 0);
  CHECK(count_overlapping_pairs(enumerate_copies(triangles(1), k3)) == 0);
  CHECK_THROWS_AS(count_overlapping_pairs(enumerate_copies(HostGraph::complete(6), k3, 10)), Error);
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto list = enumerate_copies(sample_gnp(25, 0.35, {6, t}), catalog_graph("P3"));
    REQUIRE(count_overlapping_pairs(list) == brute_overlaps(list));
  }
}

TEST_CASE("Turan bound") {
  CHECK(turan_lower_bound(4, 6) == doctest::Approx(1.0));
  CHECK(turan_lower_bound(7, 0) == doctest::Approx(7.0));
  CHECK(turan_lower_bound(0, 0) == 0.0);
  CHECK(turan_lower_bound(0, 5) == 0.0);
}

TEST_CASE("exact packing") {
  auto k3 = catalog_graph("K3");
  CHECK(max_disjoint_packing_exact(enumerate_copies(HostGraph::complete(4), k3)) == 1);
  auto k6 = enumerate_copies(HostGraph::complete(6), k3);
  CHECK(max_disjoint_packing_exact(k6) == 2);
  CHECK(oracle::max_disjoint(vertex_sets(k6)) == 2);
  CHECK(max_disjoint_packing_exact(enumerate_copies(triangles(3), k3)) == 3);
  CHECK(max_disjoint_packing_exact(CopyList{k3, {}, false}) == 0);

  auto k7 = enumerate_copies(HostGraph::complete(7), k3);  // 35 copies
  CHECK_THROWS_AS(max_disjoint_packing_exact(k7), Error);
  try {
    max_disjoint_packing_exact(k7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
  try {
    max_disjoint_packing_exact(enumerate_copies(HostGraph::complete(6), k3, 10));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncatedInput);
  }
}

TEST_CASE("exact packing agrees with brute force and satisfies the Turan bound") {
  int checked = 0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    auto g = sample_gnp(12 + static_cast<int>(t % 9), 0.3, {31, t});
    for (const char* name : {"K3", "P3", "C4"}) {
      auto list = enumerate_copies(g, catalog_graph(name));
      if (list.copies.size() > 18) continue;  // keep the oracle cheap
      auto report = packing_report(list);
      REQUIRE(report.y_exact.has_value());
      REQUIRE(static_cast<int>(*report.y_exact) == oracle::max_disjoint(vertex_sets(list)));
      REQUIRE(static_cast<double>(*report.y_exact) >= report.turan_bound - 1e-9);
      REQUIRE(*report.y_exact >= report.y_greedy);
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("packing report") {
  auto r = packing_report(HostGraph::complete(4), catalog_graph("K3"));
  CHECK(r.x == 4);
  CHECK(r.z == 6);
  CHECK(r.y_greedy == 1);
  CHECK(r.y_exact == std::optional<std::uint64_t>{1});
  CHECK(r.turan_bound == doctest::Approx(1.0));
  auto big = packing_report(HostGraph::complete(7), catalog_graph("K3"));
  CHECK(big.x == 35);
  CHECK_FALSE(big.y_exact.has_value());
}

// Growth of X with Phi, and greedy against the Turan bound, at p = 4 n^(-1/m(H)).
TEST_CASE("packing quantities above the threshold") {
  for (const char* name : {"K3", "K4"}) {
    std::vector<PatternGraph> members{catalog_graph(name)};
    auto fam = validate_family(members);
    PreparedPattern prepared(fam[0], fam.automorphisms(0));
    std::vector<double> means;
    std::vector<double> ses;
    for (int n : {40, 80, 160}) {
      double p = 4 * family_threshold(fam, n).value;
      double phi_value = *phi(fam, n, p).value();
      const int trials = 200;
      double sum = 0;
      double sq = 0;
      int greedy_ok = 0;
      for (int t = 0; t < trials; ++t) {
        auto g = sample_gnp(n, p, {static_cast<std::uint64_t>(n) * 1000 + 17, static_cast<std::uint64_t>(t)});
        auto list = enumerate_copies(g, prepared);
        auto x = static_cast<double>(list.copies.size());
        sum += x;
        sq += x * x;
        auto greedy = greedy_disjoint_packing(list).size();
        auto bound = turan_lower_bound(list.copies.size(), count_overlapping_pairs(list));
        if (static_cast<double>(greedy) >= 0.1 * bound) ++greedy_ok;
      }
      double mean = sum / trials;
      double se = std::sqrt((sq / trials - mean * mean) / trials);
      INFO(name << " n=" << n << " mean X=" << mean << " Phi=" << phi_value);
      CHECK(mean >= 0.05 * phi_value);
      CHECK(greedy_ok >= 190);
      means.push_back(mean);
      ses.push_back(se);
    }
    // Phi is non-decreasing along this grid, so the mean of X must not drop
    // by more than the combined standard error.
    for (std::size_t i = 1; i < means.size(); ++i) {
      INFO(name << " step " << i);
      CHECK(means[i] >= means[i - 1] - 2 * std::hypot(ses[i], ses[i - 1]));
    }
  }
}
