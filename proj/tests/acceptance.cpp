// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds and tolerances are fixed here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modcount/charsum.hpp"
#include "modcount/gensample.hpp"
#include "modcount/invariants.hpp"
#include "modcount/montecarlo.hpp"
#include "modcount/packing.hpp"
#include "modcount/parallel.hpp"
#include "modcount/stats.hpp"
#include "modcount/subcount.hpp"
#include "oracles.hpp"

using namespace modcount;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

GraphFamily family_of(std::initializer_list<const char*> names) {
  std::vector<PatternGraph> members;
  for (const char* n : names) members.push_back(catalog_graph(n));
  return validate_family(members);
}

ExperimentConfig config(int n, PSpec p, std::uint32_t q, std::uint64_t trials, GraphFamily fam, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.q = q;
  cfg.trials = trials;
  cfg.p = p;
  cfg.family = std::move(fam);
  cfg.master_seed = seed;
  return cfg;
}

unsigned threads() { return default_thread_count(); }

// The exact laws from criterion 3, reused by criterion 7.
std::vector<ExactDist> g_exact_laws;

Outcome counting_oracle() {
  std::vector<PatternGraph> patterns;
  for (const auto& name : catalog_names()) {
    auto h = catalog_graph(name);
    if (h.vertex_count() <= 4) patterns.push_back(h);
  }
  std::mt19937_64 rng(0xC0FFEE);
  const double ps[] = {0.2, 0.5, 0.8};
  int mismatches = 0;
  int comparisons = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 8;
    auto g = oracle::random_host(n, ps[i % 3], rng);
    for (const auto& h : patterns) {
      ++comparisons;
      if (count_copies(g, h).copies != oracle::count_copies(g, h)) ++mismatches;
    }
  }
  std::ostringstream d;
  d << comparisons << " host/pattern pairs over " << patterns.size() << " patterns, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome invariant_values() {
  auto mk3 = max_density(catalog_graph("K3")).m;
  auto mk4 = max_density(catalog_graph("K4")).m;
  auto exponent = family_threshold(family_of({"K3", "K4"}), 100).exponent;
  std::ostringstream d;
  d << "m(K3)=" << mk3.to_string() << " m(K4)=" << mk4.to_string() << " exponent=" << exponent.to_string();
  return {mk3 == Rational(1) && mk4 == Rational(3, 2) && exponent == Rational(-2, 3), d.str()};
}

Outcome exact_law_agreement() {
  auto fam = family_of({"K3"});
  int cells = 0;
  int outside = 0;
  double worst = 0;
  std::uint64_t seed = 3000;
  g_exact_laws.clear();
  for (int n = 3; n <= 6; ++n) {
    for (double p : {0.3, 0.5}) {
      for (std::uint32_t q : {2U, 3U}) {
        auto exact = exact_xi_distribution(n, p, fam, q, threads());
        g_exact_laws.push_back(exact);
        auto emp = run_trials(config(n, PSpec::fixed(p), q, 5000, fam, seed++), threads());
        auto probs = emp.probabilities();
        for (std::size_t c = 0; c < probs.size(); ++c) {
          double pa = exact.probabilities[c];
          double se = std::sqrt(pa * (1 - pa) / 5000.0);
          double dev = std::abs(probs[c] - pa);
          ++cells;
          if (se == 0 ? dev != 0 : dev > 4 * se) ++outside;
          if (se > 0) worst = std::max(worst, dev / se);
        }
      }
    }
  }
  auto base = exact_xi_distribution(3, 0.5, fam, 2);
  double err = std::max(std::abs(base.probabilities[0] - 0.875), std::abs(base.probabilities[1] - 0.125));
  std::ostringstream d;
  d << cells << " cells, " << outside << " beyond 4 SE (max " << worst << " SE); n=3 law error " << err;
  return {outside == 0 && err <= 1e-12, d.str()};
}

Outcome dense_regime() {
  auto dist = run_trials(config(30, PSpec::fixed(0.5), 2, 2000, family_of({"K3"}), 4000), threads());
  auto tv = tv_to_uniform(dist);
  std::ostringstream d;
  d << "TV=" << tv.tv << " (bias scale " << *tv.bias_scale << ", limit 0.06)";
  return {tv.tv <= 0.06, d.str()};
}

Outcome sparse_regime() {
  auto cfg = config(0, PSpec::power(Rational(-2, 3), 4), 2, 2000, family_of({"K3", "K4"}), 5000);
  auto study = decay_study(cfg, {40, 80, 160}, threads());
  bool trend = tv_non_increasing_within_bias(study.rows);
  double last = study.rows.back().tv;
  std::ostringstream d;
  for (const auto& r : study.rows) d << "n=" << r.n << " TV=" << r.tv << " (bias " << r.bias_scale << ") ";
  d << "; final limit 0.08";
  return {trend && last <= 0.08, d.str()};
}

Outcome corollary_regime() {
  auto r = corollary_experiment(family_of({"K3", "K4"}), Rational(4, 5), 300, 2, 1000, 6000, threads(), {0.95, 0.08});
  std::ostringstream d;
  d << "Pr(xi_K4=0)=" << r.fraction_j_zero << " (min 0.95), K3-marginal TV=" << r.marginal_tv << " (bias "
    << r.marginal_bias_scale << ", max 0.08)";
  return {r.passed(), d.str()};
}

Outcome character_sums() {
  double worst = 0;
  for (int r = 1; r <= 8; ++r) {
    for (int d = 1; d <= 4; ++d) {
      auto value = exact_char_sum(disjoint_block_polynomial(r, d, 2), 0.5).modulus;
      worst = std::max(worst, std::abs(value - std::pow(1 - std::pow(2.0, 1 - d), r)));
    }
  }
  int violations = 0;
  for (const auto& law : g_exact_laws)
    if (!xor_tv_bound(law).holds) ++violations;
  std::ostringstream d;
  d << "max block-formula error " << worst << "; XOR bound checked on " << g_exact_laws.size() << " exact laws, "
    << violations << " violations";
  return {worst <= 1e-12 && violations == 0 && !g_exact_laws.empty(), d.str()};
}

Outcome packing() {
  auto k4 = packing_report(HostGraph::complete(4), catalog_graph("K3"));
  bool k4_ok = k4.x == 4 && k4.z == 6 && std::abs(k4.turan_bound - 1.0) < 1e-12 && k4.y_exact == 1U;
  int instances = 0;
  int violations = 0;
  for (std::uint64_t t = 0; t < 600; ++t) {
    int n = 8 + static_cast<int>(t % 17);
    auto g = sample_gnp(n, 0.15 + 0.05 * static_cast<double>(t % 5), {8000, t});
    for (const char* name : {"K3", "P3", "C4", "K4", "S3"}) {
      auto list = enumerate_copies(g, catalog_graph(name));
      if (list.truncated || list.copies.size() > kExactPackingLimit) continue;
      auto rep = packing_report(list);
      ++instances;
      if (static_cast<double>(*rep.y_exact) < rep.turan_bound - 1e-9) ++violations;
    }
  }
  std::ostringstream d;
  d << "K4/K3: X=" << k4.x << " Z=" << k4.z << " bound=" << k4.turan_bound << " Y_exact="
    << (k4.y_exact ? static_cast<long long>(*k4.y_exact) : -1LL) << "; " << instances << " instances, " << violations
    << " bound violations";
  return {k4_ok && violations == 0 && instances > 0, d.str()};
}

Outcome two_step() {
  const int trials = 10000;
  std::vector<std::int64_t> direct(trials);
  std::vector<std::int64_t> thinned(trials);
  parallel_for(static_cast<std::size_t>(trials), threads(), [&](std::size_t t) {
    direct[t] = sample_gnp(50, 0.1, {9000, t}).edge_count();
    thinned[t] = sample_two_step(50, 0.1, {9001, t}).g.edge_count();
  });
  auto chi = chi_square_two_sample_values(direct, thinned);
  std::ostringstream d;
  d << "edge-count chi-square=" << chi.statistic << " df=" << chi.degrees_of_freedom << " p=" << chi.p_value
    << " (reject below 0.01)";
  return {!chi.rejects(0.01), d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "counting oracle equivalence", 30, counting_oracle},
      {2, "invariant values", 1, invariant_values},
      {3, "exact-law agreement", 120, exact_law_agreement},
      {4, "dense regime uniformity", 60, dense_regime},
      {5, "sparse regime decay", 600, sparse_regime},
      {6, "corollary regime", 300, corollary_regime},
      {7, "character sums and XOR bound", 60, character_sums},
      {8, "packing and Turan bound", 10, packing},
      {9, "two-step exposure", 60, two_step},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && secs < c.budget_seconds;
    if (!pass) ++failed;
    std::printf("%s %d %s: %s [%.2fs of %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
