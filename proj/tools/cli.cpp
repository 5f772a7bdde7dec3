#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modcount/charsum.hpp"
#include "modcount/error.hpp"
#include "modcount/gensample.hpp"
#include "modcount/graph.hpp"
#include "modcount/invariants.hpp"
#include "modcount/isomorphism.hpp"
#include "modcount/montecarlo.hpp"
#include "modcount/packing.hpp"
#include "modcount/parallel.hpp"
#include "modcount/serialization.hpp"
#include "modcount/subcount.hpp"

namespace modcount::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Common {
  std::string format = "json";
  std::string out_path;
  bool no_meta = false;
  unsigned threads = 0;
};

struct PFlags {
  std::optional<double> constant;
  std::optional<std::string> exponent;
  std::optional<double> scale;
  std::optional<double> threshold;
};

struct Options {
  Common common;
  PFlags p;
  std::string family = "K3";
  std::string pattern;
  std::string host_file;
  std::string poly_file;
  std::string blocks;
  std::string coefficients;
  std::string alpha;
  std::string n_grid;
  std::string sampler = "direct";
  std::string system = "auto";
  std::optional<int> n;
  std::uint32_t q = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCopyCap;
  double charsum_p = 0.5;
  double min_fraction = 0.9;
  double max_tv = 0.1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// Catalog name, or "@path" for a graph file.
PatternGraph load_pattern(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') {
    auto text = read_file(spec.substr(1));
    auto parsed = parse_graph_text(text);
    return PatternGraph::from_edges(parsed.vertex_count, parsed.edges, spec.substr(1));
  }
  return catalog_graph(spec);
}

GraphFamily load_family(const std::string& list) {
  std::vector<PatternGraph> members;
  for (const auto& item : split_list(list)) members.push_back(load_pattern(item));
  return validate_family(members);
}

std::vector<std::uint32_t> parse_uints(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "expected a nonnegative integer, got '" + item + "'");
    }
  }
  return out;
}

PSpec p_spec(const PFlags& f) {
  int given = (f.constant ? 1 : 0) + (f.exponent ? 1 : 0) + (f.threshold ? 1 : 0);
  if (given != 1) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --p, --p-exp or --p-threshold");
  }
  if (f.scale && !f.exponent) throw Error(ErrorCode::InvalidArgument, "--p-scale needs --p-exp");
  if (f.constant) return PSpec::fixed(*f.constant);
  if (f.threshold) return PSpec::threshold_scaled(*f.threshold);
  return PSpec::power(Rational::parse(*f.exponent), f.scale.value_or(1.0));
}

bool has_p(const PFlags& f) { return f.constant || f.exponent || f.threshold; }

int require_n(const Options& o) {
  if (!o.n) throw Error(ErrorCode::InvalidArgument, "--n is required");
  return *o.n;
}

unsigned thread_count(const Common& c) { return c.threads > 0 ? c.threads : default_thread_count(); }

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Flattens nested JSON into "a.b[0].c: value" lines.
void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

struct Result {
  Json json;
  std::optional<std::string> csv;
  std::vector<std::string> warnings;  // echoed on stderr whatever the format
};

void emit(const Result& result, const Common& common, std::ostream& out) {
  std::ostringstream body;
  if (common.format == "json") {
    Json j = result.json;
    if (!common.no_meta) j["meta"] = {{"tool", "modcount"}, {"version", kVersion}, {"timestamp", utc_timestamp()}};
    body << j.dump(2) << '\n';
  } else if (common.format == "csv") {
    if (!result.csv) throw Error(ErrorCode::InvalidArgument, "--format csv is not available for this subcommand");
    body << *result.csv;
  } else {
    flatten(result.json, "", body);
  }
  if (common.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot write '" + common.out_path + "'");
    file << body.str();
  }
}

HostGraph load_or_sample_host(const Options& o, Json& record) {
  if (!o.host_file.empty()) {
    record["host"] = {{"file", o.host_file}};
    return parse_host_graph(read_file(o.host_file));
  }
  if (!o.p.constant) throw Error(ErrorCode::InvalidArgument, "give --host-file, or --n with --p and --seed");
  int n = require_n(o);
  record["host"] = {{"n", n}, {"p", *o.p.constant}, {"seed", o.seed}};
  record["sampler"] = to_json(sampler_metadata(o.seed));
  return sample_gnp(n, *o.p.constant, SeedSpec{o.seed, 0});
}

// ------------------------------------------------------------ subcommands

Result cmd_invariants(const Options& o) {
  auto family = load_family(o.family);
  Json members = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& g = family[i];
    auto profile = max_density(g);
    Json witness = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((profile.witness >> v) & 1U) witness.push_back(v);
    members.push_back({{"name", g.label()},
                       {"vertices", g.vertex_count()},
                       {"edges", g.edge_count()},
                       {"rho", profile.rho.to_string()},
                       {"m", profile.m.to_string()},
                       {"m_witness", witness},
                       {"automorphisms", family.automorphisms(i)}});
  }
  Rational m_family = family_max_density(family);
  Json j;
  j["members"] = members;
  j["m_family"] = m_family.to_string();
  j["threshold_exponent"] = (-m_family.reciprocal()).to_string();
  if (o.n) {
    int n = *o.n;
    j["n"] = n;
    j["threshold_value"] = family_threshold(family, n).value;
    if (has_p(o.p)) {
      auto spec = p_spec(o.p);
      double p = spec.evaluate(family, n);
      auto ph = phi(family, n, p);
      Json subset = Json::array();
      for (int v = 0; v < family[ph.member].vertex_count(); ++v)
        if ((ph.subset >> v) & 1U) subset.push_back(v);
      j["p_spec"] = spec.describe();
      j["p"] = p;
      j["log_phi"] = ph.log_phi;
      j["phi"] = ph.value() ? Json(*ph.value()) : Json(nullptr);
      j["phi_minimizer"] = {{"member", ph.member}, {"subset", subset}};
      j["regime_warnings"] = regime_warnings(spec, family);
    }
  }
  if (!o.alpha.empty()) j["corollary_split"] = to_json(classify_corollary(family, Rational::parse(o.alpha)));
  return {j, std::nullopt};
}

Result cmd_count(const Options& o) {
  if (o.pattern.empty()) throw Error(ErrorCode::InvalidArgument, "--pattern is required");
  Json j;
  auto host = load_or_sample_host(o, j);
  PreparedPattern h(load_pattern(o.pattern));
  auto counts = count_copies(host, h);
  j["pattern"] = o.pattern;
  j["host_vertices"] = host.vertex_count();
  j["host_edges"] = host.edge_count();
  j["automorphisms"] = h.automorphisms();
  j["embeddings"] = to_string(counts.embeddings);
  j["copies"] = to_string(counts.copies);
  j["q"] = o.q;
  j["copies_mod_q"] = count_copies_mod(host, h, o.q);
  return {j, std::nullopt};
}

std::string histogram_csv(const EmpiricalDist& dist) {
  CellIndexer cells(dist.q, dist.k);
  std::ostringstream out;
  out << "cell,count\n";
  for (std::size_t c = 0; c < dist.counts.size(); ++c) {
    auto a = cells.coordinates(c);
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a[i];
    out << ',' << dist.counts[c] << '\n';
  }
  return out.str();
}

ExperimentConfig experiment(const Options& o) {
  ExperimentConfig cfg;
  cfg.family = load_family(o.family);
  cfg.n = o.n.value_or(0);
  cfg.q = o.q;
  cfg.trials = o.trials;
  cfg.p = p_spec(o.p);
  cfg.master_seed = o.seed;
  if (o.sampler == "two-step") cfg.sampler = Sampler::TwoStep;
  else if (o.sampler != "direct") throw Error(ErrorCode::InvalidArgument, "--sampler must be direct or two-step");
  return cfg;
}

Result cmd_simulate(const Options& o) {
  auto cfg = experiment(o);
  require_n(o);
  auto dist = run_trials(cfg, thread_count(o.common));
  Json j;
  j["config"] = to_json(cfg);
  j["p"] = cfg.p.evaluate(cfg.family, cfg.n);
  j["sampler"] = to_json(sampler_metadata(cfg.master_seed));
  j["result"] = to_json(dist);
  return {j, histogram_csv(dist)};
}

Result cmd_exact(const Options& o) {
  auto family = load_family(o.family);
  if (!o.p.constant) throw Error(ErrorCode::InvalidArgument, "exact needs a constant --p");
  int n = require_n(o);
  auto dist = exact_xi_distribution(n, *o.p.constant, family, o.q, thread_count(o.common));
  Json j;
  j["n"] = n;
  j["p"] = *o.p.constant;
  j["family"] = split_list(o.family);
  j["result"] = to_json(dist);
  j["xor_bound"] = to_json(xor_tv_bound(dist));
  std::ostringstream csv;
  csv << std::setprecision(17) << "cell,probability\n";
  CellIndexer cells(dist.q, dist.k);
  for (std::size_t c = 0; c < dist.probabilities.size(); ++c) {
    auto a = cells.coordinates(c);
    for (std::size_t i = 0; i < a.size(); ++i) csv << (i ? " " : "") << a[i];
    csv << ',' << dist.probabilities[c] << '\n';
  }
  return {j, csv.str()};
}

Result cmd_decay(const Options& o) {
  auto cfg = experiment(o);
  std::vector<int> grid;
  for (auto v : parse_uints(o.n_grid)) grid.push_back(static_cast<int>(v));
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "--n-grid is required");
  auto study = decay_study(cfg, grid, thread_count(o.common));
  Json j;
  j["config"] = to_json(cfg);
  j["sampler"] = to_json(sampler_metadata(cfg.master_seed));
  j["study"] = to_json(study);
  return {j, decay_csv(study), study.warnings};
}

Result cmd_corollary(const Options& o) {
  auto family = load_family(o.family);
  if (o.alpha.empty()) throw Error(ErrorCode::InvalidArgument, "--alpha is required");
  int n = require_n(o);
  auto report = corollary_experiment(family, Rational::parse(o.alpha), n, o.q, o.trials, o.seed,
                                     thread_count(o.common), {o.min_fraction, o.max_tv});
  Json j;
  j["n"] = n;
  j["q"] = o.q;
  j["trials"] = o.trials;
  j["sampler"] = to_json(sampler_metadata(o.seed));
  j["report"] = to_json(report);
  return {j, std::nullopt};
}

Result cmd_packing(const Options& o) {
  if (o.pattern.empty()) throw Error(ErrorCode::InvalidArgument, "--pattern is required");
  Json j;
  auto host = load_or_sample_host(o, j);
  auto list = enumerate_copies(host, load_pattern(o.pattern), o.cap);
  j["pattern"] = o.pattern;
  j["truncated"] = list.truncated;
  if (list.truncated) throw Error(ErrorCode::TruncatedInput, "copy cap reached; raise --cap");
  j["report"] = to_json(packing_report(list));
  return {j, std::nullopt};
}

Result cmd_charsum(const Options& o) {
  std::optional<CharPolynomial> poly;
  Json j;
  if (!o.poly_file.empty()) {
    Json parsed;
    try {
      parsed = Json::parse(read_file(o.poly_file));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("polynomial file is not JSON: ") + e.what());
    }
    poly = polynomial_from_json(parsed);
    j["source"] = {{"file", o.poly_file}};
  } else if (!o.blocks.empty()) {
    auto rd = parse_uints(o.blocks);
    if (rd.size() != 2) throw Error(ErrorCode::InvalidArgument, "--blocks takes r,d");
    poly = disjoint_block_polynomial(static_cast<int>(rd[0]), static_cast<int>(rd[1]), o.q);
    j["source"] = {{"blocks", {{"r", rd[0]}, {"d", rd[1]}}}};
  } else if (!o.host_file.empty()) {
    auto host = parse_host_graph(read_file(o.host_file));
    auto family = load_family(o.family);
    auto c = parse_uints(o.coefficients);
    if (c.empty()) c.assign(family.size(), 1);
    poly = build_polynomial(host, family, c, o.q);
    j["source"] = {{"host_file", o.host_file}, {"family", split_list(o.family)}, {"c", c}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "give --poly-file, --blocks or --host-file");
  }
  j["polynomial"] = to_json(*poly);
  j["degree"] = poly->degree();
  j["p"] = o.charsum_p;
  j["char_sum"] = to_json(exact_char_sum(*poly, o.charsum_p, {true, thread_count(o.common)}));
  if (o.system == "auto") {
    auto system = greedy_disjoint_system(*poly);
    Json blocks = Json::array();
    for (auto b : system.blocks) {
      Json vars = Json::array();
      for (int v = 0; v < 64; ++v)
        if ((b >> v) & 1U) vars.push_back(v);
      blocks.push_back(vars);
    }
    j["disjoint_system"] = {{"d", system.d}, {"r", system.blocks.size()}, {"blocks", blocks}};
    j["lemma_check"] = to_json(verify_lemma_conditions(*poly, system));
  } else if (o.system != "none") {
    throw Error(ErrorCode::InvalidArgument, "--system must be auto or none");
  }
  return {j, std::nullopt};
}

// ------------------------------------------------------------------ flags

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.common.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.common.out_path, "write results to a file instead of stdout");
  sub->add_flag("--no-meta", o.common.no_meta, "omit the timestamped meta block");
  sub->add_option("--threads", o.common.threads, "worker threads (default: MODCOUNT_THREADS or all cores)")
      ->envname("MODCOUNT_THREADS");
}

void add_p(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p.constant, "constant edge probability");
  sub->add_option("--p-exp", o.p.exponent, "p = scale * n^exponent, exponent an exact rational like -2/3");
  sub->add_option("--p-scale", o.p.scale, "scale factor for --p-exp");
  sub->add_option("--p-threshold", o.p.threshold, "p = c * n^(-1/m(family))");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subgraph counts modulo q in G(n,p): invariants, counting, simulation and proof checks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file whose keys mirror the flags (flags win)");

  auto* inv = app.add_subcommand("invariants", "densities, thresholds, log Phi and the corollary split");
  add_common(inv, o);
  add_p(inv, o);
  inv->add_option("--family", o.family, "comma list of catalog names or @graph-file")->required();
  inv->add_option("--n", o.n, "number of vertices");
  inv->add_option("--alpha", o.alpha, "exact rational alpha for the I/J split");

  auto* count = app.add_subcommand("count", "copies of a pattern in a host graph");
  add_common(count, o);
  count->add_option("--p", o.p.constant, "edge probability for a sampled host");
  count->add_option("--pattern", o.pattern, "catalog name or @graph-file")->required();
  count->add_option("--host-file", o.host_file, "host graph in the text format");
  count->add_option("--n", o.n, "sample a host with this many vertices");
  count->add_option("--seed", o.seed, "seed for a sampled host");
  count->add_option("--q", o.q, "modulus")->check(CLI::Range(2U, 65536U));

  auto* sim = app.add_subcommand("simulate", "Monte Carlo law of xi");
  add_common(sim, o);
  add_p(sim, o);
  sim->add_option("--family", o.family)->required();
  sim->add_option("--n", o.n)->required();
  sim->add_option("--q", o.q)->check(CLI::Range(2U, 65536U));
  sim->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  sim->add_option("--seed", o.seed);
  sim->add_option("--sampler", o.sampler, "direct or two-step");

  auto* exact = app.add_subcommand("exact", "exact law of xi by enumeration (n <= 7)");
  add_common(exact, o);
  add_p(exact, o);
  exact->add_option("--family", o.family)->required();
  exact->add_option("--n", o.n)->required();
  exact->add_option("--q", o.q)->check(CLI::Range(2U, 65536U));

  auto* decay = app.add_subcommand("decay", "distance to uniform along a grid of n");
  add_common(decay, o);
  add_p(decay, o);
  decay->add_option("--family", o.family)->required();
  decay->add_option("--n-grid", o.n_grid, "comma list of n")->required();
  decay->add_option("--q", o.q)->check(CLI::Range(2U, 65536U));
  decay->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  decay->add_option("--seed", o.seed);
  decay->add_option("--sampler", o.sampler, "direct or two-step");

  auto* cor = app.add_subcommand("corollary", "trials at p = n^-alpha with the I/J split");
  add_common(cor, o);
  cor->add_option("--family", o.family)->required();
  cor->add_option("--alpha", o.alpha)->required();
  cor->add_option("--n", o.n)->required();
  cor->add_option("--q", o.q)->check(CLI::Range(2U, 65536U));
  cor->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  cor->add_option("--seed", o.seed);
  cor->add_option("--min-fraction", o.min_fraction, "required fraction of trials with xi_J = 0");
  cor->add_option("--max-tv", o.max_tv, "allowed TV of the I-marginal");

  auto* pack = app.add_subcommand("packing", "X, Z, greedy/exact packing and the Turan bound");
  add_common(pack, o);
  pack->add_option("--p", o.p.constant, "edge probability for a sampled host");
  pack->add_option("--pattern", o.pattern)->required();
  pack->add_option("--host-file", o.host_file);
  pack->add_option("--n", o.n);
  pack->add_option("--seed", o.seed);
  pack->add_option("--cap", o.cap, "maximum number of copies to enumerate");

  auto* cs = app.add_subcommand("charsum", "exact character sum of a copy polynomial");
  add_common(cs, o);
  cs->add_option("--poly-file", o.poly_file, "polynomial JSON {q, m, terms}");
  cs->add_option("--blocks", o.blocks, "r,d: r disjoint blocks of d variables");
  cs->add_option("--host-file", o.host_file, "build the polynomial from this host");
  cs->add_option("--family", o.family);
  cs->add_option("--c", o.coefficients, "comma list of coefficients, one per member");
  cs->add_option("--q", o.q)->check(CLI::Range(2U, 65536U));
  cs->add_option("--p", o.charsum_p, "variable probability")->check(CLI::Range(0.0, 1.0));
  cs->add_option("--system", o.system, "auto (greedy disjoint system) or none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump() << '\n';
    return kValidation;
  }

  try {
    Result result;
    if (*inv) result = cmd_invariants(o);
    else if (*count) result = cmd_count(o);
    else if (*sim) result = cmd_simulate(o);
    else if (*exact) result = cmd_exact(o);
    else if (*decay) result = cmd_decay(o);
    else if (*cor) result = cmd_corollary(o);
    else if (*pack) result = cmd_packing(o);
    else result = cmd_charsum(o);
    for (const auto& w : result.warnings) err << Json{{"warning", w}}.dump() << '\n';
    emit(result, o.common, out);
    return kOk;
  } catch (const Error& e) {
    Json body{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (!e.indices().empty()) body["indices"] = e.indices();
    err << Json{{"error", body}}.dump() << '\n';
    return is_validation_error(e.code()) ? kValidation : kRuntime;
  } catch (const std::exception& e) {
    err << Json{{"error", {{"code", "RuntimeError"}, {"message", e.what()}}}}.dump() << '\n';
    return kRuntime;
  }
}

}  // namespace modcount::cli
