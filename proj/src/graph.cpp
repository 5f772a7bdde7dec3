#include "modcount/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>

#include "modcount/error.hpp"

namespace modcount {

namespace {

std::vector<Edge> normalize_edges(int vertex_count, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= static_cast<Vertex>(vertex_count) || b >= static_cast<Vertex>(vertex_count)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " +
                      std::to_string(vertex_count) + " vertices");
    }
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- pattern

PatternGraph PatternGraph::from_edges(int vertex_count, std::span<const Edge> edges, std::string label) {
  if (vertex_count < 1) throw Error(ErrorCode::MalformedGraph, "pattern needs at least one vertex");
  if (vertex_count > kPatternStorage) {
    throw Error(ErrorCode::SizeCapExceeded, "pattern with " + std::to_string(vertex_count) +
                                                " vertices exceeds storage limit " +
                                                std::to_string(kPatternStorage));
  }
  PatternGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = normalize_edges(vertex_count, edges);
  g.rows_.assign(static_cast<std::size_t>(vertex_count), 0U);
  for (auto [a, b] : g.edges_) {
    g.rows_[a] |= 1U << b;
    g.rows_[b] |= 1U << a;
  }
  g.label_ = std::move(label);
  return g;
}

int PatternGraph::degree(int v) const noexcept { return std::popcount(row(v)); }

int PatternGraph::induced_edge_count(std::uint32_t subset) const noexcept {
  int twice = 0;
  for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
    twice += std::popcount(rows_[static_cast<std::size_t>(std::countr_zero(rest))] & subset);
  }
  return twice / 2;
}

PatternGraph PatternGraph::relabeled(std::span<const int> perm) const {
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (auto [a, b] : edges_) mapped.emplace_back(perm[a], perm[b]);
  return from_edges(vertex_count_, mapped, label_);
}

PatternGraph PatternGraph::with_edge(int u, int w) const {
  std::vector<Edge> more = edges_;
  more.emplace_back(u, w);
  return from_edges(vertex_count_, more);
}

// ------------------------------------------------------------------- host

HostGraph::Builder::Builder(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  g_.n_ = n;
  g_.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

void HostGraph::Builder::add_edge(Vertex u, Vertex w) noexcept {
  g_.bits_[u * g_.words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63U);
  g_.bits_[w * g_.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63U);
}

HostGraph HostGraph::Builder::build() && {
  std::int64_t twice = 0;
  for (auto word : g_.bits_) twice += std::popcount(word);
  g_.edge_count_ = twice / 2;
  return std::move(g_);
}

HostGraph HostGraph::from_edges(int n, std::span<const Edge> edges) {
  auto normalized = normalize_edges(n, edges);
  Builder b(n);
  for (auto [u, w] : normalized) b.add_edge(u, w);
  return std::move(b).build();
}

HostGraph HostGraph::empty(int n) { return Builder(n).build(); }

HostGraph HostGraph::complete(int n) {
  Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(w));
  return std::move(b).build();
}

int HostGraph::degree(Vertex v) const noexcept {
  int d = 0;
  for (auto word : row(v)) d += std::popcount(word);
  return d;
}

std::vector<Edge> HostGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
    auto r = row(u);
    for (std::size_t wi = u >> 6; wi < words_; ++wi) {
      std::uint64_t word = r[wi];
      if (wi == (u >> 6)) word &= ~std::uint64_t{0} << (u & 63U) << 1;
      for (; word != 0; word &= word - 1) {
        out.emplace_back(u, static_cast<Vertex>(wi * 64 + std::countr_zero(word)));
      }
    }
  }
  return out;
}

HostGraph HostGraph::relabeled(std::span<const int> perm) const {
  Builder b(n_);
  for (auto [u, w] : edges()) b.add_edge(static_cast<Vertex>(perm[u]), static_cast<Vertex>(perm[w]));
  return std::move(b).build();
}

HostGraph HostGraph::disjoint_union(const HostGraph& a, const HostGraph& b) {
  Builder out(a.n_ + b.n_);
  for (auto [u, w] : a.edges()) out.add_edge(u, w);
  auto shift = static_cast<Vertex>(a.n_);
  for (auto [u, w] : b.edges()) out.add_edge(u + shift, w + shift);
  return std::move(out).build();
}

// ------------------------------------------------------------ text format

namespace {

int parse_decimal(std::string_view token, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || v < 0) {
    throw Error(ErrorCode::MalformedGraph,
                "line " + std::to_string(line_no) + ": expected decimal, got '" + std::string(token) + "'");
  }
  return v;
}

std::pair<int, int> parse_pair_line(std::string_view line, int line_no) {
  auto space = line.find(' ');
  if (space == std::string_view::npos || line.find(' ', space + 1) != std::string_view::npos) {
    throw Error(ErrorCode::MalformedGraph,
                "line " + std::to_string(line_no) + ": expected two space-separated integers");
  }
  return {parse_decimal(line.substr(0, space), line_no), parse_decimal(line.substr(space + 1), line_no)};
}

}  // namespace

GraphText parse_graph_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::MalformedGraph, "empty graph text");

  auto [v, e] = parse_pair_line(lines[0], 1);
  if (lines.size() != static_cast<std::size_t>(e) + 1) {
    throw Error(ErrorCode::MalformedGraph, "header announces " + std::to_string(e) + " edges but " +
                                               std::to_string(lines.size() - 1) + " edge lines follow");
  }
  GraphText out;
  out.vertex_count = v;
  std::set<Edge> seen;
  for (int i = 0; i < e; ++i) {
    int line_no = i + 2;
    auto [a, b] = parse_pair_line(lines[static_cast<std::size_t>(i) + 1], line_no);
    if (a >= v || b >= v) {
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (a == b) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop");
    if (a > b) {
      throw Error(ErrorCode::MalformedGraph, "line " + std::to_string(line_no) + ": endpoints must satisfy u < w");
    }
    Edge edge{static_cast<Vertex>(a), static_cast<Vertex>(b)};
    if (!seen.insert(edge).second) {
      throw Error(ErrorCode::DuplicateEdge, "line " + std::to_string(line_no) + ": duplicate edge");
    }
    out.edges.push_back(edge);
  }
  return out;
}

PatternGraph parse_graph(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == ' ')) trimmed.remove_suffix(1);
  if (!trimmed.empty() && trimmed.find_first_of(" \n") == std::string_view::npos &&
      std::isalpha(static_cast<unsigned char>(trimmed.front()))) {
    return catalog_graph(trimmed);
  }
  auto parsed = parse_graph_text(text);
  return PatternGraph::from_edges(parsed.vertex_count, parsed.edges);
}

HostGraph parse_host_graph(std::string_view text) {
  auto parsed = parse_graph_text(text);
  return HostGraph::from_edges(parsed.vertex_count, parsed.edges);
}

namespace {

std::string serialize_edges(int v, const std::vector<Edge>& edges) {
  std::string out = std::to_string(v) + " " + std::to_string(edges.size()) + "\n";
  for (auto [a, b] : edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace

std::string serialize(const PatternGraph& g) { return serialize_edges(g.vertex_count(), g.edges()); }
std::string serialize(const HostGraph& g) { return serialize_edges(g.vertex_count(), g.edges()); }

// ---------------------------------------------------------------- catalog

namespace {

struct CatalogFamily {
  char prefix;
  int lo;
  int hi;
};

constexpr CatalogFamily kCatalog[] = {{'K', 2, 8}, {'C', 3, 12}, {'P', 2, 10}, {'S', 3, 8}};

bool split_name(std::string_view name, char& prefix, int& size) {
  if (name.size() < 2) return false;
  prefix = name.front();
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.front() == '0') return false;
  for (const auto& fam : kCatalog)
    if (fam.prefix == prefix) return size >= fam.lo && size <= fam.hi;
  return false;
}

}  // namespace

bool is_catalog_name(std::string_view name) {
  char prefix = 0;
  int size = 0;
  return split_name(name, prefix, size);
}

PatternGraph catalog_graph(std::string_view name) {
  char prefix = 0;
  int size = 0;
  if (!split_name(name, prefix, size)) {
    throw Error(ErrorCode::UnknownCatalogName, "unknown catalog graph '" + std::string(name) + "'");
  }
  std::vector<Edge> edges;
  int v = size;
  switch (prefix) {
    case 'K':
      for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) edges.emplace_back(a, b);
      break;
    case 'C':
      for (int a = 0; a < size; ++a) edges.emplace_back(a, (a + 1) % size);
      break;
    case 'P':
      for (int a = 0; a + 1 < size; ++a) edges.emplace_back(a, a + 1);
      break;
    case 'S':
      v = size + 1;
      for (int leaf = 1; leaf <= size; ++leaf) edges.emplace_back(0, leaf);
      break;
    default:
      break;
  }
  return PatternGraph::from_edges(v, edges, std::string(name));
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& fam : kCatalog)
    for (int s = fam.lo; s <= fam.hi; ++s) out.push_back(std::string(1, fam.prefix) + std::to_string(s));
  return out;
}

}  // namespace modcount
