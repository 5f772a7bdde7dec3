#include "modcount/subcount.hpp"

#include <algorithm>
#include <bit>

#include "modcount/error.hpp"

namespace modcount {

namespace {

void check_sizes(const HostGraph& g, const PatternGraph& h) {
  if (h.vertex_count() > kPatternCap) {
    throw Error(ErrorCode::SizeCapExceeded, "pattern has " + std::to_string(h.vertex_count()) +
                                                " vertices; limit is " + std::to_string(kPatternCap));
  }
  (void)g;
}

// Backtracking matcher. Candidate sets for each position are the intersection
// of the host rows of the images of its back-neighbors, minus used vertices.
// At the last position the surviving candidates are counted by popcount
// instead of being visited one by one (counting mode only).
template <class Leaf>
class Matcher {
public:
  Matcher(const HostGraph& g, const PreparedPattern& h, Leaf& leaf)
      : g_(g), h_(h), leaf_(leaf), words_(g.words_per_row()), k_(h.pattern().vertex_count()) {
    cand_.assign(static_cast<std::size_t>(k_) * words_, 0);
    used_.assign(words_, 0);
    image_.assign(static_cast<std::size_t>(k_), 0);
    min_degree_.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) min_degree_[static_cast<std::size_t>(i)] = h.pattern().degree(h.order()[static_cast<std::size_t>(i)]);
    all_.assign(words_, ~std::uint64_t{0});
    if (auto tail = static_cast<unsigned>(g.vertex_count()) & 63U; tail != 0 && words_ > 0) {
      all_.back() = (std::uint64_t{1} << tail) - 1;
    }
  }

  void run() {
    if (k_ == 0 || k_ > g_.vertex_count()) return;
    extend(0);
  }

private:
  bool extend(int depth) {
    std::uint64_t* cand = cand_.data() + static_cast<std::size_t>(depth) * words_;
    const auto& back = h_.back_neighbors()[static_cast<std::size_t>(depth)];
    if (back.empty()) {
      for (std::size_t w = 0; w < words_; ++w) cand[w] = all_[w] & ~used_[w];
    } else {
      auto first = g_.row(image_[static_cast<std::size_t>(back[0])]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] = first[w] & ~used_[w];
      for (std::size_t b = 1; b < back.size(); ++b) {
        auto r = g_.row(image_[static_cast<std::size_t>(back[b])]);
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
      }
    }

    if constexpr (Leaf::kCountsLeaves) {
      if (depth == k_ - 1) {
        std::uint64_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::uint64_t>(std::popcount(cand[w]));
        leaf_.add(c);
        return true;
      }
    }

    int need = min_degree_[static_cast<std::size_t>(depth)];
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t word = cand[w]; word != 0; word &= word - 1) {
        auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        if (g_.degree(v) < need) continue;
        image_[static_cast<std::size_t>(depth)] = v;
        if constexpr (!Leaf::kCountsLeaves) {
          if (depth == k_ - 1) {
            if (!leaf_.visit(image_)) return false;
            continue;
          }
        }
        used_[w] |= std::uint64_t{1} << (v & 63U);
        bool more = extend(depth + 1);
        used_[w] &= ~(std::uint64_t{1} << (v & 63U));
        if (!more) return false;
      }
    }
    return true;
  }

  const HostGraph& g_;
  const PreparedPattern& h_;
  Leaf& leaf_;
  std::size_t words_;
  int k_;
  std::vector<std::uint64_t> cand_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> all_;
  std::vector<Vertex> image_;  // indexed by order position
  std::vector<int> min_degree_;
};

constexpr std::uint64_t kFlushAt = std::uint64_t{1} << 62;

struct BigLeaf {
  static constexpr bool kCountsLeaves = true;
  BigInt total = 0;
  std::uint64_t pending = 0;
  void add(std::uint64_t c) {
    pending += c;
    if (pending >= kFlushAt) flush();
  }
  void flush() {
    total += pending;
    pending = 0;
  }
};

struct ModLeaf {
  static constexpr bool kCountsLeaves = true;
  std::uint64_t modulus;
  std::uint64_t pending = 0;
  void add(std::uint64_t c) {
    pending += c;
    if (pending >= kFlushAt) pending %= modulus;
  }
};

struct VisitLeaf {
  static constexpr bool kCountsLeaves = false;
  const PreparedPattern& h;
  const std::function<bool(std::span<const Vertex>)>& callback;
  std::vector<Vertex> by_vertex;
  bool visit(const std::vector<Vertex>& by_position) {
    for (std::size_t i = 0; i < by_position.size(); ++i) by_vertex[static_cast<std::size_t>(h.order()[i])] = by_position[i];
    return callback(by_vertex);
  }
};

}  // namespace

PreparedPattern::PreparedPattern(PatternGraph h) : h_(std::move(h)) {
  aut_ = automorphism_count(h_);
  build_order();
}

PreparedPattern::PreparedPattern(PatternGraph h, std::uint64_t automorphisms) : h_(std::move(h)), aut_(automorphisms) {
  if (h_.vertex_count() > kPatternCap) throw Error(ErrorCode::SizeCapExceeded, "pattern exceeds size cap");
  build_order();
}

void PreparedPattern::build_order() {
  int k = h_.vertex_count();
  std::uint32_t placed = 0;
  std::vector<int> position(static_cast<std::size_t>(k), -1);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    int best_back = -1;
    int best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if ((placed >> v) & 1U) continue;
      int back = std::popcount(h_.row(v) & placed);
      int deg = h_.degree(v);
      if (back > best_back || (back == best_back && deg > best_deg)) {
        best = v;
        best_back = back;
        best_deg = deg;
      }
    }
    placed |= 1U << best;
    position[static_cast<std::size_t>(best)] = step;
    order_.push_back(best);
  }
  back_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int v = order_[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j)
      if (h_.has_edge(v, order_[static_cast<std::size_t>(j)])) back_[static_cast<std::size_t>(i)].push_back(j);
  }
}

BigInt count_embeddings(const HostGraph& g, const PreparedPattern& h) {
  check_sizes(g, h.pattern());
  BigLeaf leaf;
  Matcher<BigLeaf>(g, h, leaf).run();
  leaf.flush();
  return leaf.total;
}

BigInt count_embeddings(const HostGraph& g, const PatternGraph& h) {
  check_sizes(g, h);
  return count_embeddings(g, PreparedPattern(h));
}

CopyCount count_copies(const HostGraph& g, const PreparedPattern& h) {
  CopyCount out;
  out.embeddings = count_embeddings(g, h);
  BigInt aut = h.automorphisms();
  if (out.embeddings % aut != 0) {
    throw Error(ErrorCode::InvalidArgument, "embedding count not divisible by |Aut(H)|");
  }
  out.copies = out.embeddings / aut;
  return out;
}

CopyCount count_copies(const HostGraph& g, const PatternGraph& h) {
  check_sizes(g, h);
  return count_copies(g, PreparedPattern(h));
}

std::uint32_t count_copies_mod(const HostGraph& g, const PreparedPattern& h, std::uint32_t q) {
  if (q < 2 || q > (1U << 16)) throw Error(ErrorCode::InvalidArgument, "q must lie in [2, 65536]");
  check_sizes(g, h.pattern());
  ModLeaf leaf{std::uint64_t{q} * h.automorphisms()};
  Matcher<ModLeaf>(g, h, leaf).run();
  std::uint64_t residue = leaf.pending % leaf.modulus;
  // The true embedding count is a multiple of |Aut|, and so is the modulus.
  return static_cast<std::uint32_t>(residue / h.automorphisms());
}

std::uint32_t count_copies_mod(const HostGraph& g, const PatternGraph& h, std::uint32_t q) {
  check_sizes(g, h);
  return count_copies_mod(g, PreparedPattern(h), q);
}

std::vector<PreparedPattern> prepare_family(const GraphFamily& family) {
  std::vector<PreparedPattern> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) out.emplace_back(family[i], family.automorphisms(i));
  return out;
}

ModVector xi_vector(const HostGraph& g, std::span<const PreparedPattern> family, std::uint32_t q) {
  ModVector out{q, {}};
  out.values.reserve(family.size());
  for (const auto& h : family) out.values.push_back(count_copies_mod(g, h, q));
  return out;
}

ModVector xi_vector(const HostGraph& g, const GraphFamily& family, std::uint32_t q) {
  auto prepared = prepare_family(family);
  return xi_vector(g, prepared, q);
}

void for_each_embedding(const HostGraph& g, const PreparedPattern& h,
                        const std::function<bool(std::span<const Vertex>)>& visit) {
  check_sizes(g, h.pattern());
  VisitLeaf leaf{h, visit, std::vector<Vertex>(static_cast<std::size_t>(h.pattern().vertex_count()))};
  Matcher<VisitLeaf>(g, h, leaf).run();
}

}  // namespace modcount
