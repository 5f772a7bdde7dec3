#include "modcount/charsum.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>

#include "modcount/error.hpp"
#include "modcount/packing.hpp"
#include "modcount/parallel.hpp"

namespace modcount {

// ------------------------------------------------------------- polynomial

namespace {

void check_shape(std::uint32_t q, int m) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
  if (m < 0 || m > kMaxVariables) {
    throw Error(ErrorCode::BudgetExceeded, "polynomial has " + std::to_string(m) + " variables; limit is " +
                                               std::to_string(kMaxVariables));
  }
}

std::uint64_t variable_mask(int m) { return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

}  // namespace

CharPolynomial CharPolynomial::from_terms(std::uint32_t q, int m, std::vector<Term> terms) {
  check_shape(q, m);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0 || terms[i].coefficient >= q) {
      throw Error(ErrorCode::InvalidArgument, "coefficient outside [1, q)");
    }
    if (terms[i].monomial & ~variable_mask(m)) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    if (i > 0 && terms[i].monomial == terms[i - 1].monomial) {
      throw Error(ErrorCode::InvalidArgument, "duplicate monomial");
    }
  }
  CharPolynomial out;
  out.q_ = q;
  out.m_ = m;
  out.terms_ = std::move(terms);
  return out;
}

CharPolynomial CharPolynomial::merged(std::uint32_t q, int m, std::span<const Term> raw) {
  check_shape(q, m);
  std::vector<Term> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> terms;
  for (std::size_t i = 0; i < sorted.size();) {
    std::uint64_t coef = 0;
    std::size_t j = i;
    for (; j < sorted.size() && sorted[j].monomial == sorted[i].monomial; ++j) coef = (coef + sorted[j].coefficient) % q;
    if (coef != 0) terms.push_back({static_cast<std::uint32_t>(coef), sorted[i].monomial});
    i = j;
  }
  return from_terms(q, m, std::move(terms));
}

int CharPolynomial::degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, std::popcount(t.monomial));
  return d;
}

std::uint32_t CharPolynomial::coefficient(std::uint64_t monomial) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const Term& t, std::uint64_t mono) { return t.monomial < mono; });
  return it != terms_.end() && it->monomial == monomial ? it->coefficient : 0;
}

std::uint32_t CharPolynomial::evaluate(std::uint64_t assignment) const noexcept {
  std::uint64_t sum = 0;
  for (const auto& t : terms_)
    if ((t.monomial & assignment) == t.monomial) sum += t.coefficient;
  return static_cast<std::uint32_t>(sum % q_);
}

CharPolynomial build_polynomial(const HostGraph& gprime, const GraphFamily& family, std::span<const std::uint32_t> c,
                                std::uint32_t q) {
  if (c.size() != family.size()) throw Error(ErrorCode::InvalidArgument, "c must have one entry per family member");
  if (std::all_of(c.begin(), c.end(), [&](std::uint32_t ci) { return ci % q == 0; })) {
    throw Error(ErrorCode::InvalidArgument, "c must be nonzero in Z_q^k");
  }
  auto edges = gprime.edges();
  if (edges.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw Error(ErrorCode::BudgetExceeded, "host has " + std::to_string(edges.size()) + " edges; limit is " +
                                               std::to_string(kMaxVariables) + " variables");
  }
  auto variable_of = [&](const Edge& e) {
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };

  std::vector<Term> raw;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::uint32_t ci = c[i] % q;
    if (ci == 0) continue;
    auto copies = enumerate_copies(gprime, PreparedPattern(family[i], family.automorphisms(i)));
    if (copies.truncated) throw Error(ErrorCode::BudgetExceeded, "copy enumeration hit its cap");
    for (const auto& copy : copies.copies) {
      std::uint64_t mono = 0;
      for (const auto& e : copy.edges) mono |= std::uint64_t{1} << variable_of(e);
      raw.push_back({ci, mono});
    }
  }
  return CharPolynomial::merged(q, static_cast<int>(edges.size()), raw);
}

CharPolynomial disjoint_block_polynomial(int r, int d, std::uint32_t q, std::uint32_t coefficient) {
  if (r < 0 || d < 1) throw Error(ErrorCode::InvalidArgument, "need r >= 0 and d >= 1");
  if (r * d > kMaxVariables) throw Error(ErrorCode::BudgetExceeded, "r*d exceeds the variable limit");
  std::vector<Term> terms;
  for (int j = 0; j < r; ++j) {
    std::uint64_t block = ((d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1)) << (j * d);
    terms.push_back({coefficient % q, block});
  }
  return CharPolynomial::from_terms(q, r * d, std::move(terms));
}

DisjointSystem greedy_disjoint_system(const CharPolynomial& poly) {
  DisjointSystem out{{}, poly.degree()};
  std::uint64_t covered = 0;
  for (const auto& t : poly.terms()) {
    if (std::popcount(t.monomial) != out.d || (t.monomial & covered) != 0) continue;
    covered |= t.monomial;
    out.blocks.push_back(t.monomial);
  }
  return out;
}

LemmaCheck verify_lemma_conditions(const CharPolynomial& poly, const DisjointSystem& system) {
  for (auto block : system.blocks) {
    if (poly.coefficient(block) == 0) {
      throw Error(ErrorCode::InvalidArgument, "block is not a monomial of the polynomial");
    }
  }
  LemmaCheck check;
  int d = poly.degree();

  check.block_sizes = system.d == d;
  if (!check.block_sizes) check.diagnostics.push_back("system d differs from polynomial degree " + std::to_string(d));
  for (std::size_t j = 0; j < system.blocks.size(); ++j) {
    if (std::popcount(system.blocks[j]) != d) {
      check.block_sizes = false;
      check.diagnostics.push_back("block " + std::to_string(j) + " has size " +
                                  std::to_string(std::popcount(system.blocks[j])) + " != d");
    }
  }

  check.coefficients = true;
  for (std::size_t j = 0; j < system.blocks.size(); ++j) {
    if (poly.coefficient(system.blocks[j]) % poly.q() == 0) {
      check.coefficients = false;
      check.diagnostics.push_back("block " + std::to_string(j) + " has zero coefficient");
    }
  }

  check.disjoint = true;
  std::uint64_t united = 0;
  for (std::size_t j = 0; j < system.blocks.size(); ++j) {
    for (std::size_t l = j + 1; l < system.blocks.size(); ++l) {
      if (system.blocks[j] & system.blocks[l]) {
        check.disjoint = false;
        check.diagnostics.push_back("blocks " + std::to_string(j) + " and " + std::to_string(l) + " intersect");
      }
    }
    united |= system.blocks[j];
  }

  check.outside_small = true;
  for (const auto& t : poly.terms()) {
    if (std::find(system.blocks.begin(), system.blocks.end(), t.monomial) != system.blocks.end()) continue;
    if (std::popcount(t.monomial & united) >= d) {
      check.outside_small = false;
      check.diagnostics.push_back("monomial meets the blocks in " + std::to_string(std::popcount(t.monomial & united)) +
                                  " >= d variables");
    }
  }
  return check;
}

// ---------------------------------------------------------- exact sums

namespace {

struct Component {
  std::vector<int> variables;          // global indices
  std::vector<Term> terms;             // monomials remapped to local bits
};

std::vector<Component> split_components(const CharPolynomial& poly, bool factorize) {
  int m = poly.variable_count();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<bool> touched(static_cast<std::size_t>(m), false);
  for (const auto& t : poly.terms()) {
    int first = -1;
    for (std::uint64_t rest = t.monomial; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      touched[static_cast<std::size_t>(v)] = true;
      if (first < 0) first = v;
      else parent[static_cast<std::size_t>(find(v))] = find(first);
    }
  }

  std::vector<Component> out;
  if (!factorize) {
    Component all;
    for (int v = 0; v < m; ++v) all.variables.push_back(v);
    all.terms = poly.terms();
    out.push_back(std::move(all));
    return out;
  }
  // Untouched variables contribute a factor of exactly 1 and are skipped.
  std::vector<int> slot(static_cast<std::size_t>(m), -1);
  std::vector<int> local(static_cast<std::size_t>(m), -1);
  for (int v = 0; v < m; ++v) {
    if (!touched[static_cast<std::size_t>(v)]) continue;
    int root = find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    auto& comp = out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])];
    local[static_cast<std::size_t>(v)] = static_cast<int>(comp.variables.size());
    comp.variables.push_back(v);
  }
  for (const auto& t : poly.terms()) {
    int root = find(std::countr_zero(t.monomial));
    auto& comp = out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])];
    std::uint64_t mono = 0;
    for (std::uint64_t rest = t.monomial; rest != 0; rest &= rest - 1) {
      mono |= std::uint64_t{1} << local[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    comp.terms.push_back({t.coefficient, mono});
  }
  return out;
}

struct Kahan {
  double sum = 0;
  double carry = 0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Probability mass of each residue of Q over the component's assignments.
std::vector<double> residue_weights(const Component& comp, std::uint32_t q, double p, unsigned threads) {
  int size = static_cast<int>(comp.variables.size());
  std::vector<double> power(static_cast<std::size_t>(size) + 1);
  for (int j = 0; j <= size; ++j) power[static_cast<std::size_t>(j)] = std::pow(p, j) * std::pow(1 - p, size - j);

  const std::uint64_t total = std::uint64_t{1} << size;
  const std::size_t chunks = std::min<std::uint64_t>(64, total);
  const std::uint64_t per_chunk = (total + chunks - 1) / chunks;
  std::vector<std::vector<Kahan>> partial(chunks, std::vector<Kahan>(q));

  parallel_for(chunks, threads, [&](std::size_t chunk) {
    auto& acc = partial[chunk];
    std::uint64_t lo = chunk * per_chunk;
    std::uint64_t hi = std::min(total, lo + per_chunk);
    for (std::uint64_t z = lo; z < hi; ++z) {
      std::uint64_t value = 0;
      for (const auto& t : comp.terms)
        if ((t.monomial & z) == t.monomial) value += t.coefficient;
      acc[value % q].add(power[static_cast<std::size_t>(std::popcount(z))]);
    }
  });

  // Pairwise reduction in fixed chunk order.
  std::vector<std::vector<double>> level(chunks, std::vector<double>(q));
  for (std::size_t c = 0; c < chunks; ++c)
    for (std::uint32_t r = 0; r < q; ++r) level[c][r] = partial[c][r].sum;
  while (level.size() > 1) {
    std::vector<std::vector<double>> next;
    for (std::size_t i = 0; i < level.size(); i += 2) {
      if (i + 1 == level.size()) {
        next.push_back(level[i]);
        continue;
      }
      std::vector<double> merged(q);
      for (std::uint32_t r = 0; r < q; ++r) merged[r] = level[i][r] + level[i + 1][r];
      next.push_back(std::move(merged));
    }
    level = std::move(next);
  }
  return level.front();
}

std::vector<std::complex<double>> roots_of_unity(std::uint32_t q) {
  std::vector<std::complex<double>> w(q);
  for (std::uint32_t r = 0; r < q; ++r) w[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / q);
  return w;
}

}  // namespace

CharSumResult exact_char_sum(const CharPolynomial& poly, double p, const CharSumOptions& options) {
  if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
  auto components = split_components(poly, options.factorize);
  for (const auto& comp : components) {
    if (static_cast<int>(comp.variables.size()) > kComponentVariableBudget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "a block of " + std::to_string(comp.variables.size()) + " interacting variables exceeds 2^" +
                      std::to_string(kComponentVariableBudget) + " assignments");
    }
  }
  auto omega = roots_of_unity(poly.q());
  CharSumResult out;
  out.value = 1.0;
  out.components = components.size();
  for (const auto& comp : components) {
    auto weights = residue_weights(comp, poly.q(), p, std::max(1U, options.threads));
    std::complex<double> sum = 0;
    for (std::uint32_t r = 0; r < poly.q(); ++r) sum += weights[r] * omega[r];
    out.value *= sum;
    auto size = static_cast<int>(comp.variables.size());
    out.largest_component = std::max(out.largest_component, size);
    out.error_bound += std::ldexp(DBL_EPSILON, size);
  }
  out.modulus = std::abs(out.value);
  return out;
}

// ------------------------------------------------------------ XOR lemma

std::vector<std::complex<double>> fourier_coefficients(std::span<const double> probabilities, std::uint32_t q,
                                                       std::size_t k) {
  CellIndexer cells(q, k);
  if (probabilities.size() != cells.cells()) throw Error(ErrorCode::InvalidArgument, "wrong number of cells");
  auto omega = roots_of_unity(q);
  std::vector<std::complex<double>> data(probabilities.begin(), probabilities.end());
  std::vector<std::complex<double>> line(q);
  // Separable transform: one length-q DFT along each coordinate.
  std::size_t stride = 1;
  for (std::size_t dim = 0; dim < k; ++dim) {
    std::size_t block = stride * q;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        for (std::uint32_t c = 0; c < q; ++c) {
          std::complex<double> acc = 0;
          for (std::uint32_t a = 0; a < q; ++a) {
            acc += data[base + offset + a * stride] * omega[(static_cast<std::uint64_t>(c) * a) % q];
          }
          line[c] = acc;
        }
        for (std::uint32_t c = 0; c < q; ++c) data[base + offset + c * stride] = line[c];
      }
    }
    stride = block;
  }
  return data;
}

XorBound xor_tv_bound(std::span<const double> probabilities, std::uint32_t q, std::size_t k) {
  auto coeffs = fourier_coefficients(probabilities, q, k);
  XorBound out;
  for (std::size_t c = 1; c < coeffs.size(); ++c) out.epsilon = std::max(out.epsilon, std::abs(coeffs[c]));
  out.bound = static_cast<double>(coeffs.size()) * out.epsilon;
  out.actual_tv = tv_to_uniform(probabilities);
  out.holds = out.actual_tv <= out.bound + 1e-12;
  return out;
}

XorBound xor_tv_bound(const ExactDist& dist) { return xor_tv_bound(dist.probabilities, dist.q, dist.k); }

XorBound xor_tv_bound(const EmpiricalDist& dist) {
  auto probs = dist.probabilities();
  return xor_tv_bound(probs, dist.q, dist.k);
}

}  // namespace modcount
