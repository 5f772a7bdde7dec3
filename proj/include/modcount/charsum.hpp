#ifndef MODCOUNT_CHARSUM_HPP
#define MODCOUNT_CHARSUM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modcount/distribution.hpp"
#include "modcount/graph.hpp"
#include "modcount/isomorphism.hpp"

namespace modcount {

/// Variables are stored as bits of a 64-bit monomial mask.
inline constexpr int kMaxVariables = 64;
/// Exhaustive evaluation handles at most 2^24 assignments per independent
/// block of variables.
inline constexpr int kComponentVariableBudget = 24;

struct Term {
  std::uint32_t coefficient = 0;  // in [1, q)
  std::uint64_t monomial = 0;     // set of variable indices

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over Z_q in 0/1 variables z_0..z_{m-1}; multilinear because
/// z^2 = z on {0,1}.
class CharPolynomial {
public:
  /// Strict: coefficients in [1,q), distinct monomials, variables < m.
  static CharPolynomial from_terms(std::uint32_t q, int m, std::vector<Term> terms);

  /// Lenient: coefficients reduced mod q and summed over equal monomials,
  /// zero terms dropped.
  static CharPolynomial merged(std::uint32_t q, int m, std::span<const Term> raw);

  std::uint32_t q() const noexcept { return q_; }
  int variable_count() const noexcept { return m_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Largest monomial size (0 for the zero polynomial).
  int degree() const noexcept;

  /// Coefficient of a monomial, 0 when absent.
  std::uint32_t coefficient(std::uint64_t monomial) const noexcept;

  /// Q(z) mod q for an assignment given as a bitmask.
  std::uint32_t evaluate(std::uint64_t assignment) const noexcept;

private:
  std::uint32_t q_ = 2;
  int m_ = 0;
  std::vector<Term> terms_;  // sorted by monomial
};

struct DisjointSystem {
  std::vector<std::uint64_t> blocks;
  int d = 0;
};

/// Sum over family members with c_i != 0 of c_i times one monomial per copy,
/// in variables indexed by the edges of gprime in lexicographic order.
CharPolynomial build_polynomial(const HostGraph& gprime, const GraphFamily& family,
                                std::span<const std::uint32_t> c, std::uint32_t q);

/// r blocks of d consecutive variables, each with the given coefficient.
CharPolynomial disjoint_block_polynomial(int r, int d, std::uint32_t q, std::uint32_t coefficient = 1);

/// Top-degree monomials kept greedily while pairwise disjoint.
DisjointSystem greedy_disjoint_system(const CharPolynomial& poly);

struct LemmaCheck {
  bool block_sizes = false;     // every block has size d = deg Q
  bool coefficients = false;    // every block has a nonzero coefficient
  bool disjoint = false;        // blocks pairwise disjoint
  bool outside_small = false;   // other monomials meet the union in < d variables
  std::vector<std::string> diagnostics;

  bool holds() const noexcept { return block_sizes && coefficients && disjoint && outside_small; }
};

/// Throws InvalidArgument if a block is not a monomial of the polynomial.
LemmaCheck verify_lemma_conditions(const CharPolynomial& poly, const DisjointSystem& system);

struct CharSumOptions {
  /// Split variables into blocks that share no monomial and multiply the
  /// block sums. Off means one flat pass (requires m <= 24).
  bool factorize = true;
  unsigned threads = 1;
};

struct CharSumResult {
  std::complex<double> value;
  double modulus = 0;
  double error_bound = 0;           // sum over blocks of 2^size * DBL_EPSILON
  std::size_t components = 0;
  int largest_component = 0;
};

/// E[omega^Q(z)] with z_i ~ Bernoulli(p) independent and omega = exp(2 pi i/q),
/// summed exactly over all assignments.
CharSumResult exact_char_sum(const CharPolynomial& poly, double p, const CharSumOptions& options = {});

struct XorBound {
  double epsilon = 0;    // max over nonzero c of |E omega^(c . xi)|
  double bound = 0;      // q^k * epsilon
  double actual_tv = 0;  // distance to uniform
  bool holds = false;    // actual_tv <= bound (up to 1e-12)
};

XorBound xor_tv_bound(std::span<const double> probabilities, std::uint32_t q, std::size_t k);
XorBound xor_tv_bound(const ExactDist& dist);
XorBound xor_tv_bound(const EmpiricalDist& dist);

/// All Fourier coefficients E omega^(c . xi), indexed like the cells.
std::vector<std::complex<double>> fourier_coefficients(std::span<const double> probabilities, std::uint32_t q,
                                                       std::size_t k);

}  // namespace modcount

#endif
