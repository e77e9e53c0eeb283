#pragma once

#include <cstdint>
#include <vector>

#include "ncdr/gateaux.hpp"
#include "ncdr/ncpoly.hpp"

namespace ncdr {

struct TaylorSolution {
  Element x0;
  Element y0;
  /// diagonals[k-1] = d^k y(x0)(h; ...; h), in the symbol h.
  std::vector<WordPoly> diagonals;
  bool terminated = false;
  /// y0 + sum (1/k!) diagonals[k-1] with h = x - x0, in the symbol x.
  WordPoly solution;
};

/// Solves dy(x)(h) = rhs(x, h) by successive symbolic differentiation.
/// rhs may use only x and h, with exactly one h per word (InvalidConfig otherwise).
/// Throws NoSolution when a higher derivative is not symmetric in its directions,
/// OrderExceeded when derivatives do not vanish up to max_order.
TaylorSolution solve_ode_taylor(const WordPoly& rhs, const Element& x0, const Element& y0, std::size_t max_order = 16);

struct ExpResult {
  FElement value;
  std::size_t terms = 0;
  /// |x|^{N+1} e^{|x|} / (N+1)! for the last included power N.
  double tail_bound = 0;
};

/// Partial sums of x^n/n! until both the last term and the tail bound drop below tol.
ExpResult exp_series(const FElement& x, double tol = 1e-15);
FElement exp(const FElement& x, double tol = 1e-15);

/// |exp(a + b) - exp(a) exp(b)|.
double exp_additivity_gap(const FElement& a, const FElement& b, double tol = 1e-15);

/// Arrangement of y (0) and h_1..h_n (1..n): indices grow toward y on both sides.
struct ExpPermutation {
  std::vector<int> seq;

  std::size_t y_position() const;
  /// Re-checks both ordering conditions directly.
  bool satisfies_conditions() const;
  friend bool operator==(const ExpPermutation&, const ExpPermutation&) = default;
  friend auto operator<=>(const ExpPermutation&, const ExpPermutation&) = default;
};

/// All 2^n arrangements, built by attaching h_k immediately left or right of y. Throws RangeError unless 1 <= n <= 12.
std::vector<ExpPermutation> exp_permutations(std::size_t n);
/// (1/2^n) sum over exp_permutations(n) as words in y, h1..hn.
WordPoly exp_derivative_word(const AlgebraPtr& alg, std::size_t n);
std::string to_string(const ExpPermutation& p);

/// Max over samples of |df(v)(v) - k f(v)| / |f(v)| at random points v with |v| >= 1/2.
double euler_check(const MapEvaluator& f, int k, std::size_t samples, std::uint64_t seed = 0,
                   const DiffConfig& cfg = {});

/// |d exp(y)(h) - (exp(y) h + h exp(y)) / 2|; nonzero in general when y and h do not commute.
double exp_ode_residual(const FElement& y, const FElement& h, const DiffConfig& cfg = {});

}  // namespace ncdr
