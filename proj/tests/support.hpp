#pragma once

#include <random>

#include "ncdr/algebra.hpp"

namespace ncdr::testing {

/// Small rationals p/q with |p| <= 9, q in 1..6.
inline Scalar random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 6) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

inline Element random_element(std::mt19937_64& rng, const AlgebraPtr& alg) {
  std::vector<Scalar> c(alg->dim());
  for (auto& v : c) v = random_rational(rng);
  return Element(alg, std::move(c));
}

/// Random element with norm_sq >= 1/4, safe to invert in float code paths.
inline Element random_invertible(std::mt19937_64& rng, const AlgebraPtr& alg) {
  for (;;) {
    auto x = random_element(rng, alg);
    const Scalar n = norm_sq(x);
    if (n >= Scalar(1, 4) || n <= Scalar(-1, 4)) return x;
  }
}

inline FElement random_felement(std::mt19937_64& rng, const AlgebraPtr& alg, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> c(alg->dim());
  for (auto& v : c) v = u(rng);
  return FElement(alg, std::move(c));
}

inline Element q(const AlgebraPtr& alg, std::initializer_list<Scalar> c) { return Element(alg, std::vector<Scalar>(c)); }

}  // namespace ncdr::testing
