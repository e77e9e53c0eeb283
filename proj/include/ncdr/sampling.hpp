#pragma once

#include <random>

#include "ncdr/algebra.hpp"

namespace ncdr {

/// Seeded generator of small rational and float test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Scalar rational(int max_num = 9, int max_den = 6);
  Element element(const AlgebraPtr& alg);
  /// Element with |norm_sq| >= 1/4.
  Element invertible(const AlgebraPtr& alg);
  double uniform(double lo, double hi);
  int integer(int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ncdr
