#include "ncdr/sampling.hpp"

namespace ncdr {

Scalar Sampler::rational(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Scalar s(num(rng_), den(rng_));
  s.canonicalize();
  return s;
}

Element Sampler::element(const AlgebraPtr& alg) {
  std::vector<Scalar> c(alg->dim());
  for (auto& v : c) v = rational();
  return Element(alg, std::move(c));
}

Element Sampler::invertible(const AlgebraPtr& alg) {
  for (;;) {
    auto x = element(alg);
    const Scalar n = norm_sq(x);
    if (n >= Scalar(1, 4) || n <= Scalar(-1, 4)) return x;
  }
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

}  // namespace ncdr
