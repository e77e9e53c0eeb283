#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ncdr/algebra.hpp"
#include "ncdr/linmap.hpp"

namespace ncdr {

using FTuple = std::vector<FElement>;

/// Deterministic map from an m-tuple to a k-tuple of float elements of one algebra.
struct MapEvaluator {
  AlgebraPtr alg;
  std::size_t in_arity = 1;
  std::size_t out_arity = 1;
  std::function<FTuple(const FTuple&)> eval;

  static MapEvaluator unary(AlgebraPtr alg, std::function<FElement(const FElement&)> f);
  FTuple operator()(const FTuple& x) const;
  FElement operator()(const FElement& x) const;
};

struct DiffConfig {
  double t0 = 1e-2;
  int levels = 4;
  double ratio = 2.0;
  double rel_tol = 1e-8;

  /// Throws InvalidConfig.
  void validate() const;
};

struct DiffResult {
  FTuple value;
  /// Difference between the last two diagonal Richardson extrapolants.
  double error_estimate = 0;
};

/// Central differences with Richardson extrapolation. The step is scaled so t*|a| ~ t0*max(|x|, 1).
/// Throws NonConvergent when the error estimate exceeds rel_tol relative to the sampled magnitude.
DiffResult gateaux(const MapEvaluator& f, const FTuple& x, const FTuple& a, const DiffConfig& cfg = {});
FElement gateaux(const MapEvaluator& f, const FElement& x, const FElement& a, const DiffConfig& cfg = {});

/// a^{-1} df(x)(a). Throws ZeroDirection when norm_sq(a) = 0.
FElement dstar(const MapEvaluator& f, const FElement& x, const FElement& a, const DiffConfig& cfg = {});
/// df(x)(a) a^{-1}.
FElement star_d(const MapEvaluator& f, const FElement& x, const FElement& a, const DiffConfig& cfg = {});

/// Directional derivative perturbing slot i only. Throws IndexOutOfRange.
DiffResult partial_gateaux(const MapEvaluator& f, const FTuple& x, std::size_t i, const FElement& h,
                           const DiffConfig& cfg = {});

struct SecondResult {
  FTuple value;
  double error_estimate = 0;
  /// |d2f(x)(a1; a2) - d2f(x)(a2; a1)|.
  double swap_residual = 0;
};

/// Iterated central differences d(df(x)(a1))(a2). Tolerance is at least 1e-6.
SecondResult second_gateaux(const MapEvaluator& f, const FTuple& x, const FTuple& a1, const FTuple& a2,
                            const DiffConfig& cfg = {});
SecondResult second_gateaux(const MapEvaluator& f, const FElement& x, const FElement& a1, const FElement& a2,
                            const DiffConfig& cfg = {});

/// Real (k*n) x (m*n) matrix; entry (s*n + j, r*n + i) = d(out_s)^j / d(in_r)^i.
Matrix<double> jacobian(const MapEvaluator& f, const FTuple& x, const DiffConfig& cfg = {});
Matrix<double> jacobian(const MapEvaluator& f, const FElement& x, const DiffConfig& cfg = {});

struct DiffStdResult {
  StdComponents comps;
  bool unique = true;
  /// True when every Jacobian entry snapped to a rational with denominator <= 64.
  bool snapped = false;
  double residual = 0;
};

struct SnapConfig {
  std::int64_t max_den = 64;
  double snap_tol = 1e-7;
  double residual_tol = 1e-6;
};

/// Standard components of df(x) for a unary map. Throws NotRepresentable.
DiffStdResult differential_std_components(const MapEvaluator& f, const FElement& x, const DiffConfig& cfg = {},
                                          const SnapConfig& snap = {});

/// |d(fg)(x)(a) - df(x)(a) g(x) - f(x) dg(x)(a)| / max(1, |d(fg)(x)(a)|).
double verify_product_rule(const MapEvaluator& f, const MapEvaluator& g, const FElement& x, const FElement& a,
                           const DiffConfig& cfg = {});
/// |d(g o f)(x)(a) - dg(f(x))(df(x)(a))| / max(1, |d(g o f)(x)(a)|).
double verify_chain_rule(const MapEvaluator& g, const MapEvaluator& f, const FElement& x, const FElement& a,
                         const DiffConfig& cfg = {});

struct NormResult {
  double sigma_max = 0;
  /// Largest |J u| over random unit directions u.
  double sampled_sup = 0;
};

NormResult differential_norm(const MapEvaluator& f, const FElement& x, const DiffConfig& cfg = {},
                             std::size_t samples = 10000, std::uint64_t seed = 0);

double tuple_norm(const FTuple& t);

}  // namespace ncdr
