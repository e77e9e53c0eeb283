#include "ncdr/gateaux.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace ncdr {

MapEvaluator MapEvaluator::unary(AlgebraPtr alg, std::function<FElement(const FElement&)> f) {
  MapEvaluator m;
  m.alg = std::move(alg);
  m.eval = [f = std::move(f)](const FTuple& x) { return FTuple{f(x.at(0))}; };
  return m;
}

FTuple MapEvaluator::operator()(const FTuple& x) const {
  if (x.size() != in_arity) throw Error(ErrorCode::DimensionMismatch, "argument count differs from map arity");
  FTuple out = eval(x);
  if (out.size() != out_arity) throw Error(ErrorCode::DimensionMismatch, "map returned wrong number of outputs");
  return out;
}

FElement MapEvaluator::operator()(const FElement& x) const { return (*this)(FTuple{x}).at(0); }

void DiffConfig::validate() const {
  if (!(t0 > 0) || !std::isfinite(t0)) throw Error(ErrorCode::InvalidConfig, "base step must be positive");
  if (levels < 2) throw Error(ErrorCode::InvalidConfig, "Richardson levels must be at least 2");
  if (!(ratio > 1)) throw Error(ErrorCode::InvalidConfig, "step ratio must exceed 1");
  if (!(rel_tol > 0)) throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
}

double tuple_norm(const FTuple& t) {
  double s = 0;
  for (const auto& e : t) {
    const double n = euclidean_norm(e);
    s += n * n;
  }
  return std::sqrt(s);
}

namespace {

FTuple axpy(const FTuple& x, double t, const FTuple& a) {
  FTuple out = x;
  for (std::size_t s = 0; s < out.size(); ++s) out[s] += t * a[s];
  return out;
}

FTuple sub_scaled(const FTuple& a, const FTuple& b, double scale) {
  FTuple out = a;
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = (a[s] - b[s]) * scale;
  return out;
}

FTuple zeros_like(const MapEvaluator& f, std::size_t n) { return FTuple(n, FElement::zero(f.alg)); }

FElement inverse_direction(const FElement& a) {
  if (norm_sq(a) == 0.0) throw Error(ErrorCode::ZeroDirection, "direction has zero norm");
  return inverse(a);
}

}  // namespace

DiffResult gateaux(const MapEvaluator& f, const FTuple& x, const FTuple& a, const DiffConfig& cfg) {
  cfg.validate();
  if (x.size() != f.in_arity || a.size() != f.in_arity)
    throw Error(ErrorCode::DimensionMismatch, "point or direction arity differs from map");
  const double an = tuple_norm(a);
  if (an == 0) return {zeros_like(f, f.out_arity), 0};

  const double t = cfg.t0 * std::max(tuple_norm(x), 1.0) / an;
  const auto L = static_cast<std::size_t>(cfg.levels);
  std::vector<std::vector<FTuple>> r(L);
  double magnitude = 0;
  for (std::size_t i = 0; i < L; ++i) {
    const double ti = t / std::pow(cfg.ratio, static_cast<double>(i));
    const FTuple plus = f(axpy(x, ti, a)), minus = f(axpy(x, -ti, a));
    magnitude = std::max({magnitude, tuple_norm(plus), tuple_norm(minus)});
    r[i].push_back(sub_scaled(plus, minus, 1.0 / (2 * ti)));
    for (std::size_t k = 1; k <= i; ++k) {
      const double denom = std::pow(cfg.ratio, 2.0 * static_cast<double>(k)) - 1;
      FTuple next = r[i][k - 1];
      for (std::size_t s = 0; s < next.size(); ++s) next[s] += (r[i][k - 1][s] - r[i - 1][k - 1][s]) * (1 / denom);
      r[i].push_back(std::move(next));
    }
  }
  DiffResult out;
  out.value = r[L - 1][L - 1];
  out.error_estimate = tuple_norm(sub_scaled(out.value, r[L - 2][L - 2], 1.0));
  const double scale = std::max(tuple_norm(out.value), magnitude);
  if (out.error_estimate > cfg.rel_tol * scale)
    throw Error(ErrorCode::NonConvergent, "Richardson estimate " + std::to_string(out.error_estimate) +
                                              " exceeds tolerance at scale " + std::to_string(scale));
  return out;
}

FElement gateaux(const MapEvaluator& f, const FElement& x, const FElement& a, const DiffConfig& cfg) {
  return gateaux(f, FTuple{x}, FTuple{a}, cfg).value.at(0);
}

FElement dstar(const MapEvaluator& f, const FElement& x, const FElement& a, const DiffConfig& cfg) {
  const FElement inv = inverse_direction(a);
  return inv * gateaux(f, x, a, cfg);
}

FElement star_d(const MapEvaluator& f, const FElement& x, const FElement& a, const DiffConfig& cfg) {
  const FElement inv = inverse_direction(a);
  return gateaux(f, x, a, cfg) * inv;
}

DiffResult partial_gateaux(const MapEvaluator& f, const FTuple& x, std::size_t i, const FElement& h,
                           const DiffConfig& cfg) {
  if (i >= f.in_arity) throw Error(ErrorCode::IndexOutOfRange, "slot " + std::to_string(i) + " out of range");
  FTuple a = zeros_like(f, f.in_arity);
  a[i] = h;
  return gateaux(f, x, a, cfg);
}

SecondResult second_gateaux(const MapEvaluator& f, const FTuple& x, const FTuple& a1, const FTuple& a2,
                            const DiffConfig& cfg) {
  DiffConfig loose = cfg;
  loose.rel_tol = std::max(cfg.rel_tol, 1e-6);
  auto nested = [&](const FTuple& first, const FTuple& second) {
    MapEvaluator inner = f;
    inner.eval = [&f, first, loose](const FTuple& y) { return gateaux(f, y, first, loose).value; };
    return gateaux(inner, x, second, loose);
  };
  const DiffResult ab = nested(a1, a2);
  const DiffResult ba = nested(a2, a1);
  return {ab.value, ab.error_estimate, tuple_norm(sub_scaled(ab.value, ba.value, 1.0))};
}

SecondResult second_gateaux(const MapEvaluator& f, const FElement& x, const FElement& a1, const FElement& a2,
                            const DiffConfig& cfg) {
  return second_gateaux(f, FTuple{x}, FTuple{a1}, FTuple{a2}, cfg);
}

Matrix<double> jacobian(const MapEvaluator& f, const FTuple& x, const DiffConfig& cfg) {
  const std::size_t n = f.alg->dim();
  Matrix<double> jac(f.out_arity * n, f.in_arity * n);
  for (std::size_t r = 0; r < f.in_arity; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      FTuple a = zeros_like(f, f.in_arity);
      a[r] = FElement::basis(f.alg, i);
      const auto col = gateaux(f, x, a, cfg).value;
      for (std::size_t s = 0; s < f.out_arity; ++s)
        for (std::size_t j = 0; j < n; ++j) jac(s * n + j, r * n + i) = col[s][j];
    }
  return jac;
}

Matrix<double> jacobian(const MapEvaluator& f, const FElement& x, const DiffConfig& cfg) {
  return jacobian(f, FTuple{x}, cfg);
}

DiffStdResult differential_std_components(const MapEvaluator& f, const FElement& x, const DiffConfig& cfg,
                                          const SnapConfig& snap) {
  if (f.in_arity != 1 || f.out_arity != 1)
    throw Error(ErrorCode::DimensionMismatch, "standard components need a unary map");
  const std::size_t n = f.alg->dim();
  const Matrix<double> jac = jacobian(f, x, cfg);

  QMatrix exact(n, n);
  bool all_snapped = true;
  for (std::size_t j = 0; j < n && all_snapped; ++j)
    for (std::size_t i = 0; i < n && all_snapped; ++i) {
      const auto v = snap_rational(jac(j, i), snap.max_den, snap.snap_tol);
      if (v)
        exact(j, i) = *v;
      else
        all_snapped = false;
    }
  if (all_snapped) {
    const auto sol = coord_to_std({f.alg, exact});
    return {sol.comps, sol.unique, true, 0.0};
  }

  // Float least squares on the n^2 x n^2 system.
  const auto bc = big_c(f.alg);
  const std::size_t nn = n * n;
  Eigen::MatrixXd a(nn, nn);
  Eigen::VectorXd b(nn);
  for (std::size_t r = 0; r < nn; ++r) {
    for (std::size_t c = 0; c < nn; ++c) a(r, c) = bc.mat(r, c).get_d();
    b(r) = jac(r / n, r % n);
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  const Eigen::VectorXd sol = cod.solve(b);
  const double residual = (a * sol - b).norm() / std::max(1.0, b.norm());
  if (residual > snap.residual_tol)
    throw Error(ErrorCode::NotRepresentable, "least-squares residual " + std::to_string(residual));
  DiffStdResult out{StdComponents::zero(f.alg), cod.rank() == static_cast<Eigen::Index>(nn), false, residual};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) out.comps.comps(k, r) = from_double(sol(k * n + r));
  return out;
}

double verify_product_rule(const MapEvaluator& f, const MapEvaluator& g, const FElement& x, const FElement& a,
                           const DiffConfig& cfg) {
  const MapEvaluator fg = MapEvaluator::unary(f.alg, [&](const FElement& y) { return f(y) * g(y); });
  const FElement lhs = gateaux(fg, x, a, cfg);
  const FElement rhs = gateaux(f, x, a, cfg) * g(x) + f(x) * gateaux(g, x, a, cfg);
  return euclidean_norm(lhs - rhs) / std::max(1.0, euclidean_norm(lhs));
}

double verify_chain_rule(const MapEvaluator& g, const MapEvaluator& f, const FElement& x, const FElement& a,
                         const DiffConfig& cfg) {
  const MapEvaluator gf = MapEvaluator::unary(f.alg, [&](const FElement& y) { return g(f(y)); });
  const FElement lhs = gateaux(gf, x, a, cfg);
  const FElement rhs = gateaux(g, f(x), gateaux(f, x, a, cfg), cfg);
  return euclidean_norm(lhs - rhs) / std::max(1.0, euclidean_norm(lhs));
}

NormResult differential_norm(const MapEvaluator& f, const FElement& x, const DiffConfig& cfg, std::size_t samples,
                             std::uint64_t seed) {
  const Matrix<double> jac = jacobian(f, x, cfg);
  Eigen::MatrixXd m(jac.rows(), jac.cols());
  for (std::size_t r = 0; r < jac.rows(); ++r)
    for (std::size_t c = 0; c < jac.cols(); ++c) m(r, c) = jac(r, c);
  NormResult out;
  out.sigma_max = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd u(m.cols());
  for (std::size_t s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = normal(rng);
    const double len = u.norm();
    if (len == 0) continue;
    out.sampled_sup = std::max(out.sampled_sup, (m * u).norm() / len);
  }
  return out;
}

}  // namespace ncdr
