#include "ncdr/linmap.hpp"

#include <algorithm>
#include <numeric>

#include "ncdr/serialize.hpp"

namespace ncdr {

using nlohmann::json;

namespace {

void require_shape(const AlgebraPtr& alg, const QMatrix& m) {
  if (!alg) throw Error(ErrorCode::AlgebraMismatch, "linear map without algebra");
  if (m.rows() != alg->dim() || m.cols() != alg->dim())
    throw Error(ErrorCode::DimensionMismatch, "map matrix must be dim x dim");
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!same_algebra(a, b)) throw Error(ErrorCode::AlgebraMismatch, "maps over different algebras");
}

}  // namespace

StdComponents StdComponents::zero(const AlgebraPtr& alg) { return {alg, QMatrix(alg->dim(), alg->dim())}; }

StdComponents StdComponents::identity(const AlgebraPtr& alg) {
  auto f = zero(alg);
  f.comps(0, 0) = 1;
  return f;
}

BigCReport big_c(const AlgebraPtr& alg) {
  const std::size_t n = alg->dim();
  BigCReport report;
  report.mat = QMatrix(n * n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          Scalar s = 0;
          for (std::size_t p = 0; p < n; ++p) s += alg->constant(k, i, p) * alg->constant(p, r, j);
          report.mat(j * n + i, k * n + r) = s;
        }
  report.rank = rank(report.mat);
  report.det = determinant(report.mat);
  for (const auto& v : nullspace(report.mat)) {
    auto f = StdComponents::zero(alg);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) f.comps(k, r) = v[k * n + r];
    report.kernel.push_back(std::move(f));
  }
  return report;
}

CoordMatrix std_to_coord(const StdComponents& f) {
  require_shape(f.alg, f.comps);
  const auto& alg = *f.alg;
  const std::size_t n = alg.dim();
  QMatrix mat(n, n);
  // f^j_i = f^{kr} C[k][i][p] C[p][r][j]
  for (const auto& t1 : alg.terms()) {
    for (std::size_t r = 0; r < n; ++r) {
      const Scalar& fkr = f.comps(t1.k, r);
      if (fkr == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c2 = alg.constant(t1.p, r, j);
        if (c2 != 0) mat(j, t1.l) += fkr * t1.value * c2;
      }
    }
  }
  return {f.alg, std::move(mat)};
}

StdSolution coord_to_std(const CoordMatrix& m) {
  require_shape(m.alg, m.mat);
  const std::size_t n = m.alg->dim();
  const auto report = big_c(m.alg);
  QVector rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) rhs[j * n + i] = m.mat(j, i);
  const auto sol = solve_min_norm(report.mat, rhs);
  if (!sol)
    throw Error(ErrorCode::NotRepresentable,
                "coordinate matrix is not of the form x -> sum f^{ij} e_i x e_j over " + m.alg->name());
  StdSolution out{StdComponents::zero(m.alg), sol->unique};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) out.comps.comps(k, r) = sol->x[k * n + r];
  return out;
}

StdComponents component_sum_to_std(const ComponentSum& cs) {
  auto f = StdComponents::zero(cs.alg);
  const std::size_t n = cs.alg->dim();
  for (const auto& [u, v] : cs.terms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f.comps(i, j) += u[i] * v[j];
  return f;
}

Element eval_component_sum(const ComponentSum& cs, const Element& x) {
  auto out = Element::zero(cs.alg);
  for (const auto& [u, v] : cs.terms) out += u * x * v;
  return out;
}

Element eval_std(const StdComponents& f, const Element& x) {
  require_same(f.alg, x.alg());
  const std::size_t n = f.alg->dim();
  auto out = Element::zero(f.alg);
  for (std::size_t i = 0; i < n; ++i) {
    const Element left = Element::basis(f.alg, i) * x;
    for (std::size_t j = 0; j < n; ++j)
      if (f.comps(i, j) != 0) out += f.comps(i, j) * (left * Element::basis(f.alg, j));
  }
  return out;
}

Element eval_coord(const CoordMatrix& m, const Element& x) {
  require_same(m.alg, x.alg());
  return Element(m.alg, m.mat.apply(x.coords()));
}

StdComponents compose_std(const StdComponents& g, const StdComponents& f) {
  require_same(g.alg, f.alg);
  const auto& alg = *f.alg;
  auto h = StdComponents::zero(f.alg);
  // h^{pr} = g^{ij} f^{kl} C[i][k][p] C[l][j][r]
  for (const auto& left : alg.terms())      // (i, k) -> p
    for (const auto& right : alg.terms()) {  // (l, j) -> r
      const Scalar& gij = g.comps(left.k, right.l);
      if (gij == 0) continue;
      const Scalar& fkl = f.comps(left.l, right.k);
      if (fkl == 0) continue;
      h.comps(left.p, right.p) += gij * fkl * left.value * right.value;
    }
  return h;
}

KernelInfo kernel_rank(const CoordMatrix& m) {
  KernelInfo info;
  info.rank = rank(m.mat);
  info.is_singular = info.rank < m.mat.cols();
  if (info.is_singular) info.kernel_vector = nullspace(m.mat).front();
  return info;
}

CoordMatrix change_basis(const CoordMatrix& m, const QMatrix& a) {
  require_shape(m.alg, a);
  return {m.alg, inverse(a) * m.mat * a};
}

const Element& PolyCoords::at(const std::vector<std::size_t>& idx) const {
  if (idx.size() != degree) throw Error(ErrorCode::DimensionMismatch, "index count differs from degree");
  std::size_t flat = 0;
  for (auto i : idx) {
    if (i >= alg->dim()) throw Error(ErrorCode::IndexOutOfRange, "basis index");
    flat = flat * alg->dim() + i;
  }
  return coords[flat];
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::size_t n, std::size_t m) {
  std::vector<std::size_t> idx(m);
  for (std::size_t s = m; s-- > 0;) {
    idx[s] = flat % n;
    flat /= n;
  }
  return idx;
}

}  // namespace

PolyCoords polyform_coords(const PolylinearFn& f, const AlgebraPtr& alg, std::size_t m) {
  const std::size_t n = alg->dim();
  PolyCoords p{alg, m, {}};
  const std::size_t total = ipow(n, m);
  p.coords.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<Element> args;
    for (auto i : unflatten(flat, n, m)) args.push_back(Element::basis(alg, i));
    p.coords.push_back(f(args));
  }
  return p;
}

Element reconstruct(const PolyCoords& p, const std::vector<Element>& args) {
  if (args.size() != p.degree) throw Error(ErrorCode::DimensionMismatch, "argument count differs from degree");
  const std::size_t n = p.alg->dim();
  auto out = Element::zero(p.alg);
  for (std::size_t flat = 0; flat < p.coords.size(); ++flat) {
    const auto idx = unflatten(flat, n, p.degree);
    Scalar w = 1;
    for (std::size_t s = 0; s < p.degree && w != 0; ++s) w *= args[s][idx[s]];
    if (w != 0) out += w * p.coords[flat];
  }
  return out;
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Skew: return "skew";
    case Symmetry::Neither: return "neither";
  }
  return "neither";
}

Symmetry check_symmetry(const PolyCoords& p) {
  if (p.degree > 4) throw Error(ErrorCode::DegreeTooLarge, "symmetry check supports degree <= 4");
  const std::size_t n = p.alg->dim(), m = p.degree;
  bool symmetric = true, skew = true;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    for (std::size_t flat = 0; flat < p.coords.size() && (symmetric || skew); ++flat) {
      const auto idx = unflatten(flat, n, m);
      std::vector<std::size_t> moved(m);
      for (std::size_t s = 0; s < m; ++s) moved[s] = idx[perm[s]];
      const Element& a = p.coords[flat];
      const Element& b = p.at(moved);
      if (!(a == b)) symmetric = false;
      if (!(b == Scalar(sign) * a)) skew = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (symmetric) return Symmetry::Symmetric;
  if (skew) return Symmetry::Skew;
  return Symmetry::Neither;
}

CoordMatrix quaternion_coord_from_std(const StdComponents& f) {
  if (f.alg->dim() != 4) throw Error(ErrorCode::WrongDimension, "quaternion closed form needs dim 4");
  auto s = [&](std::size_t a, std::size_t b) -> const Scalar& { return f.comps(a, b); };
  QMatrix c(4, 4);  // c(j, i) = f^j_i
  c(0, 0) = s(0, 0) - s(1, 1) - s(2, 2) - s(3, 3);
  c(1, 1) = s(0, 0) - s(1, 1) + s(2, 2) + s(3, 3);
  c(2, 2) = s(0, 0) + s(1, 1) - s(2, 2) + s(3, 3);
  c(3, 3) = s(0, 0) + s(1, 1) + s(2, 2) - s(3, 3);

  c(1, 0) = s(0, 1) + s(1, 0) + s(2, 3) - s(3, 2);
  c(0, 1) = -s(0, 1) - s(1, 0) + s(2, 3) - s(3, 2);
  c(3, 2) = -s(0, 1) + s(1, 0) - s(2, 3) - s(3, 2);
  c(2, 3) = s(0, 1) - s(1, 0) - s(2, 3) - s(3, 2);

  c(2, 0) = s(0, 2) - s(1, 3) + s(2, 0) + s(3, 1);
  c(3, 1) = s(0, 2) - s(1, 3) - s(2, 0) - s(3, 1);
  c(0, 2) = -s(0, 2) - s(1, 3) - s(2, 0) + s(3, 1);
  c(1, 3) = -s(0, 2) - s(1, 3) + s(2, 0) - s(3, 1);

  c(3, 0) = s(0, 3) + s(1, 2) - s(2, 1) + s(3, 0);
  c(2, 1) = -s(0, 3) - s(1, 2) - s(2, 1) + s(3, 0);
  c(1, 2) = s(0, 3) - s(1, 2) - s(2, 1) - s(3, 0);
  c(0, 3) = -s(0, 3) + s(1, 2) - s(2, 1) - s(3, 0);
  return {f.alg, std::move(c)};
}

StdComponents quaternion_std_from_coord(const CoordMatrix& m) {
  if (m.alg->dim() != 4) throw Error(ErrorCode::WrongDimension, "quaternion closed form needs dim 4");
  // c(j, i) = f^j_i
  auto c = [&](std::size_t j, std::size_t i) -> const Scalar& { return m.mat(j, i); };
  auto f = StdComponents::zero(m.alg);
  auto& s = f.comps;
  s(0, 0) = c(0, 0) + c(1, 1) + c(2, 2) + c(3, 3);
  s(1, 1) = -c(0, 0) - c(1, 1) + c(2, 2) + c(3, 3);
  s(2, 2) = -c(0, 0) + c(1, 1) - c(2, 2) + c(3, 3);
  s(3, 3) = -c(0, 0) + c(1, 1) + c(2, 2) - c(3, 3);

  s(0, 1) = -c(0, 1) + c(1, 0) + c(2, 3) - c(3, 2);
  s(1, 0) = -c(0, 1) + c(1, 0) - c(2, 3) + c(3, 2);
  s(2, 3) = c(0, 1) + c(1, 0) - c(2, 3) - c(3, 2);
  s(3, 2) = -c(0, 1) - c(1, 0) - c(2, 3) - c(3, 2);

  s(0, 2) = -c(0, 2) - c(1, 3) + c(2, 0) + c(3, 1);
  s(1, 3) = -c(0, 2) - c(1, 3) - c(2, 0) - c(3, 1);
  s(2, 0) = -c(0, 2) + c(1, 3) + c(2, 0) - c(3, 1);
  s(3, 1) = c(0, 2) - c(1, 3) + c(2, 0) - c(3, 1);

  s(0, 3) = -c(0, 3) + c(1, 2) - c(2, 1) + c(3, 0);
  s(1, 2) = c(0, 3) - c(1, 2) - c(2, 1) + c(3, 0);
  s(2, 1) = -c(0, 3) - c(1, 2) - c(2, 1) - c(3, 0);
  s(3, 0) = -c(0, 3) - c(1, 2) + c(2, 1) + c(3, 0);

  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) s(a, b) /= 4;
  return f;
}

QMatrix quaternion_group_matrix() {
  return QMatrix{{1, -1, -1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}};
}

QMatrix quaternion_group_matrix_inverse() {
  QMatrix m{{1, 1, 1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}};
  return Scalar(1, 4) * m;
}

json std_components_to_json(const StdComponents& f) { return grid_to_json(f.comps); }

StdComponents std_components_from_json(const AlgebraPtr& alg, const json& j) {
  StdComponents f{alg, grid_from_json(j)};
  require_shape(alg, f.comps);
  return f;
}

json coord_matrix_to_json(const CoordMatrix& m) { return grid_to_json(m.mat); }

CoordMatrix coord_matrix_from_json(const AlgebraPtr& alg, const json& j) {
  CoordMatrix m{alg, grid_from_json(j)};
  require_shape(alg, m.mat);
  return m;
}

}  // namespace ncdr
