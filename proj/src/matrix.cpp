#include "ncdr/matrix.hpp"

#include <utility>

namespace ncdr {

namespace {

// Rows scaled by the lcm of their denominators, so elimination stays in Z.
std::vector<std::vector<mpz_class>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return rows;
}

// Bareiss elimination in place; returns the rank and writes the sign of the
// row permutation to `sign`.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  auto rows = integer_rows(m);
  int sign = 1;
  return bareiss(rows, m.cols(), sign);
}

Scalar determinant(const QMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= l;
  }
  auto rows = integer_rows(m);
  int sign = 1;
  // Without column skipping, a rank-deficient matrix has determinant zero.
  if (bareiss(rows, n, sign) < n) return Scalar(0);
  Scalar det(mpz_class(rows[n - 1][n - 1] * sign), scale);
  det.canonicalize();
  return det;
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
  QMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  const QMatrix red = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix has no inverse");
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red(i, n + j);
  return out;
}

std::vector<QVector> nullspace(const QMatrix& m) {
  std::vector<std::size_t> piv;
  const QMatrix red = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_min_norm(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const std::size_t rank_a = rank(a);
  if (rank(aug) > rank_a) return std::nullopt;

  LinearSolution out;
  out.unique = rank_a == a.cols();
  if (out.unique) {
    std::vector<std::size_t> piv;
    const QMatrix red = rref(aug, &piv);
    out.x.assign(a.cols(), Scalar(0));
    for (std::size_t r = 0; r < piv.size(); ++r) out.x[piv[r]] = red(r, a.cols());
    return out;
  }
  // x = a^T z with (a a^T) z = b; every such z yields the same x, which lies
  // in the row space of a and is therefore the minimum-norm solution.
  const QMatrix at = a.transpose();
  const QMatrix gram = a * at;
  QMatrix aug2(gram.rows(), gram.cols() + 1);
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) aug2(i, j) = gram(i, j);
    aug2(i, gram.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  const QMatrix red = rref(aug2, &piv);
  QVector z(gram.cols(), Scalar(0));
  for (std::size_t r = 0; r < piv.size(); ++r) z[piv[r]] = red(r, gram.cols());
  out.x = at.apply(z);
  return out;
}

Matrix<double> to_double(const QMatrix& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

}  // namespace ncdr
