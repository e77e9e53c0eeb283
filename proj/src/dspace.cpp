#include "ncdr/dspace.hpp"

#include "ncdr/serialize.hpp"

namespace ncdr {

using nlohmann::json;

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

DVector::DVector(std::vector<Element> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) return;
  alg_ = entries_.front().alg();
  for (const auto& e : entries_) e.check_same(entries_.front());
}

DVector DVector::zero(const AlgebraPtr& alg, std::size_t m) {
  return DVector(std::vector<Element>(m, Element::zero(alg)));
}

DVector operator+(const DVector& a, const DVector& b) {
  require(a.size() == b.size(), "vector lengths differ");
  std::vector<Element> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] + b[k]);
  return DVector(std::move(out));
}

DVector operator*(const Scalar& s, const DVector& v) {
  std::vector<Element> out;
  for (const auto& e : v.entries()) out.push_back(s * e);
  return DVector(std::move(out));
}

DVector lin_comb(const Element& a, const DVector& v, const Element& b, const Element& c, const DVector& w,
                 const Element& d) {
  require(v.size() == w.size(), "vector lengths differ");
  std::vector<Element> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(a * v[k] * b + c * w[k] * d);
  return DVector(std::move(out));
}

DVector left_scale(const Element& a, const DVector& v) {
  std::vector<Element> out;
  for (const auto& e : v.entries()) out.push_back(a * e);
  return DVector(std::move(out));
}

DVector right_scale(const DVector& v, const Element& b) {
  std::vector<Element> out;
  for (const auto& e : v.entries()) out.push_back(e * b);
  return DVector(std::move(out));
}

DMatrix::DMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), data_(rows * cols, Element::zero(alg_)) {}

DMatrix::DMatrix(std::vector<std::vector<Element>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  for (auto& row : rows) {
    require(row.size() == cols_, "ragged matrix");
    for (auto& e : row) data_.push_back(std::move(e));
  }
  if (!data_.empty()) {
    alg_ = data_.front().alg();
    for (const auto& e : data_) e.check_same(data_.front());
  }
}

DMatrix DMatrix::identity(const AlgebraPtr& alg, std::size_t n) {
  DMatrix m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Element::unit(alg);
  return m;
}

DMatrix DMatrix::diagonal(const std::vector<Element>& d) {
  require(!d.empty(), "empty diagonal");
  DMatrix m(d.front().alg(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DMatrix operator*(const DMatrix& a, const DMatrix& b) {
  require(a.cols() == b.rows(), "inner dimensions differ");
  DMatrix out(a.alg(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t k = 0; k < a.cols(); ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

DVector DMatrix::apply(const DVector& v) const {
  require(v.size() == cols_, "vector length differs from column count");
  std::vector<Element> out(rows_, Element::zero(alg_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return DVector(std::move(out));
}

QMatrix block_embed(const DMatrix& a) {
  const std::size_t n = a.alg()->dim();
  QMatrix big(n * a.rows(), n * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const QMatrix block = left_regular(a(r, c));
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) big(r * n + p, c * n + q) = block(p, q);
    }
  return big;
}

DMatrix dmatrix_inverse(const DMatrix& a) {
  require(a.rows() == a.cols(), "inverse of non-square matrix");
  const std::size_t n = a.alg()->dim();
  const QMatrix inv = inverse(block_embed(a));
  DMatrix out(a.alg(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      std::vector<Scalar> coords(n);
      for (std::size_t p = 0; p < n; ++p) coords[p] = inv(r * n + p, c * n);
      Element e(a.alg(), std::move(coords));
      const QMatrix expect = left_regular(e);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (inv(r * n + p, c * n + q) != expect(p, q))
            throw Error(ErrorCode::NotQuaternionBlock, "inverse block (" + std::to_string(r) + "," +
                                                           std::to_string(c) + ") is not a left multiplication");
      out(r, c) = std::move(e);
    }
  return out;
}

DMatrix dual_basis(const DMatrix& a) { return dmatrix_inverse(a); }

ComponentMap::ComponentMap(AlgebraPtr alg, std::size_t out_dim, std::size_t in_dim)
    : alg_(std::move(alg)), out_(out_dim), in_(in_dim), pairs_(out_dim * in_dim) {}

ComponentMap ComponentMap::identity(const AlgebraPtr& alg, std::size_t n) {
  ComponentMap m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, Element::unit(alg), Element::unit(alg));
  return m;
}

ComponentMap ComponentMap::single(const AlgebraPtr& alg, std::vector<ElementPair> pairs) {
  ComponentMap m(alg, 1, 1);
  for (auto& [u, v] : pairs) m.add(0, 0, std::move(u), std::move(v));
  return m;
}

void ComponentMap::add(std::size_t j, std::size_t i, Element u, Element v) {
  if (j >= out_ || i >= in_) throw Error(ErrorCode::IndexOutOfRange, "component index");
  if (!same_algebra(u.alg(), alg_) || !same_algebra(v.alg(), alg_))
    throw Error(ErrorCode::AlgebraMismatch, "component pair over another algebra");
  pairs_[j * in_ + i].emplace_back(std::move(u), std::move(v));
}

std::size_t ComponentMap::term_count() const {
  std::size_t n = 0;
  for (const auto& p : pairs_) n += p.size();
  return n;
}

DVector apply_component_map(const ComponentMap& m, const DVector& v) {
  require(v.size() == m.in_dim(), "input length differs from map input dimension");
  std::vector<Element> out(m.out_dim(), Element::zero(m.alg()));
  for (std::size_t j = 0; j < m.out_dim(); ++j)
    for (std::size_t i = 0; i < m.in_dim(); ++i)
      for (const auto& [u, w] : m.pairs(j, i)) out[j] += u * v[i] * w;
  return DVector(std::move(out));
}

ComponentMap compose_component_maps(const ComponentMap& b, const ComponentMap& a) {
  require(b.in_dim() == a.out_dim(), "inner dimensions differ");
  ComponentMap out(a.alg(), b.out_dim(), a.in_dim());
  for (std::size_t k = 0; k < b.out_dim(); ++k)
    for (std::size_t j = 0; j < b.in_dim(); ++j)
      for (const auto& [bu, bv] : b.pairs(k, j))
        for (std::size_t i = 0; i < a.in_dim(); ++i)
          for (const auto& [au, av] : a.pairs(j, i)) out.add(k, i, bu * au, av * bv);
  return out;
}

ComponentMap shift_components(const ComponentMap& m, const Element& a, const Element& b) {
  ComponentMap out(m.alg(), m.out_dim(), m.in_dim());
  for (std::size_t j = 0; j < m.out_dim(); ++j)
    for (std::size_t i = 0; i < m.in_dim(); ++i)
      for (const auto& [u, v] : m.pairs(j, i)) out.add(j, i, u * a, b * v);
  return out;
}

bool extensionally_equal(const ComponentMap& a, const ComponentMap& b) {
  if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) return false;
  const auto& alg = a.alg();
  for (std::size_t i = 0; i < a.in_dim(); ++i)
    for (std::size_t r = 0; r < alg->dim(); ++r) {
      auto v = DVector::zero(alg, a.in_dim()).entries();
      v[i] = Element::basis(alg, r);
      const DVector x(std::move(v));
      if (!(apply_component_map(a, x) == apply_component_map(b, x))) return false;
    }
  return true;
}

json dvector_to_json(const DVector& v) {
  json out = json::array();
  for (const auto& e : v.entries()) out.push_back(element_to_json(e));
  return out;
}

DVector dvector_from_json(const AlgebraPtr& alg, const json& j) {
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(element_from_json(alg, e));
  return DVector(std::move(out));
}

json dmatrix_to_json(const DMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

DMatrix dmatrix_from_json(const AlgebraPtr& alg, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be a nested array");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : j) {
    std::vector<Element> r;
    for (const auto& e : row) r.push_back(element_from_json(alg, e));
    rows.push_back(std::move(r));
  }
  return DMatrix(std::move(rows));
}

json component_map_to_json(const ComponentMap& m) {
  json grid = json::array();
  for (std::size_t j = 0; j < m.out_dim(); ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < m.in_dim(); ++i) {
      json cell = json::array();
      for (const auto& [u, v] : m.pairs(j, i)) cell.push_back(json::array({element_to_json(u), element_to_json(v)}));
      row.push_back(std::move(cell));
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

ComponentMap component_map_from_json(const AlgebraPtr& alg, const json& j) {
  if (!j.is_array() || j.empty() || !j.at(0).is_array())
    throw Error(ErrorCode::ParseError, "component map must be a grid of pair lists");
  ComponentMap m(alg, j.size(), j.at(0).size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j.at(r).size() != m.in_dim()) throw Error(ErrorCode::ParseError, "ragged component map");
    for (std::size_t i = 0; i < m.in_dim(); ++i)
      for (const auto& pair : j.at(r).at(i)) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "pair must have two elements");
        m.add(r, i, element_from_json(alg, pair.at(0)), element_from_json(alg, pair.at(1)));
      }
  }
  return m;
}

}  // namespace ncdr
