#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "ncdr/algebra.hpp"

namespace ncdr {

/// Column of algebra elements over one algebra.
class DVector {
 public:
  DVector() = default;
  explicit DVector(std::vector<Element> entries);
  static DVector zero(const AlgebraPtr& alg, std::size_t m);

  std::size_t size() const { return entries_.size(); }
  const AlgebraPtr& alg() const { return alg_; }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Element>& entries() const { return entries_; }

  friend bool operator==(const DVector& a, const DVector& b) { return a.entries_ == b.entries_; }
  friend DVector operator+(const DVector& a, const DVector& b);
  friend DVector operator*(const Scalar& s, const DVector& v);

 private:
  AlgebraPtr alg_;
  std::vector<Element> entries_;
};

/// a v_k b + c w_k d entrywise.
DVector lin_comb(const Element& a, const DVector& v, const Element& b, const Element& c, const DVector& w,
                 const Element& d);
/// a v_k, v_k b.
DVector left_scale(const Element& a, const DVector& v);
DVector right_scale(const DVector& v, const Element& b);

/// Rectangular grid of elements. Products multiply entries left factor first.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(AlgebraPtr alg, std::size_t rows, std::size_t cols);
  explicit DMatrix(std::vector<std::vector<Element>> rows);
  static DMatrix identity(const AlgebraPtr& alg, std::size_t n);
  static DMatrix diagonal(const std::vector<Element>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const AlgebraPtr& alg() const { return alg_; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const DMatrix& a, const DMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend DMatrix operator*(const DMatrix& a, const DMatrix& b);
  DVector apply(const DVector& v) const;

 private:
  AlgebraPtr alg_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> data_;
};

/// Block matrix of left regular representations, (n*rows) x (n*cols).
QMatrix block_embed(const DMatrix& a);

/// Exact inverse through the real block embedding.
/// Throws Singular, or NotQuaternionBlock if a block of the inverse is not a left multiplication.
DMatrix dmatrix_inverse(const DMatrix& a);
/// B with B A = I.
DMatrix dual_basis(const DMatrix& a);

using ElementPair = std::pair<Element, Element>;

/// w^j = sum_i sum_s u_s v^i v_s with pairs(j, i) = [(u_s, v_s)...].
class ComponentMap {
 public:
  ComponentMap() = default;
  ComponentMap(AlgebraPtr alg, std::size_t out_dim, std::size_t in_dim);
  static ComponentMap identity(const AlgebraPtr& alg, std::size_t n);
  /// 1 -> 1 map x -> sum u_s x v_s.
  static ComponentMap single(const AlgebraPtr& alg, std::vector<ElementPair> pairs);

  std::size_t out_dim() const { return out_; }
  std::size_t in_dim() const { return in_; }
  const AlgebraPtr& alg() const { return alg_; }
  const std::vector<ElementPair>& pairs(std::size_t j, std::size_t i) const { return pairs_[j * in_ + i]; }
  void add(std::size_t j, std::size_t i, Element u, Element v);
  std::size_t term_count() const;

 private:
  AlgebraPtr alg_;
  std::size_t out_ = 0, in_ = 0;
  std::vector<std::vector<ElementPair>> pairs_;
};

DVector apply_component_map(const ComponentMap& m, const DVector& v);
/// B after A.
ComponentMap compose_component_maps(const ComponentMap& b, const ComponentMap& a);
/// x -> M(a x b).
ComponentMap shift_components(const ComponentMap& m, const Element& a, const Element& b);
/// Agreement on every input vector with a single basis element in one slot.
bool extensionally_equal(const ComponentMap& a, const ComponentMap& b);

nlohmann::json dvector_to_json(const DVector& v);
DVector dvector_from_json(const AlgebraPtr& alg, const nlohmann::json& j);
nlohmann::json dmatrix_to_json(const DMatrix& m);
DMatrix dmatrix_from_json(const AlgebraPtr& alg, const nlohmann::json& j);
nlohmann::json component_map_to_json(const ComponentMap& m);
ComponentMap component_map_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

}  // namespace ncdr
