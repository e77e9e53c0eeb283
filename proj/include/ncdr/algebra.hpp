#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "ncdr/error.hpp"
#include "ncdr/matrix.hpp"
#include "ncdr/scalar.hpp"

namespace ncdr {

/// One nonzero structure constant: e_k * e_l contributes `value` to e_p.
struct StructureTerm {
  std::size_t k, l, p;
  Scalar value;
  double value_d;
};

struct AxiomReport {
  bool unit_ok = true;
  bool associative = true;
  std::size_t triples_checked = 0;
  /// First failing (k, l, m) triple when associativity fails.
  std::optional<std::array<std::size_t, 3>> witness;

  bool ok() const { return unit_ok && associative; }
};

/// A finite-dimensional algebra over Q given by its structure constants
/// C[k][l][p] (e_k e_l = sum_p C[k][l][p] e_p). Basis vector e_0 is the unit.
class AlgebraSpec {
 public:
  /// Validates the unit axiom and associativity; throws Error(InvalidAlgebra).
  static std::shared_ptr<const AlgebraSpec> create(std::string name, std::size_t dim, std::vector<Scalar> structure,
                                                   std::vector<int> conj_signs);

  /// Builds without validation, so a broken table can be inspected with check_axioms().
  static std::shared_ptr<const AlgebraSpec> unchecked(std::string name, std::size_t dim,
                                                      std::vector<Scalar> structure, std::vector<int> conj_signs);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Scalar& constant(std::size_t k, std::size_t l, std::size_t p) const {
    return structure_[(k * dim_ + l) * dim_ + p];
  }
  const std::vector<Scalar>& structure() const { return structure_; }
  const std::vector<StructureTerm>& terms() const { return terms_; }

  /// Empty when the algebra has no unit/pure split; conjugation is then undefined.
  const std::vector<int>& conj_signs() const { return conj_signs_; }
  bool has_conjugation() const { return !conj_signs_.empty(); }

  /// Exhaustive check over all basis pairs (unit) and triples (associativity).
  AxiomReport check_axioms() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.dim_ == b.dim_ && a.structure_ == b.structure_ && a.conj_signs_ == b.conj_signs_;
  }

 private:
  AlgebraSpec(std::string name, std::size_t dim, std::vector<Scalar> structure, std::vector<int> conj_signs);

  std::string name_;
  std::size_t dim_;
  std::vector<Scalar> structure_;
  std::vector<int> conj_signs_;
  std::vector<StructureTerm> terms_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

/// E(F, a, b): i^2 = a, j^2 = b, ij = k = -ji. Throws ZeroParameter when ab = 0.
AlgebraPtr make_quaternion_algebra(const Scalar& a, const Scalar& b);
/// C as the 2-dimensional real algebra with basis (1, i).
AlgebraPtr make_complex_algebra();
/// Shipped canonical specs: "H" (= E(Q,-1,-1)) and "C". Parsed from embedded JSON.
AlgebraPtr builtin_algebra(const std::string& name);

template <class T>
constexpr bool is_exact_v = std::is_same_v<T, Scalar>;

/// Element of an algebra as a coordinate vector a = sum a^i e_i.
template <class T>
class BasicElement {
 public:
  BasicElement() = default;
  BasicElement(AlgebraPtr alg, std::vector<T> coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
    if (!alg_) throw Error(ErrorCode::AlgebraMismatch, "element without algebra");
    if (coords_.size() != alg_->dim()) throw Error(ErrorCode::WrongDimension, "coordinate count differs from dim");
  }

  static BasicElement zero(const AlgebraPtr& alg) { return BasicElement(alg, std::vector<T>(alg->dim(), T(0))); }
  static BasicElement unit(const AlgebraPtr& alg) { return basis(alg, 0); }
  static BasicElement basis(const AlgebraPtr& alg, std::size_t i) {
    auto e = zero(alg);
    e.coords_.at(i) = T(1);
    return e;
  }
  static BasicElement real(const AlgebraPtr& alg, const T& r) {
    auto e = zero(alg);
    e.coords_[0] = r;
    return e;
  }

  const AlgebraPtr& alg() const { return alg_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<T>& coords() const { return coords_; }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  BasicElement& operator+=(const BasicElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  BasicElement& operator*=(const T& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator-(BasicElement a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend BasicElement operator*(const T& s, BasicElement a) { return a *= s; }
  friend BasicElement operator*(BasicElement a, const T& s) { return a *= s; }

  /// Algebra product via structure constants.
  friend BasicElement operator*(const BasicElement& x, const BasicElement& y) {
    x.check_same(y);
    BasicElement out = zero(x.alg_);
    for (const auto& t : x.alg_->terms()) {
      const T& xk = x.coords_[t.k];
      const T& yl = y.coords_[t.l];
      if (xk == 0 || yl == 0) continue;
      if constexpr (is_exact_v<T>) {
        if (t.value == 1)
          out.coords_[t.p] += xk * yl;
        else if (t.value == -1)
          out.coords_[t.p] -= xk * yl;
        else
          out.coords_[t.p] += xk * yl * t.value;
      } else {
        out.coords_[t.p] += xk * yl * t.value_d;
      }
    }
    return out;
  }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return same_algebra(a.alg_, b.alg_) && a.coords_ == b.coords_;
  }

  void check_same(const BasicElement& o) const {
    if (!same_algebra(alg_, o.alg_)) throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
  }

 private:
  AlgebraPtr alg_;
  std::vector<T> coords_;
};

using Element = BasicElement<Scalar>;
using FElement = BasicElement<double>;

template <class T>
BasicElement<T> mul(const BasicElement<T>& x, const BasicElement<T>& y) {
  return x * y;
}

template <class T>
BasicElement<T> conj(const BasicElement<T>& x) {
  const auto& signs = x.alg()->conj_signs();
  if (signs.empty()) throw Error(ErrorCode::InvalidAlgebra, "conjugation undefined for " + x.alg()->name());
  auto out = x;
  for (std::size_t i = 0; i < out.dim(); ++i)
    if (signs[i] < 0) out[i] = -out[i];
  return out;
}

/// e_0-coordinate of x * conj(x).
template <class T>
T norm_sq(const BasicElement<T>& x) {
  return (x * conj(x))[0];
}

template <class T>
BasicElement<T> inverse(const BasicElement<T>& x) {
  const T n = norm_sq(x);
  if (n == 0) throw Error(ErrorCode::NotInvertible, "norm_sq is zero");
  return conj(x) * T(T(1) / n);
}

/// Euclidean coordinate norm; equals |x| on H and C.
template <class T>
double euclidean_norm(const BasicElement<T>& x) {
  double s = 0;
  for (const auto& c : x.coords()) {
    double v;
    if constexpr (is_exact_v<T>)
      v = c.get_d();
    else
      v = c;
    s += v * v;
  }
  return std::sqrt(s);
}

/// p -> q p q^{-1}; p must be pure (zero e_0-coordinate).
template <class T>
BasicElement<T> rotate(const BasicElement<T>& q, const BasicElement<T>& p) {
  if (p[0] != 0) throw Error(ErrorCode::RangeError, "rotate expects a pure vector");
  return q * p * inverse(q);
}

FElement to_float(const Element& x);
Element to_exact(const FElement& x);

/// Left regular representation: column l holds the coordinates of a * e_l.
QMatrix left_regular(const Element& a);

using RealMatrix4 = QMatrix;
/// J_a for a 4-dimensional algebra; J_a J_b = J_{ab}. Throws WrongDimension otherwise.
RealMatrix4 embed_matrix(const Element& a);

/// "a+bi+cj+dk" for dim 4, "a+bi" for dim 2, "[c0, c1, ...]" otherwise.
std::string to_string(const Element& x);
std::string to_string(const FElement& x, int precision = 17);
std::string basis_letter(std::size_t dim, std::size_t i);

}  // namespace ncdr
