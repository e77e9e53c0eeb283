#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ncdr/algebra.hpp"
#include "ncdr/dspace.hpp"

namespace ncdr {

/// f(x) = sum f^{ij} e_i x e_j; comps(i, j) = f^{ij}.
struct StdComponents {
  AlgebraPtr alg;
  QMatrix comps;

  static StdComponents zero(const AlgebraPtr& alg);
  static StdComponents identity(const AlgebraPtr& alg);
  friend bool operator==(const StdComponents& a, const StdComponents& b) { return a.comps == b.comps; }
};

/// f(a) = e_j f^j_i a^i; mat(j, i) = f^j_i, so mat acts on coordinate columns.
struct CoordMatrix {
  AlgebraPtr alg;
  QMatrix mat;

  friend bool operator==(const CoordMatrix& a, const CoordMatrix& b) { return a.mat == b.mat; }
};

/// f(x) = sum_s u_s x v_s. An empty term list is the zero map.
struct ComponentSum {
  AlgebraPtr alg;
  std::vector<ElementPair> terms;
};

/// Row (j,i) = j*n+i, column (k,r) = k*n+r, entry sum_p C[k][i][p] C[p][r][j].
struct BigCReport {
  QMatrix mat;
  std::size_t rank = 0;
  Scalar det;
  /// Standard components of nonzero representations of the zero map.
  std::vector<StdComponents> kernel;
};

struct StdSolution {
  StdComponents comps;
  /// False when BigC is singular; comps is then the minimum-norm representative.
  bool unique = true;
};

struct KernelInfo {
  std::size_t rank = 0;
  bool is_singular = false;
  std::optional<QVector> kernel_vector;
};

CoordMatrix std_to_coord(const StdComponents& f);
/// Throws NotRepresentable when the linear system is inconsistent.
StdSolution coord_to_std(const CoordMatrix& m);
BigCReport big_c(const AlgebraPtr& alg);

StdComponents component_sum_to_std(const ComponentSum& cs);
Element eval_component_sum(const ComponentSum& cs, const Element& x);
Element eval_std(const StdComponents& f, const Element& x);
Element eval_coord(const CoordMatrix& m, const Element& x);
/// Standard components of g after f.
StdComponents compose_std(const StdComponents& g, const StdComponents& f);
KernelInfo kernel_rank(const CoordMatrix& m);
/// A^{-1} m A for coordinates related by a = A a'. Throws Singular.
CoordMatrix change_basis(const CoordMatrix& m, const QMatrix& a);

/// Coordinates of an F-polylinear map: coords[flat(i1..im)] = f(e_i1, ..., e_im), first index most significant.
struct PolyCoords {
  AlgebraPtr alg;
  std::size_t degree = 0;
  std::vector<Element> coords;

  const Element& at(const std::vector<std::size_t>& idx) const;
};

using PolylinearFn = std::function<Element(const std::vector<Element>&)>;

PolyCoords polyform_coords(const PolylinearFn& f, const AlgebraPtr& alg, std::size_t m);
/// sum f_{i1..im} a1^{i1} ... am^{im}.
Element reconstruct(const PolyCoords& p, const std::vector<Element>& args);

enum class Symmetry { Symmetric, Skew, Neither };
const char* symmetry_name(Symmetry s);
/// Tests every index permutation. Throws DegreeTooLarge above degree 4. The zero form counts as symmetric.
Symmetry check_symmetry(const PolyCoords& p);

// Closed forms for the quaternion algebra H, written out coordinate by coordinate.
CoordMatrix quaternion_coord_from_std(const StdComponents& f);
StdComponents quaternion_std_from_coord(const CoordMatrix& m);
/// 4x4 matrix that maps each group of four standard components to four coordinates, and its inverse.
QMatrix quaternion_group_matrix();
QMatrix quaternion_group_matrix_inverse();

nlohmann::json std_components_to_json(const StdComponents& f);
StdComponents std_components_from_json(const AlgebraPtr& alg, const nlohmann::json& j);
nlohmann::json coord_matrix_to_json(const CoordMatrix& m);
CoordMatrix coord_matrix_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

}  // namespace ncdr
