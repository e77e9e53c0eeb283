#include "ncdr/algebra.hpp"

#include <sstream>

#include "ncdr/serialize.hpp"

namespace ncdr {

AlgebraSpec::AlgebraSpec(std::string name, std::size_t dim, std::vector<Scalar> structure, std::vector<int> conj_signs)
    : name_(std::move(name)), dim_(dim), structure_(std::move(structure)), conj_signs_(std::move(conj_signs)) {
  if (dim_ == 0) throw Error(ErrorCode::InvalidAlgebra, "dimension must be positive");
  if (structure_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorCode::InvalidAlgebra, "structure tensor must have dim^3 entries");
  if (!conj_signs_.empty()) {
    if (conj_signs_.size() != dim_) throw Error(ErrorCode::InvalidAlgebra, "conj_signs length differs from dim");
    for (int s : conj_signs_)
      if (s != 1 && s != -1) throw Error(ErrorCode::InvalidAlgebra, "conj_signs entries must be +1 or -1");
  }
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l)
      for (std::size_t p = 0; p < dim_; ++p) {
        const Scalar& c = constant(k, l, p);
        if (c != 0) terms_.push_back({k, l, p, c, c.get_d()});
      }
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::unchecked(std::string name, std::size_t dim,
                                                          std::vector<Scalar> structure, std::vector<int> conj_signs) {
  return std::shared_ptr<const AlgebraSpec>(
      new AlgebraSpec(std::move(name), dim, std::move(structure), std::move(conj_signs)));
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::create(std::string name, std::size_t dim, std::vector<Scalar> structure,
                                                       std::vector<int> conj_signs) {
  auto alg = unchecked(std::move(name), dim, std::move(structure), std::move(conj_signs));
  const auto report = alg->check_axioms();
  if (!report.unit_ok) throw Error(ErrorCode::InvalidAlgebra, alg->name() + ": e_0 is not a two-sided unit");
  if (!report.associative) {
    const auto& w = *report.witness;
    std::ostringstream os;
    os << alg->name() << ": associativity fails on basis triple (" << w[0] << "," << w[1] << "," << w[2] << ")";
    throw Error(ErrorCode::InvalidAlgebra, os.str());
  }
  return alg;
}

AxiomReport AlgebraSpec::check_axioms() const {
  AxiomReport report;
  const std::size_t n = dim_;
  for (std::size_t r = 0; r < n && report.unit_ok; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar delta = r == j ? 1 : 0;
      if (constant(0, r, j) != delta || constant(r, 0, j) != delta) {
        report.unit_ok = false;
        break;
      }
    }
  // sum_p C[k][l][p] C[p][m][q] == sum_p C[l][m][p] C[k][p][q]
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) {
        ++report.triples_checked;
        for (std::size_t q = 0; q < n; ++q) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t p = 0; p < n; ++p) {
            lhs += constant(k, l, p) * constant(p, m, q);
            rhs += constant(l, m, p) * constant(k, p, q);
          }
          if (lhs != rhs) {
            if (report.associative) report.witness = std::array<std::size_t, 3>{k, l, m};
            report.associative = false;
          }
        }
      }
  return report;
}

AlgebraPtr make_quaternion_algebra(const Scalar& a, const Scalar& b) {
  if (a * b == 0) throw Error(ErrorCode::ZeroParameter, "quaternion algebra needs ab != 0");
  constexpr std::size_t n = 4;
  std::vector<Scalar> c(n * n * n, Scalar(0));
  auto set = [&](std::size_t k, std::size_t l, std::size_t p, const Scalar& v) { c[(k * n + l) * n + p] = v; };
  for (std::size_t r = 0; r < n; ++r) {
    set(0, r, r, 1);
    set(r, 0, r, 1);
  }
  // i=1, j=2, k=3
  set(1, 1, 0, a);
  set(1, 2, 3, 1);
  set(1, 3, 2, a);
  set(2, 1, 3, -1);
  set(2, 2, 0, b);
  set(2, 3, 1, -b);
  set(3, 1, 2, -a);
  set(3, 2, 1, b);
  set(3, 3, 0, -a * b);
  std::string name = (a == -1 && b == -1) ? "H" : "E(" + to_string(a) + "," + to_string(b) + ")";
  return AlgebraSpec::create(std::move(name), n, std::move(c), {1, -1, -1, -1});
}

AlgebraPtr make_complex_algebra() {
  constexpr std::size_t n = 2;
  std::vector<Scalar> c(n * n * n, Scalar(0));
  c[(0 * n + 0) * n + 0] = 1;
  c[(0 * n + 1) * n + 1] = 1;
  c[(1 * n + 0) * n + 1] = 1;
  c[(1 * n + 1) * n + 0] = -1;
  return AlgebraSpec::create("C", n, std::move(c), {1, -1});
}

namespace {

constexpr const char* kQuaternionSpecJson = R"json({
  "name": "H",
  "dim": 4,
  "structure": [
    "1","0","0","0",  "0","1","0","0",  "0","0","1","0",  "0","0","0","1",
    "0","1","0","0",  "-1","0","0","0", "0","0","0","1",  "0","0","-1","0",
    "0","0","1","0",  "0","0","0","-1", "-1","0","0","0", "0","1","0","0",
    "0","0","0","1",  "0","0","1","0",  "0","-1","0","0", "-1","0","0","0"
  ],
  "conj_signs": [1, -1, -1, -1]
})json";

constexpr const char* kComplexSpecJson = R"json({
  "name": "C",
  "dim": 2,
  "structure": ["1","0", "0","1",  "0","1", "-1","0"],
  "conj_signs": [1, -1]
})json";

}  // namespace

AlgebraPtr builtin_algebra(const std::string& name) {
  static const AlgebraPtr h = algebra_from_json(nlohmann::json::parse(kQuaternionSpecJson));
  static const AlgebraPtr c = algebra_from_json(nlohmann::json::parse(kComplexSpecJson));
  if (name == "H") return h;
  if (name == "C") return c;
  throw Error(ErrorCode::InvalidAlgebra, "no builtin algebra named '" + name + "'");
}

FElement to_float(const Element& x) {
  std::vector<double> c;
  c.reserve(x.dim());
  for (const auto& v : x.coords()) c.push_back(v.get_d());
  return FElement(x.alg(), std::move(c));
}

Element to_exact(const FElement& x) {
  std::vector<Scalar> c;
  c.reserve(x.dim());
  for (double v : x.coords()) c.push_back(from_double(v));
  return Element(x.alg(), std::move(c));
}

QMatrix left_regular(const Element& a) {
  const std::size_t n = a.dim();
  QMatrix m(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const Element col = a * Element::basis(a.alg(), l);
    for (std::size_t p = 0; p < n; ++p) m(p, l) = col[p];
  }
  return m;
}

RealMatrix4 embed_matrix(const Element& a) {
  if (a.dim() != 4) throw Error(ErrorCode::WrongDimension, "embed_matrix needs a 4-dimensional algebra");
  return left_regular(a);
}

std::string basis_letter(std::size_t dim, std::size_t i) {
  if (i == 0) return "";
  if (dim == 4 || dim == 2) return std::string(1, "ijk"[i - 1]);
  return "e" + std::to_string(i);
}

namespace {

template <class T, class Fmt>
std::string format_element(const BasicElement<T>& x, Fmt fmt) {
  const std::size_t n = x.dim();
  if (n != 2 && n != 4) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + fmt(x[i]);
    return s + "]";
  }
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    std::string c = fmt(x[i]);
    if (i > 0 && c.front() != '-') s += '+';
    s += c + basis_letter(n, i);
  }
  return s;
}

}  // namespace

std::string to_string(const Element& x) {
  return format_element(x, [](const Scalar& v) { return v.get_str(); });
}

std::string to_string(const FElement& x, int precision) {
  return format_element(x, [precision](double v) {
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
  });
}

}  // namespace ncdr
