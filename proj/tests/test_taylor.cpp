#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "ncdr/taylor.hpp"
#include "support.hpp"

using namespace ncdr;
using ncdr::testing::q;

namespace {

const AlgebraPtr H = builtin_algebra("H");
WordPoly W(const char* s) { return parse_wordpoly(s, H); }

FElement fe(std::initializer_list<double> c) { return FElement(H, std::vector<double>(c)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

// Oracle: the series in the commutative subalgebra spanned by 1 and a unit pure u
// is the complex exponential, summed independently with std::complex.
FElement exp_oracle(double theta, const FElement& u) {
  const std::complex<double> z = std::exp(std::complex<double>(0, theta));
  return fe({z.real(), 0, 0, 0}) + z.imag() * u;
}

}  // namespace

TEST_CASE("ode: cubic example") {
  const auto zero = Element::zero(H);
  const auto sol = solve_ode_taylor(W("h*x^2 + x*h*x + x^2*h"), zero, zero);
  CHECK(sol.terminated);
  CHECK(sol.solution == W("x^3"));
  CHECK(sol.diagonals.size() == 3);
  CHECK(sol.diagonals[2] == W("6*h^3"));
}

TEST_CASE("ode: component-sum right-hand side") {
  const Element a = q(H, {1, 2, 0, 0}), b = q(H, {0, 0, 1, -1}), c = q(H, {3, 0, 0, 1}), d = q(H, {0, 1, 1, 1});
  const auto rhs = WordPoly::constant(a) * W("h") * WordPoly::constant(b) + WordPoly::constant(c) * W("h") * WordPoly::constant(d);
  const auto zero = Element::zero(H);
  const auto sol = solve_ode_taylor(rhs, zero, zero);
  CHECK(extensional_equal(sol.solution, rename(rhs, {{"h", "x"}})));

  // shifted base point: y(x) = y0 + a (x - x0) b + c (x - x0) d
  const Element x0 = q(H, {1, 1, 0, 0}), y0 = q(H, {0, 0, 2, 0});
  const auto shifted = solve_ode_taylor(rhs, x0, y0);
  const auto s = W("x") - WordPoly::constant(x0);
  CHECK(extensional_equal(shifted.solution, WordPoly::constant(y0) + substitute(rename(rhs, {{"h", "s"}}), "s", s)));
}

TEST_CASE("ode: failures") {
  const auto zero = Element::zero(H);
  CHECK(code_of([&] { solve_ode_taylor(W("3*h*x^2"), zero, zero); }) == ErrorCode::NoSolution);
  CHECK(code_of([&] { solve_ode_taylor(W("h*x^2 + x*h*x + x^2*h"), zero, zero, 2); }) == ErrorCode::OrderExceeded);
  CHECK(code_of([&] { solve_ode_taylor(W("h*y"), zero, zero); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([&] { solve_ode_taylor(W("h*h"), zero, zero); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("ode: solution derivative reproduces rhs") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    // sym_derivative of a random polynomial is always a solvable right-hand side
    Monomial m;
    for (int s = 0; s <= 1 + t % 3; ++s) m.coeffs.push_back(ncdr::testing::random_invertible(rng, H));
    const NCPoly p{H, {m}};
    const auto rhs = rename(sym_derivative(p, 1), {{"h1", "h"}});
    const auto x0 = ncdr::testing::random_element(rng, H), y0 = ncdr::testing::random_element(rng, H);
    const auto sol = solve_ode_taylor(rhs, x0, y0);
    CHECK(extensional_equal(derivative(sol.solution, "x", "h"), rhs));
    CHECK(word_eval(sol.solution, Bindings{{"x", x0}}) == y0);
  }
}

TEST_CASE("exp") {
  CHECK(euclidean_norm(exp(FElement::zero(H)) - FElement::unit(H)) == 0);
  CHECK(euclidean_norm(exp(fe({0, std::numbers::pi, 0, 0}), 1e-15) - fe({-1, 0, 0, 0})) < 1e-12);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1), th(-4, 4);
  for (int t = 0; t < 20; ++t) {
    FElement v = fe({0, u(rng), u(rng), u(rng)});
    v = (1.0 / euclidean_norm(v)) * v;
    const double theta = th(rng);
    CHECK(euclidean_norm(exp(theta * v) - exp_oracle(theta, v)) < 1e-12);

    const FElement x = fe({u(rng), 2 * u(rng), 2 * u(rng), 2 * u(rng)});
    for (double tol : {1e-6, 1e-9, 1e-12}) {
      const auto r = exp_series(x, tol);
      CHECK(r.tail_bound < tol);
      CHECK(euclidean_norm(r.value - exp(x, tol / 10)) < tol);
      CHECK(euclidean_norm(exp(x, tol) * exp(-1.0 * x, tol) - FElement::unit(H)) < 10 * tol + 1e-14);
    }
  }
  CHECK_THROWS_AS(exp_series(fe({1, 0, 0, 0}), 0), Error);
}

TEST_CASE("exp additivity") {
  const auto i = FElement::basis(H, 1), j = FElement::basis(H, 2);
  CHECK(exp_additivity_gap(i, i * i) <= 1e-10);
  CHECK(exp_additivity_gap(i, j) > 0.01);
  CHECK(exp_additivity_gap(FElement::zero(H), fe({0.3, -1, 2, 0.5})) <= 1e-12);
  CHECK(exp_ode_residual(fe({0.2, 0.5, -0.3, 0.1}), j) > 1e-3);
  CHECK(exp_ode_residual(fe({0.2, 0.5, 0, 0}), fe({0.1, 0.7, 0, 0})) < 1e-8);
}

TEST_CASE("exp permutations") {
  const auto p1 = exp_permutations(1);
  REQUIRE(p1.size() == 2);
  std::set<std::string> names;
  for (const auto& p : p1) names.insert(to_string(p));
  CHECK(names == std::set<std::string>{"y*h1", "h1*y"});
  CHECK(exp_permutations(2).size() == 4);
  CHECK(exp_permutations(3).size() == 8);

  const Element h = q(H, {1, -2, Scalar(1, 2), 3});
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto perms = exp_permutations(n);
    CHECK(perms.size() == (std::size_t{1} << n));
    CHECK(std::set<ExpPermutation>(perms.begin(), perms.end()).size() == perms.size());
    for (const auto& p : perms) CHECK(p.satisfies_conditions());
    std::map<std::string, std::string> diag;
    for (const auto& s : h_symbols(n)) diag[s] = "h";
    const auto at_one = substitute(rename(exp_derivative_word(H, n), diag), "y", WordPoly::constant(Element::unit(H)));
    CHECK(at_one == rename(WordPoly(H, {{Scalar(1), Word(n, Factor::var("x"))}}), {{"x", "h"}}));
    if (n <= 4) CHECK(word_eval(at_one, {{"h", h}}) == [&] {
      Element p = Element::unit(H);
      for (std::size_t k = 0; k < n; ++k) p = p * h;
      return p;
    }());
  }
  CHECK(ExpPermutation{{2, 0, 1}}.satisfies_conditions());
  CHECK(ExpPermutation{{1, 0, 2}}.satisfies_conditions());
  CHECK(ExpPermutation{{1, 2, 0, 3}}.satisfies_conditions());
  CHECK_FALSE(ExpPermutation{{2, 1, 0}}.satisfies_conditions());
  CHECK_FALSE(ExpPermutation{{0, 1, 2}}.satisfies_conditions());
  CHECK_FALSE(ExpPermutation{{1, 0, 1}}.satisfies_conditions());
  CHECK_THROWS_AS(exp_permutations(0), Error);
  CHECK_THROWS_AS(exp_permutations(13), Error);
}

TEST_CASE("euler") {
  const auto sq = MapEvaluator::unary(H, [](const FElement& v) { return v * v; });
  const auto cube = MapEvaluator::unary(H, [](const FElement& v) { return v * v * v; });
  const auto lin = MapEvaluator::unary(H, [](const FElement& v) { return fe({1, 2, 0, 0}) * v * fe({0, 0, 1, -1}); });
  CHECK(euler_check(sq, 2, 50, 1) < 1e-7);
  CHECK(euler_check(cube, 3, 50, 2) < 1e-7);
  CHECK(euler_check(lin, 1, 50, 3) < 1e-8);
  CHECK(euler_check(cube, 2, 5, 4) > 0.1);
}
