#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncdr/gateaux.hpp"
#include "ncdr/ncpoly.hpp"
#include "support.hpp"

using namespace ncdr;
using ncdr::testing::q;

namespace {

const AlgebraPtr H = builtin_algebra("H");
const AlgebraPtr C = builtin_algebra("C");
const Element one = Element::unit(H), I = Element::basis(H, 1), J = Element::basis(H, 2), K = Element::basis(H, 3);

WordPoly W(const char* s, const AlgebraPtr& alg = H) { return parse_wordpoly(s, alg); }

NCPoly random_monomial(std::mt19937_64& rng, std::size_t n) {
  Monomial m;
  for (std::size_t s = 0; s <= n; ++s) m.coeffs.push_back(ncdr::testing::random_invertible(rng, H));
  return {H, {m}};
}

Bindings bind_all(const std::vector<std::string>& names, const Element& v) {
  Bindings b;
  for (const auto& n : names) b.emplace(n, v);
  return b;
}

}  // namespace

TEST_CASE("eval_poly") {
  CHECK(eval_poly(parse_poly("x^3", H), I) == -I);
  CHECK(eval_poly(parse_poly("1+2i", H), J) == q(H, {1, 2, 0, 0}));
  CHECK(eval_poly(parse_poly("i*x*k", H), J) == -one);
  CHECK(eval_poly(NCPoly{H, {}}, J).is_zero());
  CHECK_THROWS_AS(eval_poly(parse_poly("x", H), Element::unit(C)), Error);
}

TEST_CASE("parser") {
  CHECK(parse_element("1/2+0i+3j-1/4k", H) == q(H, {Scalar(1, 2), 0, 3, Scalar(-1, 4)}));
  CHECK(parse_element("-(1+i)*(1-i)", H) == Element::real(H, -2));
  CHECK(parse_element("0.25", H) == Element::real(H, Scalar(1, 4)));
  CHECK(parse_element("i", C) == Element::basis(C, 1));
  const auto p = parse_poly("(1+i)*x*j*x + x^2 - 3", H);
  CHECK(p.degree() == 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto x = ncdr::testing::random_element(rng, H);
    CHECK(eval_poly(p, x) == q(H, {1, 1, 0, 0}) * x * J * x + x * x - Element::real(H, 3));
  }
  CHECK_THROWS_AS(parse_wordpoly("x +", H), Error);
  CHECK_THROWS_AS(parse_wordpoly("(x", H), Error);
  CHECK_THROWS_AS(parse_wordpoly("2q", H), Error);
  CHECK_THROWS_AS(parse_wordpoly("x $ y", H), Error);
  CHECK_THROWS_AS(parse_poly("x*y", H), Error);
  CHECK_THROWS_AS(parse_element("x", H), Error);
  CHECK_THROWS_AS(parse_element("j", C), Error);
  CHECK(W("x^0") == W("1"));
}

TEST_CASE("canonical form and printing") {
  CHECK(W("x*h + h*x") == W("h*x + x*h"));
  CHECK(W("2*(i*x)") == W("(2i)*x"));
  CHECK(W("x*i*j") == W("x*k"));
  CHECK(W("x - x").is_zero());
  CHECK(W("0i*x").is_zero());
  for (const char* s : {"x*h1 + h1*x", "-3/2*x*(1+2i+0j+0k)*x + 7", "(1/2-1/2i+0j+0k)*h*x", "0"})
    CHECK(W(to_string(W(s)).c_str()) == W(s));
  CHECK(to_string(W("x*h1 + h1*x")) == "h1*x + x*h1");
  CHECK(W("x*y*x").symbols() == std::set<std::string>{"x", "y"});
  CHECK(W("x*y*x + 1").total_degree() == 3);
}

TEST_CASE("sym_derivative examples") {
  const auto sq = parse_poly("x^2", H);
  CHECK(sym_derivative(sq, 1) == W("x*h1 + h1*x"));
  CHECK(sym_derivative(sq, 2) == W("h1*h2 + h2*h1"));
  CHECK(sym_derivative(parse_poly("x^3", H), 3) ==
        W("h1*h2*h3 + h1*h3*h2 + h2*h1*h3 + h2*h3*h1 + h3*h1*h2 + h3*h2*h1"));
  CHECK(sym_derivative(sq, 3).is_zero());
  CHECK(sym_derivative(sq, 0) == W("x^2"));
}

TEST_CASE("word_eval") {
  CHECK(word_eval(W("x*h + h*x"), {{"x", one}, {"h", J}}) == Scalar(2) * J);
  const Element h = q(H, {1, 2, -1, Scalar(1, 3)});
  CHECK(word_eval(sym_derivative(parse_poly("x^3", H), 3), bind_all(h_symbols(3), h)) == Scalar(6) * h * h * h);
  CHECK(word_eval(WordPoly(H), Bindings{}).is_zero());
  CHECK_THROWS_AS(word_eval(W("x*h"), {{"x", one}}), Error);
  try {
    word_eval(W("x*h"), {{"x", one}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundSymbol);
  }
}

TEST_CASE("extensional equality") {
  CHECK(extensional_equal(W("x*h + h*x"), W("h*x + x*h")));
  CHECK_FALSE(extensional_equal(W("x*h"), W("h*x")));
  // Agrees with x*h on every basis pair only if H were commutative.
  CHECK(extensional_equal(W("x*h", C), W("h*x", C)));
  // Vanishes on every basis element but not identically.
  CHECK_FALSE(extensional_equal(W("(x^2 + 1)*(x - 1)"), WordPoly(H)));
  CHECK(extensional_equal(W("(x^2 + 1)*(x - 1)", C), W("x^3 - x^2 + x - 1", C)));

  const auto conj_form = W("-1/2*(h + i*h*i + j*h*j + k*h*k)");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto h = ncdr::testing::random_element(rng, H);
    CHECK(word_eval(conj_form, {{"h", h}}) == conj(h));
  }
  // The same sum written through 2*Re(h) - h.
  CHECK(extensional_equal(W("h + i*h*i + j*h*j + k*h*k"), W("-1/2*(h + i*h*i + j*h*j + k*h*k) * (-2)")));

  CHECK_THROWS_AS(extensional_equal(W("x^9"), W("x^8")), Error);
  CHECK(extensional_equal(W("x^9"), W("x^9")));  // formal shortcut
}

TEST_CASE("polynomial calculus properties") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto p = random_monomial(rng, n);
    const WordPoly pw = to_wordpoly(p);

    CHECK(extensional_equal(sym_derivative(p, n + 1), WordPoly(H)));

    std::map<std::string, std::string> diag;
    for (const auto& s : h_symbols(n)) diag[s] = "h";
    CHECK(extensional_equal(rename(sym_derivative(p, n), diag),
                            factorial(static_cast<unsigned>(n)) * rename(pw, {{"x", "h"}})));

    for (std::size_t m = 1; m < n; ++m)
      CHECK(extensional_equal(substitute(sym_derivative(p, m), "x", WordPoly(H)), WordPoly(H)));

    const std::size_t m = 1 + t % n;
    const auto d = sym_derivative(p, m);
    const auto hs = h_symbols(m);
    std::vector<std::string> perm = hs;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::string, std::string> swap;
    for (std::size_t s = 0; s < m; ++s) swap[hs[s]] = perm[s];
    CHECK(extensional_equal(d, rename(d, swap)));
  }
}

TEST_CASE("numeric and symbolic derivatives agree") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto p = parse_poly("(1+i)*x*j*x + x^3 - 3*x + k", H);
    const auto x = to_float(ncdr::testing::random_element(rng, H));
    const auto h = to_float(ncdr::testing::random_element(rng, H));
    const auto f = MapEvaluator::unary(H, [&p](const FElement& y) { return eval_poly(p, y); });
    const auto numeric = gateaux(f, x, h);
    const auto symbolic = word_eval(sym_derivative(p, 1), FBindings{{"x", x}, {"h1", h}});
    CHECK(euclidean_norm(numeric - symbolic) < 1e-8 * std::max(1.0, euclidean_norm(symbolic)));
  }
}

TEST_CASE("infinitesimal order") {
  const Element x0 = q(H, {1, -1, 2, 0}), a = q(H, {0, 1, 1, 3}), h = q(H, {1, 2, -1, 1});
  const WordPoly s = W("x") - WordPoly::constant(x0);
  const auto order = [&](const WordPoly& w) {
    const auto fh = to_float(h), fx = to_float(x0);
    auto at = [&](double t) { return euclidean_norm(word_eval(w, FBindings{{"x", fx + t * fh}})); };
    return std::log(at(1e-2) / at(1e-4)) / std::log(1e-2 / 1e-4);
  };
  const auto quad = s * WordPoly::constant(a) * s;
  CHECK(word_eval(quad, {{"x", x0}}).is_zero());
  CHECK(order(quad) >= 2 - 1e-6);
  const auto cubic = s * WordPoly::constant(a) * s * s;
  CHECK(order(cubic) >= 3 - 1e-6);
}

TEST_CASE("taylor_poly") {
  const auto sq = parse_poly("x^2", H);
  const auto t0 = taylor_poly(sq, Element::zero(H));
  CHECK(extensional_equal(to_wordpoly(t0.reconstructed), W("x^2")));
  CHECK(t0.terms.size() == 3);
  CHECK(t0.terms[0].is_zero());
  CHECK(t0.terms[1].is_zero());
  CHECK(t0.terms[2] == W("h^2"));

  const Element c = q(H, {1, 2, 0, -1});
  const auto tc = taylor_poly(sq, c);
  CHECK(tc.terms[0] == WordPoly::constant(c * c));
  CHECK(tc.terms[1] == WordPoly::constant(c) * W("h") + W("h") * WordPoly::constant(c));
  CHECK(tc.terms[2] == W("h^2"));
  CHECK(extensional_equal(to_wordpoly(tc.reconstructed), W("x^2")));

  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto p = random_monomial(rng, 1 + t % 4);
    const auto y0 = ncdr::testing::random_element(rng, H);
    const auto tp = taylor_poly(p, y0);
    CHECK(tp.terms.size() == p.degree() + 1);
    const auto x = ncdr::testing::random_element(rng, H);
    CHECK(eval_poly(tp.reconstructed, x) == eval_poly(p, x));
  }
}
