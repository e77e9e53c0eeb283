#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ncdr/serialize.hpp"
#include "support.hpp"

using namespace ncdr;
using ncdr::testing::q;

namespace {

// Independent oracle: the Hamilton product written out coordinate by coordinate.
Element hamilton(const Element& x, const Element& y) {
  const auto &a = x.coords(), &b = y.coords();
  return Element(x.alg(), {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                           a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                           a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                           a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]});
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = ncdr::testing::random_rational(rng), b = ncdr::testing::random_rational(rng);
    CHECK(a + b - b == a);
  }
  for (int n = -1000; n <= 1000; ++n) CHECK(from_double(static_cast<double>(n)) == Scalar(n));
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-0.25") == Scalar(-1, 4));
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
}

TEST_CASE("quaternion table") {
  const auto h = make_quaternion_algebra(-1, -1);
  CHECK(h->name() == "H");
  CHECK(h->constant(1, 2, 3) == 1);
  CHECK(h->constant(1, 1, 0) == -1);
  CHECK(h->constant(2, 1, 3) == -1);
  CHECK(h->constant(3, 3, 0) == -1);
  CHECK(*h == *builtin_algebra("H"));
  CHECK(h->check_axioms().ok());
  CHECK(h->check_axioms().triples_checked == 64);

  const auto i = Element::basis(h, 1), j = Element::basis(h, 2), k = Element::basis(h, 3);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK((i + j) * (i - j) == Scalar(-2) * k);
  CHECK_THROWS_AS(make_quaternion_algebra(0, 3), Error);
}

TEST_CASE("general E(a,b) table") {
  const auto e = make_quaternion_algebra(2, 3);
  const auto i = Element::basis(e, 1), j = Element::basis(e, 2), k = Element::basis(e, 3);
  CHECK(i * i == Element::real(e, 2));
  CHECK(j * j == Element::real(e, 3));
  CHECK(k * k == Element::real(e, -6));
  CHECK(i * k == Scalar(2) * j);
  CHECK(j * k == Scalar(-3) * i);
  CHECK(e->check_axioms().ok());
}

TEST_CASE("complex algebra") {
  const auto c = make_complex_algebra();
  CHECK(c->constant(1, 1, 0) == -1);
  CHECK(c->constant(0, 1, 1) == 1);
  CHECK(c->check_axioms().unit_ok);
  CHECK(*c == *builtin_algebra("C"));
  CHECK_THROWS_AS(builtin_algebra("O"), Error);
}

TEST_CASE("mul matches the Hamilton oracle") {
  const auto h = builtin_algebra("H");
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto x = ncdr::testing::random_element(rng, h), y = ncdr::testing::random_element(rng, h);
    CHECK(x * y == hamilton(x, y));
  }
  const auto c = builtin_algebra("C");
  CHECK_THROWS_AS(Element::unit(h) * Element::unit(c), Error);
}

TEST_CASE("conjugation, norm, inverse") {
  const auto h = builtin_algebra("H");
  CHECK(conj(q(h, {1, 1, 0, 0})) == q(h, {1, -1, 0, 0}));
  CHECK(norm_sq(q(h, {1, 1, 1, 1})) == 4);
  CHECK(norm_sq(Element::zero(h)) == 0);
  CHECK(inverse(Element::basis(h, 1)) == q(h, {0, -1, 0, 0}));
  CHECK(inverse(Element::unit(h)) == Element::unit(h));

  const auto split = make_quaternion_algebra(1, 1);
  CHECK(norm_sq(q(split, {1, 1, 0, 0})) == 0);
  CHECK_THROWS_AS(inverse(q(split, {1, 1, 0, 0})), Error);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto x = ncdr::testing::random_element(rng, h), y = ncdr::testing::random_element(rng, h);
    CHECK(norm_sq(x * y) == norm_sq(x) * norm_sq(y));
    CHECK(conj(x * y) == conj(y) * conj(x));
    CHECK(conj(conj(x)) == x);
    const auto xc = x * conj(x);
    for (std::size_t r = 1; r < 4; ++r) CHECK(xc[r] == 0);
    if (!x.is_zero()) {
      CHECK(inverse(x) * x == Element::unit(h));
      CHECK(x * inverse(x) == Element::unit(h));
    }
  }
}

TEST_CASE("norm form of E(a,b)") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Scalar a = ncdr::testing::random_rational(rng) + Scalar(1, 7), b = ncdr::testing::random_rational(rng) + Scalar(1, 11);
    const auto e = make_quaternion_algebra(a, b);
    const auto x = ncdr::testing::random_element(rng, e), y = ncdr::testing::random_element(rng, e);
    CHECK(norm_sq(x) == x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3]);
    CHECK(norm_sq(x * y) == norm_sq(x) * norm_sq(y));
  }
}

TEST_CASE("embed_matrix") {
  const auto h = builtin_algebra("H");
  CHECK(embed_matrix(Element::unit(h)) == QMatrix::identity(4));
  const auto ji = embed_matrix(Element::basis(h, 1));
  CHECK(ji == QMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  CHECK(embed_matrix(Element::basis(h, 1)) * embed_matrix(Element::basis(h, 2)) == embed_matrix(Element::basis(h, 3)));
  CHECK_THROWS_AS(embed_matrix(Element::unit(builtin_algebra("C"))), Error);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto a = ncdr::testing::random_element(rng, h), b = ncdr::testing::random_element(rng, h);
    // row pattern of J_a
    const auto& c = a.coords();
    CHECK(embed_matrix(a) == QMatrix{{c[0], -c[1], -c[2], -c[3]},
                                     {c[1], c[0], -c[3], c[2]},
                                     {c[2], c[3], c[0], -c[1]},
                                     {c[3], -c[2], c[1], c[0]}});
    CHECK(embed_matrix(a + b) == embed_matrix(a) + embed_matrix(b));
    CHECK(embed_matrix(a * b) == embed_matrix(a) * embed_matrix(b));
  }
}

TEST_CASE("rotate") {
  const auto h = builtin_algebra("H");
  CHECK(rotate(Element::unit(h), Element::basis(h, 1)) == Element::basis(h, 1));
  const double s = std::sin(std::numbers::pi / 4), c = std::cos(std::numbers::pi / 4);
  const FElement qf(h, {c, 0, 0, s});
  const auto r = rotate(qf, FElement(h, {0, 1, 0, 0}));
  CHECK(std::abs(r[0]) < 1e-12);
  CHECK(std::abs(r[1]) < 1e-12);
  CHECK(std::abs(r[2] - 1) < 1e-12);
  CHECK(std::abs(r[3]) < 1e-12);
  CHECK_THROWS_AS(rotate(Element::unit(h), Element::unit(h)), Error);

  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const auto qq = ncdr::testing::random_invertible(rng, h);
    auto p = ncdr::testing::random_element(rng, h);
    p[0] = 0;
    const auto out = rotate(qq, p);
    CHECK(out[0] == 0);
    CHECK(norm_sq(out) == norm_sq(p));
  }
}

TEST_CASE("algebra JSON round trip and validation") {
  const auto h = builtin_algebra("H");
  const auto j = algebra_to_json(*h);
  CHECK(*algebra_from_json(j) == *h);

  auto broken = j;
  broken["structure"][(1 * 4 + 2) * 4 + 3] = "2";  // i*j = 2k
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
  const auto raw = algebra_from_json(broken, false);
  const auto report = raw->check_axioms();
  CHECK_FALSE(report.associative);
  CHECK(report.witness.has_value());

  auto no_unit = j;
  no_unit["structure"][0] = "2";
  CHECK_THROWS_AS(algebra_from_json(no_unit), Error);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"name", "x"}}), Error);
}

TEST_CASE("element formatting") {
  const auto h = builtin_algebra("H");
  CHECK(to_string(q(h, {Scalar(1, 2), 0, 3, Scalar(-1, 4)})) == "1/2+0i+3j-1/4k");
}
