#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdr/dspace.hpp"
#include "support.hpp"

using namespace ncdr;
using ncdr::testing::q;

namespace {

const AlgebraPtr H = builtin_algebra("H");
const Element one = Element::unit(H), I = Element::basis(H, 1), J = Element::basis(H, 2), K = Element::basis(H, 3);

DVector random_vector(std::mt19937_64& rng, std::size_t m) {
  std::vector<Element> e;
  for (std::size_t k = 0; k < m; ++k) e.push_back(ncdr::testing::random_element(rng, H));
  return DVector(std::move(e));
}

DMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<Element>> rows(n);
  for (auto& r : rows)
    for (std::size_t c = 0; c < n; ++c) r.push_back(ncdr::testing::random_element(rng, H));
  return DMatrix(std::move(rows));
}

ComponentMap random_map(std::mt19937_64& rng, std::size_t out, std::size_t in, std::size_t terms) {
  ComponentMap m(H, out, in);
  for (std::size_t j = 0; j < out; ++j)
    for (std::size_t i = 0; i < in; ++i)
      for (std::size_t s = 0; s < terms; ++s)
        m.add(j, i, ncdr::testing::random_element(rng, H), ncdr::testing::random_element(rng, H));
  return m;
}

}  // namespace

TEST_CASE("lin_comb") {
  const Element zero = Element::zero(H);
  const DVector v({one, K});
  CHECK(lin_comb(one, v, one, zero, v, zero) == v);
  CHECK(lin_comb(I, v, J, zero, v, zero) == DVector({K, one}));
  CHECK_THROWS_AS(lin_comb(one, v, one, one, DVector({one}), one), Error);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto a = ncdr::testing::random_element(rng, H), m = ncdr::testing::random_element(rng, H),
               b = ncdr::testing::random_element(rng, H);
    const auto w = random_vector(rng, 3);
    CHECK(right_scale(left_scale(a, right_scale(w, m)), b) == left_scale(a, right_scale(right_scale(w, m), b)));
    CHECK(left_scale(a * m, w) == left_scale(a, left_scale(m, w)));
  }
}

TEST_CASE("dmatrix_inverse") {
  CHECK(dmatrix_inverse(DMatrix::identity(H, 3)) == DMatrix::identity(H, 3));
  CHECK(dmatrix_inverse(DMatrix::diagonal({I, J})) == DMatrix::diagonal({-I, -J}));
  CHECK(dmatrix_inverse(DMatrix({{one + I}})) == DMatrix({{q(H, {Scalar(1, 2), Scalar(-1, 2), 0, 0})}}));
  CHECK(dual_basis(DMatrix::diagonal({J, K})) == DMatrix::diagonal({-J, -K}));

  // rank-one quaternion matrix: (1, i; j, k) has second row = j * first row
  CHECK_THROWS_AS(dmatrix_inverse(DMatrix({{one, I}, {J, J * I}})), Error);
  CHECK_THROWS_AS(dmatrix_inverse(DMatrix(H, 2, 3)), Error);

  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_matrix(rng, n);
      const auto b = dmatrix_inverse(a);
      CHECK(a * b == DMatrix::identity(H, n));
      CHECK(b * a == DMatrix::identity(H, n));
    }
  }
}

TEST_CASE("block embedding is multiplicative") {
  std::mt19937_64 rng(23);
  const auto a = random_matrix(rng, 2), b = random_matrix(rng, 2);
  CHECK(block_embed(a * b) == block_embed(a) * block_embed(b));
}

TEST_CASE("component maps") {
  const DVector v({K});
  const auto id = ComponentMap::identity(H, 2);
  const DVector w({I, q(H, {1, 2, 3, 4})});
  CHECK(apply_component_map(id, w) == w);

  const auto m = ComponentMap::single(H, {{I, J}});
  CHECK(apply_component_map(m, v) == DVector({one}));
  CHECK_THROWS_AS(apply_component_map(m, w), Error);

  const auto a = ComponentMap::single(H, {{I, J}});
  const auto b = ComponentMap::single(H, {{K, K}});
  CHECK(extensionally_equal(compose_component_maps(b, a), ComponentMap::single(H, {{J, I}})));
  CHECK(extensionally_equal(compose_component_maps(a, ComponentMap::identity(H, 1)), a));
  CHECK(extensionally_equal(compose_component_maps(ComponentMap::identity(H, 1), a), a));
  CHECK_FALSE(extensionally_equal(a, b));

  CHECK(extensionally_equal(shift_components(a, one, one), a));
  CHECK(extensionally_equal(shift_components(ComponentMap::identity(H, 1), I, J), ComponentMap::single(H, {{I, J}})));
}

TEST_CASE("component map properties") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_map(rng, 2, 3, 2), b = random_map(rng, 2, 2, 2), c = random_map(rng, 3, 2, 1);
    const auto x = random_vector(rng, 3), y = random_vector(rng, 3);
    CHECK(apply_component_map(a, x + y) == apply_component_map(a, x) + apply_component_map(a, y));
    const Scalar s = ncdr::testing::random_rational(rng);
    CHECK(apply_component_map(a, s * x) == s * apply_component_map(a, x));
    CHECK(apply_component_map(compose_component_maps(b, a), x) == apply_component_map(b, apply_component_map(a, x)));
    CHECK(extensionally_equal(compose_component_maps(c, compose_component_maps(b, a)),
                              compose_component_maps(compose_component_maps(c, b), a)));

    const auto sa = ncdr::testing::random_element(rng, H), sb = ncdr::testing::random_element(rng, H);
    std::vector<Element> shifted;
    for (const auto& e : x.entries()) shifted.push_back(sa * e * sb);
    CHECK(apply_component_map(shift_components(a, sa, sb), x) == apply_component_map(a, DVector(shifted)));
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(31);
  const auto m = random_matrix(rng, 2);
  CHECK(dmatrix_from_json(H, dmatrix_to_json(m)) == m);
  const auto c = random_map(rng, 2, 1, 2);
  const auto back = component_map_from_json(H, component_map_to_json(c));
  CHECK(back.term_count() == c.term_count());
  CHECK(extensionally_equal(back, c));
}
