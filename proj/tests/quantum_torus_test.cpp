#include <doctest.h>

#include "liecert/errors.hpp"
#include "liecert/quantum_torus.hpp"

using namespace liecert;

namespace {

ExponentTorus torus(long order, std::size_t n, std::initializer_list<long> e) {
  IntMat m(n, n);
  std::size_t i = 0;
  for (long x : e) {
    m(i / n, i % n) = x;
    ++i;
  }
  return ExponentTorus(mpz_class(order), m);
}

}  // namespace

TEST_CASE("exponent matrix validation") {
  CHECK_THROWS_AS(torus(5, 2, {1, 1, 4, 0}), ArgumentError);
  CHECK_THROWS_AS(torus(5, 2, {0, 1, 1, 0}), ArgumentError);
  CHECK_THROWS_AS(ExponentTorus(mpz_class(5), IntMat(2, 3)), ShapeError);
  CHECK_THROWS_AS(torus(-1, 1, {0}), ArgumentError);
  // entries are stored reduced
  CHECK(torus(5, 2, {0, 6, -6, 0}).exponents()(0, 1) == 1);
}

TEST_CASE("sigma and f on generators") {
  const ExponentTorus t = torus(5, 2, {0, 1, 4, 0});
  const IntVec t1 = {1, 0}, t2 = {0, 1};
  // t_1 t_2 is already in normal order; t_2 t_1 = q_12 t_1 t_2
  CHECK(sigma_exp(t, t1, t2) == 0);
  CHECK(sigma_exp(t, t2, t1) == 1);
  CHECK(f_exp(t, t2, t1) == 1);
  CHECK(f_exp(t, t1, t2) == 4);
  CHECK_THROWS_AS(sigma_exp(t, IntVec{1}, t2), ShapeError);
}

TEST_CASE("f is antisymmetric and bimultiplicative in exponents") {
  const ExponentTorus t = torus(6, 3, {0, 2, 5, 4, 0, 3, 1, 3, 0});
  for (long a0 = -2; a0 <= 2; ++a0)
    for (long a2 = -2; a2 <= 2; ++a2)
      for (long b1 = -2; b1 <= 2; ++b1) {
        IntVec a = {a0, 1, a2}, b = {1, b1, -1}, c = {2, 0, 1};
        CHECK(t.reduce(f_exp(t, a, b) + f_exp(t, b, a)) == 0);
        IntVec ac = {a[0] + c[0], a[1] + c[1], a[2] + c[2]};
        CHECK(f_exp(t, ac, b) == t.reduce(f_exp(t, a, b) + f_exp(t, c, b)));
        // σ is a 2-cocycle
        IntVec bc = {b[0] + c[0], b[1] + c[1], b[2] + c[2]};
        IntVec ab = {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
        CHECK(t.reduce(sigma_exp(t, a, b) + sigma_exp(t, ab, c)) ==
              t.reduce(sigma_exp(t, b, c) + sigma_exp(t, a, bc)));
      }
}

TEST_CASE("radicals") {
  CHECK(radical_basis(torus(5, 2, {0, 1, 4, 0})) == std::vector<IntVec>{{5, 0}, {0, 5}});
  // generic q: only the zero degree is central
  CHECK(radical_basis(torus(0, 2, {0, 1, -1, 0})).empty());
  // q_12 = -1: rad = 2Z x 2Z
  CHECK(radical_basis(torus(2, 2, {0, 1, 1, 0})) == std::vector<IntVec>{{2, 0}, {0, 2}});
  // three generators with generic q and t_3 commuting: rad = Z e_3
  const auto r = radical_basis(torus(0, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}));
  CHECK(r == std::vector<IntVec>{{0, 0, 1}});
}

TEST_CASE("graded decomposition over the box") {
  const GradedCheck g = graded_decomposition_check(torus(5, 2, {0, 1, 4, 0}), 3);
  CHECK(g.certificate.verdict() == Verdict::pass);
  CHECK(g.classes.size() == 49);
  CHECK(g.certificate.dims.at("central") == 1);
  CHECK(g.certificate.dims.at("commutator") == 48);
  for (const auto& c : g.classes) {
    if (c.kind == MonomialKind::central) {
      CHECK_FALSE(c.witness);
      continue;
    }
    REQUIRE(c.witness);
    const auto& [x, y] = *c.witness;
    for (std::size_t i = 0; i < 2; ++i) CHECK(x[i] + y[i] == c.degree[i]);
  }

  const GradedCheck h = graded_decomposition_check(torus(2, 2, {0, 1, 1, 0}), 3);
  CHECK(h.certificate.verdict() == Verdict::pass);
  // even degrees in [-3, 3]^2: 3 x 3
  CHECK(h.certificate.dims.at("central") == 9);
  CHECK_THROWS_AS(graded_decomposition_check(torus(2, 2, {0, 1, 1, 0}), 0), ArgumentError);
}
