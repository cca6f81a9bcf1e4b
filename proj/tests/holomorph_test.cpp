#include <doctest.h>

#include "liecert/catalog.hpp"
#include "liecert/errors.hpp"
#include "liecert/holomorph.hpp"

using namespace liecert;

TEST_CASE("holomorph bracket on mixed pairs") {
  const LieAlgebra l = special_linear(Field::rationals(), 2);
  const Holomorph h = build_holomorph(l);
  CHECK(h.algebra.dim() == 6);
  CHECK(h.g_dim == 3);
  CHECK(h.der_dim == 3);
  CHECK(validate(h.algebra).verdict() == Verdict::pass);
  for (std::size_t a = 0; a < h.der_dim; ++a)
    for (std::size_t i = 0; i < h.g_dim; ++i) {
      // [e_i, D_a] = -D_a(e_i), inside the g block
      Vec expect = zero_vec(l.field(), 6);
      Vec de = h.derivations.basis[a].column(i);
      for (std::size_t k = 0; k < 3; ++k) expect[k] = -de[k];
      CHECK(h.algebra.basis_bracket(i, 3 + a) == expect);
    }
  CHECK_FALSE(ideal_violation(h.algebra, h.g_block()));
}

TEST_CASE("holomorph of current_sl2(2) is valid, centerless and not complete") {
  const LieAlgebra l = current_sl2(Field::rationals(), 2);
  const Holomorph h = build_holomorph(l);
  CHECK(h.algebra.dim() == 13);
  CHECK(center(h.algebra).dim() == 0);
  const Certificate c = is_complete(h.algebra);
  CHECK(c.verdict() == Verdict::fail);
  CHECK(c.dims.at("der") == 14);
  CHECK(c.dims.at("inner") == 13);
}

TEST_CASE("an outer-center derivation induces a verified non-inner derivation of h(g)") {
  const LieAlgebra l = current_sl2(Field::rationals(), 2);
  const Holomorph h = build_holomorph(l);
  const OuterCenter oc = outer_center(h.derivations);
  REQUIRE(oc.lifts.size() == 1);
  const OuterHolomorphDerivation od = outer_holomorph_derivation(h, oc.lifts[0]);
  CHECK(od.matrix.rows() == 13);
  CHECK_FALSE(leibniz_violation(h.algebra, od.matrix));
  const DerivationSpace dh = derivation_basis(h.algebra);
  auto coords = dh.coordinates(od.matrix);
  REQUIRE(coords);
  CHECK_FALSE(dh.inner.contains(*coords));
  // zero on the g block
  for (std::size_t i = 0; i < h.g_dim; ++i) CHECK(is_zero(od.matrix.column(i)));
  // each x_d solves ad_x = [D, d]
  for (std::size_t a = 0; a < h.der_dim; ++a)
    CHECK(ad_matrix(l, od.x[a]) == commutator(oc.lifts[0], h.derivations.basis[a]));
}

TEST_CASE("outer_holomorph_derivation preconditions") {
  const Field q = Field::rationals();
  const LieAlgebra l = current_sl2(q, 2);
  CHECK_THROWS_AS(outer_holomorph_derivation(l, ad_basis(l, 0)), PreconditionError);
  Mat not_der(q, 6, 6);
  not_der(0, 0) = Scalar(1);
  CHECK_THROWS_AS(outer_holomorph_derivation(l, not_der), PreconditionError);
  const LieAlgebra h3 = heisenberg(q);
  CHECK_THROWS_AS(outer_holomorph_derivation(h3, Mat::identity(q, 3)), PreconditionError);
}

TEST_CASE("solve_inner") {
  const Field q = Field::rationals();
  const LieAlgebra s = special_linear(q, 2);
  Vec x = {Scalar(2), Scalar(-1), q.parse("1/3")};
  auto back = solve_inner(s, ad_matrix(s, x));
  REQUIRE(back);
  CHECK(*back == x);
  CHECK_FALSE(solve_inner(s, Mat::identity(q, 3)));
  CHECK_THROWS_AS(solve_inner(heisenberg(q), Mat(q, 3, 3)), PreconditionError);
}

TEST_CASE("theorem certificate on the pinned cases") {
  const Field q = Field::rationals();
  Certificate c = verify_completeness_theorem(special_linear(q, 2));
  CHECK(c.verdict() == Verdict::pass);
  CHECK(c.facts.at("der_complete"));
  CHECK(c.facts.at("holomorph_complete"));
  CHECK(c.facts.at("outer_centerless"));

  c = verify_completeness_theorem(current_sl2(q, 2));
  CHECK(c.verdict() == Verdict::pass);
  CHECK(c.facts.at("der_complete"));
  CHECK_FALSE(c.facts.at("holomorph_complete"));
  CHECK_FALSE(c.facts.at("outer_centerless"));
  CHECK(c.dims.at("outer_center") == 1);
  CHECK(c.find_witness("holomorph_outer_derivation"));

  for (const auto& l : {heisenberg(q), abelian(q, 2), affine2(q)}) {
    c = verify_completeness_theorem(l);
    CHECK(c.verdict() == Verdict::not_applicable);
    CHECK_FALSE(c.applicable);
  }
}
