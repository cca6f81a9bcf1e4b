#include <doctest.h>

#include "liecert/catalog.hpp"
#include "liecert/errors.hpp"
#include "liecert/lie_algebra.hpp"

using namespace liecert;

namespace {

// sl_2 with [e,f] = e instead of h
LieAlgebra broken_sl2() {
  const Field f = Field::rationals();
  StructureTable t(f, 3);
  t.set_coeff(0, 1, 0, f.one());
  t.set_coeff(0, 2, 0, f.from_int(-2));
  t.set_coeff(1, 2, 1, f.from_int(2));
  return LieAlgebra({"e", "f", "h"}, std::move(t));
}

std::vector<LieAlgebra> samples() {
  const Field q = Field::rationals();
  return {abelian(q, 2), heisenberg(q), affine2(q), special_linear(q, 2), special_linear(q, 3), current_sl2(q, 2),
          special_linear(Field::prime(5), 2)};
}

}  // namespace

TEST_CASE("structure table stores the antisymmetric half") {
  const Field f = Field::rationals();
  StructureTable t(f, 2);
  t.set_coeff(1, 0, 1, f.one());  // [y, x] = y
  CHECK(t.get(0, 1) == Vec{f.zero(), f.from_int(-1)});
  CHECK(t.get(1, 0) == Vec{f.zero(), f.one()});
  CHECK(is_zero(t.get(1, 1)));
}

TEST_CASE("label count must match the table") {
  CHECK_THROWS_AS(LieAlgebra({"a"}, StructureTable(Field::rationals(), 2)), ShapeError);
}

TEST_CASE("Jacobi failure is reported with its triple") {
  const LieAlgebra l = broken_sl2();
  const Certificate c = validate(l);
  CHECK(c.verdict() == Verdict::fail);
  const Witness* w = c.find_witness("triple");
  REQUIRE(w);
  CHECK(w->rows[0] == Vec{Scalar(0), Scalar(1), Scalar(2)});
  REQUIRE(c.find_witness("jacobi_defect"));
  try {
    require_valid(l);
    FAIL("expected an axiom error");
  } catch (const AxiomError& e) {
    CHECK(e.triple() == std::array<std::size_t, 3>{0, 1, 2});
  }
}

TEST_CASE("ad is a homomorphism: ad_[x,y] = [ad_x, ad_y]") {
  for (const auto& l : samples()) {
    CAPTURE(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j)
        CHECK(ad_matrix(l, l.basis_bracket(i, j)) == commutator(ad_basis(l, i), ad_basis(l, j)));
  }
}

TEST_CASE("bracket is bilinear and antisymmetric on arbitrary vectors") {
  const LieAlgebra l = special_linear(Field::rationals(), 2);
  const Field& f = l.field();
  Vec x = {f.parse("1/2"), f.from_int(3), f.from_int(-1)};
  Vec y = {f.from_int(2), f.parse("-5/3"), f.from_int(4)};
  Vec z = {f.from_int(0), f.one(), f.parse("7/2")};
  CHECK(bracket(l, x, y) == scale(f.from_int(-1), bracket(l, y, x)));
  CHECK(bracket(l, add(x, z), y) == add(bracket(l, x, y), bracket(l, z, y)));
  CHECK(is_zero(bracket(l, x, x)));
}

TEST_CASE("center and derived subalgebra") {
  const Field q = Field::rationals();
  const LieAlgebra h = heisenberg(q);
  CHECK(center(h) == Subspace(q, 3, std::vector<Vec>{unit_vec(q, 3, 2)}));
  CHECK(derived_subalgebra(h).dim() == 1);
  CHECK(center(special_linear(q, 2)).dim() == 0);
  CHECK(derived_subalgebra(affine2(q)).dim() == 1);
  CHECK(center(affine2(q)).dim() == 0);
  CHECK(center(abelian(q, 3)).dim() == 3);
}

TEST_CASE("quotients by ideals") {
  const Field q = Field::rationals();
  const LieAlgebra c = current_sl2(q, 2);
  std::vector<Vec> tpart;
  for (std::size_t i = 3; i < 6; ++i) tpart.push_back(unit_vec(q, 6, i));
  const Subspace ideal(q, 6, tpart);
  CHECK_FALSE(ideal_violation(c, ideal));
  const Quotient quo = quotient_algebra(c, ideal);
  CHECK(quo.algebra.dim() == 3);
  CHECK(validate(quo.algebra).verdict() == Verdict::pass);
  CHECK(classify(quo.algebra).is_perfect);

  // span{e} is a subalgebra but not an ideal of sl_2
  const LieAlgebra s = special_linear(q, 2);
  const Subspace e_line(q, 3, std::vector<Vec>{unit_vec(q, 3, 0)});
  CHECK(ideal_violation(s, e_line));
  CHECK_THROWS_AS(quotient_algebra(s, e_line), PreconditionError);
}

TEST_CASE("direct sums") {
  const Field q = Field::rationals();
  const LieAlgebra d = direct_sum(special_linear(q, 2), abelian(q, 1));
  CHECK(d.dim() == 4);
  CHECK(center(d).dim() == 1);
  CHECK(derived_subalgebra(d).dim() == 3);
  CHECK(validate(d).verdict() == Verdict::pass);
  CHECK_THROWS_AS(direct_sum(abelian(q, 1), abelian(Field::prime(3), 1)), FieldMismatchError);
}
