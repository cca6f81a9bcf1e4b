#include <doctest.h>

#include "liecert/catalog.hpp"
#include "liecert/derivations.hpp"
#include "liecert/errors.hpp"

using namespace liecert;

namespace {

std::vector<LieAlgebra> catalog_sample() {
  const Field q = Field::rationals();
  return {abelian(q, 1),      abelian(q, 2),        heisenberg(q),     affine2(q),
          special_linear(q, 2), special_linear(q, 3), current_sl2(q, 2), current_sl2(q, 3),
          special_linear(Field::prime(5), 2)};
}

}  // namespace

TEST_CASE("pinned derivation dimensions") {
  const Field q = Field::rationals();
  struct Row {
    LieAlgebra l;
    std::size_t der, inner;
  };
  std::vector<Row> rows = {{abelian(q, 2), 4, 0},         {heisenberg(q), 6, 2},        {affine2(q), 2, 2},
                           {special_linear(q, 2), 3, 3},  {special_linear(q, 3), 8, 8}, {current_sl2(q, 2), 7, 6},
                           {current_sl2(q, 3), 11, 9}};
  for (const auto& r : rows) {
    CAPTURE(r.l.dim());
    const DerivationSpace d = derivation_basis(r.l);
    CHECK(d.dim() == r.der);
    CHECK(d.inner.dim() == r.inner);
  }
}

TEST_CASE("basis elements satisfy the Leibniz rule directly") {
  for (const auto& l : catalog_sample()) {
    const DerivationSpace d = derivation_basis(l);
    for (const auto& m : d.basis) CHECK_FALSE(leibniz_violation(l, m));
    CHECK(validate(d.der_algebra).verdict() == Verdict::pass);
  }
}

TEST_CASE("[d, ad_x] = ad_{d(x)} for every basis derivation and basis vector") {
  for (const auto& l : catalog_sample()) {
    const DerivationSpace der = derivation_basis(l);
    for (const auto& d : der.basis)
      for (std::size_t i = 0; i < l.dim(); ++i)
        CHECK(commutator(d, ad_basis(l, i)) == ad_matrix(l, d.column(i)));
  }
}

TEST_CASE("center of Der g vanishes when g is centerless") {
  for (const auto& l : catalog_sample()) {
    if (!classify(l).is_centerless) continue;
    CAPTURE(l.dim());
    CHECK(center(derivation_basis(l).der_algebra).dim() == 0);
  }
}

TEST_CASE("ad is injective on centerless algebras and dim Der = inner + outer") {
  for (const auto& l : catalog_sample()) {
    const DerivationSpace der = derivation_basis(l);
    if (classify(l).is_centerless) CHECK(der.inner.dim() == l.dim());
    CHECK(der.inner.dim() == l.dim() - center(l).dim());
    const OuterCenter oc = outer_center(der);
    CHECK(der.dim() == der.inner.dim() + oc.outer.algebra.dim());
  }
}

TEST_CASE("coordinates round trip and reject non-derivations") {
  const LieAlgebra l = heisenberg(Field::rationals());
  const DerivationSpace der = derivation_basis(l);
  Vec c = {Scalar(1), Scalar(-2), Scalar(0), Scalar(3), Scalar(5), Scalar(1)};
  const Mat m = der.element(c);
  auto back = der.coordinates(m);
  REQUIRE(back);
  CHECK(*back == c);
  Mat bad(l.field(), 3, 3);
  bad(0, 0) = Scalar(1);  // scales x but not z
  CHECK(leibniz_violation(l, bad));
  CHECK_FALSE(der.coordinates(bad));
}

TEST_CASE("completeness certificates and witnesses") {
  const Field q = Field::rationals();
  const Certificate s = is_complete(special_linear(q, 2));
  CHECK(s.verdict() == Verdict::pass);
  CHECK(s.dims.at("outer") == 0);

  const Certificate a = is_complete(abelian(q, 1));
  CHECK(a.verdict() == Verdict::fail);
  REQUIRE(a.find_witness("central_vector"));
  CHECK(a.find_witness("central_vector")->rows[0] == Vec{Scalar(1)});

  const Certificate c = is_complete(current_sl2(q, 2));
  CHECK(c.verdict() == Verdict::fail);
  CHECK(c.find_claim("centerless")->holds);
  CHECK_FALSE(c.find_claim("all_derivations_inner")->holds);
  const Witness* w = c.find_witness("outer_derivation");
  REQUIRE(w);
  const Mat d = Mat::from_rows(q, 6, w->rows);
  CHECK_FALSE(leibniz_violation(current_sl2(q, 2), d));
  const DerivationSpace der = derivation_basis(current_sl2(q, 2));
  auto coords = der.coordinates(d);
  REQUIRE(coords);
  CHECK_FALSE(der.inner.contains(*coords));

  CHECK(is_complete(affine2(q)).verdict() == Verdict::pass);
}

TEST_CASE("outer centers") {
  const Field q = Field::rationals();
  CHECK(outer_center(special_linear(q, 2)).center.dim() == 0);
  const OuterCenter c2 = outer_center(current_sl2(q, 2));
  CHECK(c2.center.dim() == 1);
  REQUIRE(c2.lifts.size() == 1);
  CHECK_FALSE(leibniz_violation(current_sl2(q, 2), c2.lifts[0]));
  // Der of the truncated polynomial ring t^3 = 0 is non-abelian of dim 2
  CHECK(outer_center(current_sl2(q, 3)).center.dim() == 0);
}

TEST_CASE("derivation towers") {
  const Field q = Field::rationals();
  TowerReport t = derivation_tower(special_linear(q, 2));
  CHECK(t.dims == std::vector<std::size_t>{3});
  CHECK(t.status == TowerStatus::complete_reached);

  t = derivation_tower(current_sl2(q, 2));
  CHECK(t.dims == std::vector<std::size_t>{6, 7});
  CHECK(t.status == TowerStatus::complete_reached);
  REQUIRE(t.levels.size() == 2);

  t = derivation_tower(current_sl2(q, 2), 0);
  CHECK(t.dims == std::vector<std::size_t>{6});
  CHECK(t.status == TowerStatus::max_iterations);

  CHECK(derivation_tower(affine2(q)).dims == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(derivation_tower(heisenberg(q)), PreconditionError);
}
