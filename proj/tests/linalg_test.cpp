#include <doctest.h>

#include "liecert/errors.hpp"
#include "liecert/linalg.hpp"

using namespace liecert;

namespace {

Vec q(std::initializer_list<long long> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Scalar(x));
  return v;
}

IntMat ints(std::size_t r, std::size_t c, std::initializer_list<long> xs) {
  IntMat m(r, c);
  std::size_t i = 0;
  for (long x : xs) {
    m(i / c, i % c) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  const Field f = Field::rationals();
  Scalar a = f.parse("3/2"), b = f.parse("-2/3");
  CHECK((a * b).to_string() == "-1");
  CHECK((a + b).to_string() == "5/6");
  CHECK((a / b).to_string() == "-9/4");
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(f.parse("1/0"), ArgumentError);
  CHECK_THROWS_AS(f.parse("x"), ArgumentError);
}

TEST_CASE("prime field residues") {
  const Field f7 = Field::prime(7);
  CHECK(f7.parse("10").to_string() == "3");
  CHECK(f7.parse("-1").to_string() == "6");
  CHECK((f7.from_int(3) * f7.from_int(5)).to_string() == "1");
  CHECK((f7.from_int(3).inverse() * f7.from_int(3)).is_one());
  CHECK(f7.parse("1/2").to_string() == "4");
  CHECK_THROWS_AS(f7.parse("1/7"), ArgumentError);
  CHECK_THROWS_AS(Field::prime(9), ArgumentError);
  CHECK_THROWS_AS(Field::prime(1), ArgumentError);
  CHECK_THROWS_AS(f7.from_int(1) + Field::prime(5).from_int(1), FieldMismatchError);
  // an untyped rational coerces into the prime field
  CHECK((f7.from_int(2) + Scalar(5)).is_zero());
}

TEST_CASE("canonical rref and nullspace") {
  const Field f = Field::rationals();
  std::vector<Vec> rows = {q({1, 2, 3}), q({2, 4, 7})};
  const RrefResult r = rref_nullspace(Mat::from_rows(f, 3, rows));
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.free_columns == std::vector<std::size_t>{1});
  REQUIRE(r.nullspace.size() == 1);
  CHECK(r.nullspace[0] == q({-2, 1, 0}));
  CHECK(Mat::from_rows(f, 3, rows).apply(r.nullspace[0]) == q({0, 0}));
}

TEST_CASE("rref of the zero and identity matrices") {
  const Field f = Field::rationals();
  CHECK(rref_nullspace(Mat(f, 2, 3)).nullspace.size() == 3);
  CHECK(rref_nullspace(Mat::identity(f, 4)).nullspace.empty());
}

TEST_CASE("span union and solve") {
  const Field f = Field::rationals();
  std::vector<Vec> a = {q({1, 0, 1})}, b = {q({2, 0, 2}), q({0, 1, 0})};
  CHECK(span_union_rank(f, a).rank == 1);
  CHECK(span_union_rank(f, a, b).rank == 2);
  std::vector<Vec> bad = {q({1, 2})};
  CHECK_THROWS_AS(span_union_rank(f, a, bad), ShapeError);

  std::vector<Vec> rows = {q({1, 1}), q({1, -1})};
  auto x = solve(Mat::from_rows(f, 2, rows), q({3, 1}));
  REQUIRE(x);
  CHECK(*x == q({2, 1}));
  std::vector<Vec> sing = {q({1, 1}), q({2, 2})};
  CHECK_FALSE(solve(Mat::from_rows(f, 2, sing), q({1, 3})));
}

TEST_CASE("subspace membership, coordinates and equality") {
  const Field f = Field::rationals();
  std::vector<Vec> gens = {q({1, 1, 0}), q({0, 1, 1})};
  const Subspace s(f, 3, gens);
  CHECK(s.dim() == 2);
  CHECK(s.contains(q({1, 2, 1})));
  CHECK_FALSE(s.contains(q({0, 0, 1})));
  auto c = s.coordinates(q({2, 3, 1}));
  REQUIRE(c);
  Vec back = zero_vec(f, 3);
  for (std::size_t i = 0; i < s.dim(); ++i) axpy(back, (*c)[i], s.basis()[i]);
  CHECK(back == q({2, 3, 1}));
  std::vector<Vec> other = {q({1, 2, 1}), q({1, 0, -1})};
  CHECK(s == Subspace(f, 3, other));
  CHECK(Subspace::whole(f, 3).contains(s));
  CHECK_FALSE(s.contains(Subspace::whole(f, 3)));
  CHECK(s.complement().size() == 1);
}

TEST_CASE("smith normal form") {
  const IntMat a = ints(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  const SmithForm s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.rank == 3);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 6);
  CHECK(s.d(2, 2) == 12);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(s.d(i, j) == 0);

  const IntMat z = ints(2, 3, {1, 2, 3, 2, 4, 6});
  const SmithForm t = smith_normal_form(z);
  CHECK(t.u * z * t.v == t.d);
  CHECK(t.rank == 1);
}

TEST_CASE("hermite basis and lattice membership") {
  std::vector<IntVec> gens = {{4, 6}, {2, 2}};
  const auto h = hermite_basis(gens, 2);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == IntVec{2, 0});
  CHECK(h[1] == IntVec{0, 2});
  CHECK(lattice_contains(h, IntVec{6, -4}));
  CHECK_FALSE(lattice_contains(h, IntVec{1, 0}));
}

TEST_CASE("integer kernels modulo N") {
  const IntMat e = ints(2, 2, {0, 1, -1, 0});
  auto k = smith_kernel(e, mpz_class(5));
  REQUIRE(k.size() == 2);
  CHECK(k[0] == IntVec{5, 0});
  CHECK(k[1] == IntVec{0, 5});

  // E a ≡ 0 mod 6 for E = [[0,2],[-2,0]] is 3Z x 3Z
  k = smith_kernel(ints(2, 2, {0, 2, -2, 0}), mpz_class(6));
  CHECK(k == std::vector<IntVec>{{3, 0}, {0, 3}});

  // modulus 0: exact kernel
  k = smith_kernel(ints(1, 2, {1, 1}), mpz_class(0));
  REQUIRE(k.size() == 1);
  CHECK(lattice_contains(k, IntVec{1, -1}));
  CHECK_THROWS_AS(smith_kernel(e, mpz_class(-1)), ArgumentError);
}
