#include "liecert/catalog.hpp"

#include "liecert/errors.hpp"

namespace liecert {

namespace {

LieAlgebra finish(std::vector<std::string> labels, StructureTable t) {
  LieAlgebra l(std::move(labels), std::move(t));
  require_valid(l);
  return l;
}

}  // namespace

LieAlgebra abelian(const Field& f, std::size_t n) {
  if (n < 1) throw ArgumentError("abelian algebra needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return finish(std::move(labels), StructureTable(f, n));
}

LieAlgebra heisenberg(const Field& f) {
  StructureTable t(f, 3);
  t.set_coeff(0, 1, 2, f.one());
  return finish({"x", "y", "z"}, std::move(t));
}

LieAlgebra affine2(const Field& f) {
  StructureTable t(f, 2);
  t.set_coeff(0, 1, 1, f.one());
  return finish({"x", "y"}, std::move(t));
}

LieAlgebra special_linear(const Field& f, std::size_t n) {
  if (n < 2) throw ArgumentError("sl_n needs n >= 2");
  if (f.is_prime() && n % f.characteristic() == 0)
    throw ArgumentError("sl_" + std::to_string(n) + " over " + f.name() + " has a nonzero center");
  // basis matrices as dense n x n integer patterns
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat m(f, n, n);
      m(i, j) = f.one();
      basis.push_back(m);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Mat m(f, n, n);
    m(i, i) = f.one();
    m(i + 1, i + 1) = -f.one();
    basis.push_back(m);
    labels.push_back("H" + std::to_string(i + 1));
  }
  if (n == 2) labels = {"e", "f", "h"};
  const std::size_t dim = basis.size();
  const std::size_t offdiag = n * (n - 1);

  // coordinates of a traceless matrix: off-diagonal entries directly, the
  // diagonal through cumulative sums c_i = d_1 + ... + d_i
  auto coords = [&](const Mat& m) {
    Vec v = zero_vec(f, dim);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) v[idx++] = m(i, j);
    Scalar run = f.zero();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      run += m(i, i);
      v[offdiag + i] = run;
    }
    return v;
  };

  StructureTable t(f, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) t.set(a, b, coords(commutator(basis[a], basis[b])));
  return finish(std::move(labels), std::move(t));
}

LieAlgebra current_sl2(const Field& f, std::size_t k) {
  if (k < 1) throw ArgumentError("current_sl2 needs k >= 1");
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw ArgumentError("current_sl2 is not supported in characteristic 2 or 3");
  const LieAlgebra s = special_linear(f, 2);
  const std::size_t dim = 3 * k;
  StructureTable t(f, dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < 3; ++x) {
      std::string suffix = i == 0 ? "" : (i == 1 ? "*t" : "*t^" + std::to_string(i));
      labels.push_back(s.labels()[x] + suffix);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j)
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
          const std::size_t a = 3 * i + x, b = 3 * j + y;
          if (a >= b) continue;
          Vec v = zero_vec(f, dim);
          Vec xy = s.basis_bracket(x, y);
          for (std::size_t z = 0; z < 3; ++z) v[3 * (i + j) + z] = xy[z];
          t.set(a, b, v);
        }
  return finish(std::move(labels), std::move(t));
}

LieAlgebra build_named(const CatalogSpec& spec) {
  const Field& f = spec.field;
  if (spec.name == "abelian") return abelian(f, spec.n);
  if (spec.name == "heisenberg") return heisenberg(f);
  if (spec.name == "affine2") return affine2(f);
  if (spec.name == "sl") return special_linear(f, spec.n);
  if (spec.name == "current_sl2") return current_sl2(f, spec.k);
  if (spec.name == "direct_sum") {
    if (spec.parts.empty()) throw ArgumentError("direct_sum needs at least one part");
    LieAlgebra acc = build_named(spec.parts.front());
    for (std::size_t i = 1; i < spec.parts.size(); ++i) acc = direct_sum(acc, build_named(spec.parts[i]));
    return acc;
  }
  throw ArgumentError("unknown catalog entry '" + spec.name + "'");
}

}  // namespace liecert
