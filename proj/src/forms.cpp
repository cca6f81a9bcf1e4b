#include "liecert/forms.hpp"

#include "liecert/errors.hpp"

namespace liecert {

BilinearForm::BilinearForm(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw ShapeError("gram matrix is not square");
  if (!(gram_ == gram_.transpose())) throw ShapeError("gram matrix is not symmetric");
}

Scalar BilinearForm::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vec gy = gram_.apply(y);
  if (x.size() != gy.size()) throw ShapeError("form argument has the wrong length");
  Scalar s = gram_.field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

bool BilinearForm::is_nondegenerate() const { return rref_nullspace(gram_).rank == dim(); }

BilinearForm killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(l, i));
  Mat g(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = (ads[i] * ads[j]).trace();
      g(j, i) = g(i, j);
    }
  return BilinearForm(std::move(g));
}

BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b) {
  const std::size_t n = a.dim(), m = b.dim();
  Mat g(a.gram().field(), n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return BilinearForm(std::move(g));
}

std::optional<std::array<std::size_t, 3>> invariance_violation(const BilinearForm& b, const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (b.dim() != n) throw ShapeError("form and algebra dimensions differ");
  const Field& f = l.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = b(l.basis_bracket(i, j), unit_vec(f, n, k));
        Scalar rhs = b(unit_vec(f, n, i), l.basis_bracket(j, k));
        if (!(lhs == rhs)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

bool is_invariant(const BilinearForm& b, const LieAlgebra& l) { return !invariance_violation(b, l); }

Subspace orthogonal_complement(const BilinearForm& b, const Subspace& v) {
  if (v.ambient_dim() != b.dim()) throw ShapeError("subspace and form dimensions differ");
  std::vector<Vec> rows;
  for (const auto& y : v.basis()) rows.push_back(b.gram().apply(y));
  Mat m = Mat::from_rows(b.gram().field(), b.dim(), rows);
  return Subspace(b.gram().field(), b.dim(), rref_nullspace(m).nullspace);
}

Certificate check_perp_center(const BilinearForm& b, const LieAlgebra& l) {
  Certificate cert;
  cert.subject = "perp_center";
  const auto bad = invariance_violation(b, l);
  const bool nondeg = b.is_nondegenerate();
  cert.facts["invariant"] = !bad;
  cert.facts["nondegenerate"] = nondeg;
  cert.applicable = !bad && nondeg;
  if (bad)
    cert.witnesses.push_back({"invariance_triple", {Vec{Scalar(static_cast<long long>((*bad)[0])),
                                                        Scalar(static_cast<long long>((*bad)[1])),
                                                        Scalar(static_cast<long long>((*bad)[2]))}}});

  const auto derived = derived_subalgebra(l);
  const auto perp = orthogonal_complement(b, derived);
  const auto cen = center(l);
  cert.dims["dim"] = l.dim();
  cert.dims["derived"] = derived.dim();
  cert.dims["derived_perp"] = perp.dim();
  cert.dims["center"] = cen.dim();
  cert.facts["center_in_perp"] = perp.contains(cen);
  cert.facts["perp_in_center"] = cen.contains(perp);
  cert.add_claim("perp_equals_center", perp == cen);
  return cert;
}

}  // namespace liecert
