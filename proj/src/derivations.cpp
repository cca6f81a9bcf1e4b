#include "liecert/derivations.hpp"

#include <string>

#include "liecert/errors.hpp"

namespace liecert {

std::optional<Vec> DerivationSpace::coordinates(const Mat& d) const {
  const auto& flat = d.flatten();
  if (flat.size() != parent.dim() * parent.dim()) throw ShapeError("derivation has the wrong shape");
  Vec c;
  for (auto col : free_columns) c.push_back(flat[col]);
  if (element(c) != d) return std::nullopt;
  return c;
}

Mat DerivationSpace::element(std::span<const Scalar> coords) const {
  if (coords.size() != basis.size()) throw ShapeError("coordinate vector has the wrong length");
  const std::size_t n = parent.dim();
  Mat m(parent.field(), n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coords[k].is_zero()) m += coords[k] * basis[k];
  return m;
}

Mat leibniz_system(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Field& f = l.field();
  std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) br[a][b] = l.basis_bracket(a, b);
  auto unknown = [n](std::size_t a, std::size_t b) { return a * n + b; };

  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  Mat sys(f, pairs * n, n * n);
  std::size_t block = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++block)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = block * n + k;
        // d([e_i, e_j])_k = sum_l c_ij^l d_kl
        for (std::size_t l2 = 0; l2 < n; ++l2)
          if (!br[i][j][l2].is_zero()) sys(row, unknown(k, l2)) += br[i][j][l2];
        // -[d e_i, e_j]_k = -sum_a d_ai c_aj^k ; -[e_i, d e_j]_k = -sum_a d_aj c_ia^k
        for (std::size_t a = 0; a < n; ++a) {
          if (!br[a][j][k].is_zero()) sys(row, unknown(a, i)) -= br[a][j][k];
          if (!br[i][a][k].is_zero()) sys(row, unknown(a, j)) -= br[i][a][k];
        }
      }
  return sys;
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_violation(const LieAlgebra& l, const Mat& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) throw ShapeError("derivation candidate has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = d.apply(l.basis_bracket(i, j));
      Vec rhs = add(bracket(l, d.column(i), unit_vec(l.field(), n, j)),
                    bracket(l, unit_vec(l.field(), n, i), d.column(j)));
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

DerivationSpace derivation_basis(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Field& f = l.field();
  auto red = rref_nullspace(leibniz_system(l));

  std::vector<Mat> basis;
  for (const auto& v : red.nullspace) basis.push_back(Mat::from_flat(f, n, n, v));
  const std::size_t m = basis.size();

  DerivationSpace der{l, std::move(basis), red.free_columns, Subspace::zero(f, m), {},
                      LieAlgebra({}, StructureTable(f, 0))};

  std::vector<Vec> inner_coords;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = der.coordinates(ad_basis(l, i));
    if (!c) throw InternalError("ad of basis vector " + l.labels()[i] + " is not a derivation");
    inner_coords.push_back(std::move(*c));
  }
  der.inner = Subspace(f, m, inner_coords);
  for (const auto& v : der.inner.basis()) der.inner_basis.push_back(der.element(v));

  StructureTable t(f, m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("d" + std::to_string(a));
    for (std::size_t b = a + 1; b < m; ++b) {
      auto c = der.coordinates(commutator(der.basis[a], der.basis[b]));
      if (!c) throw InternalError("commutator of derivations left Der");
      t.set(a, b, *c);
    }
  }
  der.der_algebra = LieAlgebra(std::move(labels), std::move(t));
  require_valid(der.der_algebra);
  return der;
}

Certificate is_complete(const LieAlgebra& l) { return is_complete(derivation_basis(l)); }

Certificate is_complete(const DerivationSpace& der) {
  const LieAlgebra& l = der.parent;
  Certificate cert;
  cert.subject = "complete";
  auto c = center(l);
  cert.dims["dim"] = l.dim();
  cert.dims["center"] = c.dim();
  cert.dims["der"] = der.dim();
  cert.dims["inner"] = der.inner.dim();
  cert.dims["outer"] = der.dim() - der.inner.dim();

  cert.add_claim("centerless", c.dim() == 0);
  if (c.dim() != 0) cert.witnesses.push_back({"central_vector", {c.basis().front()}});

  std::vector<Vec> inner_flat, der_flat;
  for (const auto& m : der.inner_basis) inner_flat.push_back(m.flatten());
  for (const auto& m : der.basis) der_flat.push_back(m.flatten());
  const std::size_t inner_rank = span_union_rank(l.field(), inner_flat).rank;
  const std::size_t union_rank = span_union_rank(l.field(), inner_flat, der_flat).rank;
  const bool all_inner = union_rank == inner_rank;
  cert.add_claim("all_derivations_inner", all_inner,
                 "rank(ad) = " + std::to_string(inner_rank) + ", rank(ad + Der) = " + std::to_string(union_rank));
  if (!all_inner) {
    Subspace inner_span(l.field(), l.dim() * l.dim(), inner_flat);
    for (const auto& m : der.basis)
      if (!inner_span.contains(m.flatten())) {
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
        cert.witnesses.push_back({"outer_derivation", std::move(rows)});
        break;
      }
  }
  return cert;
}

OuterCenter outer_center(const LieAlgebra& l) { return outer_center(derivation_basis(l)); }

OuterCenter outer_center(const DerivationSpace& der) {
  // ad_L is an ideal of Der L by [d, ad_x] = ad_{d(x)}; a failure here is a bug
  Quotient q = [&] {
    try {
      return quotient_algebra(der.der_algebra, der.inner);
    } catch (const PreconditionError& e) {
      throw InternalError(std::string("inner derivations are not an ideal: ") + e.what());
    }
  }();
  Subspace c = center(q.algebra);
  std::vector<Mat> lifts;
  for (const auto& v : c.basis()) {
    Vec coords = zero_vec(der.parent.field(), der.dim());
    for (std::size_t a = 0; a < q.complement.size(); ++a) coords[q.complement[a]] = v[a];
    lifts.push_back(der.element(coords));
  }
  return {std::move(q), std::move(c), std::move(lifts)};
}

const char* to_string(TowerStatus s) {
  return s == TowerStatus::complete_reached ? "complete_reached" : "max_iterations";
}

TowerReport derivation_tower(const LieAlgebra& l, std::size_t max_levels) {
  auto c = center(l);
  if (c.dim() != 0)
    throw PreconditionError("derivation tower needs a centerless algebra; central vector " +
                            format_vec(c.basis().front()));
  TowerReport report;
  report.levels.push_back(l);
  report.dims.push_back(l.dim());
  for (std::size_t level = 0;; ++level) {
    auto der = derivation_basis(report.levels.back());
    if (is_complete(der).verdict() == Verdict::pass) {
      report.status = TowerStatus::complete_reached;
      break;
    }
    if (level == max_levels) {
      report.status = TowerStatus::max_iterations;
      break;
    }
    if (center(der.der_algebra).dim() != 0)
      throw InternalError("derivation algebra of a centerless algebra has a center");
    report.levels.push_back(der.der_algebra);
    report.dims.push_back(der.der_algebra.dim());
  }
  return report;
}

}  // namespace liecert
