#include "liecert/holomorph.hpp"

#include <algorithm>
#include <string>

#include "liecert/errors.hpp"

namespace liecert {

namespace {

std::vector<Vec> matrix_rows(const Mat& m) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

Subspace inner_span(const LieAlgebra& l) {
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < l.dim(); ++i) flat.push_back(ad_basis(l, i).flatten());
  return Subspace(l.field(), l.dim() * l.dim(), flat);
}

}  // namespace

Subspace Holomorph::g_block() const {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < g_dim; ++i) units.push_back(unit_vec(algebra.field(), g_dim + der_dim, i));
  return Subspace(algebra.field(), g_dim + der_dim, units);
}

Holomorph build_holomorph(const LieAlgebra& l) { return build_holomorph(l, derivation_basis(l)); }

Holomorph build_holomorph(const LieAlgebra& l, const DerivationSpace& der) {
  if (!(der.parent == l)) throw PreconditionError("derivation space belongs to a different algebra");
  const Field& f = l.field();
  const std::size_t n = l.dim(), m = der.dim(), total = n + m;
  StructureTable t(f, total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(f, total);
      const auto& src = l.table().upper(i, j);
      std::copy(src.begin(), src.end(), v.begin());
      t.set(i, j, v);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      // [(e_i, 0), (0, d_a)] = -d_a(e_i)
      Vec v = zero_vec(f, total);
      for (std::size_t k = 0; k < n; ++k) v[k] = -der.basis[a](k, i);
      t.set(i, n + a, v);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec v = zero_vec(f, total);
      const auto& src = der.der_algebra.table().upper(a, b);
      std::copy(src.begin(), src.end(), v.begin() + n);
      t.set(n + a, n + b, v);
    }
  auto labels = l.labels();
  for (const auto& s : der.der_algebra.labels()) labels.push_back(s);
  LieAlgebra h(std::move(labels), std::move(t));
  auto cert = validate(h);
  if (cert.verdict() != Verdict::pass)
    throw InternalError("holomorph bracket fails Jacobi: " + cert.find_claim("jacobi")->detail);

  Mat g_emb(f, total, n), der_emb(f, total, m);
  for (std::size_t i = 0; i < n; ++i) g_emb(i, i) = f.one();
  for (std::size_t a = 0; a < m; ++a) der_emb(n + a, a) = f.one();
  return {std::move(h), n, m, std::move(g_emb), std::move(der_emb), der};
}

std::optional<Vec> solve_inner(const LieAlgebra& l, const Mat& target) {
  const std::size_t n = l.dim();
  if (target.rows() != n || target.cols() != n) throw ShapeError("target matrix has the wrong shape");
  Mat a(l.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) a.set_column(i, ad_basis(l, i).flatten());
  if (rref_nullspace(a).rank != n)
    throw PreconditionError("ad is not injective (nonzero center); x with ad_x = D is not unique");
  return solve(a, target.flatten());
}

Certificate verify_completeness_theorem(const LieAlgebra& l) {
  Certificate cert;
  cert.subject = "completeness_theorem";
  const auto derived = derived_subalgebra(l);
  const auto cen = center(l);
  const bool perfect = derived.dim() == l.dim();
  const bool centerless = cen.dim() == 0;
  cert.dims["dim"] = l.dim();
  cert.dims["derived"] = derived.dim();
  cert.dims["center"] = cen.dim();
  cert.add_claim("hypothesis_perfect", perfect);
  cert.add_claim("hypothesis_centerless", centerless);
  cert.applicable = perfect && centerless;
  if (!centerless) cert.witnesses.push_back({"central_vector", {cen.basis().front()}});

  const auto der = derivation_basis(l);
  cert.dims["der"] = der.dim();
  cert.dims["inner"] = der.inner.dim();

  // part (i): Der g as an algebra in its own right
  const auto der_der = derivation_basis(der.der_algebra);
  const auto der_cert = is_complete(der_der);
  cert.dims["der_center"] = der_cert.dims.at("center");
  cert.dims["der_der"] = der_der.dim();
  cert.dims["der_der_inner"] = der_der.inner.dim();
  const bool der_centerless = der_cert.find_claim("centerless")->holds;
  const bool der_all_inner = der_cert.find_claim("all_derivations_inner")->holds;
  cert.facts["der_centerless"] = der_centerless;
  cert.facts["der_all_inner"] = der_all_inner;
  cert.facts["der_complete"] = der_centerless && der_all_inner;

  // part (ii), left side: the holomorph, differentiated from scratch
  const auto h = build_holomorph(l, der);
  const auto h_der = derivation_basis(h.algebra);
  const auto h_cert = is_complete(h_der);
  const bool h_complete = h_cert.verdict() == Verdict::pass;
  cert.dims["holomorph"] = h.algebra.dim();
  cert.dims["holomorph_center"] = h_cert.dims.at("center");
  cert.dims["holomorph_der"] = h_der.dim();
  cert.dims["holomorph_inner"] = h_der.inner.dim();
  cert.facts["holomorph_complete"] = h_complete;
  if (const auto* w = h_cert.find_witness("outer_derivation"))
    cert.witnesses.push_back({"holomorph_outer_derivation", w->rows});

  // part (ii), right side: the outer derivation algebra
  const auto oc = outer_center(der);
  const bool outer_centerless = oc.center.dim() == 0;
  cert.dims["outer"] = oc.outer.algebra.dim();
  cert.dims["outer_center"] = oc.center.dim();
  cert.facts["outer_centerless"] = outer_centerless;
  if (!oc.lifts.empty()) cert.witnesses.push_back({"outer_center_lift", matrix_rows(oc.lifts.front())});

  if (cert.applicable) {
    cert.add_claim("part_i_der_centerless", der_centerless);
    cert.add_claim("part_i_der_all_inner", der_all_inner,
                   "dim Der(Der g) = " + std::to_string(der_der.dim()) +
                       ", inner = " + std::to_string(der_der.inner.dim()));
    cert.add_claim("part_ii_biconditional", h_complete == outer_centerless,
                   std::string("holomorph complete: ") + (h_complete ? "yes" : "no") +
                       "; outer center zero: " + (outer_centerless ? "yes" : "no"));
  }
  return cert;
}

OuterHolomorphDerivation outer_holomorph_derivation(const LieAlgebra& l, const Mat& d_outer) {
  return outer_holomorph_derivation(build_holomorph(l), d_outer);
}

OuterHolomorphDerivation outer_holomorph_derivation(const Holomorph& h, const Mat& d_outer) {
  const LieAlgebra& l = h.derivations.parent;
  const auto& der = h.derivations;
  const Field& f = l.field();
  const std::size_t n = h.g_dim, m = h.der_dim;
  const auto cls = classify(l);
  if (!cls.is_perfect || !cls.is_centerless)
    throw PreconditionError("outer holomorph derivation needs a perfect centerless algebra");
  if (d_outer.rows() != n || d_outer.cols() != n) throw ShapeError("D_outer has the wrong shape");
  if (auto bad = leibniz_violation(l, d_outer))
    throw PreconditionError("D_outer is not a derivation: Leibniz rule fails on (" + l.labels()[bad->first] +
                            ", " + l.labels()[bad->second] + ")");
  if (auto x = solve_inner(l, d_outer))
    throw PreconditionError("D_outer is inner: D_outer = ad_x with x = " + format_vec(*x));

  OuterHolomorphDerivation out{Mat(f, n + m, n + m), {}};
  for (std::size_t a = 0; a < m; ++a) {
    auto x = solve_inner(l, commutator(d_outer, der.basis[a]));
    if (!x)
      throw PreconditionError("[D_outer, " + der.der_algebra.labels()[a] + "] is not an inner derivation");
    auto coords = der.coordinates(ad_matrix(l, *x));
    if (!coords) throw InternalError("ad_x is not in the derivation span");
    for (std::size_t k = 0; k < n; ++k) out.matrix(k, n + a) = (*x)[k];
    for (std::size_t b = 0; b < m; ++b) out.matrix(n + b, n + a) = -(*coords)[b];
    out.x.push_back(std::move(*x));
  }
  if (auto bad = leibniz_violation(h.algebra, out.matrix))
    throw InternalError("constructed map is not a derivation of h(g) on (" + std::to_string(bad->first) + ", " +
                        std::to_string(bad->second) + ")");
  if (inner_span(h.algebra).contains(out.matrix.flatten()))
    throw InternalError("constructed derivation of h(g) is inner");
  return out;
}

}  // namespace liecert
