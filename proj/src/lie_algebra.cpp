#include "liecert/lie_algebra.hpp"

#include <algorithm>

#include "liecert/errors.hpp"

namespace liecert {

StructureTable::StructureTable(Field f, std::size_t n)
    : field_(f), n_(n), entries_(n * (n > 0 ? n - 1 : 0) / 2, zero_vec(f, n)) {}

std::size_t StructureTable::index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_)
    throw ShapeError("structure index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 0 <= i < j < " + std::to_string(n_));
  // row-major over the strict upper triangle
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void StructureTable::set(std::size_t i, std::size_t j, std::span<const Scalar> v) {
  if (v.size() != n_) throw ShapeError("bracket value has wrong length");
  if (i == j) {
    if (!is_zero(v)) throw ShapeError("[e_i, e_i] must vanish");
    return;
  }
  Vec w;
  for (const auto& s : v) w.push_back(field_.zero() + s);
  if (i < j) {
    entries_[index(i, j)] = std::move(w);
  } else {
    for (auto& s : w) s = -s;
    entries_[index(j, i)] = std::move(w);
  }
}

void StructureTable::set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (k >= n_) throw ShapeError("structure index k = " + std::to_string(k) + " out of range");
  if (i == j) {
    if (!c.is_zero()) throw ShapeError("[e_i, e_i] must vanish");
    return;
  }
  if (i < j)
    entries_[index(i, j)][k] = field_.zero() + c;
  else
    entries_[index(j, i)][k] = -(field_.zero() + c);
}

Vec StructureTable::get(std::size_t i, std::size_t j) const {
  if (i == j) {
    if (i >= n_) throw ShapeError("basis index out of range");
    return zero_vec(field_, n_);
  }
  if (i < j) return entries_[index(i, j)];
  Vec v = entries_[index(j, i)];
  for (auto& s : v) s = -s;
  return v;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, StructureTable table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  if (labels_.size() != table_.dim())
    throw ShapeError(std::to_string(labels_.size()) + " labels for a structure table of dimension " +
                     std::to_string(table_.dim()));
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field() || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.table_.upper(i, j) != b.table_.upper(i, j)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Vec bracket(const LieAlgebra& l, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = l.dim();
  if (x.size() != n || y.size() != n) throw ShapeError("bracket operand has wrong length");
  Vec out = zero_vec(l.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar c = x[i] * y[j] - x[j] * y[i];
      if (!c.is_zero()) axpy(out, c, l.table().upper(i, j));
    }
  return out;
}

Mat ad_matrix(const LieAlgebra& l, std::span<const Scalar> x) {
  const std::size_t n = l.dim();
  if (x.size() != n) throw ShapeError("ad operand has wrong length");
  Mat m(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Vec b = l.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) m(k, j) += x[i] * b[k];
    }
  }
  return m;
}

Mat ad_basis(const LieAlgebra& l, std::size_t i) { return ad_matrix(l, unit_vec(l.field(), l.dim(), i)); }

Certificate validate(const LieAlgebra& l) {
  Certificate cert;
  cert.subject = "validate";
  cert.dims["dim"] = l.dim();
  // stored only for i < j and mirrored on read
  cert.add_claim("antisymmetry", true, "enforced by the structure table");
  const std::size_t n = l.dim();
  const Field& f = l.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ek = unit_vec(f, n, k), ei = unit_vec(f, n, i), ej = unit_vec(f, n, j);
        Vec sum = bracket(l, l.basis_bracket(i, j), ek);
        sum = add(sum, bracket(l, l.basis_bracket(j, k), ei));
        sum = add(sum, bracket(l, l.basis_bracket(k, i), ej));
        if (!is_zero(sum)) {
          cert.add_claim("jacobi", false,
                         "Jacobi identity fails on (" + l.labels()[i] + ", " + l.labels()[j] + ", " +
                             l.labels()[k] + ")");
          cert.witnesses.push_back({"triple", {Vec{Scalar(static_cast<long long>(i)),
                                                   Scalar(static_cast<long long>(j)),
                                                   Scalar(static_cast<long long>(k))}}});
          cert.witnesses.push_back({"jacobi_defect", {sum}});
          return cert;
        }
      }
  cert.add_claim("jacobi", true);
  return cert;
}

void require_valid(const LieAlgebra& l) {
  auto cert = validate(l);
  if (cert.verdict() == Verdict::pass) return;
  const auto& t = cert.find_witness("triple")->rows.front();
  auto idx = [&](std::size_t k) { return static_cast<std::size_t>(t[k].rational().get_num().get_ui()); };
  throw AxiomError(cert.find_claim("jacobi")->detail, {idx(0), idx(1), idx(2)});
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Mat stacked(l.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat a = ad_basis(l, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return Subspace(l.field(), n, rref_nullspace(stacked).nullspace);
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  std::vector<Vec> brackets;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) brackets.push_back(l.table().upper(i, j));
  return Subspace(l.field(), l.dim(), brackets);
}

Classification classify(const LieAlgebra& l) {
  return {derived_subalgebra(l).dim() == l.dim(), center(l).dim() == 0};
}

std::optional<std::pair<std::size_t, std::size_t>> ideal_violation(const LieAlgebra& l, const Subspace& i) {
  if (i.ambient_dim() != l.dim()) throw ShapeError("subspace lives in a different dimension");
  for (std::size_t k = 0; k < l.dim(); ++k)
    for (std::size_t r = 0; r < i.dim(); ++r)
      if (!i.contains(bracket(l, unit_vec(l.field(), l.dim(), k), i.basis()[r]))) return std::make_pair(k, r);
  return std::nullopt;
}

Quotient quotient_algebra(const LieAlgebra& l, const Subspace& i) {
  if (auto bad = ideal_violation(l, i))
    throw PreconditionError("subspace is not an ideal: [" + l.labels()[bad->first] + ", ideal basis vector " +
                            std::to_string(bad->second) + "] escapes it");
  const Field& f = l.field();
  auto comp = i.complement();
  const std::size_t q = comp.size();
  Mat proj(f, q, l.dim());
  for (std::size_t c = 0; c < l.dim(); ++c) {
    Vec red = i.reduce(unit_vec(f, l.dim(), c));
    for (std::size_t a = 0; a < q; ++a) proj(a, c) = red[comp[a]];
  }
  StructureTable t(f, q);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back(l.labels()[comp[a]]);
    for (std::size_t b = a + 1; b < q; ++b) t.set(a, b, proj.apply(l.basis_bracket(comp[a], comp[b])));
  }
  LieAlgebra out(std::move(labels), std::move(t));
  require_valid(out);
  return {std::move(out), std::move(proj), std::move(comp)};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field())
    throw FieldMismatchError("direct sum of algebras over " + a.field().name() + " and " + b.field().name());
  const std::size_t n = a.dim(), m = b.dim();
  StructureTable t(a.field(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(a.field(), n + m);
      auto src = a.table().upper(i, j);
      std::copy(src.begin(), src.end(), v.begin());
      t.set(i, j, v);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec v = zero_vec(a.field(), n + m);
      auto src = b.table().upper(i, j);
      std::copy(src.begin(), src.end(), v.begin() + n);
      t.set(n + i, n + j, v);
    }
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  LieAlgebra out(std::move(labels), std::move(t));
  require_valid(out);
  return out;
}

}  // namespace liecert
