#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecert/certificate.hpp"
#include "liecert/linalg.hpp"

namespace liecert {

/// Mutable staging area for structure constants [e_i, e_j] = sum_k c_ij^k e_k.
///
/// Only pairs i < j are stored; set(j, i, v) stores -v at (i, j).
class StructureTable {
 public:
  StructureTable(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }

  void set(std::size_t i, std::size_t j, std::span<const Scalar> v);
  void set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  /// [e_i, e_j], mirrored for i > j and zero for i == j.
  Vec get(std::size_t i, std::size_t j) const;
  const Vec& upper(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  Field field_;
  std::size_t n_;
  std::vector<Vec> entries_;
};

/// A finite-dimensional Lie algebra given by structure constants on a basis.
///
/// Antisymmetry holds by construction. The Jacobi identity is not checked by
/// the constructor; callers building algebras run require_valid().
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, StructureTable table);

  const Field& field() const { return table_.field(); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTable& table() const { return table_; }

  /// [e_i, e_j]
  Vec basis_bracket(std::size_t i, std::size_t j) const { return table_.get(i, j); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  std::vector<std::string> labels_;
  StructureTable table_;
};

/// Exhaustive check of the Jacobi identity over basis triples i < j < k.
/// Failing certificates carry the first violating triple as witness "triple".
Certificate validate(const LieAlgebra& l);
/// Throws AxiomError with the first violating triple.
void require_valid(const LieAlgebra& l);

Vec bracket(const LieAlgebra& l, std::span<const Scalar> x, std::span<const Scalar> y);
/// Matrix of y -> [x, y].
Mat ad_matrix(const LieAlgebra& l, std::span<const Scalar> x);
Mat ad_basis(const LieAlgebra& l, std::size_t i);

Subspace center(const LieAlgebra& l);
Subspace derived_subalgebra(const LieAlgebra& l);

struct Classification {
  bool is_perfect = false;
  bool is_centerless = false;
};
Classification classify(const LieAlgebra& l);

/// First pair (basis index k, ideal basis index r) with [e_k, v_r] outside i.
std::optional<std::pair<std::size_t, std::size_t>> ideal_violation(const LieAlgebra& l, const Subspace& i);

struct Quotient {
  LieAlgebra algebra;
  /// dim(L/I) x dim(L), sends v to its class in complement coordinates.
  Mat projection;
  /// Basis indices of L used as representatives (non-pivots of I).
  std::vector<std::size_t> complement;
};

/// L / I on the non-pivot coordinates of I. Throws PreconditionError when I is
/// not an ideal.
Quotient quotient_algebra(const LieAlgebra& l, const Subspace& i);

/// Block-diagonal sum; throws FieldMismatchError for different fields.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liecert
