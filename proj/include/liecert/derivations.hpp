#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liecert/certificate.hpp"
#include "liecert/lie_algebra.hpp"

namespace liecert {

/// Der(L) with its inner ideal and its own Lie structure under the commutator.
struct DerivationSpace {
  LieAlgebra parent;
  /// Canonical nullspace basis of the Leibniz system, as n x n matrices.
  std::vector<Mat> basis;
  /// Row-major positions (a*n + b) of the free unknowns; the coordinate of a
  /// derivation on basis[k] is its entry at free_columns[k].
  std::vector<std::size_t> free_columns;
  /// ad_L as a subspace of the coordinate space F^dim().
  Subspace inner;
  /// ad_L as matrices, one per basis vector of `inner`.
  std::vector<Mat> inner_basis;
  /// Structure constants of Der(L) in `basis`.
  LieAlgebra der_algebra;

  std::size_t dim() const { return basis.size(); }
  /// Coefficients of d in basis, or nullopt if d is not a derivation.
  std::optional<Vec> coordinates(const Mat& d) const;
  Mat element(std::span<const Scalar> coords) const;
};

/// Linear system over the n^2 unknowns d_ab (row-major) whose kernel is Der(L):
/// one block of n rows per pair i < j, in lexicographic order.
Mat leibniz_system(const LieAlgebra& l);

DerivationSpace derivation_basis(const LieAlgebra& l);

/// First basis pair (i, j) on which d([e_i,e_j]) != [d e_i, e_j] + [e_i, d e_j].
/// Evaluated directly, without the Leibniz system.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_violation(const LieAlgebra& l, const Mat& d);

/// Zero center and every derivation inner. Witnesses: "central_vector" or
/// "outer_derivation".
Certificate is_complete(const LieAlgebra& l);
Certificate is_complete(const DerivationSpace& der);

struct OuterCenter {
  /// Der(L) / ad_L in the coordinates of the derivation basis.
  Quotient outer;
  /// C(Der(L) / ad_L), in the quotient's coordinates.
  Subspace center;
  /// One derivation of L per center basis vector, representing that class.
  std::vector<Mat> lifts;
};

OuterCenter outer_center(const LieAlgebra& l);
OuterCenter outer_center(const DerivationSpace& der);

enum class TowerStatus { complete_reached, max_iterations };

const char* to_string(TowerStatus s);

struct TowerReport {
  std::vector<std::size_t> dims;
  TowerStatus status = TowerStatus::max_iterations;
  std::vector<LieAlgebra> levels;
};

/// L, Der L, Der Der L, ... until a complete level or max_levels derivation
/// steps. Throws PreconditionError if L has a nonzero center.
TowerReport derivation_tower(const LieAlgebra& l, std::size_t max_levels = 5);

}  // namespace liecert
