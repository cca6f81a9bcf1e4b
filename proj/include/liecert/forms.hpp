#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "liecert/certificate.hpp"
#include "liecert/lie_algebra.hpp"

namespace liecert {

/// Symmetric bilinear form B(x, y) = x^T G y on a Lie algebra's coordinate space.
class BilinearForm {
 public:
  /// Throws ShapeError unless gram is square and symmetric.
  explicit BilinearForm(Mat gram);

  const Mat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
  bool is_nondegenerate() const;

 private:
  Mat gram_;
};

/// gram_ij = trace(ad_{e_i} ad_{e_j})
BilinearForm killing_form(const LieAlgebra& l);

/// Block-diagonal form on a direct sum.
BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b);

/// First basis triple (i, j, k) with B([e_i,e_j], e_k) != B(e_i, [e_j,e_k]).
std::optional<std::array<std::size_t, 3>> invariance_violation(const BilinearForm& b, const LieAlgebra& l);
bool is_invariant(const BilinearForm& b, const LieAlgebra& l);

/// {x : B(x, v) = 0 for all v in V}
Subspace orthogonal_complement(const BilinearForm& b, const Subspace& v);

/// Compares [g,g]^⊥ with C(g). Not applicable unless B is invariant and
/// nondegenerate; both sides are computed either way.
Certificate check_perp_center(const BilinearForm& b, const LieAlgebra& l);

}  // namespace liecert
