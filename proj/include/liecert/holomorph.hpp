#pragma once

#include <cstddef>
#include <vector>

#include "liecert/certificate.hpp"
#include "liecert/derivations.hpp"
#include "liecert/lie_algebra.hpp"

namespace liecert {

/// h(g) = g ⋊ Der g with [(x,d),(y,e)] = ([x,y] + d(y) - e(x), [d,e]).
///
/// Basis order: the n basis vectors of g, then the m derivation basis matrices.
struct Holomorph {
  LieAlgebra algebra;
  std::size_t g_dim = 0;
  std::size_t der_dim = 0;
  /// (n+m) x n and (n+m) x m inclusion matrices.
  Mat g_embedding;
  Mat der_embedding;
  DerivationSpace derivations;

  Subspace g_block() const;
};

/// Throws InternalError if the assembled table fails the Jacobi identity.
Holomorph build_holomorph(const LieAlgebra& l, const DerivationSpace& der);
Holomorph build_holomorph(const LieAlgebra& l);

/// Checks the hypotheses (perfect, centerless) and both parts of the
/// completeness theorem, each side computed independently:
///   part (i):  C(Der g) = 0 and Der(Der g) = ad_{Der g};
///   part (ii): h(g) complete  <=>  C(Der g / ad_g) = 0.
/// When a hypothesis fails the certificate is not_applicable and the direct
/// computations are still recorded in `facts` and `dims`.
Certificate verify_completeness_theorem(const LieAlgebra& l);

struct OuterHolomorphDerivation {
  /// (n+m) x (n+m): zero on g, d -> x_d - ad_{x_d} on the derivation block.
  Mat matrix;
  /// x_d for each derivation basis element d, with [D_outer, d] = ad_{x_d}.
  std::vector<Vec> x;
};

/// Builds the non-inner derivation of h(g) induced by a derivation D_outer of
/// g with D_outer outside ad_g and [D_outer, Der g] inside ad_g. The result is
/// re-verified as a derivation of h(g) lying outside ad_{h(g)}.
/// Throws PreconditionError (g not perfect/centerless, D_outer not a
/// derivation, D_outer inner, or a bracket escaping ad_g).
OuterHolomorphDerivation outer_holomorph_derivation(const Holomorph& h, const Mat& d_outer);
OuterHolomorphDerivation outer_holomorph_derivation(const LieAlgebra& l, const Mat& d_outer);

/// x with ad_x = target, or nullopt. Throws PreconditionError if ad is not
/// injective (nonzero center) so that x would not be unique.
std::optional<Vec> solve_inner(const LieAlgebra& l, const Mat& target);

}  // namespace liecert
