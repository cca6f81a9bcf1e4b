#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liecert/certificate.hpp"
#include "liecert/linalg.hpp"

namespace liecert {

/// Quantum torus at the level of exponents: q_ij = ζ^{E_ij} for a primitive
/// root of unity ζ of order N, or a generic q when N = 0.
///
/// All scalar identities are tracked as exponents mod N, so no cyclotomic
/// arithmetic is needed: f(a,b) = 1 exactly when f_exp(a,b) ≡ 0.
class ExponentTorus {
 public:
  /// e must be n x n with zero diagonal and e_ji ≡ -e_ij (mod N, or exactly
  /// when N = 0). Entries are stored reduced into [0, N) when N > 0.
  /// Throws ArgumentError or ShapeError.
  ExponentTorus(mpz_class order, IntMat e);

  std::size_t rank() const { return e_.rows(); }
  const mpz_class& order() const { return order_; }
  const IntMat& exponents() const { return e_; }

  /// x mod N in [0, N), or x itself when N = 0.
  mpz_class reduce(const mpz_class& x) const;

 private:
  mpz_class order_;
  IntMat e_;
};

/// Exponent of σ(a,b) in t^a t^b = σ(a,b) t^{a+b}: sum_{i<j} E_ij a_j b_i.
mpz_class sigma_exp(const ExponentTorus& t, std::span<const mpz_class> a, std::span<const mpz_class> b);

/// Exponent of f(a,b) = σ(a,b) σ(b,a)^{-1}.
mpz_class f_exp(const ExponentTorus& t, std::span<const mpz_class> a, std::span<const mpz_class> b);

/// HNF basis of rad(f) = {a : E a ≡ 0 (mod N)}.
std::vector<IntVec> radical_basis(const ExponentTorus& t);

enum class MonomialKind { central, commutator };

struct MonomialClass {
  IntVec degree;
  MonomialKind kind = MonomialKind::central;
  /// (c, a - c) with f_exp(c, a - c) ≢ 0, so [t^c, t^{a-c}] is a nonzero
  /// multiple of t^a. Present iff kind == commutator.
  std::optional<std::pair<IntVec, IntVec>> witness;
};

struct GradedCheck {
  std::vector<MonomialClass> classes;
  Certificate certificate;
};

/// Classifies every degree with |a_i| <= radius as central or commutator and
/// certifies that the classes partition the box with sound witnesses.
/// Throws ArgumentError for radius < 1.
GradedCheck graded_decomposition_check(const ExponentTorus& t, long radius);

}  // namespace liecert
