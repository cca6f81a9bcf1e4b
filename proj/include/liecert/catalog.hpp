#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecert/lie_algebra.hpp"

namespace liecert {

/// Named example algebras. Basis orders are fixed:
///
///   abelian n      a1, ..., an                         (no brackets)
///   heisenberg     x, y, z                             [x,y] = z
///   affine2        x, y                                [x,y] = y
///   sl n           E_ij (i != j, lexicographic), then H_i = E_ii - E_(i+1)(i+1);
///                  for n = 2 the labels are e, f, h
///   current_sl2 k  x*t^i for i < k (outer), x in {e, f, h} (inner);
///                  [x*t^i, y*t^j] = [x,y]*t^(i+j), zero once i+j >= k
///   direct_sum     the parts in order
///
/// Expected flags: abelian and heisenberg are neither perfect nor centerless,
/// affine2 is centerless only, sl n (p ∤ n) and current_sl2 (char != 2, 3)
/// are both.
struct CatalogSpec {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  Field field;
  std::vector<CatalogSpec> parts;
};

/// Validated algebra for spec. Throws ArgumentError for bad parameters,
/// including p | n for sl and characteristic 2 or 3 for current_sl2.
LieAlgebra build_named(const CatalogSpec& spec);

LieAlgebra abelian(const Field& f, std::size_t n);
LieAlgebra heisenberg(const Field& f);
LieAlgebra affine2(const Field& f);
LieAlgebra special_linear(const Field& f, std::size_t n);
LieAlgebra current_sl2(const Field& f, std::size_t k);

}  // namespace liecert
