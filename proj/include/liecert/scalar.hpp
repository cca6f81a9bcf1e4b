#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace liecert {

class Scalar;

/// The ground field: the rationals or a prime field F_p.
///
/// A field is identified by its characteristic; characteristic 0 means Q.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws ArgumentError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "7", "-3", "3/2". Over F_p the value is reduced mod p; a
  /// denominator divisible by p is rejected.
  Scalar parse(std::string_view text) const;

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact field element: an arbitrary-precision rational, or a residue mod p.
///
/// A rational operand combined with an F_p operand is mapped into F_p through
/// the canonical map Z_(p) -> F_p, so integer literals mix freely with residues.
/// Combining residues of two different primes throws FieldMismatchError.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(long long v) : q_(static_cast<long>(v)) {}
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Scalar residue(std::uint64_t r, std::uint32_t p);

  /// 0 for rationals.
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const;

  /// Only meaningful when modulus() == 0.
  const mpq_class& rational() const { return q_; }
  /// Only meaningful when modulus() != 0.
  std::uint64_t residue_value() const { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/2", "-4", or the residue in [0, p).
  std::string to_string() const;

 private:
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);
  std::uint64_t reduced(std::uint32_t p) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liecert
