#include "liecert/scalar.hpp"

#include <charconv>
#include <string>

#include "liecert/errors.hpp"

namespace liecert {

namespace {

bool prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed values; a is nonzero mod p
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % static_cast<std::int64_t>(p);
  if (inv < 0) inv += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !prime_number(p))
    throw ArgumentError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return p_ == 0 ? Scalar() : Scalar::residue(0, p_); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar(v);
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s(q);
  if (p_ == 0) return s;
  return zero() + s;
}

Scalar Field::parse(std::string_view text) const {
  std::string t(text);
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty()) throw ArgumentError("empty field element");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (num.empty() || den.empty() || !valid_int(num) || !valid_int(den) || den[0] == '-' ||
      den[0] == '+')
    throw ArgumentError("malformed field element '" + t + "'");
  if (num[0] == '+') num.erase(num.begin());
  mpz_class n(num), d(den);
  if (d == 0) throw ArgumentError("zero denominator in '" + t + "'");
  mpq_class q(n, d);
  q.canonicalize();
  if (p_ != 0 && mpz_mod(q.get_den(), p_) == 0)
    throw ArgumentError("denominator of '" + t + "' vanishes in " + name());
  return from_rational(q);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::residue(std::uint64_t r, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = r % p;
  return s;
}

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw FieldMismatchError("cannot combine elements of F_" + std::to_string(a.p_) + " and F_" +
                           std::to_string(b.p_));
}

std::uint64_t Scalar::reduced(std::uint32_t p) const {
  if (p_ == p) return r_;
  std::uint64_t den = mpz_mod(q_.get_den(), p);
  if (den == 0)
    throw FieldMismatchError(q_.get_str() + " has no image in F_" + std::to_string(p));
  return mpz_mod(q_.get_num(), p) * mod_inverse(den, p) % p;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(mpq_class(1) / q_);
  return residue(mod_inverse(r_, p_), p_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    q_ += o.q_;
  } else {
    r_ = (reduced(p) + o.reduced(p)) % p;
    p_ = p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    q_ -= o.q_;
  } else {
    r_ = (reduced(p) + p - o.reduced(p)) % p;
    p_ = p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    q_ *= o.q_;
  } else {
    r_ = reduced(p) * o.reduced(p) % p;
    p_ = p;
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(mpq_class(-q_));
  return residue((p_ - r_) % p_, p_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  if (p == 0) return a.q_ == b.q_;
  return a.reduced(p) == b.reduced(p);
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace liecert
