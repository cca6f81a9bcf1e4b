#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecert/scalar.hpp"

namespace liecert {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& s, std::span<const Scalar> v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, std::span<const Scalar> b);
/// "(1, -2, 3/2)"
std::string format_vec(std::span<const Scalar> v);

/// Dense matrix over a field. Row-major storage.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  /// Rows must all have length cols.
  static Mat from_rows(const Field& f, std::size_t cols, std::span<const Vec> rows);
  /// Inverse of flatten().
  static Mat from_flat(const Field& f, std::size_t rows, std::size_t cols, std::span<const Scalar> flat);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  /// Row-major entries as one vector of length rows*cols.
  const Vec& flatten() const { return data_; }

  Vec apply(std::span<const Scalar> v) const;
  Mat transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, Mat m);
  friend bool operator==(const Mat& a, const Mat& b);

  void swap_rows(std::size_t a, std::size_t b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// a*b - b*a
Mat commutator(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  /// One vector per free column f, with 1 at f, 0 at the other free columns.
  std::vector<Vec> nullspace;
  std::vector<std::size_t> free_columns;
};

/// Canonical reduced row echelon form, leftmost pivots, and the unit-pattern
/// nullspace basis.
RrefResult rref_nullspace(const Mat& m);

struct SpanResult {
  std::size_t rank = 0;
  /// Nonzero rows of the canonical RREF of the stacked vectors.
  std::vector<Vec> basis;
};

/// Echelonized basis of span(vs ∪ ws). Throws ShapeError on length mismatch.
SpanResult span_union_rank(const Field& f, std::span<const Vec> vs, std::span<const Vec> ws = {});

/// Some solution x of a*x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<Vec> solve(const Mat& a, std::span<const Scalar> b);

/// A subspace of F^n held by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, std::size_t ambient, std::span<const Vec> spanning);

  static Subspace whole(const Field& f, std::size_t n);
  static Subspace zero(const Field& f, std::size_t n) { return Subspace(f, n, {}); }

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates outside the pivot set, ascending.
  std::vector<std::size_t> complement() const;

  /// v minus its component along the basis; zero at every pivot.
  Vec reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in basis(); nullopt when v is outside.
  std::optional<Vec> coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Integer matrices and lattices

using IntVec = std::vector<mpz_class>;

class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMat from_rows(std::size_t cols, std::span<const IntVec> rows);
  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  IntVec apply(std::span<const mpz_class> v) const;

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// u * a * v == d with u, v unimodular and d diagonal, d_ii | d_(i+1)(i+1), d_ii > 0.
struct SmithForm {
  IntMat u;
  IntMat d;
  IntMat v;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMat& a);

/// Hermite normal form basis of the lattice generated by the rows: upper
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
std::vector<IntVec> hermite_basis(std::span<const IntVec> generators, std::size_t n);

/// Membership of v in the lattice spanned by a hermite_basis() result.
bool lattice_contains(std::span<const IntVec> hnf, std::span<const mpz_class> v);

/// HNF basis of {a in Z^n : e*a ≡ 0 (mod modulus)}; modulus 0 means e*a = 0.
/// Throws ArgumentError for a negative modulus.
std::vector<IntVec> smith_kernel(const IntMat& e, const mpz_class& modulus);

}  // namespace liecert
