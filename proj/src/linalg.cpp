#include "liecert/linalg.hpp"

#include <algorithm>
#include <utility>

#include "liecert/errors.hpp"

namespace liecert {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {
void check_same_length(std::size_t a, std::size_t b) {
  if (a != b)
    throw ShapeError("vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
  check_same_length(a.size(), b.size());
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  check_same_length(a.size(), b.size());
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, std::span<const Scalar> v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

void axpy(Vec& a, const Scalar& s, std::span<const Scalar> b) {
  check_same_length(a.size(), b.size());
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

std::string format_vec(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const Field& f, std::size_t cols, std::span<const Vec> rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw ShapeError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                       ", expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.zero() + rows[r][c];
  }
  return m;
}

Mat Mat::from_flat(const Field& f, std::size_t rows, std::size_t cols, std::span<const Scalar> flat) {
  if (flat.size() != rows * cols) throw ShapeError("flat data does not match matrix shape");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < flat.size(); ++i) m.data_[i] = f.zero() + flat[i];
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Mat::set_column(std::size_t c, std::span<const Scalar> v) {
  check_same_length(v.size(), rows_);
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec Mat::apply(std::span<const Scalar> v) const {
  check_same_length(v.size(), cols_);
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const { return liecert::is_zero(data_); }

Scalar Mat::trace() const {
  if (rows_ != cols_) throw ShapeError("trace of a non-square matrix");
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  Mat c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Mat operator*(const Scalar& s, Mat m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

RrefResult rref_nullspace(const Mat& m) {
  RrefResult out;
  out.reduced = m;
  Mat& r = out.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  const Field& f = m.field();
  std::vector<std::size_t> nz;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t p = prow;
    while (p < rows && r(p, c).is_zero()) ++p;
    if (p == rows) continue;
    r.swap_rows(p, prow);
    Scalar inv = r(prow, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!r(prow, j).is_zero()) {
        r(prow, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == prow || r(i, c).is_zero()) continue;
      Scalar factor = r(i, c);
      for (std::size_t j : nz) r(i, j) -= factor * r(prow, j);
    }
    out.pivots.push_back(c);
    ++prow;
  }
  out.rank = out.pivots.size();

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.free_columns.push_back(c);
    Vec v = zero_vec(f, cols);
    v[c] = f.one();
    for (std::size_t k = 0; k < out.pivots.size(); ++k) v[out.pivots[k]] = -r(k, c);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

SpanResult span_union_rank(const Field& f, std::span<const Vec> vs, std::span<const Vec> ws) {
  std::size_t len = 0;
  bool have = false;
  for (auto part : {vs, ws})
    for (const auto& v : part) {
      if (!have) {
        len = v.size();
        have = true;
      } else {
        check_same_length(len, v.size());
      }
    }
  SpanResult out;
  if (!have) return out;
  std::vector<Vec> stacked(vs.begin(), vs.end());
  stacked.insert(stacked.end(), ws.begin(), ws.end());
  auto red = rref_nullspace(Mat::from_rows(f, len, stacked));
  out.rank = red.rank;
  for (std::size_t k = 0; k < red.rank; ++k) {
    auto row = red.reduced.row(k);
    out.basis.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::optional<Vec> solve(const Mat& a, std::span<const Scalar> b) {
  check_same_length(a.rows(), b.size());
  const Field& f = a.field();
  Mat aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = f.zero() + b[r];
  }
  auto red = rref_nullspace(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(f, a.cols());
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.reduced(k, a.cols());
  return x;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const Field& f, std::size_t ambient, std::span<const Vec> spanning)
    : field_(f), ambient_(ambient) {
  for (const auto& v : spanning) check_same_length(v.size(), ambient);
  auto s = span_union_rank(f, spanning);
  basis_ = std::move(s.basis);
  for (const auto& v : basis_) {
    std::size_t c = 0;
    while (v[c].is_zero()) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::whole(const Field& f, std::size_t n) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(f, n, i));
  return Subspace(f, n, units);
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
  check_same_length(v.size(), ambient_);
  Vec r(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, basis_[k]);
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return liecert::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  for (auto p : pivots_) c.push_back(field_.zero() + v[p]);
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

// ---------------------------------------------------------------------------

IntMat IntMat::from_rows(std::size_t cols, std::span<const IntVec> rows) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("integer row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMat::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMat::column(std::size_t c) const {
  IntVec v;
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

IntVec IntMat::apply(std::span<const mpz_class> v) const {
  if (v.size() != cols_) throw ShapeError("integer vector length mismatch");
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw ShapeError("integer matrix product shape mismatch");
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

void row_swap(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void col_swap(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row dst -= q * row src
void row_sub(IntMat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_sub(IntMat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  SmithForm s{IntMat::identity(a.rows()), a, IntMat::identity(a.cols()), 0};
  IntMat& d = s.d;
  const std::size_t m = d.rows(), n = d.cols();
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // smallest nonzero |entry| in the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    row_swap(d, t, pi);
    row_swap(s.u, t, pi);
    col_swap(d, t, pj);
    col_swap(s.v, t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (d(i, t) == 0) continue;
      mpz_class q = floor_div(d(i, t), d(t, t));
      row_sub(d, i, t, q);
      row_sub(s.u, i, t, q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (d(t, j) == 0) continue;
      mpz_class q = floor_div(d(t, j), d(t, t));
      col_sub(d, j, t, q);
      col_sub(s.v, j, t, q);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    // divisibility: fold an offending row into row t and redo this pivot
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
          row_sub(d, t, i, -1);
          row_sub(s.u, t, i, -1);
          divides = false;
          break;
        }
    if (!divides) continue;

    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) s.u(t, c) = -s.u(t, c);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

std::vector<IntVec> hermite_basis(std::span<const IntVec> generators, std::size_t n) {
  std::vector<IntVec> rows;
  for (const auto& g : generators) {
    if (g.size() != n) throw ShapeError("lattice generator length mismatch");
    rows.push_back(g);
  }
  std::size_t cur = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < n && cur < rows.size(); ++c) {
    // Euclid down column c over rows cur..end
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = cur; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[cur], rows[best]);
      bool done = true;
      for (std::size_t r = cur + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_class q = floor_div(rows[r][c], rows[cur][c]);
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[cur][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (cur >= rows.size() || rows[cur][c] == 0) continue;
    if (rows[cur][c] < 0)
      for (auto& x : rows[cur]) x = -x;
    for (std::size_t r = 0; r < cur; ++r) {
      mpz_class q = floor_div(rows[r][c], rows[cur][c]);
      if (q != 0)
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[cur][k];
    }
    pivot_cols.push_back(c);
    ++cur;
  }
  rows.resize(cur);
  return rows;
}

bool lattice_contains(std::span<const IntVec> hnf, std::span<const mpz_class> v) {
  IntVec r(v.begin(), v.end());
  for (const auto& b : hnf) {
    if (b.size() != r.size()) throw ShapeError("lattice vector length mismatch");
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    for (std::size_t c = 0; c < p; ++c)
      if (r[c] != 0) return false;
    if (!mpz_divisible_p(r[p].get_mpz_t(), b[p].get_mpz_t())) return false;
    mpz_class q = r[p] / b[p];
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= q * b[k];
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

std::vector<IntVec> smith_kernel(const IntMat& e, const mpz_class& modulus) {
  if (modulus < 0) throw ArgumentError("negative modulus " + modulus.get_str());
  const std::size_t m = e.rows(), n = e.cols();
  // kernel of [e | modulus*I] projected onto the first n coordinates
  const std::size_t extra = modulus == 0 ? 0 : m;
  IntMat a(m, n + extra);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = e(r, c);
    if (extra) a(r, n + r) = modulus;
  }
  std::vector<IntVec> gens;
  if (m == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec u(n);
      u[i] = 1;
      gens.push_back(std::move(u));
    }
  } else {
    auto snf = smith_normal_form(a);
    for (std::size_t c = snf.rank; c < a.cols(); ++c) {
      IntVec col = snf.v.column(c);
      col.resize(n);
      gens.push_back(std::move(col));
    }
  }
  return hermite_basis(gens, n);
}

}  // namespace liecert
