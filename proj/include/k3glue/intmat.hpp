// Dense integer matrices and the exact linear algebra kernels used for
// divisor-class bookkeeping: Hermite normal form, integral kernels, rank,
// determinant, inverse of unimodular matrices.

#pragma once

#include <initializer_list>
#include <optional>

#include "k3glue/numeric.hpp"

namespace k3glue {

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }
  // Row-major initializer, e.g. IntMat(3, 3, {1,2,6, 0,-1,-2, 0,2,3}).
  IntMat(int rows, int cols, std::initializer_list<Int> entries) : IntMat(rows, cols) {
    if (static_cast<size_t>(rows) * cols != entries.size())
      throw Error("initializer size mismatch");
    size_t k = 0;
    for (const Int& x : entries) a_[k++] = x;
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntVec row(int i) const {
    IntVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  IntVec col(int j) const {
    IntVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  void set_row(int i, const IntVec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
  }
  void set_col(int j, const IntVec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    IntMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend IntVec operator*(const IntMat& a, const IntVec& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw Error("matrix-vector dimension mismatch");
    IntVec r(a.rows_, Int(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
    return r;
  }

  friend IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
    IntMat c = a;
    for (size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
  }
  friend IntMat operator-(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix diff dimension mismatch");
    IntMat c = a;
    for (size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
  }
  friend IntMat operator-(const IntMat& a) {
    IntMat c = a;
    for (Int& x : c.a_) x = -x;
    return c;
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  // Nonnegative integer power by repeated squaring.
  IntMat pow(unsigned long n) const {
    if (rows_ != cols_) throw Error("pow of non-square matrix");
    IntMat r = identity(rows_);
    IntMat base = *this;
    while (n) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  // Stack b below a (same column count).
  static IntMat vstack(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.cols_) throw Error("vstack column mismatch");
    IntMat c(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) c.at(a.rows_ + i, j) = b.at(i, j);
    return c;
  }

  // Place b to the right of a (same row count).
  static IntMat hstack(const IntMat& a, const IntMat& b) {
    if (a.rows_ != b.rows_) throw Error("hstack row mismatch");
    IntMat c(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) c.at(i, a.cols_ + j) = b.at(i, j);
    }
    return c;
  }

  static IntMat from_rows(const std::vector<IntVec>& rows, int cols) {
    IntMat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw Error("from_rows width mismatch");
      m.set_row(static_cast<int>(i), rows[i]);
    }
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

struct HermiteResult {
  IntMat h;          // row-style Hermite normal form of the input
  IntMat transform;  // unimodular U with U * A = h
  int rank = 0;      // number of nonzero rows of h
};

// Row-style Hermite normal form over Z with the unimodular left transform.
// Pivots are positive, entries above a pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& a);

// Basis of { x : A x = 0 } as a direct summand of Z^cols; vectors are
// primitive and their count equals cols - rank(A).
std::vector<IntVec> integer_kernel(const IntMat& a);

int rank(const IntMat& a);

Int determinant(const IntMat& a);

// Inverse of an integer matrix with det = +-1. Throws Error otherwise.
IntMat inverse_unimodular(const IntMat& a);

// True iff v lies in the rational span of the given vectors.
bool in_rational_span(const std::vector<IntVec>& basis, const IntVec& v);

// Row space in reduced echelon form, for repeated membership queries.
class RationalRowSpan {
 public:
  RationalRowSpan(const std::vector<IntVec>& rows, int dim);
  bool contains(const IntVec& v) const;
  int rank() const { return static_cast<int>(pivot_cols_.size()); }

 private:
  int dim_;
  std::vector<RatVec> echelon_;
  std::vector<int> pivot_cols_;
};

// One integral solution of A x = b, or nullopt when none exists.
std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b);

}  // namespace k3glue
