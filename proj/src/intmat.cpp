#include "k3glue/intmat.hpp"

namespace k3glue {

namespace {

// Round-to-nearest quotient keeps intermediate entries small during the
// elimination sweep.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  Int r = a - q * b;
  Int half = abs(b);
  if (2 * abs(r) > half) q += (r > 0) == (b > 0) ? 1 : -1;
  return q;
}

Int floor_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& a) {
  const int m = a.rows(), n = a.cols();
  IntMat h = a;
  IntMat u = IntMat::identity(m);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // Eliminate below (row,col) with min-abs pivoting until stable.
    for (;;) {
      int piv = -1;
      for (int r = row; r < m; ++r)
        if (h.at(r, col) != 0 && (piv < 0 || abs(h.at(r, col)) < abs(h.at(piv, col)))) piv = r;
      if (piv < 0) break;
      if (piv != row)
        for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(row, j));
      if (piv != row)
        for (int j = 0; j < m; ++j) std::swap(u.at(piv, j), u.at(row, j));
      bool clean = true;
      for (int r = row + 1; r < m; ++r) {
        if (h.at(r, col) == 0) continue;
        Int q = nearest_quotient(h.at(r, col), h.at(row, col));
        if (q != 0) {
          for (int j = 0; j < n; ++j) h.at(r, j) -= q * h.at(row, j);
          for (int j = 0; j < m; ++j) u.at(r, j) -= q * u.at(row, j);
        }
        if (h.at(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) {
      for (int j = 0; j < n; ++j) h.at(row, j) = -h.at(row, j);
      for (int j = 0; j < m; ++j) u.at(row, j) = -u.at(row, j);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (int r = 0; r < row; ++r) {
      Int q = floor_quotient(h.at(r, col), h.at(row, col));
      if (q != 0) {
        for (int j = 0; j < n; ++j) h.at(r, j) -= q * h.at(row, j);
        for (int j = 0; j < m; ++j) u.at(r, j) -= q * u.at(row, j);
      }
    }
    ++row;
  }
  return HermiteResult{std::move(h), std::move(u), row};
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
  // Left kernel of A^T equals the right kernel of A; the trailing rows of
  // the unimodular transform give a primitive basis of a direct summand.
  HermiteResult hr = hermite_normal_form(a.transpose());
  std::vector<IntVec> basis;
  for (int r = hr.rank; r < hr.transform.rows(); ++r) basis.push_back(hr.transform.row(r));
  return basis;
}

int rank(const IntMat& a) { return hermite_normal_form(a).rank; }

Int determinant(const IntMat& a) {
  if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat m = a;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntMat inverse_unimodular(const IntMat& a) {
  if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
  const int n = a.rows();
  // Rational Gauss-Jordan; integrality of the result certifies det = +-1.
  std::vector<RatVec> m(n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("matrix is singular");
    std::swap(m[piv], m[col]);
    Rat p = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& x = m[i][n + j];
      if (boost::multiprecision::denominator(x) != 1)
        throw Error("matrix is not unimodular: inverse has non-integer entries");
      inv.at(i, j) = boost::multiprecision::numerator(x);
    }
  return inv;
}

std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b) {
  if (a.rows() != static_cast<int>(b.size())) throw Error("solve_integral dimension mismatch");
  // Column-style HNF: A U^T = H^T with U unimodular. Solve H^T y = b by
  // sweeping pivot columns with divisibility checks, then x = U^T y.
  HermiteResult hr = hermite_normal_form(a.transpose());
  const int p = a.cols();
  IntVec residual = b;
  IntVec y(p, Int(0));
  for (int i = 0; i < hr.rank; ++i) {
    int pivot_col = -1;
    for (int j = 0; j < hr.h.cols(); ++j)
      if (hr.h.at(i, j) != 0) {
        pivot_col = j;
        break;
      }
    if (pivot_col < 0) break;
    Int num = residual[pivot_col];
    Int den = hr.h.at(i, pivot_col);
    if (num % den != 0) return std::nullopt;
    y[i] = num / den;
    for (int j = 0; j < hr.h.cols(); ++j) residual[j] -= y[i] * hr.h.at(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  return hr.transform.transpose() * y;
}

bool in_rational_span(const std::vector<IntVec>& basis, const IntVec& v) {
  return RationalRowSpan(basis, static_cast<int>(v.size())).contains(v);
}

RationalRowSpan::RationalRowSpan(const std::vector<IntVec>& rows, int dim) : dim_(dim) {
  for (const IntVec& row : rows) {
    if (static_cast<int>(row.size()) != dim_) throw Error("row span dimension mismatch");
    RatVec r(dim_);
    for (int j = 0; j < dim_; ++j) r[j] = Rat(row[j]);
    for (size_t i = 0; i < echelon_.size(); ++i)
      if (r[pivot_cols_[i]] != 0) {
        Rat f = r[pivot_cols_[i]];
        for (int j = 0; j < dim_; ++j) r[j] -= f * echelon_[i][j];
      }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
      if (r[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    Rat p = r[pivot];
    for (int j = 0; j < dim_; ++j) r[j] /= p;
    echelon_.push_back(std::move(r));
    pivot_cols_.push_back(pivot);
  }
}

bool RationalRowSpan::contains(const IntVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw Error("row span dimension mismatch");
  RatVec r(dim_);
  for (int j = 0; j < dim_; ++j) r[j] = Rat(v[j]);
  for (size_t i = 0; i < echelon_.size(); ++i)
    if (r[pivot_cols_[i]] != 0) {
      Rat f = r[pivot_cols_[i]];
      for (int j = 0; j < dim_; ++j) r[j] -= f * echelon_[i][j];
    }
  for (const Rat& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace k3glue
