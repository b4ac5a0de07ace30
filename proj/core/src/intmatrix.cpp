#include "serreq/intmatrix.hpp"

#include <algorithm>
#include <utility>

#include "serreq/error.hpp"

namespace serreq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw UsageError("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw UsageError("IntMatrix: dimension mismatch in addition");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + other.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw UsageError("IntMatrix: dimension mismatch in subtraction");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - other.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw UsageError("IntMatrix: dimension mismatch in product");
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols_ != bottom.cols_)
    throw UsageError("IntMatrix: column mismatch in vstack");
  IntMatrix r(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) r.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j)
      r.at(top.rows_ + i, j) = bottom.at(i, j);
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows_ != right.rows_)
    throw UsageError("IntMatrix: row mismatch in hstack");
  IntMatrix r(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j)
      r.at(i, left.cols_ + j) = right.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return r;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t col0,
                               std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw UsageError("IntMatrix: submatrix out of range");
  IntMatrix r(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                      const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.at(dst, j) += factor * m.at(src, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// Floor division, used to reduce entries above a positive pivot into
// [0, pivot).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Clear the column below pivot_row by gcd steps.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() ||
            abs(h.at(i, col)) < abs(h.at(best, col)))
          best = i;
      }
      if (best == h.rows()) break;  // column is zero below pivot_row
      swap_rows(h, pivot_row, best);
      swap_rows(u, pivot_row, best);
      bool reduced = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Integer q = h.at(i, col) / h.at(pivot_row, col);
        add_row_multiple(h, i, pivot_row, -q);
        add_row_multiple(u, i, pivot_row, -q);
        if (h.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(h.at(i, col), h.at(pivot_row, col));
      add_row_multiple(h, i, pivot_row, -q);
      add_row_multiple(u, i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

namespace {

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                      const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    m.at(i, dst) += factor * m.at(i, src);
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Find a nonzero entry of minimal absolute value in the trailing block.
      std::size_t pi = d.rows(), pj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi == d.rows() || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == d.rows()) break;  // trailing block is zero
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        Integer q = d.at(i, t) / d.at(t, t);
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        Integer q = d.at(t, j) / d.at(t, t);
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce the divisibility chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_col_multiple(d, t, j, 1);
            add_col_multiple(v, t, j, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (t < d.rows() && t < d.cols() && d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::optional<IntMatrix> solve_right(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw UsageError("solve_right: column counts differ");
  HnfResult hr = hnf(a);
  // Solve Y * H = B by pivot back-substitution, then X = Y * U.
  IntMatrix y(b.rows(), a.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::vector<Integer> residual(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) residual[j] = b.at(i, j);
    std::size_t col = 0;
    for (std::size_t r = 0; r < hr.h.rows(); ++r) {
      // Locate the pivot of row r.
      std::size_t p = col;
      while (p < hr.h.cols() && hr.h.at(r, p) == 0) ++p;
      if (p == hr.h.cols()) break;  // remaining rows of H are zero
      // Entries of the residual left of the pivot must already be 0.
      for (std::size_t j = col; j < p; ++j)
        if (residual[j] != 0) return std::nullopt;
      col = p;
      if (residual[p] % hr.h.at(r, p) != 0) return std::nullopt;
      Integer q = residual[p] / hr.h.at(r, p);
      y.at(i, r) = q;
      if (q != 0)
        for (std::size_t j = p; j < hr.h.cols(); ++j)
          residual[j] -= q * hr.h.at(r, j);
    }
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (residual[j] != 0) return std::nullopt;
  }
  IntMatrix x = y * hr.u;
  reduce_rows_mod_lattice(x, row_kernel(a));
  return x;
}

IntMatrix row_kernel(const IntMatrix& a) {
  HnfResult hr = hnf(a);
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < hr.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zero_rows.push_back(i);
  }
  IntMatrix k(zero_rows.size(), a.rows());
  for (std::size_t i = 0; i < zero_rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      k.at(i, j) = hr.u.at(zero_rows[i], j);
  // The transform rows can carry enormous entries; the HNF basis of the
  // same lattice is the size-reduced representative.
  return hnf(k).h;
}

void reduce_rows_mod_lattice(IntMatrix& x, const IntMatrix& lattice) {
  if (lattice.rows() == 0 || x.rows() == 0) return;
  if (lattice.cols() != x.cols())
    throw UsageError("reduce_rows_mod_lattice: column counts differ");
  IntMatrix basis = hnf(lattice).h;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    std::size_t col = 0;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      while (col < basis.cols() && basis.at(r, col) == 0) ++col;
      if (col == basis.cols()) break;
      Integer q = x.at(i, col) / basis.at(r, col);
      if (q != 0)
        for (std::size_t j = col; j < x.cols(); ++j)
          x.at(i, j) -= q * basis.at(r, j);
    }
  }
}

std::size_t rank(const IntMatrix& a) {
  return a.rows() - row_kernel(a).rows();
}

Integer det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("det: matrix not square");
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) =
            (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

}  // namespace serreq
