#ifndef SERREQ_INTMATRIX_HPP
#define SERREQ_INTMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "serreq/numbers.hpp"

namespace serreq {

/// Dense matrix over arbitrary-precision integers. Rows act on the left:
/// an element of Z^m is a row vector and a morphism matrix multiplies on
/// the right. 0 x n and n x 0 matrices are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transpose() const;

  /// Vertical concatenation; column counts must agree.
  static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
  /// Horizontal concatenation; row counts must agree.
  static IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
  /// Block diagonal.
  static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

  IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                      std::size_t ncols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HnfResult {
  IntMatrix h;  ///< row Hermite normal form (row echelon, positive pivots)
  IntMatrix u;  ///< unimodular, u * a = h
};

/// Row Hermite normal form via gcd-based row reduction.
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
  IntMatrix d;  ///< diagonal, d1 | d2 | ... >= 0
  IntMatrix u;  ///< unimodular
  IntMatrix v;  ///< unimodular, u * a * v = d
};

/// Smith normal form.
SnfResult snf(const IntMatrix& a);

/// Some X with X * a = b, or nullopt if the system is unsolvable over Z.
/// The full affine solution set is X + row_kernel(a)-combinations.
std::optional<IntMatrix> solve_right(const IntMatrix& a, const IntMatrix& b);

/// Generators of { x : x * a = 0 }; the generated lattice is saturated.
IntMatrix row_kernel(const IntMatrix& a);

/// Size-reduce each row of x modulo the lattice spanned by the given rows
/// (subtract pivot-column floor multiples of the HNF basis). The row class
/// modulo the lattice is unchanged.
void reduce_rows_mod_lattice(IntMatrix& x, const IntMatrix& lattice);

/// Rank over Q (= number of nonzero HNF rows).
std::size_t rank(const IntMatrix& a);

/// Determinant of a square matrix (fraction-free Gaussian elimination).
Integer det(const IntMatrix& a);

}  // namespace serreq

#endif
