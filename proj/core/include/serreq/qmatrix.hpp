#ifndef SERREQ_QMATRIX_HPP
#define SERREQ_QMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "serreq/error.hpp"
#include "serreq/intmatrix.hpp"
#include "serreq/numbers.hpp"

namespace serreq {

/// Dense matrix over exact rationals; row vectors act on the left, as for
/// IntMatrix. Only the handful of operations the oracle code needs.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static QMatrix from_int(const IntMatrix& a) {
    QMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const QMatrix& other) const = default;

  QMatrix operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw UsageError("QMatrix: product mismatch");
    QMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          r.at(i, j) += at(i, k) * other.at(k, j);
      }
    return r;
  }

  QMatrix operator-(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw UsageError("QMatrix: difference mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = data_[i] - other.data_[i];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  /// Reduced row echelon form in place; returns the rank.
  std::size_t rref();

  std::size_t rank() const {
    QMatrix m = *this;
    return m.rref();
  }

  /// Basis of { x : x * this = 0 } as rows, or an empty-rowed matrix.
  QMatrix left_nullspace() const;

  /// Inverse of a square invertible matrix; nullopt when singular.
  std::optional<QMatrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace serreq

#endif
