#include "serreq/qmatrix.hpp"

namespace serreq {

std::size_t QMatrix::rref() {
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows_ && lead < cols_; ++r) {
    std::size_t i = r;
    while (i < rows_ && at(i, lead) == 0) {
      ++i;
      if (i == rows_) {
        i = r;
        ++lead;
        if (lead == cols_) return r;
      }
    }
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(r, j));
    Rational pivot = at(r, lead);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) /= pivot;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (k == r || at(k, lead) == 0) continue;
      Rational f = at(k, lead);
      for (std::size_t j = 0; j < cols_; ++j) at(k, j) -= f * at(r, j);
    }
    ++lead;
  }
  // Count nonzero rows.
  std::size_t rk = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) {
        ++rk;
        break;
      }
  return rk;
}

QMatrix QMatrix::left_nullspace() const {
  // Row-reduce [this | I]; rows whose left block vanished span the kernel.
  QMatrix aug(rows_, cols_ + rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  // Eliminate using only the left block's columns as pivots.
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && aug.at(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < aug.cols(); ++j)
      std::swap(aug.at(p, j), aug.at(r, j));
    Rational pivot = aug.at(r, c);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(r, j) /= pivot;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (k == r || aug.at(k, c) == 0) continue;
      Rational f = aug.at(k, c);
      for (std::size_t j = 0; j < aug.cols(); ++j)
        aug.at(k, j) -= f * aug.at(r, j);
    }
    ++r;
  }
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = r; i < rows_; ++i) zero_rows.push_back(i);
  QMatrix k(zero_rows.size(), rows_);
  for (std::size_t i = 0; i < zero_rows.size(); ++i)
    for (std::size_t j = 0; j < rows_; ++j)
      k.at(i, j) = aug.at(zero_rows[i], cols_ + j);
  return k;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) throw UsageError("QMatrix: inverse of non-square");
  QMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && aug.at(p, c) == 0) ++p;
    if (p == rows_) return std::nullopt;
    for (std::size_t j = 0; j < aug.cols(); ++j)
      std::swap(aug.at(p, j), aug.at(c, j));
    Rational pivot = aug.at(c, c);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(c, j) /= pivot;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (k == c || aug.at(k, c) == 0) continue;
      Rational f = aug.at(k, c);
      for (std::size_t j = 0; j < aug.cols(); ++j)
        aug.at(k, j) -= f * aug.at(c, j);
    }
  }
  QMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

}  // namespace serreq
