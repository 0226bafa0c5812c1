#pragma once

#include "takahashi/exactalg/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace takahashi::exactalg {

/// Dense integer matrix, row-major.
class BigIntMatrix {
 public:
  BigIntMatrix() = default;
  BigIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  BigIntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static BigIntMatrix identity(std::size_t n);
  static BigIntMatrix diagonal(const std::vector<BigInt>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  BigIntMatrix transposed() const;
  std::string str() const;

  friend bool operator==(const BigIntMatrix&, const BigIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws std::invalid_argument for non-square input. det of 0x0 is 1.
BigInt determinant(const BigIntMatrix& m);

struct SnfResult {
  /// min(rows, cols) diagonal entries, nonnegative, each dividing the next;
  /// zeros come last.
  std::vector<BigInt> invariantFactors;
  /// Number of nonzero invariant factors.
  std::size_t rank = 0;
};

SnfResult smithNormalForm(const BigIntMatrix& m);

}  // namespace takahashi::exactalg
