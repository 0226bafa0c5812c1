#include "takahashi/exactalg/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace takahashi::exactalg {

BigIntMatrix::BigIntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

BigIntMatrix BigIntMatrix::identity(std::size_t n) {
  BigIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigIntMatrix BigIntMatrix::diagonal(const std::vector<BigInt>& entries) {
  BigIntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

BigIntMatrix BigIntMatrix::transposed() const {
  BigIntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::string BigIntMatrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << "]\n";
  }
  return out.str();
}

BigInt determinant(const BigIntMatrix& input) {
  if (!input.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  BigIntMatrix a = input;
  BigInt sign = 1;
  BigInt prevPivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prevPivot;
      }
      a(i, k) = 0;
    }
    prevPivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace takahashi::exactalg
