#include "takahashi/exactalg/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace takahashi::exactalg {
namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class Reducer {
 public:
  explicit Reducer(BigIntMatrix m) : a_(std::move(m)) {}

  SnfResult run() {
    const std::size_t diag = std::min(a_.rows(), a_.cols());
    SnfResult out;
    std::size_t t = 0;
    for (; t < diag; ++t) {
      if (!movePivot(t)) break;
      reduceAt(t);
    }
    out.rank = t;
    out.invariantFactors.reserve(diag);
    for (std::size_t i = 0; i < diag; ++i) out.invariantFactors.push_back(abs(a_(i, i)));
    return out;
  }

 private:
  void swapRows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(x, c), a_(y, c));
  }
  void swapCols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, x), a_(r, y));
  }
  // row[dst] -= q * row[src]
  void rowOp(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
    for (std::size_t c = from; c < a_.cols(); ++c) a_(dst, c) -= q * a_(src, c);
  }
  void colOp(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
    for (std::size_t r = from; r < a_.rows(); ++r) a_(r, dst) -= q * a_(r, src);
  }

  // Brings the smallest nonzero entry of the trailing block to (t, t).
  bool movePivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c)
        if (a_(r, c) != 0 && (!best || cmpabs(a_(r, c), a_(best->first, best->second)) < 0))
          best = {r, c};
    if (!best) return false;
    swapRows(t, best->first);
    swapCols(t, best->second);
    return true;
  }

  // Pivot on the smallest nonzero entry in row t / column t.
  void repivotOnLine(std::size_t t) {
    std::size_t br = t, bc = t;
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      if (a_(r, t) != 0 && cmpabs(a_(r, t), a_(br, bc)) < 0) br = r, bc = t;
    for (std::size_t c = t + 1; c < a_.cols(); ++c)
      if (a_(t, c) != 0 && cmpabs(a_(t, c), a_(br, bc)) < 0) br = t, bc = c;
    swapRows(t, br);
    swapCols(t, bc);
  }

  void reduceAt(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        BigInt q = a_(r, t) / a_(t, t);
        rowOp(r, t, q, t);
        if (a_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        BigInt q = a_(t, c) / a_(t, t);
        colOp(c, t, q, t);
        if (a_(t, c) != 0) clean = false;
      }
      if (!clean) {
        repivotOnLine(t);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t r = t + 1; r < a_.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
          if (a_(r, c) % a_(t, t) != 0) {
            rowOp(t, r, BigInt(-1), t);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
      repivotOnLine(t);
    }
  }

  BigIntMatrix a_;
};

}  // namespace

SnfResult smithNormalForm(const BigIntMatrix& m) { return Reducer(m).run(); }

}  // namespace takahashi::exactalg
