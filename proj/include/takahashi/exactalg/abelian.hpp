#pragma once

#include "takahashi/exactalg/bigint.hpp"
#include "takahashi/exactalg/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace takahashi::exactalg {

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^freeRank with
/// 1 < d1 | d2 | ... | dk.
struct AbelianGroup {
  std::vector<BigInt> torsion;
  std::size_t freeRank = 0;

  bool isFinite() const { return freeRank == 0; }
  bool isTrivial() const { return freeRank == 0 && torsion.empty(); }
  /// Order when finite.
  std::optional<BigInt> order() const;
  /// "0", "Z/3 + Z/3", "Z/2 + Z^2".
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^cols modulo the row space of a relation matrix.
AbelianGroup cokernel(const BigIntMatrix& relations);

/// Direct sum of cyclic groups Z/c for each entry (c = 0 gives Z).
AbelianGroup cyclicSum(const std::vector<BigInt>& orders);

}  // namespace takahashi::exactalg
