#include "takahashi/exactalg/abelian.hpp"

#include <sstream>

namespace takahashi::exactalg {

std::optional<BigInt> AbelianGroup::order() const {
  if (freeRank != 0) return std::nullopt;
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::str() const {
  if (isTrivial()) return "0";
  std::ostringstream out;
  const char* sep = "";
  for (const auto& d : torsion) {
    out << sep << "Z/" << d;
    sep = " + ";
  }
  if (freeRank == 1) out << sep << "Z";
  if (freeRank > 1) out << sep << "Z^" << freeRank;
  return out.str();
}

AbelianGroup cokernel(const BigIntMatrix& relations) {
  SnfResult snf = smithNormalForm(relations);
  AbelianGroup g;
  g.freeRank = relations.cols() - snf.rank;
  for (const auto& d : snf.invariantFactors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup cyclicSum(const std::vector<BigInt>& orders) {
  return cokernel(BigIntMatrix::diagonal(orders));
}

}  // namespace takahashi::exactalg
