#include "takahashi/knotkit/cover.hpp"

#include <stdexcept>

namespace takahashi::knotkit {

exactalg::AbelianGroup branchedCoverHomology(const AlexanderPoly& delta, std::size_t n) {
  if (n == 0) throw std::invalid_argument("branched cover degree must be at least 1");
  exactalg::IntPoly nu = exactalg::cyclotomicQuotient(n);
  return exactalg::cokernel(exactalg::multiplicationMatrix(delta.poly, nu));
}

exactalg::BigInt branchedCoverOrder(const AlexanderPoly& delta, std::size_t n) {
  if (n == 0) throw std::invalid_argument("branched cover degree must be at least 1");
  return abs(exactalg::resultant(delta.poly, exactalg::cyclotomicQuotient(n)));
}

}  // namespace takahashi::knotkit
