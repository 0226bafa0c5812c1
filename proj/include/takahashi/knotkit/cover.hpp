#pragma once

#include "takahashi/exactalg/abelian.hpp"
#include "takahashi/knotkit/fox.hpp"

#include <cstddef>

namespace takahashi::knotkit {

/// H_1 of the n-fold cyclic branched cover of a knot with cyclic Alexander
/// module Z[t^{+-1}]/(delta): the cokernel of multiplication by delta on
/// Z[t]/(1 + t + ... + t^{n-1}). Throws std::invalid_argument for n = 0.
exactalg::AbelianGroup branchedCoverHomology(const AlexanderPoly& delta, std::size_t n);

/// |Res(delta, 1 + t + ... + t^{n-1})|; zero means the cover has infinite H_1.
exactalg::BigInt branchedCoverOrder(const AlexanderPoly& delta, std::size_t n);

}  // namespace takahashi::knotkit
