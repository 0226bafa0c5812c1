#pragma once

#include "takahashi/exactalg/poly.hpp"
#include "takahashi/grouppres/word.hpp"
#include "takahashi/knotkit/twobridge.hpp"

#include <cstddef>
#include <string>

namespace takahashi::knotkit {

/// Alexander polynomial of a knot, normalized up to units +-t^k.
struct AlexanderPoly {
  exactalg::IntPoly poly;

  std::string str() const { return poly.str(); }
  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;
};

/// Fox derivative d w / d x_gen pushed through the map sending every
/// generator to t.
exactalg::LaurentPoly foxDerivativeAbelianized(const grouppres::Word& w, std::size_t gen);

/// Throws std::invalid_argument for even alpha.
AlexanderPoly alexanderTwoBridge(const TwoBridge& k);

}  // namespace takahashi::knotkit
