#pragma once

#include "takahashi/exactalg/poly.hpp"
#include "takahashi/knotkit/fox.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace takahashi::knotkit {

/// Word in the 3-strand braid group; +-1 is sigma_1^{+-1}, +-2 is sigma_2^{+-1}.
struct BraidWord3 {
  std::vector<int> letters;

  /// Throws std::invalid_argument for tags outside {+-1, +-2}.
  explicit BraidWord3(std::vector<int> l = {});

  BraidWord3 power(int k) const;
  std::string str() const;
  friend BraidWord3 operator*(const BraidWord3& a, const BraidWord3& b);
  friend bool operator==(const BraidWord3&, const BraidWord3&) = default;
};

/// Whitespace-separated signed generator indices, e.g. "1 1 1 -2".
BraidWord3 parseBraidWord3(std::string_view text);

/// 2x2 matrix over Z[t, t^-1], row-major.
struct LaurentMatrix2 {
  std::array<exactalg::LaurentPoly, 4> e;

  static LaurentMatrix2 identity();
  const exactalg::LaurentPoly& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
  exactalg::LaurentPoly determinant() const;

  friend LaurentMatrix2 operator*(const LaurentMatrix2& a, const LaurentMatrix2& b);
  friend bool operator==(const LaurentMatrix2&, const LaurentMatrix2&) = default;
};

/// Reduced Burau representation:
///   sigma_1 -> [[-t, 1], [0, 1]],  sigma_2 -> [[1, 0], [t, -t]].
LaurentMatrix2 reducedBurau3(const BraidWord3& b);

/// Image of the braid in S_3 as a permutation of strand positions.
std::array<int, 3> braidPermutation(const BraidWord3& b);

class NotAKnotError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// det(I - Burau(b)) / (1 + t + t^2), normalized up to units.
/// Throws NotAKnotError when the permutation is not a 3-cycle.
AlexanderPoly alexanderFromBraid3(const BraidWord3& b);

}  // namespace takahashi::knotkit
