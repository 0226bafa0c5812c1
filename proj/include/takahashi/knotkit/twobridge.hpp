#pragma once

#include "takahashi/exactalg/rational.hpp"
#include "takahashi/grouppres/presentation.hpp"

#include <string>
#include <vector>

namespace takahashi::knotkit {

/// Two-bridge knot or link b(alpha, beta) in Schubert normal form.
/// Normalized: gcd = 1, 0 < beta < alpha for alpha >= 2, b(1,0) the unknot,
/// b(0,1) the two-component unlink.
struct TwoBridge {
  long alpha = 1;
  long beta = 0;

  bool isKnot() const { return alpha % 2 == 1; }
  std::string str() const;
  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
};

/// Conway normal form [a_1, ..., a_m].
using ConwayForm = std::vector<long>;

/// Continued fraction a_m + 1/(a_{m-1} + 1/(... + 1/a_1)), a_m outermost.
/// A zero partial denominator yields infinity and is carried through.
/// Throws std::invalid_argument for an empty form.
exactalg::Rational conwayToFraction(const ConwayForm& c);

/// alpha = |num|, beta = den mod alpha. Throws std::invalid_argument unless
/// gcd(num, den) = 1.
TwoBridge normalizeTwoBridge(const exactalg::BigInt& num, const exactalg::BigInt& den);
TwoBridge normalizeTwoBridge(const exactalg::Rational& fraction);

/// Schubert classification: same alpha and beta2 = beta1^{+-1} mod alpha;
/// with allowMirror also beta2 = -beta1^{+-1}.
bool twoBridgeEquivalent(const TwoBridge& k1, const TwoBridge& k2, bool allowMirror = true);

/// Signs e_i = (-1)^floor(i beta / alpha), i = 1..alpha-1, with beta first
/// made odd by adding alpha when the normalized beta is even.
std::vector<int> epsilonSequence(const TwoBridge& k);

/// <a, b | w a w^-1 b^-1>, w = a^e1 b^e2 a^e3 ... b^e_{alpha-1}.
/// b(1,0) gives <a | >. Throws std::invalid_argument for even alpha.
grouppres::Presentation twoBridgePresentation(const TwoBridge& k);

}  // namespace takahashi::knotkit
