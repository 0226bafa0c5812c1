#include "takahashi/knotkit/twobridge.hpp"

#include <stdexcept>

namespace takahashi::knotkit {

using exactalg::BigInt;

std::string TwoBridge::str() const { return "b(" + std::to_string(alpha) + "," + std::to_string(beta) + ")"; }

exactalg::Rational conwayToFraction(const ConwayForm& c) {
  if (c.empty()) throw std::invalid_argument("empty Conway form has no value");
  // x = num/den; a + 1/x = (a num + den) / num
  BigInt num = c.front(), den = 1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    BigInt next = BigInt(c[i]) * num + den;
    den = num;
    num = next;
  }
  return exactalg::Rational(num, den);
}

TwoBridge normalizeTwoBridge(const BigInt& num, const BigInt& den) {
  if (exactalg::gcd(num, den) != 1)
    throw std::invalid_argument("two-bridge parameters " + num.get_str() + ", " + den.get_str() +
                                " are not coprime");
  BigInt alpha = abs(num);
  if (alpha == 0) return {0, 1};
  if (alpha == 1) return {1, 0};
  return {exactalg::toLong(alpha), exactalg::toLong(exactalg::floorMod(den, alpha))};
}

TwoBridge normalizeTwoBridge(const exactalg::Rational& fraction) {
  return normalizeTwoBridge(fraction.num(), fraction.den());
}

bool twoBridgeEquivalent(const TwoBridge& k1, const TwoBridge& k2, bool allowMirror) {
  if (k1.alpha != k2.alpha) return false;
  if (k1.alpha <= 1) return true;
  const BigInt a = k1.alpha, b1 = k1.beta, b2 = k2.beta;
  auto congruent = [&](const BigInt& x, const BigInt& y) { return exactalg::floorMod(x - y, a) == 0; };
  if (congruent(b1, b2) || congruent(b1 * b2, 1)) return true;
  return allowMirror && (congruent(b1, -b2) || congruent(b1 * b2, -1));
}

std::vector<int> epsilonSequence(const TwoBridge& k) {
  std::vector<int> eps;
  // The presentation needs an odd beta; beta + alpha names the same knot.
  const BigInt beta = k.beta % 2 == 0 ? BigInt(k.beta) + k.alpha : BigInt(k.beta);
  for (long i = 1; i < k.alpha; ++i) {
    BigInt fl;
    BigInt prod = i * beta;
    BigInt den = k.alpha;
    mpz_fdiv_q(fl.get_mpz_t(), prod.get_mpz_t(), den.get_mpz_t());
    eps.push_back(mpz_even_p(fl.get_mpz_t()) ? 1 : -1);
  }
  return eps;
}

grouppres::Presentation twoBridgePresentation(const TwoBridge& k) {
  if (!k.isKnot()) throw std::invalid_argument(k.str() + " is a link; the Fox pipeline needs a knot");
  if (k.alpha == 1) return grouppres::Presentation(1, {}, "x");
  grouppres::Word w;
  std::vector<int> eps = epsilonSequence(k);
  for (std::size_t i = 0; i < eps.size(); ++i) w.append(i % 2 == 0 ? 0 : 1, eps[i]);
  grouppres::Word relator = w;
  relator.append(0, 1).append(w.inverse()).append(1, -1);
  return grouppres::Presentation(2, {relator}, "x");
}

}  // namespace takahashi::knotkit
