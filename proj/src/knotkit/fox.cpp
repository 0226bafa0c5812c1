#include "takahashi/knotkit/fox.hpp"

namespace takahashi::knotkit {

using exactalg::LaurentPoly;

exactalg::LaurentPoly foxDerivativeAbelianized(const grouppres::Word& w, std::size_t gen) {
  LaurentPoly acc;
  long prefix = 0;  // abelianized exponent of the prefix read so far
  for (const auto& l : w.letters()) {
    if (l.gen == gen) {
      // d(x^k)/dx = 1 + x + ... + x^{k-1} for k > 0, -(x^-1 + ... + x^k) for k < 0
      if (l.exp > 0) {
        for (long j = 0; j < l.exp; ++j) acc = acc + LaurentPoly::monomial(1, prefix + j);
      } else {
        for (long j = 1; j <= -l.exp; ++j) acc = acc + LaurentPoly::monomial(-1, prefix - j);
      }
    }
    prefix += l.exp;
  }
  return acc;
}

AlexanderPoly alexanderTwoBridge(const TwoBridge& k) {
  grouppres::Presentation p = twoBridgePresentation(k);
  if (p.relators().empty()) return {exactalg::IntPoly{1}};
  return {exactalg::normalizeUpToUnits(foxDerivativeAbelianized(p.relators().front(), 0))};
}

}  // namespace takahashi::knotkit
