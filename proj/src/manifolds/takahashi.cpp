#include "takahashi/manifolds/takahashi.hpp"

#include "takahashi/grouppres/families.hpp"
#include "takahashi/knotkit/cover.hpp"
#include "takahashi/knotkit/fox.hpp"

#include <algorithm>
#include <stdexcept>

namespace takahashi::manifolds {

using exactalg::AbelianGroup;
using exactalg::BigInt;
using exactalg::Rational;

std::string TakahashiSpec::str() const { return "M_" + std::to_string(n) + "(" + pq.str() + ", " + rs.str() + ")"; }

TakahashiSpec normalizeSpec(std::size_t n, const Rational& a, const Rational& b) {
  if (n == 0) throw std::invalid_argument("the period n must be at least 1");
  // Rational is already canonical: reduced, numerator >= 0, infinity = 1/0.
  return {n, a, b};
}

TakahashiSpec normalizeSpec(std::size_t n, long p, long q, long r, long s) {
  return normalizeSpec(n, Rational(p, q), Rational(r, s));
}

AbelianGroup h1Takahashi(const TakahashiSpec& spec) {
  return grouppres::h1FromPresentation(grouppres::takahashiPresentation(spec.n, spec.pq, spec.rs));
}

AbelianGroup h1CyclicRoute(const TakahashiSpec& spec) {
  if (spec.rs.num() != 1)
    throw std::invalid_argument("the cyclic presentation needs r/s = 1/s, got " + spec.rs.str());
  const long p = exactalg::toLong(spec.pq.num()), q = exactalg::toLong(spec.pq.den());
  const long s = exactalg::toLong(spec.rs.den());
  return grouppres::h1FromPresentation(grouppres::cyclicPresentation(spec.n, p, q, s));
}

knotkit::TwoBridge branchKnot(long q, long s) {
  const BigInt alpha = abs(4 * BigInt(s) * q - 1);
  knotkit::TwoBridge k = knotkit::normalizeTwoBridge(alpha, 2 * BigInt(s));
  const knotkit::TwoBridge conway = knotkit::normalizeTwoBridge(knotkit::conwayToFraction({-2 * q, 2 * s}));
  // The Conway fraction is (4qs - 1)/(2q); its sign may flip chirality.
  if (!knotkit::twoBridgeEquivalent(k, conway, true))
    throw std::logic_error("Conway form [-2q, 2s] gives " + conway.str() + ", not equivalent to " + k.str());
  return k;
}

AbelianGroup baseSpaceH1(const Rational& pq, const Rational& rs) {
  return exactalg::cyclicSum({pq.num(), rs.num()});
}

BranchData branchData(const TakahashiSpec& spec) {
  BranchData d{baseSpaceH1(spec.pq, spec.rs), std::nullopt};
  if (spec.pq.num() == 1 && spec.rs.num() == 1)
    d.branchKnot = branchKnot(exactalg::toLong(spec.pq.den()), exactalg::toLong(spec.rs.den()));
  return d;
}

bool crossCheckProp4(long q, long s, std::size_t n) {
  const AbelianGroup manifold = h1Takahashi(normalizeSpec(n, 1, q, 1, s));
  const AbelianGroup cover = knotkit::branchedCoverHomology(knotkit::alexanderTwoBridge(branchKnot(q, s)), n);
  return manifold == cover;
}

bool symmetryCheck(const TakahashiSpec& spec) {
  const AbelianGroup ref = h1Takahashi(spec);
  const Rational a = spec.pq, b = spec.rs;
  for (const auto& [x, y] : {std::pair{a.negated(), b.negated()}, std::pair{b, a}, std::pair{b.negated(), a.negated()}}) {
    if (h1Takahashi(normalizeSpec(spec.n, x, y)) != ref) return false;
  }
  return true;
}

std::vector<Rational> coefficientGrid(long bound) {
  std::vector<Rational> out;
  for (long p = -bound; p <= bound; ++p) {
    for (long q = -bound; q <= bound; ++q) {
      if (p == 0 && q == 0) continue;
      Rational r(p, q);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  return out;
}

}  // namespace takahashi::manifolds
