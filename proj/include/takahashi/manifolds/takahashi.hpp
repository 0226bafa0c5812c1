#pragma once

#include "takahashi/exactalg/abelian.hpp"
#include "takahashi/exactalg/rational.hpp"
#include "takahashi/knotkit/twobridge.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace takahashi::manifolds {

/// Surgery data of the periodic Takahashi manifold M_n(p/q, r/s).
/// Coefficients are reduced with nonnegative numerators; infinity is 1/0.
struct TakahashiSpec {
  std::size_t n = 1;
  exactalg::Rational pq;
  exactalg::Rational rs;

  std::string str() const;
  friend bool operator==(const TakahashiSpec&, const TakahashiSpec&) = default;
};

/// Throws std::invalid_argument for n = 0.
TakahashiSpec normalizeSpec(std::size_t n, const exactalg::Rational& a, const exactalg::Rational& b);
/// Raw numerator/denominator form; throws std::invalid_argument for 0/0.
TakahashiSpec normalizeSpec(std::size_t n, long p, long q, long r, long s);

/// H_1 from the 2n-generator presentation.
exactalg::AbelianGroup h1Takahashi(const TakahashiSpec& spec);

/// H_1 from the n-generator cyclic presentation; requires rs = 1/s.
/// Throws std::invalid_argument otherwise.
exactalg::AbelianGroup h1CyclicRoute(const TakahashiSpec& spec);

/// Genus-one two-bridge knot b(|4sq - 1|, 2s).
knotkit::TwoBridge branchKnot(long q, long s);

/// H_1(L(p,q) # L(r,s)) = Z/p + Z/r, with L(0,1) contributing a Z.
exactalg::AbelianGroup baseSpaceH1(const exactalg::Rational& pq, const exactalg::Rational& rs);

struct BranchData {
  exactalg::AbelianGroup baseH1;
  /// Present iff both numerators are 1, where the base is S^3.
  std::optional<knotkit::TwoBridge> branchKnot;
};

BranchData branchData(const TakahashiSpec& spec);

/// H_1(M_n(1/q, 1/s)) against the n-fold branched cover of branchKnot(q, s).
bool crossCheckProp4(long q, long s, std::size_t n);

/// H_1 agrees across (pq, rs), (-pq, -rs), (rs, pq), (-rs, -pq).
bool symmetryCheck(const TakahashiSpec& spec);

/// Distinct reduced fractions p/q with |p|, |q| <= bound, infinity included,
/// in first-seen order of (p, q) ascending.
std::vector<exactalg::Rational> coefficientGrid(long bound);

}  // namespace takahashi::manifolds
