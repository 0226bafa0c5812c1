#pragma once

#include "takahashi/exactalg/poly.hpp"
#include "takahashi/exactalg/rational.hpp"
#include "takahashi/grouppres/presentation.hpp"

#include <cstddef>

namespace takahashi::grouppres {

/// Balanced presentation of the periodic Takahashi manifold M_n(p/q, r/s):
/// generators x_1..x_2n (subscripts mod 2n) with, for i = 1..n,
///   x_{2i-1}^q x_{2i}^-r x_{2i+1}^-q   and   x_{2i}^s x_{2i+1}^p x_{2i+2}^-s.
/// Relators are listed in that interleaved order. Zero exponents are dropped.
/// Throws std::invalid_argument for n = 0.
Presentation takahashiPresentation(std::size_t n, const exactalg::Rational& pq, const exactalg::Rational& rs);

/// Relator z_i^p (z_i^-q z_{i+1}^q)^s (z_i^-q z_{i-1}^q)^s on n generators,
/// for 0-based i.
Word cyclicRelator(std::size_t n, long p, long q, long s, std::size_t i);

/// Cyclic presentation of M_n(p/q, 1/s): the n cyclic shifts of cyclicRelator.
Presentation cyclicPresentation(std::size_t n, long p, long q, long s);

/// Rewritten relator for s != 0:
///   s > 0: z_i^(p-q) (z_{i+1}^q z_i^-q)^s (z_{i-1}^q z_i^-q)^(s-1) z_{i-1}^q
///   s < 0: z_i^(p+q) (z_{i+1}^-q z_i^q)^-s (z_{i-1}^-q z_i^q)^(-s-1) z_{i-1}^-q
/// Throws std::invalid_argument for s = 0.
Word rewrittenRelator(std::size_t n, long p, long q, long s, std::size_t i);

Presentation cyclicPresentationRewritten(std::size_t n, long p, long q, long s);

/// True iff, for every i, the original and rewritten relators define the same
/// cyclic word in the free group (equal after free and cyclic reduction).
/// The s > 0 rewrite is a literal identity; the s < 0 one differs by
/// conjugation with z_i^q.
bool relatorIdentityCheck(std::size_t n, long p, long q, long s);

/// Exponent-sum polynomial of the cyclic relator, by generator offset.
struct RepresenterPoly {
  exactalg::IntPoly poly;
  std::size_t modulus = 1;
};

/// qs t^2 + (p - 2qs) t + qs, normalized up to units. Its resultant with
/// t^n - 1 is, up to sign, the order of the abelianized cyclic presentation.
RepresenterPoly representerPolynomial(std::size_t n, long p, long q, long s);

}  // namespace takahashi::grouppres
