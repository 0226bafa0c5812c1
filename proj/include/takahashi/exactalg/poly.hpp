#pragma once

#include "takahashi/exactalg/bigint.hpp"
#include "takahashi/exactalg/matrix.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace takahashi::exactalg {

/// Polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients and no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(BigInt c, std::size_t degree);

  bool isZero() const { return c_.empty(); }
  /// Throws std::domain_error for the zero polynomial.
  std::size_t degree() const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  /// Coefficient of t^i (zero beyond the degree).
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& x) const;

  IntPoly operator-() const;
  IntPoly shifted(std::size_t k) const;  // times t^k

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& k, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form in t, highest degree first: "t^2 - 3t + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Remainder of f modulo a monic polynomial.
IntPoly remainderMonic(const IntPoly& f, const IntPoly& monic);

/// Quotient f / g when g divides f in Z[t]; throws std::domain_error otherwise.
IntPoly exactQuotient(const IntPoly& f, const IntPoly& g);

/// Laurent polynomial: poly * t^shift.
struct LaurentPoly {
  IntPoly poly;
  long shift = 0;

  LaurentPoly() = default;
  LaurentPoly(IntPoly p, long s = 0) : poly(std::move(p)), shift(s) {}  // NOLINT: implicit lift

  static LaurentPoly monomial(BigInt c, long exponent);

  bool isZero() const { return poly.isZero(); }
  /// Moves trailing zero coefficients into the shift.
  LaurentPoly canonical() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return {-poly, shift}; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
};

/// Multiplies by the unit ±t^k making the constant term positive and nonzero.
/// Zero maps to zero. Idempotent.
IntPoly normalizeUpToUnits(const LaurentPoly& f);

/// Sylvester-matrix resultant: Res(f, g) = lc(f)^deg g * prod g(roots of f).
/// Res of two nonzero constants is 1; Res(f, 0) = 0 when f is nonzero.
/// Throws std::invalid_argument when both are zero.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// 1 + t + ... + t^(n-1). Throws std::invalid_argument for n = 0.
IntPoly cyclotomicQuotient(std::size_t n);

/// t^n - 1.
IntPoly unitCircle(std::size_t n);

/// Matrix of multiplication by f on Z[t]/(t^n - 1) in the basis 1, t, ..., t^(n-1).
/// Throws std::invalid_argument for n = 0.
BigIntMatrix circulantOfPoly(const IntPoly& f, std::size_t n);

/// Matrix of multiplication by f on Z[t]/(modulus) for monic modulus, basis
/// 1, ..., t^(d-1); column j holds t^j * f reduced.
BigIntMatrix multiplicationMatrix(const IntPoly& f, const IntPoly& monicModulus);

}  // namespace takahashi::exactalg
