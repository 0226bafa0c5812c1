#pragma once

#include "takahashi/exactalg/bigint.hpp"

#include <string>
#include <string_view>

namespace takahashi::exactalg {

/// Extended rational p/q in lowest terms, with infinity stored as 1/0.
///
/// Canonical form keeps the numerator nonnegative and carries the sign on
/// the denominator (3/-1 rather than -3/1), which is the convention used for
/// surgery coefficients. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  /// Throws std::invalid_argument for 0/0.
  Rational(BigInt num, BigInt den = 1);

  static Rational infinity() { return Rational(1, 0); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool isInfinity() const { return den_ == 0; }

  Rational negated() const;

  /// "p/q", always with an explicit denominator; infinity prints as 1/0.
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  BigInt num_;
  BigInt den_;
};

/// Accepts "p/q" (sign on either part), a bare integer "k" meaning k/1,
/// or "inf". Throws std::invalid_argument.
Rational parseRational(std::string_view text);

}  // namespace takahashi::exactalg
