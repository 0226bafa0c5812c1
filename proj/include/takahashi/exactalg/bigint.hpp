#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace takahashi::exactalg {

using BigInt = mpz_class;

/// Narrows to a machine integer; throws std::out_of_range if it does not fit.
long toLong(const BigInt& v);

std::string toString(const BigInt& v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parseBigInt(std::string_view text);

inline BigInt absValue(const BigInt& v) { return abs(v); }

BigInt gcd(const BigInt& a, const BigInt& b);

/// Least nonnegative residue of a modulo m (m > 0).
BigInt floorMod(const BigInt& a, const BigInt& m);

}  // namespace takahashi::exactalg
