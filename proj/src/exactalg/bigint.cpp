#include "takahashi/exactalg/bigint.hpp"

#include <stdexcept>

namespace takahashi::exactalg {

long toLong(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw std::out_of_range("integer " + v.get_str() + " does not fit in a machine word");
  }
  return v.get_si();
}

std::string toString(const BigInt& v) { return v.get_str(); }

BigInt parseBigInt(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt floorMod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace takahashi::exactalg
