#include "takahashi/exactalg/rational.hpp"

#include <stdexcept>

namespace takahashi::exactalg {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) throw std::invalid_argument("0/0 is not a rational number");
  BigInt g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
  if (num_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) den_ = 1;
  if (den_ == 0) num_ = 1;
}

Rational Rational::negated() const {
  if (isInfinity()) return *this;
  return Rational(-num_, den_);
}

std::string Rational::str() const { return num_.get_str() + "/" + den_.get_str(); }

Rational parseRational(std::string_view text) {
  if (text == "inf" || text == "infinity") return Rational::infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseBigInt(text), 1);
  return Rational(parseBigInt(text.substr(0, slash)), parseBigInt(text.substr(slash + 1)));
}

}  // namespace takahashi::exactalg
