#include "takahashi/exactalg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace takahashi::exactalg {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::degree() const {
  if (c_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  return c_.size() - 1;
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (isZero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& k, const IntPoly& a) {
  std::vector<BigInt> v = a.c_;
  for (auto& x : v) x *= k;
  return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

IntPoly remainderMonic(const IntPoly& f, const IntPoly& monic) {
  if (monic.isZero() || monic.leading() != 1) throw std::invalid_argument("modulus must be monic");
  std::vector<BigInt> r = f.coeffs();
  const std::size_t d = monic.degree();
  const auto& m = monic.coeffs();
  for (std::size_t i = r.size(); i-- > d;) {
    if (r[i] == 0) continue;
    BigInt c = r[i];
    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] -= c * m[j];
  }
  if (r.size() > d) r.resize(d);
  return IntPoly(std::move(r));
}

IntPoly exactQuotient(const IntPoly& f, const IntPoly& g) {
  if (g.isZero()) throw std::domain_error("division by the zero polynomial");
  if (f.isZero()) return {};
  if (f.degree() < g.degree()) throw std::domain_error("polynomial division is not exact");
  std::vector<BigInt> r = f.coeffs();
  const std::size_t dg = g.degree();
  std::vector<BigInt> q(f.degree() - dg + 1);
  const auto& gc = g.coeffs();
  for (std::size_t i = q.size(); i-- > 0;) {
    const BigInt& top = r[i + dg];
    if (top % g.leading() != 0) throw std::domain_error("polynomial division is not exact");
    q[i] = top / g.leading();
    for (std::size_t j = 0; j <= dg; ++j) r[i + j] -= q[i] * gc[j];
  }
  for (const auto& v : r)
    if (v != 0) throw std::domain_error("polynomial division is not exact");
  return IntPoly(std::move(q));
}

LaurentPoly LaurentPoly::monomial(BigInt c, long exponent) {
  return {IntPoly::monomial(std::move(c), 0), exponent};
}

LaurentPoly LaurentPoly::canonical() const {
  if (poly.isZero()) return {};
  const auto& c = poly.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  return {IntPoly(std::vector<BigInt>(c.begin() + static_cast<long>(low), c.end())),
          shift + static_cast<long>(low)};
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  long base = std::min(a.shift, b.shift);
  return LaurentPoly(a.poly.shifted(static_cast<std::size_t>(a.shift - base)) +
                         b.poly.shifted(static_cast<std::size_t>(b.shift - base)),
                     base)
      .canonical();
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(a.poly * b.poly, a.shift + b.shift).canonical();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.canonical(), y = b.canonical();
  return x.poly == y.poly && (x.isZero() || x.shift == y.shift);
}

IntPoly normalizeUpToUnits(const LaurentPoly& f) {
  LaurentPoly c = f.canonical();
  if (c.isZero()) return {};
  return c.poly.coeffs().front() < 0 ? -c.poly : c.poly;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.isZero() && g.isZero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (f.isZero() || g.isZero()) return 0;
  const std::size_t m = f.degree(), k = g.degree();
  const std::size_t n = m + k;
  BigIntMatrix s(n, n);
  // k shifted copies of f, then m shifted copies of g; coefficients highest first.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = f.coeff(m - j);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= k; ++j) s(k + r, r + j) = g.coeff(k - j);
  return determinant(s);
}

IntPoly cyclotomicQuotient(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomicQuotient requires n >= 1");
  return IntPoly(std::vector<BigInt>(n, BigInt(1)));
}

IntPoly unitCircle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("unitCircle requires n >= 1");
  return IntPoly::monomial(1, n) - IntPoly{1};
}

BigIntMatrix circulantOfPoly(const IntPoly& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("circulantOfPoly requires n >= 1");
  std::vector<BigInt> folded(n);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) folded[i % n] += f.coeffs()[i];
  BigIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = folded[(i + n - j) % n];
  return m;
}

BigIntMatrix multiplicationMatrix(const IntPoly& f, const IntPoly& monicModulus) {
  const std::size_t d = monicModulus.degree();
  BigIntMatrix m(d, d);
  IntPoly column = remainderMonic(f, monicModulus);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = column.coeff(i);
    column = remainderMonic(column.shifted(1), monicModulus);
  }
  return m;
}

}  // namespace takahashi::exactalg
