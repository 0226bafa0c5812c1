#include "takahashi/grouppres/families.hpp"

#include <stdexcept>

namespace takahashi::grouppres {

namespace {

void requirePositive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("the period n must be at least 1");
}

Word syllable(std::size_t gen, long exp) { return Word().append(gen, exp); }

}  // namespace

Presentation takahashiPresentation(std::size_t n, const exactalg::Rational& pq, const exactalg::Rational& rs) {
  requirePositive(n);
  const long p = exactalg::toLong(pq.num()), q = exactalg::toLong(pq.den());
  const long r = exactalg::toLong(rs.num()), s = exactalg::toLong(rs.den());
  const std::size_t m = 2 * n;
  std::vector<Word> relators;
  relators.reserve(m);
  for (std::size_t i = 0; i < n; ++i) {
    // 0-based: x_{2i-1} -> 2i, x_{2i} -> 2i+1, x_{2i+1} -> 2i+2, x_{2i+2} -> 2i+3
    const std::size_t a = 2 * i, b = 2 * i + 1, c = (2 * i + 2) % m, d = (2 * i + 3) % m;
    Word first;
    first.append(a, q).append(b, -r).append(c, -q);
    Word second;
    second.append(b, s).append(c, p).append(d, -s);
    relators.push_back(std::move(first));
    relators.push_back(std::move(second));
  }
  return Presentation(m, std::move(relators), "x");
}

Word cyclicRelator(std::size_t n, long p, long q, long s, std::size_t i) {
  requirePositive(n);
  const std::size_t z = i % n, next = (i + 1) % n, prev = (i + n - 1) % n;
  Word w = syllable(z, p);
  w.append((syllable(z, -q) * syllable(next, q)).power(s));
  w.append((syllable(z, -q) * syllable(prev, q)).power(s));
  return w;
}

Presentation cyclicPresentation(std::size_t n, long p, long q, long s) {
  requirePositive(n);
  std::vector<Word> relators;
  for (std::size_t i = 0; i < n; ++i) relators.push_back(cyclicRelator(n, p, q, s, i));
  return Presentation(n, std::move(relators), "z");
}

Word rewrittenRelator(std::size_t n, long p, long q, long s, std::size_t i) {
  requirePositive(n);
  if (s == 0) throw std::invalid_argument("the rewritten cyclic presentation requires s != 0");
  const std::size_t z = i % n, next = (i + 1) % n, prev = (i + n - 1) % n;
  // The s < 0 form is the s > 0 form with q replaced by -q and s by -s.
  const long qq = s > 0 ? q : -q;
  const long k = s > 0 ? s : -s;
  Word w = syllable(z, p - qq);
  w.append((syllable(next, qq) * syllable(z, -qq)).power(k));
  w.append((syllable(prev, qq) * syllable(z, -qq)).power(k - 1));
  w.append(prev, qq);
  return w;
}

Presentation cyclicPresentationRewritten(std::size_t n, long p, long q, long s) {
  requirePositive(n);
  std::vector<Word> relators;
  for (std::size_t i = 0; i < n; ++i) relators.push_back(rewrittenRelator(n, p, q, s, i));
  return Presentation(n, std::move(relators), "z");
}

bool relatorIdentityCheck(std::size_t n, long p, long q, long s) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!conjugateWords(cyclicRelator(n, p, q, s, i), rewrittenRelator(n, p, q, s, i))) return false;
  }
  return true;
}

RepresenterPoly representerPolynomial(std::size_t n, long p, long q, long s) {
  requirePositive(n);
  const exactalg::BigInt qs = exactalg::BigInt(q) * s;
  exactalg::IntPoly f(std::vector<exactalg::BigInt>{qs, exactalg::BigInt(p) - 2 * qs, qs});
  return {exactalg::normalizeUpToUnits(f), n};
}

}  // namespace takahashi::grouppres
