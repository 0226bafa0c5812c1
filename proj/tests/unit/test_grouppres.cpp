#include "oracles.hpp"

#include "takahashi/grouppres/families.hpp"
#include "takahashi/grouppres/presentation.hpp"
#include "takahashi/grouppres/word.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace takahashi;
using namespace takahashi::grouppres;
using exactalg::BigInt;
using exactalg::Rational;

namespace {

Word randomWord(std::mt19937_64& rng, std::size_t gens, std::size_t len) {
  std::uniform_int_distribution<std::size_t> g(0, gens - 1);
  std::uniform_int_distribution<long> e(-3, 3);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.append(g(rng), e(rng));
  return w;
}

}  // namespace

TEST_CASE("words reject zero exponents at construction") {
  CHECK_THROWS_AS((Word{{0, 2}, {1, 0}}), std::invalid_argument);
  Word w;
  w.append(0, 0);
  CHECK(w.empty());
}

TEST_CASE("free reduction examples") {
  CHECK(freeReduce(Word{{0, 1}, {0, -1}}).empty());
  CHECK(freeReduce(Word{{0, 2}, {0, 3}}) == Word{{0, 5}});
  CHECK(freeReduce(Word{{0, 1}, {1, 2}, {1, -2}, {0, -1}, {2, 1}}) == Word{{2, 1}});
  // p = q = s = 1: z_i (z_i^-1 z_{i+1}) (z_i^-1 z_{i-1}) -> z_{i+1} z_i^-1 z_{i-1}
  CHECK(freeReduce(cyclicRelator(3, 1, 1, 1, 1)) == Word{{2, 1}, {1, -1}, {0, 1}});
}

TEST_CASE("free reduction properties") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = randomWord(rng, 3, 12);
    Word r = freeReduce(w);
    CHECK(freeReduce(r) == r);
    CHECK(freeReduce(w.inverse()) == r.inverse());
    CHECK(freeReduce(w * w.inverse()).empty());
    for (std::size_t i = 0; i + 1 < r.letters().size(); ++i) CHECK(r.letters()[i].gen != r.letters()[i + 1].gen);
    for (std::size_t g = 0; g < 3; ++g) CHECK(r.exponentSum(g) == w.exponentSum(g));
  }
}

TEST_CASE("cyclic reduction and conjugacy") {
  Word a{{0, 1}, {1, -1}, {0, 1}, {2, -1}, {0, 1}};
  Word b{{0, 2}, {1, -1}, {0, 1}, {2, -1}};
  CHECK(cyclicallyReduce(a) == Word{{0, 2}, {1, -1}, {0, 1}, {2, -1}});
  CHECK(conjugateWords(a, b));
  CHECK(!conjugateWords(a, Word{{0, 3}, {1, -1}, {2, -1}}));
  CHECK(conjugateWords(Word{{0, 1}, {0, -1}}, Word{}));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = randomWord(rng, 3, 8), c = randomWord(rng, 3, 4);
    CHECK(conjugateWords(w, c * w * c.inverse()));
  }
}

TEST_CASE("word printing") {
  CHECK((Word{{0, 2}, {1, -3}, {0, 1}}).str() == "x1^2 x2^-3 x1");
  CHECK(Word{}.str("z") == "1");
}

TEST_CASE("presentations validate generator indices") {
  CHECK_THROWS_AS(Presentation(2, {Word{{2, 1}}}), std::invalid_argument);
  CHECK_NOTHROW(Presentation(3, {Word{{2, 1}}}));
}

TEST_CASE("abelianization examples") {
  Presentation empty(4, {});
  CHECK(abelianize(empty).rows() == 0);
  CHECK(abelianize(empty).cols() == 4);
  CHECK(h1FromPresentation(empty).freeRank == 4);

  Presentation cube(1, {Word{{0, 3}}});
  CHECK(abelianize(cube) == exactalg::BigIntMatrix{{3}});
  CHECK(h1FromPresentation(cube).torsion == std::vector<BigInt>{3});
}

TEST_CASE("Takahashi presentation with n = 1 wraps x3 to x1") {
  Presentation p = takahashiPresentation(1, Rational(2, 3), Rational(5, 7));
  REQUIRE(p.generatorCount() == 2);
  REQUIRE(p.relators().size() == 2);
  CHECK(p.relators()[0].str() == "x1^3 x2^-5 x1^-3");
  CHECK(p.relators()[1].str() == "x2^7 x1^2 x2^-7");
  CHECK(abelianize(p) == exactalg::BigIntMatrix{{0, -5}, {2, 0}});
  CHECK(h1FromPresentation(p).torsion == std::vector<BigInt>{10});
}

TEST_CASE("Takahashi presentation examples") {
  SUBCASE("lens-space summands of S^3 give the trivial group") {
    for (long q = -3; q <= 3; ++q)
      for (long s = -3; s <= 3; ++s) CHECK(h1FromPresentation(takahashiPresentation(1, Rational(1, q), Rational(1, s))).isTrivial());
  }
  SUBCASE("M_3(3,-3)") {
    Presentation p = takahashiPresentation(3, Rational(3, 1), Rational(3, -1));
    CHECK(p.generatorCount() == 6);
    CHECK(p.relators().size() == 6);
    CHECK(h1FromPresentation(p).order() == BigInt(1296));
  }
  SUBCASE("zero numerators drop letters and leave free rank") {
    Presentation p = takahashiPresentation(2, Rational(0, 1), Rational(0, 1));
    for (const auto& r : p.relators()) CHECK(r.letters().size() == 2);
    auto dk = oracle::determinantalDivisors(abelianize(p));
    std::size_t rank = 0;
    while (rank < dk.size() && dk[rank] != 0) ++rank;
    CHECK(rank == 2);
    CHECK(h1FromPresentation(p).freeRank == 4 - rank);
    CHECK(h1FromPresentation(p).torsion.empty());
  }
  CHECK_THROWS_AS(takahashiPresentation(0, Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("cyclic presentation examples") {
  Presentation one = cyclicPresentation(1, 5, 2, 3);
  REQUIRE(one.relators().size() == 1);
  CHECK(abelianize(one) == exactalg::BigIntMatrix{{5}});

  Presentation fib = cyclicPresentation(3, 1, 1, -1);
  CHECK(fib.relators()[0].str("z") == "z1 z2^-1 z1 z3^-1 z1");
  CHECK(fib.relators()[1] == fib.relators()[0].relabeled(1, 3));
  CHECK(h1FromPresentation(fib).order() == BigInt(16));

  CHECK(h1FromPresentation(cyclicPresentation(4, 3, 2, 1)).order() == BigInt(15));
  CHECK(cyclicPresentation(3, 4, 1, 0).relators()[0] == Word{{0, 4}});
}

TEST_CASE("rewritten cyclic presentation") {
  CHECK(freeReduce(rewrittenRelator(3, 1, 1, 1, 1)) == Word{{2, 1}, {1, -1}, {0, 1}});
  // s = 1: the (z_{i-1}^q z_i^-q)^0 block is empty and the relator ends in z_{i-1}^q.
  Word w = rewrittenRelator(5, 2, 3, 1, 0);
  CHECK(w.letters().back() == Letter{4, 3});
  CHECK(w.str("z") == "z1^-1 z2^3 z1^-3 z5^3");
  // s = -1, p = q = 1: leading block z_i^(p+q) = z_i^2.
  Word neg = rewrittenRelator(3, 1, 1, -1, 0);
  CHECK(neg.letters().front() == Letter{0, 2});
  CHECK(neg.str("z") == "z1^2 z2^-1 z1 z3^-1");
  CHECK_THROWS_AS(rewrittenRelator(3, 1, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("relator identity examples") {
  CHECK(relatorIdentityCheck(3, 1, 1, 1));
  CHECK(relatorIdentityCheck(5, 2, 3, 2));
  CHECK(relatorIdentityCheck(4, 1, 1, -2));
  // s > 0 is a literal identity after free reduction.
  for (std::size_t i = 0; i < 5; ++i) CHECK(freeReduce(cyclicRelator(5, 2, 3, 2, i)) == freeReduce(rewrittenRelator(5, 2, 3, 2, i)));
}

TEST_CASE("relator identity holds across parameters") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (long p = -4; p <= 4; ++p)
      for (long q = -4; q <= 4; ++q)
        for (long s = -4; s <= 4; ++s)
          if (s != 0) CHECK(relatorIdentityCheck(n, p, q, s));
}

TEST_CASE("representer polynomial") {
  CHECK(representerPolynomial(3, 1, 1, -1).poly == exactalg::IntPoly{1, -3, 1});
  CHECK(representerPolynomial(3, 1, 1, 1).poly == exactalg::IntPoly{1, -1, 1});
  CHECK(representerPolynomial(4, 3, 2, 1).poly == exactalg::IntPoly{2, -1, 2});
  CHECK(representerPolynomial(5, 7, 2, 0).poly == exactalg::IntPoly{7});
  CHECK(representerPolynomial(5, 7, 2, 0).modulus == 5);
}

TEST_CASE("abelianization is invariant under free reduction") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Word> raw, reduced;
    for (int r = 0; r < 3; ++r) {
      raw.push_back(randomWord(rng, 4, 10));
      reduced.push_back(freeReduce(raw.back()));
    }
    CHECK(abelianize(Presentation(4, raw)) == abelianize(Presentation(4, reduced)));
  }
}

TEST_CASE("cyclic and 2n-generator presentations agree for r = 1") {
  auto grid = std::vector<Rational>{};
  for (long p = -4; p <= 4; ++p)
    for (long q = -4; q <= 4; ++q) {
      if (p == 0 && q == 0) continue;
      Rational r(p, q);
      if (std::find(grid.begin(), grid.end(), r) == grid.end()) grid.push_back(r);
    }
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& pq : grid)
      for (long s = -4; s <= 4; ++s) {
        const long p = exactalg::toLong(pq.num()), q = exactalg::toLong(pq.den());
        auto viaTakahashi = h1FromPresentation(takahashiPresentation(n, pq, Rational(1, s)));
        auto viaCyclic = h1FromPresentation(cyclicPresentation(n, p, q, s));
        CHECK_MESSAGE(viaTakahashi == viaCyclic, "n=", n, " p/q=", pq.str(), " s=", s);

        auto rep = representerPolynomial(n, p, q, s);
        BigInt res = rep.poly.isZero() ? BigInt(0) : abs(exactalg::resultant(rep.poly, exactalg::unitCircle(n)));
        CHECK(viaCyclic.order().value_or(BigInt(0)) == res);
        CHECK(abs(rep.poly.evaluate(1)) == abs(BigInt(p)));
      }
}

TEST_CASE("cyclic relation matrices are circulant and relabeling-invariant") {
  for (std::size_t n = 2; n <= 6; ++n) {
    Presentation p = cyclicPresentation(n, 3, 2, -1);
    auto m = abelianize(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(m(i, j) == m((i + 1) % n, (j + 1) % n));
    for (std::size_t shift = 1; shift < n; ++shift) {
      std::vector<Word> moved;
      for (const auto& r : p.relators()) moved.push_back(r.relabeled(shift, n));
      CHECK(h1FromPresentation(Presentation(n, moved)) == h1FromPresentation(p));
    }
  }
}
