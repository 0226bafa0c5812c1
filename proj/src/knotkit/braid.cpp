#include "takahashi/knotkit/braid.hpp"

#include <sstream>
#include <utility>

namespace takahashi::knotkit {

using exactalg::IntPoly;
using exactalg::LaurentPoly;

BraidWord3::BraidWord3(std::vector<int> l) : letters(std::move(l)) {
  for (int g : letters)
    if (g != 1 && g != -1 && g != 2 && g != -2)
      throw std::invalid_argument("braid generator " + std::to_string(g) + " is not one of 1, -1, 2, -2");
}

BraidWord3 BraidWord3::power(int k) const {
  BraidWord3 out;
  if (k >= 0) {
    for (int i = 0; i < k; ++i) out = out * *this;
  } else {
    BraidWord3 inv;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.letters.push_back(-*it);
    for (int i = 0; i < -k; ++i) out = out * inv;
  }
  return out;
}

BraidWord3 operator*(const BraidWord3& a, const BraidWord3& b) {
  BraidWord3 out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::string BraidWord3::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) out << (i ? " " : "") << letters[i];
  return out.str();
}

BraidWord3 parseBraidWord3(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("bad braid letter '" + tok + "'");
    letters.push_back(v);
  }
  return BraidWord3(std::move(letters));
}

LaurentMatrix2 LaurentMatrix2::identity() {
  return {{IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{1}}};
}

LaurentPoly LaurentMatrix2::determinant() const { return e[0] * e[3] - e[1] * e[2]; }

LaurentMatrix2 operator*(const LaurentMatrix2& a, const LaurentMatrix2& b) {
  LaurentMatrix2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      m.e[static_cast<std::size_t>(2 * r + c)] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return m;
}

namespace {

LaurentMatrix2 generatorImage(int g) {
  const LaurentPoly t = LaurentPoly::monomial(1, 1), tinv = LaurentPoly::monomial(1, -1);
  const LaurentPoly one = IntPoly{1}, zero;
  switch (g) {
    case 1: return {{-t, one, zero, one}};
    case -1: return {{-tinv, tinv, zero, one}};
    case 2: return {{one, zero, t, -t}};
    default: return {{one, zero, one, -tinv}};  // sigma_2^-1
  }
}

}  // namespace

LaurentMatrix2 reducedBurau3(const BraidWord3& b) {
  LaurentMatrix2 m = LaurentMatrix2::identity();
  for (int g : b.letters) m = m * generatorImage(g);
  return m;
}

std::array<int, 3> braidPermutation(const BraidWord3& b) {
  std::array<int, 3> perm{0, 1, 2};
  for (int g : b.letters) {
    if (g == 1 || g == -1) std::swap(perm[0], perm[1]);
    else std::swap(perm[1], perm[2]);
  }
  return perm;
}

AlexanderPoly alexanderFromBraid3(const BraidWord3& b) {
  auto perm = braidPermutation(b);
  if (perm[0] == 0 || perm[1] == 1 || perm[2] == 2) {
    int fixed = (perm[0] == 0) + (perm[1] == 1) + (perm[2] == 2);
    std::string type = fixed == 3 ? "(1,1,1)" : "(2,1)";
    throw NotAKnotError("closure of braid [" + b.str() + "] is not a knot: permutation [" +
                        std::to_string(perm[0] + 1) + " " + std::to_string(perm[1] + 1) + " " +
                        std::to_string(perm[2] + 1) + "] has cycle type " + type);
  }
  LaurentMatrix2 m = reducedBurau3(b);
  LaurentMatrix2 diff{{LaurentPoly(IntPoly{1}) - m.e[0], -m.e[1], -m.e[2], LaurentPoly(IntPoly{1}) - m.e[3]}};
  IntPoly det = exactalg::normalizeUpToUnits(diff.determinant());
  return {exactalg::normalizeUpToUnits(exactalg::exactQuotient(det, exactalg::cyclotomicQuotient(3)))};
}

}  // namespace takahashi::knotkit
