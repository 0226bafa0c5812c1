#include "takahashi/grouppres/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace takahashi::grouppres {

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exp == 0) throw std::invalid_argument("word letters must have nonzero exponents");
    letters_.push_back(l);
  }
}

Word& Word::append(std::size_t gen, long exp) {
  if (exp != 0) letters_.push_back({gen, exp});
  return *this;
}

Word& Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

std::size_t Word::maxGenerator() const {
  std::size_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

long Word::exponentSum(std::size_t gen) const {
  long s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::labs(l.exp));
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word w;
  for (long i = 0; i < std::labs(k); ++i) w.append(base);
  return w;
}

Word Word::relabeled(std::size_t shift, std::size_t modulus) const {
  Word w;
  for (const auto& l : letters_) w.letters_.push_back({(l.gen + shift) % modulus, l.exp});
  return w;
}

std::string Word::str(std::string_view symbol) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  const char* sep = "";
  for (const auto& l : letters_) {
    out << sep << symbol << (l.gen + 1);
    if (l.exp != 1) out << '^' << l.exp;
    sep = " ";
  }
  return out.str();
}

Word freeReduce(const Word& w) {
  std::vector<Letter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen) {
      stack.back().exp += l.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  Word out;
  for (const auto& l : stack) out.append(l.gen, l.exp);
  return out;
}

Word cyclicallyReduce(const Word& w) {
  std::vector<Letter> v = freeReduce(w).letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo].gen == v[hi - 1].gen) {
    long merged = v[lo].exp + v[hi - 1].exp;
    --hi;
    if (merged == 0) {
      ++lo;
    } else {
      v[lo].exp = merged;
      break;  // merged syllable cannot merge again with a different neighbour
    }
  }
  Word out;
  for (std::size_t i = lo; i < hi; ++i) out.append(v[i].gen, v[i].exp);
  return out;
}

namespace {

// Expands syllables into signed unit letters, encoded as +-(gen + 1).
std::vector<long> unitLetters(const Word& w) {
  std::vector<long> out;
  for (const auto& l : w.letters()) {
    long code = static_cast<long>(l.gen) + 1;
    for (long i = 0; i < std::labs(l.exp); ++i) out.push_back(l.exp > 0 ? code : -code);
  }
  return out;
}

}  // namespace

bool conjugateWords(const Word& a, const Word& b) {
  std::vector<long> x = unitLetters(cyclicallyReduce(a));
  std::vector<long> y = unitLetters(cyclicallyReduce(b));
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  std::vector<long> doubled = x;
  doubled.insert(doubled.end(), x.begin(), x.end());
  return std::search(doubled.begin(), doubled.end(), y.begin(), y.end()) != doubled.end();
}

}  // namespace takahashi::grouppres
