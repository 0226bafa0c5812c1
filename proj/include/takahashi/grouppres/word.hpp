#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace takahashi::grouppres {

/// Syllable g^e of a free-group word; generator index is 0-based.
struct Letter {
  std::size_t gen = 0;
  long exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in a free group as a sequence of syllables with nonzero exponents.
/// Adjacent syllables on the same generator are allowed until freeReduce.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument on a zero exponent.
  Word(std::initializer_list<Letter> letters);

  /// Appends g^e; a zero exponent appends nothing.
  Word& append(std::size_t gen, long exp);
  Word& append(const Word& w);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t maxGenerator() const;  // 0 for the empty word

  long exponentSum(std::size_t gen) const;
  /// Total number of unit letters, sum |e|.
  std::size_t length() const;

  Word inverse() const;
  /// w^k; negative k is (w^-1)^|k|, zero is the empty word.
  Word power(long k) const;
  Word relabeled(std::size_t shift, std::size_t modulus) const;

  /// "x1^2 x2^-3 x1"; the empty word prints as "1". Indices print 1-based.
  std::string str(std::string_view symbol = "x") const;

  friend Word operator*(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Unique freely reduced representative: syllables merged, cancellations done.
Word freeReduce(const Word& w);

/// Freely reduced and with first/last syllables not mutually cancelling or mergeable.
Word cyclicallyReduce(const Word& w);

/// True iff a and b are conjugate in the free group (equal cyclic words).
bool conjugateWords(const Word& a, const Word& b);

}  // namespace takahashi::grouppres
