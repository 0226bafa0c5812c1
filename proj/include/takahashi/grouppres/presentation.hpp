#pragma once

#include "takahashi/exactalg/abelian.hpp"
#include "takahashi/exactalg/matrix.hpp"
#include "takahashi/grouppres/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace takahashi::grouppres {

/// Finite group presentation <g_1..g_k | relators>.
class Presentation {
 public:
  Presentation() = default;
  /// Throws std::invalid_argument if a relator mentions a generator >= count.
  Presentation(std::size_t generatorCount, std::vector<Word> relators, std::string symbol = "x");

  std::size_t generatorCount() const { return generatorCount_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Letter used when printing generators ("x", "z", ...).
  const std::string& symbol() const { return symbol_; }

  /// "<x1, x2 | x1^2 x2^-1, ...>"
  std::string str() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::size_t generatorCount_ = 0;
  std::vector<Word> relators_;
  std::string symbol_ = "x";
};

/// Relation matrix: one row per relator, one column per generator, entries
/// are exponent sums.
exactalg::BigIntMatrix abelianize(const Presentation& p);

/// First homology (abelianization) of the presented group.
exactalg::AbelianGroup h1FromPresentation(const Presentation& p);

}  // namespace takahashi::grouppres
