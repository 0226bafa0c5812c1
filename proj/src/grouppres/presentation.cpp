#include "takahashi/grouppres/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace takahashi::grouppres {

Presentation::Presentation(std::size_t generatorCount, std::vector<Word> relators, std::string symbol)
    : generatorCount_(generatorCount), relators_(std::move(relators)), symbol_(std::move(symbol)) {
  for (const auto& r : relators_) {
    if (!r.empty() && r.maxGenerator() >= generatorCount_)
      throw std::invalid_argument("relator " + r.str(symbol_) + " uses a generator outside the presentation");
  }
}

std::string Presentation::str() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t g = 0; g < generatorCount_; ++g) out << (g ? ", " : "") << symbol_ << (g + 1);
  out << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) out << (i ? ", " : "") << relators_[i].str(symbol_);
  out << '>';
  return out.str();
}

exactalg::BigIntMatrix abelianize(const Presentation& p) {
  exactalg::BigIntMatrix m(p.relators().size(), p.generatorCount());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (const auto& l : p.relators()[r].letters()) m(r, l.gen) += l.exp;
  return m;
}

exactalg::AbelianGroup h1FromPresentation(const Presentation& p) {
  return exactalg::cokernel(abelianize(p));
}

}  // namespace takahashi::grouppres
