#include "takahashi/cli/render.hpp"

#include <sstream>
#include <stdexcept>

namespace takahashi::exactalg {

void to_json(nlohmann::json& j, const AbelianGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.get_str());
  auto order = g.order();
  j = {{"torsion", torsion}, {"freeRank", g.freeRank}, {"order", order ? order->get_str() : "infinite"}};
}

void from_json(const nlohmann::json& j, AbelianGroup& g) {
  g.torsion.clear();
  for (const auto& d : j.at("torsion")) g.torsion.push_back(parseBigInt(d.get<std::string>()));
  g.freeRank = j.at("freeRank").get<std::size_t>();
}

}  // namespace takahashi::exactalg

namespace takahashi::knotkit {

void to_json(nlohmann::json& j, const TwoBridge& k) { j = {{"alpha", k.alpha}, {"beta", k.beta}}; }

void from_json(const nlohmann::json& j, TwoBridge& k) {
  k.alpha = j.at("alpha").get<long>();
  k.beta = j.at("beta").get<long>();
}

void to_json(nlohmann::json& j, const AlexanderPoly& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.poly.coeffs()) coeffs.push_back(c.get_str());
  j = {{"coefficients", coeffs}, {"text", a.poly.str()}};
}

void from_json(const nlohmann::json& j, AlexanderPoly& a) {
  std::vector<exactalg::BigInt> c;
  for (const auto& v : j.at("coefficients")) c.push_back(exactalg::parseBigInt(v.get<std::string>()));
  a.poly = exactalg::IntPoly(std::move(c));
}

}  // namespace takahashi::knotkit

namespace takahashi::grouppres {

void to_json(nlohmann::json& j, const Presentation& p) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : p.relators()) rel.push_back(r.str(p.symbol()));
  j = {{"generators", p.generatorCount()}, {"symbol", p.symbol()}, {"relators", rel}};
}

void from_json(const nlohmann::json& j, Presentation& p) {
  const auto symbol = j.at("symbol").get<std::string>();
  std::vector<Word> relators;
  for (const auto& r : j.at("relators")) relators.push_back(parseWord(r.get<std::string>(), symbol));
  p = Presentation(j.at("generators").get<std::size_t>(), std::move(relators), symbol);
}

Word parseWord(std::string_view text, std::string_view symbol) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.compare(0, symbol.size(), symbol) != 0) throw std::invalid_argument("bad word letter '" + tok + "'");
    std::string rest = tok.substr(symbol.size());
    long exp = 1;
    auto caret = rest.find('^');
    if (caret != std::string::npos) {
      exp = exactalg::toLong(exactalg::parseBigInt(rest.substr(caret + 1)));
      rest.resize(caret);
    }
    long index = exactalg::toLong(exactalg::parseBigInt(rest));
    if (index < 1 || exp == 0) throw std::invalid_argument("bad word letter '" + tok + "'");
    w.append(static_cast<std::size_t>(index - 1), exp);
  }
  return w;
}

}  // namespace takahashi::grouppres

namespace takahashi::cli {

void to_json(nlohmann::json& j, const H1Report& r) {
  nlohmann::json g = r.group;
  j = {{"n", r.spec.n}, {"pq", r.spec.pq.str()}, {"rs", r.spec.rs.str()}};
  j.update(g);
}

void from_json(const nlohmann::json& j, H1Report& r) {
  r.spec = manifolds::normalizeSpec(j.at("n").get<std::size_t>(), exactalg::parseRational(j.at("pq").get<std::string>()),
                                    exactalg::parseRational(j.at("rs").get<std::string>()));
  r.group = j.get<exactalg::AbelianGroup>();
}

std::string orderString(const exactalg::AbelianGroup& g) {
  auto o = g.order();
  return o ? o->get_str() : "infinite";
}

std::string renderH1Text(const H1Report& r) {
  std::ostringstream out;
  out << "manifold           " << r.spec.str() << '\n';
  out << "H1                 " << r.group.str() << '\n';
  out << "invariant factors  ";
  if (r.group.torsion.empty()) out << "(none)";
  for (std::size_t i = 0; i < r.group.torsion.size(); ++i) out << (i ? " " : "") << r.group.torsion[i];
  out << '\n';
  out << "free rank          " << r.group.freeRank << '\n';
  out << "order              " << orderString(r.group) << '\n';
  return out.str();
}

}  // namespace takahashi::cli
