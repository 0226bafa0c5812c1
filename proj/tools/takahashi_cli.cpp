// Command-line frontend: homology of periodic Takahashi manifolds, their
// branch knots, and the claims harness.
//
// Exit codes: 0 success, 1 a verified claim failed, 2 usage error.

#include "takahashi/cli/claims.hpp"
#include "takahashi/cli/render.hpp"
#include "takahashi/grouppres/families.hpp"
#include "takahashi/knotkit/braid.hpp"
#include "takahashi/knotkit/cover.hpp"
#include "takahashi/manifolds/takahashi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace takahashi;
using nlohmann::json;

constexpr int kClaimFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parsePeriod(const std::string& text) {
  exactalg::BigInt n = exactalg::parseBigInt(text);
  if (n < 1) throw UsageError("n must be a positive integer, got " + text);
  return static_cast<std::size_t>(exactalg::toLong(n));
}

void emit(bool asJson, const json& j, const std::string& text) {
  if (asJson) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

std::string knotNote(const knotkit::TwoBridge& k) {
  if (k.alpha == 1) return "unknot";
  if (k.alpha == 3) return "trefoil";
  if (k.alpha == 5 && (k.beta == 2 || k.beta == 3)) return "figure-eight knot";
  return "genus-one two-bridge knot";
}

int cmdH1(const std::string& n, const std::string& pq, const std::string& rs, bool asJson) {
  auto spec = manifolds::normalizeSpec(parsePeriod(n), exactalg::parseRational(pq), exactalg::parseRational(rs));
  cli::H1Report report{spec, manifolds::h1Takahashi(spec)};
  emit(asJson, report, cli::renderH1Text(report));
  return 0;
}

int cmdPresentation(const std::string& n, const std::string& pq, const std::string& rs, bool cyclic, bool asJson) {
  auto spec = manifolds::normalizeSpec(parsePeriod(n), exactalg::parseRational(pq), exactalg::parseRational(rs));
  grouppres::Presentation p;
  if (cyclic) {
    if (spec.rs.num() != 1)
      throw UsageError("--cyclic needs r/s = 1/s (numerator 1); got r/s = " + spec.rs.str());
    p = grouppres::cyclicPresentation(spec.n, exactalg::toLong(spec.pq.num()), exactalg::toLong(spec.pq.den()),
                                      exactalg::toLong(spec.rs.den()));
  } else {
    p = grouppres::takahashiPresentation(spec.n, spec.pq, spec.rs);
  }
  std::ostringstream text;
  text << "manifold    " << spec.str() << '\n';
  text << "generators  " << p.generatorCount() << '\n';
  text << "relators    " << p.relators().size() << '\n';
  for (std::size_t i = 0; i < p.relators().size(); ++i) text << "  r" << (i + 1) << " = " << p.relators()[i].str(p.symbol()) << '\n';
  json j = p;
  j["manifold"] = spec.str();
  emit(asJson, j, text.str());
  return 0;
}

int cmdBranchKnot(long q, long s, bool asJson) {
  knotkit::TwoBridge k = manifolds::branchKnot(q, s);
  knotkit::ConwayForm conway{-2 * q, 2 * s};
  exactalg::Rational fraction = knotkit::conwayToFraction(conway);
  knotkit::TwoBridge other = knotkit::normalizeTwoBridge(k.alpha, 2 * q);
  bool equivalent = knotkit::twoBridgeEquivalent(k, other, false);
  std::ostringstream text;
  text << "branch knot  " << k.str() << '\n';
  text << "Conway form  [" << conway[0] << ", " << conway[1] << "] = " << fraction.str() << '\n';
  text << "equivalent   " << other.str() << " (2q form): " << (equivalent ? "yes" : "no") << '\n';
  text << "note         " << knotNote(k) << '\n';
  json j = {{"knot", k}, {"conway", conway}, {"fraction", fraction.str()}, {"equivalentTo", other},
            {"equivalent", equivalent}, {"note", knotNote(k)}};
  emit(asJson, j, text.str());
  return 0;
}

int cmdCoverOrder(long alpha, long beta, const std::string& n, bool asJson) {
  if (alpha < 1 || alpha % 2 == 0) throw UsageError("alpha must be odd and positive (knots only)");
  knotkit::TwoBridge k;
  try {
    k = knotkit::normalizeTwoBridge(alpha, beta);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::size_t degree = parsePeriod(n);
  auto delta = knotkit::alexanderTwoBridge(k);
  auto group = knotkit::branchedCoverHomology(delta, degree);
  auto res = knotkit::branchedCoverOrder(delta, degree);
  std::ostringstream text;
  text << "knot               " << k.str() << '\n';
  text << "Alexander          " << delta.str() << '\n';
  text << "cover degree       " << degree << '\n';
  text << "H1                 " << group.str() << '\n';
  text << "order              " << cli::orderString(group) << '\n';
  text << "|Res(delta, nu_n)| " << res << '\n';
  json j = group;
  j["knot"] = k;
  j["n"] = degree;
  j["alexander"] = delta;
  j["resultant"] = res.get_str();
  emit(asJson, j, text.str());
  return 0;
}

int cmdTwoBridgeEquiv(long a1, long b1, long a2, long b2, bool mirror, bool asJson) {
  knotkit::TwoBridge k1, k2;
  try {
    k1 = knotkit::normalizeTwoBridge(a1, b1);
    k2 = knotkit::normalizeTwoBridge(a2, b2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool eq = knotkit::twoBridgeEquivalent(k1, k2, mirror);
  std::ostringstream text;
  text << k1.str() << (eq ? " ~ " : " !~ ") << k2.str() << (mirror ? " (mirror images allowed)" : " (oriented)") << '\n';
  emit(asJson, json{{"first", k1}, {"second", k2}, {"allowMirror", mirror}, {"equivalent", eq}}, text.str());
  return 0;
}

int cmdBraidAlexander(const std::string& word, bool asJson) {
  knotkit::BraidWord3 b;
  knotkit::AlexanderPoly delta;
  try {
    b = knotkit::parseBraidWord3(word);
    delta = knotkit::alexanderFromBraid3(b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = delta;
  j["braid"] = b.str();
  emit(asJson, j, "braid      " + b.str() + "\nAlexander  " + delta.str() + "\n");
  return 0;
}

int cmdVerifyPaper(bool asJson) {
  auto reports = cli::runClaims();
  emit(asJson, cli::renderClaimsJson(reports), cli::renderClaimsText(reports));
  return cli::allPassed(reports) ? 0 : kClaimFailure;
}

int cmdConjectureScan(long gridMax, long nMax, bool asJson) {
  if (gridMax < 0 || nMax < 1) throw UsageError("--grid-max must be >= 0 and --n-max >= 1");
  auto grid = manifolds::coefficientGrid(gridMax);
  json rows = json::array();
  std::ostringstream text;
  text << "n  p/q    r/s    p=r=1  order       H1\n";
  for (long n = 1; n <= nMax; ++n) {
    for (const auto& a : grid) {
      for (const auto& b : grid) {
        auto spec = manifolds::normalizeSpec(static_cast<std::size_t>(n), a, b);
        auto g = manifolds::h1Takahashi(spec);
        bool unit = a.num() == 1 && b.num() == 1;
        json row = g;
        row["n"] = n;
        row["pq"] = a.str();
        row["rs"] = b.str();
        row["unitNumerators"] = unit;
        rows.push_back(row);
        char line[160];
        std::snprintf(line, sizeof line, "%-2ld %-6s %-6s %-6s %-11s ", n, a.str().c_str(), b.str().c_str(),
                      unit ? "yes" : "no", cli::orderString(g).c_str());
        text << line << g.str() << '\n';
      }
    }
  }
  emit(asJson, json{{"gridMax", gridMax}, {"nMax", nMax}, {"rows", rows}}, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology invariants of periodic Takahashi manifolds and their branch knots"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "Emit a single JSON document")->configurable(false);

  std::string nArg, pqArg, rsArg, wordArg;
  long q = 0, s = 0, alpha = 0, beta = 0, a2 = 0, b2 = 0, gridMax = 3, nMax = 4;
  bool cyclic = false, mirror = false;

  auto* h1 = app.add_subcommand("h1", "First homology of M_n(p/q, r/s)")->fallthrough();
  h1->add_option("n", nArg)->required();
  h1->add_option("pq", pqArg, "p/q, integer, or inf")->required();
  h1->add_option("rs", rsArg, "r/s, integer, or inf")->required();

  auto* pres = app.add_subcommand("presentation", "Fundamental group presentation of M_n(p/q, r/s)")->fallthrough();
  pres->add_option("n", nArg)->required();
  pres->add_option("pq", pqArg)->required();
  pres->add_option("rs", rsArg)->required();
  pres->add_flag("--cyclic", cyclic, "Use the n-generator cyclic presentation (needs r = 1)");

  auto* bk = app.add_subcommand("branch-knot", "Genus-one two-bridge knot b(|4sq-1|, 2s)")->fallthrough();
  bk->add_option("q", q)->required();
  bk->add_option("s", s)->required();

  auto* cover = app.add_subcommand("cover-order", "H1 of the n-fold cyclic branched cover of b(alpha, beta)")->fallthrough();
  cover->add_option("alpha", alpha)->required();
  cover->add_option("beta", beta)->required();
  cover->add_option("n", nArg)->required();

  auto* equiv = app.add_subcommand("two-bridge-equiv", "Schubert equivalence of b(a1,b1) and b(a2,b2)")->fallthrough();
  equiv->add_option("a1", alpha)->required();
  equiv->add_option("b1", beta)->required();
  equiv->add_option("a2", a2)->required();
  equiv->add_option("b2", b2)->required();
  equiv->add_flag("--mirror", mirror, "Also accept mirror images");

  auto* braid = app.add_subcommand("braid-alexander", "Alexander polynomial of a 3-braid closure")->fallthrough();
  braid->add_option("word", wordArg, "e.g. \"1 1 1 -2\"")->required();

  auto* verify = app.add_subcommand("verify-paper", "Check every published claim reproducible here")->fallthrough();

  auto* scan = app.add_subcommand("conjecture-scan", "Tabulate H1 over a grid of surgery coefficients")->fallthrough();
  scan->add_option("--grid-max", gridMax, "Bound on |p|, |q|, |r|, |s|");
  scan->add_option("--n-max", nMax, "Largest period n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*h1) return cmdH1(nArg, pqArg, rsArg, asJson);
    if (*pres) return cmdPresentation(nArg, pqArg, rsArg, cyclic, asJson);
    if (*bk) return cmdBranchKnot(q, s, asJson);
    if (*cover) return cmdCoverOrder(alpha, beta, nArg, asJson);
    if (*equiv) return cmdTwoBridgeEquiv(alpha, beta, a2, b2, mirror, asJson);
    if (*braid) return cmdBraidAlexander(wordArg, asJson);
    if (*verify) return cmdVerifyPaper(asJson);
    if (*scan) return cmdConjectureScan(gridMax, nMax, asJson);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
