#include "takahashi/cli/claims.hpp"

#include "takahashi/grouppres/families.hpp"
#include "takahashi/knotkit/braid.hpp"
#include "takahashi/knotkit/cover.hpp"
#include "takahashi/manifolds/takahashi.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

namespace takahashi::cli {

using exactalg::AbelianGroup;
using exactalg::BigInt;
using exactalg::Rational;

std::string_view statusName(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::UnverifiedByDesign: return "unverified-by-design";
  }
  return "fail";
}

ClaimStatus parseStatus(std::string_view name) {
  if (name == "pass") return ClaimStatus::Pass;
  if (name == "fail") return ClaimStatus::Fail;
  if (name == "unverified-by-design") return ClaimStatus::UnverifiedByDesign;
  throw std::invalid_argument("unknown claim status '" + std::string(name) + "'");
}

void to_json(nlohmann::json& j, const ClaimReport& c) {
  j = {{"claimId", c.claimId},
       {"description", c.description},
       {"expected", c.expected},
       {"computed", c.computed},
       {"status", statusName(c.status)}};
}

void from_json(const nlohmann::json& j, ClaimReport& c) {
  c.claimId = j.at("claimId").get<std::string>();
  c.description = j.at("description").get<std::string>();
  c.expected = j.at("expected").get<std::string>();
  c.computed = j.at("computed").get<std::string>();
  c.status = parseStatus(j.at("status").get<std::string>());
}

namespace {

ClaimStatus passIf(bool ok) { return ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

std::string orderOf(const AbelianGroup& g) {
  auto o = g.order();
  return o ? o->get_str() : "infinite";
}

ClaimReport manifold1296() {
  AbelianGroup g = manifolds::h1Takahashi(manifolds::normalizeSpec(3, 3, 1, 3, -1));
  std::string computed = orderOf(g) + " (" + g.str() + ")";
  return {"R1-manifold-1296", "|H1(M_3(3,-3))| via Smith normal form of the 6x6 relation matrix", "1296", computed,
          passIf(g.order() == BigInt(1296))};
}

ClaimReport manifold15() {
  auto spec = manifolds::normalizeSpec(4, 3, 2, 1, 1);
  AbelianGroup snf = manifolds::h1Takahashi(spec);
  AbelianGroup cyclic = manifolds::h1CyclicRoute(spec);
  auto rep = grouppres::representerPolynomial(4, 3, 2, 1);
  BigInt res = abs(exactalg::resultant(rep.poly, exactalg::unitCircle(4)));
  std::ostringstream computed;
  computed << "8x8 route " << orderOf(snf) << " (" << snf.str() << "), cyclic route " << orderOf(cyclic) << " ("
           << cyclic.str() << "), |Res(" << rep.poly.str() << ", t^4 - 1)| = " << res;
  bool ok = snf == cyclic && snf.order() == BigInt(15) && res == 15;
  return {"R1-manifold-15", "|H1(M_4(3/2,1))| via the 2n-generator and cyclic presentations", "15",
          computed.str(), passIf(ok)};
}

ClaimReport braid256() {
  auto braid = knotkit::BraidWord3({1, 1, 1, -2, -2, -2}).power(2);
  auto delta = knotkit::alexanderFromBraid3(braid);
  BigInt order = knotkit::branchedCoverOrder(delta, 3);
  return {"R1-braid-256",
          "3-fold cyclic branched cover of the closure of (s1^3 s2^-3)^2: |Res(Burau Alexander polynomial, 1+t+t^2)|",
          "256", order.get_str() + " (Alexander polynomial " + delta.str() + ")", passIf(order == 256)};
}

ClaimReport rational135() {
  return {"R1-rational-135",
          "4-fold cyclic branched cover of the closure of the rational braid (s1^(3/2) s2)^2",
          "135", "not computed: rational 3-braid closures are not modelled", ClaimStatus::UnverifiedByDesign};
}

ClaimReport lemma1Grid() {
  auto grid = manifolds::coefficientGrid(3);
  std::size_t checked = 0, bad = 0;
  std::string firstBad;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      ++checked;
      auto spec = manifolds::normalizeSpec(1, a, b);
      bool ok = manifolds::h1Takahashi(spec) == manifolds::baseSpaceH1(a, b);
      if (a.num() == 1 && b.num() == 1) ok = ok && manifolds::h1Takahashi(spec).isTrivial();
      if (!ok && bad++ == 0) firstBad = spec.str();
    }
  }
  std::string computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " agree";
  if (bad) computed += "; first mismatch " + firstBad;
  return {"L1-grid", "H1(M_1(p/q,r/s)) = Z/p + Z/r for |p|,|q|,|r|,|s| <= 3 (infinity included)",
          std::to_string(checked) + "/" + std::to_string(checked) + " agree", computed, passIf(bad == 0)};
}

ClaimReport prop4Grid() {
  std::size_t checked = 0, bad = 0;
  std::string firstBad;
  for (long q = -3; q <= 3; ++q)
    for (long s = -3; s <= 3; ++s)
      for (std::size_t n = 2; n <= 6; ++n) {
        ++checked;
        if (!manifolds::crossCheckProp4(q, s, n) && bad++ == 0)
          firstBad = "q=" + std::to_string(q) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
      }
  std::string computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " agree";
  if (bad) computed += "; first mismatch " + firstBad;
  return {"P4-grid",
          "H1(M_n(1/q,1/s)) equals H1 of the n-fold branched cover of b(|4sq-1|,2s), |q|,|s| <= 3, 2 <= n <= 6",
          std::to_string(checked) + "/" + std::to_string(checked) + " agree", computed, passIf(bad == 0)};
}

ClaimReport symmetryGrid() {
  auto grid = manifolds::coefficientGrid(3);
  std::size_t checked = 0, bad = 0;
  std::string firstBad;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& a : grid)
      for (const auto& b : grid) {
        ++checked;
        auto spec = manifolds::normalizeSpec(n, a, b);
        if (!manifolds::symmetryCheck(spec) && bad++ == 0) firstBad = spec.str();
      }
  std::string computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " invariant";
  if (bad) computed += "; first failure " + firstBad;
  return {"SYM-grid", "H1 invariant under (p/q,r/s) -> (-p/q,-r/s), (r/s,p/q), (-r/s,-p/q), n <= 5, entries <= 3",
          std::to_string(checked) + "/" + std::to_string(checked) + " invariant", computed, passIf(bad == 0)};
}

ClaimReport relatorIdentity() {
  std::size_t checked = 0, bad = 0;
  std::string firstBad;
  for (std::size_t n = 1; n <= 5; ++n)
    for (long p = -3; p <= 3; ++p)
      for (long q = -3; q <= 3; ++q)
        for (long s = -3; s <= 3; ++s) {
          if (s == 0) continue;
          ++checked;
          if (!grouppres::relatorIdentityCheck(n, p, q, s) && bad++ == 0)
            firstBad = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                       " s=" + std::to_string(s);
        }
  std::string computed = std::to_string(checked - bad) + "/" + std::to_string(checked) + " identical";
  if (bad) computed += "; first failure " + firstBad;
  return {"EQ1-identity",
          "cyclic relator equals its rewritten form (s>0 and s<0) as a cyclic free-group word, n <= 5, |p|,|q|,|s| <= 3",
          std::to_string(checked) + "/" + std::to_string(checked) + " identical", computed, passIf(bad == 0)};
}

ClaimReport schubert2s2q() {
  std::size_t checked = 0, bad = 0;
  for (long q = -5; q <= 5; ++q)
    for (long s = -5; s <= 5; ++s) {
      const long alpha = std::labs(4 * s * q - 1);
      if (alpha < 2) continue;
      ++checked;
      auto k1 = knotkit::normalizeTwoBridge(alpha, 2 * s);
      auto k2 = knotkit::normalizeTwoBridge(alpha, 2 * q);
      if (!knotkit::twoBridgeEquivalent(k1, k2, false)) ++bad;
    }
  return {"SCHUBERT-2s2q", "b(|4sq-1|,2s) is equivalent to b(|4sq-1|,2q) for |q|,|s| <= 5",
          std::to_string(checked) + "/" + std::to_string(checked) + " equivalent",
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " equivalent", passIf(bad == 0)};
}

const std::map<std::string, std::function<ClaimReport()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<ClaimReport()>, std::less<>> claims{
      {"EQ1-identity", relatorIdentity}, {"L1-grid", lemma1Grid},
      {"P4-grid", prop4Grid},            {"R1-braid-256", braid256},
      {"R1-manifold-15", manifold15},    {"R1-manifold-1296", manifold1296},
      {"R1-rational-135", rational135},  {"SCHUBERT-2s2q", schubert2s2q},
      {"SYM-grid", symmetryGrid},
  };
  return claims;
}

ClaimReport guarded(const std::string& id, const std::function<ClaimReport()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {id, "evaluation raised an error", "", e.what(), ClaimStatus::Fail};
  }
}

}  // namespace

std::vector<std::string> claimIds() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

ClaimReport runClaim(std::string_view id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
  return guarded(it->first, it->second);
}

std::vector<ClaimReport> runClaims() {
  std::vector<std::future<ClaimReport>> pending;
  for (const auto& [id, fn] : registry())
    pending.push_back(std::async(std::launch::async, [&id, &fn] { return guarded(id, fn); }));
  std::vector<ClaimReport> out;
  for (auto& f : pending) out.push_back(f.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.claimId < b.claimId; });
  return out;
}

bool allPassed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == ClaimStatus::Fail; });
}

std::string renderClaimsText(const std::vector<ClaimReport>& reports) {
  std::size_t idWidth = 0;
  for (const auto& r : reports) idWidth = std::max(idWidth, r.claimId.size());
  std::ostringstream out;
  for (const auto& r : reports) {
    std::string status(statusName(r.status));
    out << r.claimId << std::string(idWidth + 2 - r.claimId.size(), ' ') << status
        << std::string(22 - status.size(), ' ') << r.description << '\n';
    out << std::string(idWidth + 24, ' ') << "expected: " << r.expected << '\n';
    out << std::string(idWidth + 24, ' ') << "computed: " << r.computed << '\n';
  }
  std::size_t fails = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.status == ClaimStatus::Fail; });
  out << (fails == 0 ? "all claims verified" : std::to_string(fails) + " claim(s) failed") << '\n';
  return out.str();
}

nlohmann::json renderClaimsJson(const std::vector<ClaimReport>& reports) {
  return {{"claims", reports}, {"allPassed", allPassed(reports)}};
}

}  // namespace takahashi::cli
