#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace takahashi::cli {

enum class ClaimStatus { Pass, Fail, UnverifiedByDesign };

std::string_view statusName(ClaimStatus s);
/// Throws std::invalid_argument for an unknown name.
ClaimStatus parseStatus(std::string_view name);

/// Outcome of checking one published numeric or structural claim.
struct ClaimReport {
  std::string claimId;
  std::string description;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Fail;
  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

void to_json(nlohmann::json& j, const ClaimReport& c);
void from_json(const nlohmann::json& j, ClaimReport& c);

/// Runs every claim (independent claims in parallel); sorted by claimId.
std::vector<ClaimReport> runClaims();

/// Runs a single claim by id. Throws std::invalid_argument for an unknown id.
ClaimReport runClaim(std::string_view id);

std::vector<std::string> claimIds();

/// True iff no report has status Fail.
bool allPassed(const std::vector<ClaimReport>& reports);

std::string renderClaimsText(const std::vector<ClaimReport>& reports);
nlohmann::json renderClaimsJson(const std::vector<ClaimReport>& reports);

}  // namespace takahashi::cli
