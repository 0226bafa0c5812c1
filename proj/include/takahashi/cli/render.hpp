#pragma once

#include "takahashi/exactalg/abelian.hpp"
#include "takahashi/grouppres/presentation.hpp"
#include "takahashi/knotkit/fox.hpp"
#include "takahashi/knotkit/twobridge.hpp"
#include "takahashi/manifolds/takahashi.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

// JSON encodings for the values the command-line tool prints. Integers that
// can grow without bound are emitted as decimal strings.

namespace takahashi::exactalg {
void to_json(nlohmann::json& j, const AbelianGroup& g);
void from_json(const nlohmann::json& j, AbelianGroup& g);
}  // namespace takahashi::exactalg

namespace takahashi::knotkit {
void to_json(nlohmann::json& j, const TwoBridge& k);
void from_json(const nlohmann::json& j, TwoBridge& k);
void to_json(nlohmann::json& j, const AlexanderPoly& a);
void from_json(const nlohmann::json& j, AlexanderPoly& a);
}  // namespace takahashi::knotkit

namespace takahashi::grouppres {
void to_json(nlohmann::json& j, const Presentation& p);
void from_json(const nlohmann::json& j, Presentation& p);

/// Inverse of Word::str: "x1^2 x2^-3 x1" (or "1" for the empty word).
Word parseWord(std::string_view text, std::string_view symbol);
}  // namespace takahashi::grouppres

namespace takahashi::cli {

/// H_1 of one Takahashi manifold, as printed by `h1`.
struct H1Report {
  manifolds::TakahashiSpec spec;
  exactalg::AbelianGroup group;
  friend bool operator==(const H1Report&, const H1Report&) = default;
};

void to_json(nlohmann::json& j, const H1Report& r);
void from_json(const nlohmann::json& j, H1Report& r);

std::string orderString(const exactalg::AbelianGroup& g);
std::string renderH1Text(const H1Report& r);

}  // namespace takahashi::cli
