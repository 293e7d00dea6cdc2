#pragma once

#include <string>

#include <json.hpp>

#include "trop/certify.hpp"
#include "trop/game.hpp"
#include "trop/macaulay.hpp"

namespace trop {

using nlohmann::json;

/// Rationals serialize as "p" or "p/q"; a two-level value with an eps part
/// as the pair ["p/q", "r/s"]; Bottom as null.
json json_of_rat(const Rat& r);
json json_of_two(const Two& v);
json json_of_trop(const TropScalar& v);
Rat rat_from_json(const json& j);
Two two_from_json(const json& j);
TropScalar trop_from_json(const json& j);

json json_of_expo(const Expo& e);
Expo expo_from_json(const json& j);

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json game_to_json(const GameInstance& g);

json linear_system_to_json(const LinearSystem& sys, const std::vector<std::string>& vars);

/// Header row of column monomials, then one line per row: label followed by
/// merged entries (minus layer wins ties); empty cell = Bottom.
std::string linear_system_csv(const LinearSystem& sys, const std::vector<std::string>& vars);

}  // namespace trop
