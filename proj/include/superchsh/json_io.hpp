#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "superchsh/chsh_game.hpp"
#include "superchsh/optimizer.hpp"

namespace superchsh {

inline constexpr const char* kVersion = "0.1.0";

nlohmann::json to_json(const GameParameters& p);

// Reads a parameter object; missing keys default to 0, unknown keys are an
// error (std::invalid_argument).
GameParameters game_parameters_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const GameReport& report, std::uint64_t seed);
nlohmann::json result_to_json(const OptResult& result, const OptConfig& cfg,
                              const SettingTables& best_tables);

// CSV renderings ("tables only"): header ij,outcome_a,outcome_b,p.
std::string tables_to_csv(const SettingTables& tables);

}  // namespace superchsh
