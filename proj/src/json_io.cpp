#include "superchsh/json_io.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superchsh {

using nlohmann::json;

namespace {

json tables_to_json(const SettingTables& tables) {
    json out = json::array();
    for (const Table3& t : tables) {
        json rows = json::array();
        for (const auto& row : t) rows.push_back(row);
        out.push_back(rows);
    }
    return out;
}

}  // namespace

json to_json(const GameParameters& p) {
    return json{{"p", p.p},   {"q", p.q},   {"r0", p.r0}, {"r1", p.r1}, {"s0", p.s0},
                {"s1", p.s1}, {"a0", p.a0}, {"a1", p.a1}, {"b0", p.b0}, {"b1", p.b1}};
}

GameParameters game_parameters_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("parameters: expected a JSON object");
    static const std::set<std::string> known = {"p",  "q",  "r0", "r1", "s0",
                                                "s1", "a0", "a1", "b0", "b1"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw std::invalid_argument("parameters: unknown key '" + key + "'");
        if (!value.is_number())
            throw std::invalid_argument("parameters: key '" + key + "' must be a number");
    }
    GameParameters p;
    p.p = j.value("p", 0.0);
    p.q = j.value("q", 0.0);
    p.r0 = j.value("r0", 0.0);
    p.r1 = j.value("r1", 0.0);
    p.s0 = j.value("s0", 0.0);
    p.s1 = j.value("s1", 0.0);
    p.a0 = j.value("a0", 0.0);
    p.a1 = j.value("a1", 0.0);
    p.b0 = j.value("b0", 0.0);
    p.b1 = j.value("b1", 0.0);
    return p;
}

json report_to_json(const GameReport& report, std::uint64_t seed) {
    return json{{"version", kVersion},
                {"map", to_string(report.map)},
                {"seed", seed},
                {"params", to_json(report.params)},
                {"tables", tables_to_json(report.tables)},
                {"p_win", report.p_win},
                {"feasible", report.feasible},
                {"worst_violation", report.worst_violation}};
}

json result_to_json(const OptResult& result, const OptConfig& cfg,
                    const SettingTables& best_tables) {
    json history = json::array();
    for (double v : result.history) {
        if (std::isnan(v))
            history.push_back(nullptr);
        else
            history.push_back(v);
    }
    json out{{"version", kVersion},
             {"map", to_string(cfg.map)},
             {"seed", cfg.seed},
             {"params", to_json(result.best)},
             {"tables", tables_to_json(best_tables)},
             {"p_win", result.p_win},
             {"feasible", result.feasible},
             {"restarts_run", result.restarts_run},
             {"history", history}};
    if (cfg.box) out["box"] = json{{"r_max", cfg.box->first}, {"s_max", cfg.box->second}};
    return out;
}

std::string tables_to_csv(const SettingTables& tables) {
    static constexpr const char* outcome[3] = {"dot", "0", "1"};
    std::ostringstream out;
    out << "ij,outcome_a,outcome_b,p\n";
    for (const auto& [i, j] : kSettings) {
        const Table3& t = tables[2 * i + j];
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
                out << i << j << "," << outcome[m] << "," << outcome[n] << ","
                    << json(t[m][n]).dump() << "\n";
            }
    }
    return out.str();
}

}  // namespace superchsh
