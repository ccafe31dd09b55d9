#pragma once

#include <array>

#include "superchsh/prob_maps.hpp"
#include "superchsh/superhilbert.hpp"

namespace superchsh {

// Referee question bits, each pair drawn with weight 1/4.
struct SettingPair {
    int i = 0;
    int j = 0;
};

inline constexpr std::array<SettingPair, 4> kSettings{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

// Where the trigonometric map takes its substitution scales from.
enum class TrigScale { Rotation, State };

struct GameOptions {
    // The paper never defines the bipartite trigonometric map; the minimal
    // per-factor extension used here must be opted into explicitly.
    bool experimental_trig = false;
    TrigScale trig_scale = TrigScale::Rotation;
};

// Alice announces a = 0 for outcome |0> and a = 1 for |1> or |dot>; Bob
// likewise. The cell wins when a xor b = i and j.
bool is_winning_cell(int i, int j, Basis m, Basis n);

using SettingTables = std::array<Table3, 4>;  // setting order (00, 01, 10, 11)

// The four 3x3 real outcome tables: build Gamma(p, q), rotate by
// S(2 r_i tA) U(a_i) (x) S(2 s_j tB) U(b_j), extract via the chosen map.
SettingTables outcome_tables(const GameParameters& params, MapKind map,
                             const GameOptions& opts = {});

// Payoff: 1/4 of the winning-cell mass of each setting's table.
double win_probability(const SettingTables& tables);

// Best deterministic classical strategy, by enumeration of all 16. Exactly 3/4.
double classical_best();

// DeWitt-map game at zero Grassmann parameters with the standard CHSH angles
// (Alice 0, pi/4; Bob pi/8, -pi/8): the Tsirelson value cos^2(pi/8).
double quantum_baseline();

// Published winning parameters under the frozen plain-angle convention
// (alpha_i, beta_i) = (cos a_i, sin a_i).
GameParameters paper_winning_parameters();

inline GameParameters zero_parameters() { return {}; }

struct GameReport {
    MapKind map = MapKind::DeWitt;
    GameParameters params;
    SettingTables tables{};
    double p_win = 0.0;
    bool feasible = false;
    double worst_violation = 0.0;
};

// Full evaluation: tables, payoff, and the Eq.-style feasibility check that
// every entry lies in [0, 1] within tol.
GameReport play_game(const GameParameters& params, MapKind map, const GameOptions& opts = {},
                     double feasibility_tol = 1e-8);

}  // namespace superchsh
