#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "superchsh/chsh_game.hpp"

namespace superchsh {

struct OptConfig {
    int restarts = 200;
    int max_iters = 2000;  // simplex iterations per penalty stage
    std::uint64_t seed = 0;
    std::vector<double> penalty_weights = {10.0, 1e3, 1e5};
    double feasibility_tol = 1e-8;
    std::optional<std::pair<double, double>> box;  // (r_max, s_max), compactified variant
    MapKind map = MapKind::ModifiedRogers;
    GameOptions game;
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;  // throws std::invalid_argument
};

struct OptResult {
    GameParameters best;
    double p_win = 0.0;
    bool feasible = false;
    int restarts_run = 0;
    // Per-restart best value; NaN marks a restart that ended infeasible.
    std::vector<double> history;
};

// Maximize the mapped game value over the ten parameters subject to all 36
// outcome probabilities lying in [0, 1], by seeded random-restart simplex
// descent with an escalating quadratic penalty. Deterministic given the seed;
// restart k's stream is derived by counter, so results are a prefix property
// of the restart count and independent of the thread count.
OptResult optimize(const OptConfig& cfg);

// All 36 extracted probabilities; worst distance outside [0, 1] and whether
// it is within tol.
std::pair<bool, double> feasibility(const GameParameters& params, MapKind map,
                                    const GameOptions& opts = {}, double tol = 1e-8);

// Game value of the published winning parameters under the frozen angle
// convention.
double evaluate_paper_params(MapKind map);

}  // namespace superchsh
