#include "superchsh/chsh_game.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace superchsh {

namespace {

// Winning-cell masks transcribed from the payoff equation, indexed
// [i & j][m][n] with outcomes in storage order (dot, 0, 1):
//   i j != 11: cells (0,0), (1,1), (1,dot), (dot,1), (dot,dot)
//   i j  = 11: cells (0,1), (1,0), (0,dot), (dot,0)
// A unit test rederives these from the answer-coarsening rule.
constexpr bool kWinningCell[2][3][3] = {
    {{true, false, true}, {false, true, false}, {true, false, true}},
    {{false, true, false}, {true, false, true}, {false, true, false}},
};

}  // namespace

bool is_winning_cell(int i, int j, Basis m, Basis n) {
    return kWinningCell[i & j][static_cast<int>(m)][static_cast<int>(n)];
}

SettingTables outcome_tables(const GameParameters& params, MapKind map, const GameOptions& opts) {
    if (!params.finite()) throw std::invalid_argument("outcome_tables: parameters must be finite");
    if (map == MapKind::Trigonometric && !opts.experimental_trig)
        throw std::invalid_argument(
            "outcome_tables: the bipartite trigonometric map is experimental and must be "
            "enabled explicitly");

    const SuperKet9 gamma = gamma_state(params.p, params.q);
    const double r[2] = {params.r0, params.r1};
    const double s[2] = {params.s0, params.s1};
    const double a[2] = {params.a0, params.a1};
    const double b[2] = {params.b0, params.b1};

    SettingTables tables{};
    for (const auto& [i, j] : kSettings) {
        const SuperMatrix z_a = s_element(r[i], Party::A) * u_element(a[i]);
        const SuperMatrix z_b = s_element(s[j], Party::B) * u_element(b[j]);
        const SuperKet9 rotated = apply_local(z_a, z_b, gamma);

        GrassmannTable p_g;
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) p_g[m][n] = grassmann_prob(kBasis[m], kBasis[n], rotated);

        std::optional<TrigContext> ctx;
        if (map == MapKind::Trigonometric) {
            ctx = opts.trig_scale == TrigScale::Rotation ? TrigContext{r[i], s[j]}
                                                         : TrigContext{params.p, params.q};
        }
        tables[2 * i + j] = extract_table(map, p_g, ctx);
    }
    return tables;
}

double win_probability(const SettingTables& tables) {
    double total = 0.0;
    for (const auto& [i, j] : kSettings) {
        const Table3& t = tables[2 * i + j];
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
                if (is_winning_cell(i, j, kBasis[m], kBasis[n])) total += t[m][n];
    }
    return total / 4.0;
}

double classical_best() {
    double best = 0.0;
    for (int strat = 0; strat < 16; ++strat) {
        const int a[2] = {strat & 1, (strat >> 1) & 1};
        const int b[2] = {(strat >> 2) & 1, (strat >> 3) & 1};
        int wins = 0;
        for (const auto& [i, j] : kSettings)
            if ((a[i] ^ b[j]) == (i & j)) ++wins;
        best = std::max(best, wins / 4.0);
    }
    return best;
}

double quantum_baseline() {
    GameParameters p;
    p.a0 = 0.0;
    p.a1 = std::numbers::pi / 4.0;
    p.b0 = std::numbers::pi / 8.0;
    p.b1 = -std::numbers::pi / 8.0;
    return win_probability(outcome_tables(p, MapKind::DeWitt));
}

GameParameters paper_winning_parameters() {
    GameParameters p;
    p.p = 0.7476;
    p.q = -1.0949;
    p.r0 = 0.7476;
    p.r1 = 0.0;
    p.s0 = 0.6329;
    p.s1 = 0.6329;
    p.a0 = -std::numbers::pi / 2.0;
    p.a1 = std::numbers::pi / 4.0;
    p.b0 = std::numbers::pi / 4.0;
    p.b1 = 3.0 * std::numbers::pi / 4.0;
    return p;
}

GameReport play_game(const GameParameters& params, MapKind map, const GameOptions& opts,
                     double feasibility_tol) {
    GameReport report;
    report.map = map;
    report.params = params;
    report.tables = outcome_tables(params, map, opts);
    report.p_win = win_probability(report.tables);

    double worst = 0.0;
    for (const Table3& t : report.tables)
        for (const auto& row : t)
            for (double v : row) worst = std::max({worst, -v, v - 1.0});
    report.worst_violation = worst;
    report.feasible = worst <= feasibility_tol;
    return report;
}

}  // namespace superchsh
