#include "superchsh/optimizer.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "superchsh/nelder_mead.hpp"

namespace superchsh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Parameter vector layout follows GameParameters::as_array:
// (p, q, r0, r1, s0, s1, a0, a1, b0, b1).
GameParameters params_from(const std::vector<double>& x,
                           const std::optional<std::pair<double, double>>& box) {
    std::array<double, 10> v{};
    for (int i = 0; i < 10; ++i) v[i] = x[static_cast<std::size_t>(i)];
    if (box) {
        const auto [r_max, s_max] = *box;
        for (int i = 2; i < 4; ++i) v[i] = std::clamp(v[i], -r_max, r_max);
        for (int i = 4; i < 6; ++i) v[i] = std::clamp(v[i], -s_max, s_max);
    }
    return GameParameters::from_array(v);
}

double violation_sq(const SettingTables& tables) {
    double sum = 0.0;
    for (const Table3& t : tables)
        for (const auto& row : t)
            for (double v : row) {
                const double d = std::max({0.0, -v, v - 1.0});
                sum += d * d;
            }
    return sum;
}

struct RestartOutcome {
    GameParameters params;
    double p_win = -kInf;
    bool feasible = false;
};

RestartOutcome run_restart(const OptConfig& cfg, int index) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1)));
    std::uniform_real_distribution<double> amp(-1.5, 1.5);
    std::uniform_real_distribution<double> ang(-std::numbers::pi,
                                               std::numbers::pi);  // half-open in effect

    std::vector<double> x(10);
    for (int i = 0; i < 6; ++i) x[static_cast<std::size_t>(i)] = amp(rng);
    for (int i = 6; i < 10; ++i) x[static_cast<std::size_t>(i)] = ang(rng);

    auto objective = [&](double weight) {
        return [&cfg, weight](const std::vector<double>& v) {
            const GameParameters p = params_from(v, cfg.box);
            try {
                const SettingTables tables = outcome_tables(p, cfg.map, cfg.game);
                return -win_probability(tables) + weight * violation_sq(tables);
            } catch (const ExtractionError&) {
                return 1e6;  // undefined point (trig rho = 0); steer away
            }
        };
    };

    for (double w : cfg.penalty_weights) {
        x = nelder_mead(objective(w), x, 0.25, cfg.max_iters).x;
    }

    RestartOutcome out;
    out.params = params_from(x, cfg.box);
    auto [feasible, worst] = feasibility(out.params, cfg.map, cfg.game, cfg.feasibility_tol);
    if (!feasible) {
        // Feasibility polish: drive the residual violation out, then re-check.
        x = nelder_mead(objective(1e9), x, 0.02, cfg.max_iters).x;
        out.params = params_from(x, cfg.box);
        std::tie(feasible, worst) = feasibility(out.params, cfg.map, cfg.game,
                                                cfg.feasibility_tol);
    }
    out.feasible = feasible;
    if (feasible)
        out.p_win = win_probability(outcome_tables(out.params, cfg.map, cfg.game));
    return out;
}

}  // namespace

void OptConfig::validate() const {
    if (restarts < 1) throw std::invalid_argument("OptConfig: restarts must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("OptConfig: max_iters must be >= 1");
    if (penalty_weights.empty())
        throw std::invalid_argument("OptConfig: penalty schedule must be nonempty");
    for (std::size_t i = 0; i < penalty_weights.size(); ++i) {
        if (penalty_weights[i] <= 0.0)
            throw std::invalid_argument("OptConfig: penalty weights must be positive");
        if (i > 0 && penalty_weights[i] <= penalty_weights[i - 1])
            throw std::invalid_argument("OptConfig: penalty weights must be strictly increasing");
    }
    if (feasibility_tol < 0.0) throw std::invalid_argument("OptConfig: tolerance must be >= 0");
    if (box && (box->first < 0.0 || box->second < 0.0))
        throw std::invalid_argument("OptConfig: box bounds must be nonnegative");
    if (map == MapKind::Trigonometric && !game.experimental_trig)
        throw std::invalid_argument(
            "OptConfig: trigonometric optimization requires the experimental flag");
}

OptResult optimize(const OptConfig& cfg) {
    cfg.validate();

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int k = next.fetch_add(1);
            if (k >= cfg.restarts) return;
            outcomes[static_cast<std::size_t>(k)] = run_restart(cfg, k);
        }
    };

    int n_threads = cfg.threads > 0 ? cfg.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min(n_threads, cfg.restarts));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    OptResult result;
    result.restarts_run = cfg.restarts;
    result.history.reserve(outcomes.size());
    int best_index = -1;
    for (int k = 0; k < cfg.restarts; ++k) {
        const RestartOutcome& o = outcomes[static_cast<std::size_t>(k)];
        result.history.push_back(o.feasible ? o.p_win
                                            : std::numeric_limits<double>::quiet_NaN());
        if (o.feasible && (best_index < 0 ||
                           o.p_win > outcomes[static_cast<std::size_t>(best_index)].p_win))
            best_index = k;
    }

    if (best_index < 0) {
        result.feasible = false;
        result.best = outcomes.empty() ? GameParameters{} : outcomes[0].params;
        result.p_win = -kInf;
        return result;
    }

    // Report the from-scratch re-evaluation of the winner, never the value
    // seen during the search.
    result.best = outcomes[static_cast<std::size_t>(best_index)].params;
    result.p_win = win_probability(outcome_tables(result.best, cfg.map, cfg.game));
    result.feasible = feasibility(result.best, cfg.map, cfg.game, cfg.feasibility_tol).first;
    return result;
}

std::pair<bool, double> feasibility(const GameParameters& params, MapKind map,
                                    const GameOptions& opts, double tol) {
    const SettingTables tables = outcome_tables(params, map, opts);
    double worst = 0.0;
    for (const Table3& t : tables)
        for (const auto& row : t)
            for (double v : row) worst = std::max({worst, -v, v - 1.0});
    return {worst <= tol, worst};
}

double evaluate_paper_params(MapKind map) {
    GameOptions opts;
    opts.experimental_trig = true;  // callers may probe the trig map here
    return win_probability(outcome_tables(paper_winning_parameters(), map, opts));
}

}  // namespace superchsh
