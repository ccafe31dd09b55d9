// Acceptance suite: one line per criterion, nonzero exit on any hard failure.
// A6 is soft by design (the bipartite trigonometric map is not defined by the
// underlying construction); its failure is reported but does not fail the run.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "superchsh/checks.hpp"
#include "superchsh/optimizer.hpp"

using namespace superchsh;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kTsirelson = 0.85355339059327373;  // cos^2(pi/8)
constexpr std::uint64_t kSeed = 20240809;

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* id, bool pass, const std::string& detail, double elapsed,
            bool soft = false) {
    const char* tag = pass ? "[PASS]" : (soft ? "[SOFT-FAIL]" : "[FAIL]");
    std::printf("%s %s: %s  (%.2f s)\n", tag, id, detail.c_str(), elapsed);
    if (!pass && !soft) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

int main() {
    // A1: published winning parameters reproduce 0.9265 under modified Rogers.
    double a1_value = 0.0;
    {
        const auto t0 = Clock::now();
        a1_value = evaluate_paper_params(MapKind::ModifiedRogers);
        const double dt = seconds_since(t0);
        report("A1", a1_value >= 0.9245 && a1_value <= 0.9285 && dt < 1.0,
               "evaluate_paper_params(rogers) = " + fmt(a1_value), dt);
    }

    // A2: unconstrained Rogers optimization matches or beats the paper value.
    {
        const auto t0 = Clock::now();
        OptConfig cfg;
        cfg.map = MapKind::ModifiedRogers;
        cfg.restarts = 200;
        cfg.seed = kSeed;
        const OptResult res = optimize(cfg);
        const double dt = seconds_since(t0);
        const bool pass = res.feasible && res.p_win >= 0.92 && res.p_win >= a1_value - 0.005;
        report("A2", pass,
               "optimize(rogers, 200 restarts) = " + fmt(res.p_win) +
                   (res.feasible ? ", feasible" : ", INFEASIBLE"),
               dt);
    }

    // A3: compactified variant |r|,|s| <= 1/2 lands on the reduced value.
    {
        const auto t0 = Clock::now();
        OptConfig cfg;
        cfg.map = MapKind::ModifiedRogers;
        cfg.box = std::pair{0.5, 0.5};
        cfg.restarts = 200;
        cfg.seed = kSeed;
        const OptResult res = optimize(cfg);
        const double dt = seconds_since(t0);
        const bool pass =
            res.feasible && res.p_win >= 0.860 && res.p_win <= 0.868 && dt < 300.0;
        report("A3", pass, "optimize(rogers, box 1/2) = " + fmt(res.p_win), dt);
    }

    // A4: DeWitt optimization reaches the Tsirelson bound and never beats it
    // on a dense angle grid.
    {
        const auto t0 = Clock::now();
        OptConfig cfg;
        cfg.map = MapKind::DeWitt;
        cfg.restarts = 40;
        cfg.seed = kSeed;
        const OptResult res = optimize(cfg);

        double grid_max = 0.0;
        constexpr int kGrid = 17;
        GameParameters p;
        for (int ia = 0; ia < kGrid; ++ia)
            for (int ib = 0; ib < kGrid; ++ib)
                for (int ic = 0; ic < kGrid; ++ic)
                    for (int id = 0; id < kGrid; ++id) {
                        auto angle = [](int k) {
                            return -std::numbers::pi +
                                   2.0 * std::numbers::pi * k / double(kGrid);
                        };
                        p.a0 = angle(ia);
                        p.a1 = angle(ib);
                        p.b0 = angle(ic);
                        p.b1 = angle(id);
                        grid_max = std::max(
                            grid_max, win_probability(outcome_tables(p, MapKind::DeWitt)));
                    }
        const double dt = seconds_since(t0);
        const bool pass = res.feasible && res.p_win >= kTsirelson - 1e-3 &&
                          res.p_win <= kTsirelson + 1e-6 &&
                          grid_max <= kTsirelson + 1e-9 && dt < 120.0;
        report("A4", pass,
               "optimize(dewitt) = " + fmt(res.p_win) + ", grid max = " + fmt(grid_max), dt);
    }

    // A5: classical bound by exhaustive strategy enumeration.
    {
        const auto t0 = Clock::now();
        const double v = classical_best();
        const double dt = seconds_since(t0);
        report("A5", v == 0.75 && dt < 0.001, "classical_best() = " + fmt(v), dt);
    }

    // A6 (soft): experimental bipartite trigonometric game against the
    // Tsirelson cap.
    {
        const auto t0 = Clock::now();
        OptConfig cfg;
        cfg.map = MapKind::Trigonometric;
        cfg.game.experimental_trig = true;
        cfg.restarts = 40;
        cfg.seed = kSeed;
        const OptResult res = optimize(cfg);
        const double dt = seconds_since(t0);
        const bool pass = res.feasible && res.p_win <= kTsirelson + 1e-3;
        report("A6", pass,
               "optimize(trig, experimental) = " + fmt(res.p_win) +
                   (pass ? "" : "  -- exceeds cos^2(pi/8): the rotation-scale bipartite "
                                "extension is not Tsirelson-bounded; see README"),
               dt, /*soft=*/true);
    }

    // A7: algebra law suite on 10^4 seeded random supernumbers.
    {
        const auto t0 = Clock::now();
        const auto r = checks::algebra_laws(kSeed, 10000);
        const double dt = seconds_since(t0);
        report("A7", r.pass && dt < 10.0,
               "algebra laws, worst deviation " + std::to_string(r.worst), dt);
    }

    // A8: normalization suites, 10^3 single and 10^3 bipartite states.
    {
        const auto t0 = Clock::now();
        const auto single = checks::single_normalization(kSeed + 1, 1000);
        const auto bi = checks::bipartite_normalization(kSeed + 2, 1000);
        const double dt = seconds_since(t0);
        report("A8", single.pass && bi.pass && dt < 30.0,
               "normalization worst deviation " + std::to_string(std::max(single.worst,
                                                                          bi.worst)),
               dt);
    }

    // A9: body sector vs the independent 2-qubit simulator, 100 angle sets.
    {
        const auto t0 = Clock::now();
        const auto r = checks::body_sector_oracle(kSeed + 3, 100);
        const double dt = seconds_since(t0);
        report("A9", r.pass && dt < 5.0,
               "body sector worst deviation " + std::to_string(r.worst), dt);
    }

    // A10: the Rogers map admits a negative probability (frozen witness).
    {
        const auto t0 = Clock::now();
        GameParameters witness;
        witness.p = 1.2;
        witness.r0 = 1.2;
        witness.a0 = 0.5;
        double min_entry = 1.0;
        for (const Table3& t : outcome_tables(witness, MapKind::ModifiedRogers))
            for (const auto& row : t)
                for (double v : row) min_entry = std::min(min_entry, v);
        const double dt = seconds_since(t0);
        report("A10", min_entry < 0.0, "witness minimum entry = " + fmt(min_entry), dt);
    }

    if (failures == 0) {
        std::printf("acceptance: all hard criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d hard criteria FAILED\n", failures);
    return 1;
}
