#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "superchsh/superhilbert.hpp"

namespace superchsh::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    // Worst deviation seen, and a short note when something failed.
    double worst = 0.0;
    std::string detail;
};

Supernumber random_supernumber(std::mt19937_64& rng);
Supernumber random_even_supernumber(std::mt19937_64& rng);
Supernumber random_odd_supernumber(std::mt19937_64& rng);

// Hook for mutation tests: the bipartite suite checks whatever applier it is
// handed, defaulting to the library's apply_local.
using BipartiteApplier =
    std::function<SuperKet9(const SuperMatrix&, const SuperMatrix&, const SuperKet9&)>;

// Algebra laws on seeded random supernumbers: associativity, graded
// commutativity, nilpotency of odd elements, involution multiplicativity,
// double-involution parity, Rogers linearity. Tolerance 1e-12 per coefficient.
CheckResult algebra_laws(std::uint64_t seed, int samples);

// Sum of the three Grassmann probabilities equals 1 exactly for random
// superqubits under random S U rotations.
CheckResult single_normalization(std::uint64_t seed, int samples);

// Sum of the nine Grassmann probabilities equals 1 exactly for random
// rotated Gamma states.
CheckResult bipartite_normalization(std::uint64_t seed, int samples,
                                    const BipartiteApplier& applier = nullptr);

// With all Grassmann parameters zero the 36 game probabilities match an
// independent ordinary two-qubit simulator.
CheckResult body_sector_oracle(std::uint64_t seed, int angle_sets);

// Single-superqubit map triples: DeWitt, trigonometric and modified Rogers
// reproduce their closed forms and each triple sums to 1.
CheckResult map_laws(std::uint64_t seed, int samples);

std::vector<CheckResult> run_all(std::uint64_t seed);

// Independent ordinary 2-qubit CHSH table for the Bell state rotated by
// plane rotations (angle_a, angle_b); rows/cols in (0, 1) order. Pure complex
// 2x2 arithmetic, no supernumber code.
std::array<std::array<double, 2>, 2> qm_outcome_table(double angle_a, double angle_b);

}  // namespace superchsh::checks
