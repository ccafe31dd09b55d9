#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace superchsh {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

// Plain downhill simplex with the standard coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2). Stops after max_iters iterations or when the
// simplex value spread falls below ftol.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0, double step, int max_iters,
                                    double ftol = 1e-12) {
    const std::size_t n = x0.size();
    NelderMeadResult res;

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> val(n + 1);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) val[i] = f(simplex[i]);
    res.evaluations = static_cast<int>(n) + 1;

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n);

    for (int iter = 0; iter < max_iters; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        const std::size_t best = order[0], second_worst = order[n - 1], worst = order[n];
        res.iterations = iter + 1;
        if (val[worst] - val[best] < ftol) break;

        for (std::size_t d = 0; d < n; ++d) {
            double sum = 0.0;
            for (std::size_t i = 0; i <= n; ++i)
                if (i != worst) sum += simplex[i][d];
            centroid[d] = sum / static_cast<double>(n);
        }

        auto point = [&](double coef) {
            for (std::size_t d = 0; d < n; ++d)
                trial[d] = centroid[d] + coef * (centroid[d] - simplex[worst][d]);
            ++res.evaluations;
            return f(trial);
        };

        const double reflected = point(1.0);
        if (reflected < val[best]) {
            const std::vector<double> refl = trial;
            const double expanded = point(2.0);
            if (expanded < reflected) {
                simplex[worst] = trial;
                val[worst] = expanded;
            } else {
                simplex[worst] = refl;
                val[worst] = reflected;
            }
        } else if (reflected < val[second_worst]) {
            simplex[worst] = trial;
            val[worst] = reflected;
        } else {
            const double contracted = point(-0.5);
            if (contracted < val[worst]) {
                simplex[worst] = trial;
                val[worst] = contracted;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    val[i] = f(simplex[i]);
                    ++res.evaluations;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (val[i] < val[best]) best = i;
    res.x = simplex[best];
    res.value = val[best];
    return res;
}

}  // namespace superchsh
