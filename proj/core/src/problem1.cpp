#include "obsdesign/problem1.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "obsdesign/error.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {

LevelSetResult solve_problem1(const Mesh& mesh, std::vector<double> cell_values, double L) {
    if (!(L > 0.0 && L < 1.0)) throw ConfigError("problem1: L must lie in (0, 1)");
    check_cell_count(mesh, cell_values.size(), "problem1");
    const std::size_t n = mesh.size();
    double vmax = 0.0;
    for (double v : cell_values) {
        if (!std::isfinite(v)) throw NumericalError("problem1: non-finite phi value");
        vmax = std::max(vmax, std::abs(v));
    }
    if (vmax == 0.0) throw DegenerateDesignError("problem1: phi vanishes identically (zero initial data)");

    const auto measures = mesh.measures();
    const double volume = pairwise_sum(measures);
    const double target = L * volume;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cell_values[a] > cell_values[b];
    });

    LevelSetResult res;
    res.set.bits.assign(n, 0);
    res.set.target_fraction = L;
    double acc = 0.0;
    std::size_t taken = 0;
    for (; taken < n; ++taken) {
        const std::size_t c = order[taken];
        if (acc + measures[c] > target * (1.0 + 1e-12)) break;
        acc += measures[c];
        res.set.bits[c] = 1;
    }
    const std::size_t cut = taken == 0 ? order[0] : order[taken - 1];
    res.threshold = cell_values[cut];

    std::vector<double> sel(n);
    for (std::size_t c = 0; c < n; ++c) sel[c] = res.set.bits[c] ? measures[c] : 0.0;
    const double measure = pairwise_sum(sel);
    res.achieved_fraction = measure / volume;
    res.residual = std::abs(res.achieved_fraction - L);
    for (std::size_t c = 0; c < n; ++c) sel[c] = res.set.bits[c] ? cell_values[c] * measures[c] : 0.0;
    res.value = pairwise_sum(sel);

    // Bisection on the monotone volume map.
    const auto volume_above = [&](double lam) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c)
            if (cell_values[c] >= lam) s += measures[c];
        return s;
    };
    double lo = cell_values[order[n - 1]] - 1.0;
    double hi = cell_values[order[0]] + 1.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (volume_above(mid) <= target * (1.0 + 1e-12)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    res.dichotomy_threshold = hi;

    const double tie_tol = 1e-12 * std::max(std::abs(res.threshold), 1e-300);
    const std::size_t next = taken < n ? order[taken] : cut;
    const double cut_value = cell_values[next];
    const double cut_tol = 1e-12 * std::max(std::abs(cut_value), 1e-300);
    res.dichotomy_agrees = true;
    for (std::size_t c = 0; c < n; ++c) {
        const bool in_d = cell_values[c] >= hi;
        if (in_d != (res.set.bits[c] != 0)) {
            const bool tie = std::abs(cell_values[c] - cut_value) <= cut_tol ||
                             std::abs(cell_values[c] - res.threshold) <= tie_tol;
            if (!tie) res.dichotomy_agrees = false;
        }
        if (std::abs(cell_values[c] - cut_value) <= cut_tol) ++res.tie_cells;
    }
    res.non_unique = static_cast<double>(res.tie_cells) > 0.05 * static_cast<double>(n);
    res.phi = std::move(cell_values);
    return res;
}

LevelSetResult solve_problem1(const InitialData& data, double T, const Mesh& mesh, double L) {
    data.validate();
    if (data.is_zero()) throw DegenerateDesignError("problem1: zero initial data");
    const auto coeffs = cross_coefficients(data, T);
    return solve_problem1(mesh, energy_density_at_centers(data, coeffs, mesh), L);
}

}  // namespace obsdesign
