#include "obsdesign/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "obsdesign/error.hpp"
#include "obsdesign/functionals.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {

StationarityResult detect_stationarity(const std::function<ModeMassMatrix(int)>& window,
                                       double L, bool weighted, int n_max,
                                       const StationarityOptions& options) {
    if (n_max < 2) throw ConfigError("detect_stationarity: N_max must be >= 2");
    if (!(L > 0.0 && L < 1.0)) throw ConfigError("detect_stationarity: L must lie in (0, 1)");
    StationarityResult res;
    std::vector<ModeMassMatrix> windows;
    std::vector<std::vector<double>> gammas;
    double volume = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        ModeMassMatrix w = window(n);
        const auto gamma = weighted ? gamma_weights(w.lambdas()) : std::vector<double>(w.rows(), 1.0);
        SaddleResult s = solve_problem2(w, w.rows(), L, &gamma, options.solver);
        const auto& meas = w.cell_measures();
        volume = pairwise_sum(meas);
        double change = 0.0;
        if (!res.solutions.empty()) {
            const auto& prev = res.solutions.back().field.values;
            std::vector<double> diff(meas.size());
            for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = std::abs(s.field.values[c] - prev[c]) * meas[c];
            change = pairwise_sum(diff);
        }
        res.values.push_back(s.value);
        res.field_changes.push_back(change);
        res.converged.push_back(s.converged);
        res.solutions.push_back(std::move(s));
        windows.push_back(std::move(w));
        gammas.push_back(gamma);
    }
    const ModeMassMatrix& last = windows.back();
    const auto& last_gamma = gammas.back();
    // Weighted minimum row mass of a field over window n.
    const auto min_row = [&](const std::vector<double>& a, int n) {
        const auto rows = windows[n - 1].row_dots(a);
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < rows.size(); ++j) m = std::min(m, gammas[n - 1][j] * rows[j]);
        return m;
    };
    // Smallest N0 such that the value stays within tolerance of the N0 value up to N_max and the
    // N0 field stays optimal: either close to the N field or attaining the N value on window N.
    for (int n0 = 1; n0 < n_max; ++n0) {
        const auto& base = res.solutions[n0 - 1];
        bool plateau = true;
        for (int n = n0 + 1; n <= n_max && plateau; ++n) {
            const auto& cur = res.solutions[n - 1];
            if (std::abs(cur.value - base.value) > options.value_tol) plateau = false;
            double sd = 0.0;
            const auto& meas = last.cell_measures();
            for (std::size_t c = 0; c < meas.size(); ++c) {
                sd += std::abs(cur.field.values[c] - base.field.values[c]) * meas[c];
            }
            if (plateau && sd > options.field_tol * volume &&
                min_row(base.field.values, n) < cur.value - options.value_tol) {
                plateau = false;
            }
        }
        if (plateau) {
            res.n0 = n0;
            break;
        }
    }
    res.excluded_margin = std::numeric_limits<double>::quiet_NaN();
    if (res.n0) {
        const auto& base = res.solutions[*res.n0 - 1];
        auto rows = last.row_dots(base.field.values);
        double all_min = std::numeric_limits<double>::infinity();
        for (int j = 0; j < last.rows(); ++j) {
            rows[j] *= last_gamma[j];
            all_min = std::min(all_min, rows[j]);
        }
        const ModeMassMatrix& inner_w = windows[*res.n0 - 1];
        const int inner = inner_w.rows();
        // The excluded rows are only identifiable when the windows are nested prefixes.
        bool prefix = inner <= last.rows();
        for (int j = 0; j < inner && prefix; ++j) prefix = inner_w.lambdas()[j] == last.lambdas()[j];
        bool margin_ok = true;
        if (prefix && inner < last.rows()) {
            double ex = std::numeric_limits<double>::infinity();
            for (int j = inner; j < last.rows(); ++j) ex = std::min(ex, rows[j] - base.value);
            res.excluded_margin = ex;
            margin_ok = ex >= options.margin;
        }
        res.certified = all_min >= base.value - options.value_tol && margin_ok;
    }
    return res;
}

StationarityResult detect_stationarity(const ModeMassMatrix& w, double L, bool weighted, int n_max,
                                       const StationarityOptions& options) {
    if (n_max > w.rows()) throw ConfigError("detect_stationarity: N_max exceeds the available rows");
    return detect_stationarity([&](int n) { return w.leading_rows(n); }, L, weighted, n_max, options);
}

}  // namespace obsdesign
