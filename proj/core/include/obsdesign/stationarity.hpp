#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "obsdesign/mode_mass.hpp"
#include "obsdesign/problem2.hpp"

namespace obsdesign {

struct StationarityOptions {
    double value_tol = 1e-6;
    /// Symmetric-difference slack as a fraction of V(Omega).
    double field_tol = 1e-3;
    /// Margin required of the rows outside the N0 window.
    double margin = 1e-6;
    Problem2Options solver;
};

struct StationarityResult {
    std::optional<int> n0;
    bool certified = false;
    /// Optimal value for N = 1..N_max (index N - 1).
    std::vector<double> values;
    /// int |a_N - a_{N-1}| (zero for N = 1).
    std::vector<double> field_changes;
    std::vector<bool> converged;
    /// min over rows outside the N0 window (within the N_max window) of
    /// g_j (row mass of a_{N0}) - value_{N0}; NaN when no plateau was found.
    double excluded_margin = 0.0;
    std::vector<SaddleResult> solutions;
};

/// Solve the (gamma-weighted when `weighted`) truncated problem for N = 1..N_max,
/// where `window(N)` returns the mass rows of the N-th window, and look for the
/// smallest N0 after which the value stays unchanged and the N0 field stays optimal
/// (within `field_tol` of the N field, or attaining the N value on window N). The plateau is
/// certified when the N0 field attains its value on every row of the N_max window.
StationarityResult detect_stationarity(const std::function<ModeMassMatrix(int)>& window,
                                       double L, bool weighted, int n_max,
                                       const StationarityOptions& options = {});

/// Same with nested windows given by the leading rows of one matrix.
StationarityResult detect_stationarity(const ModeMassMatrix& w, double L, bool weighted, int n_max,
                                       const StationarityOptions& options = {});

}  // namespace obsdesign
