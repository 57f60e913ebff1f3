#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obsdesign/mesh.hpp"
#include "obsdesign/mode_mass.hpp"

namespace obsdesign {

struct Problem2Options {
    double tol = 1e-6;
    /// Exponentiated-gradient budget; 0 means 50 * N * log(cells).
    long max_iter = 0;
    /// Relative tolerance under which two cell densities count as tied.
    double tie_rel = 1e-10;
    /// Attempt LP polishing of the averaged iterate (aggregated band LP).
    bool polish = true;
    /// Cell count up to which an unaggregated LP is tried as a last resort.
    std::size_t exact_lp_cells = 10000;
};

/// Saddle point of max_a min_{j <= N} g_j sum_c a_c w_{j,c} over relaxed designs.
struct SaddleResult {
    DensityField field;
    /// Dual weights on the simplex over the N window rows.
    std::vector<double> alpha;
    /// Primal value min_j g_j (row mass of field).
    double value = 0.0;
    /// Dual bound h(alpha) >= optimum.
    double upper_bound = 0.0;
    double gap = 0.0;
    long iterations = 0;
    long lp_iterations = 0;
    std::vector<double> gap_log;
    /// Share of cells with value in {0, 1} up to 1e-9.
    double bang_bang_fraction = 0.0;
    /// Weighted row masses of the returned field.
    std::vector<double> row_masses;
    /// Density threshold of the final fill.
    double threshold = 0.0;
    bool converged = false;
    std::string method;
};

/// Closed-form inner maximization: cells sorted by density d_c descending, filled
/// up to mass L * V; cells whose densities tie within `tie_rel` share the
/// fractional mass evenly.
struct FillResult {
    std::vector<double> field;
    double threshold = 0.0;
    double value = 0.0;
};

FillResult sorted_fill(std::span<const double> density, std::span<const double> measures,
                       double target_mass, double tie_rel = 1e-10);

/// Solve the truncated (optionally gamma-weighted) relaxed design problem over
/// the first N rows of `w`.
SaddleResult solve_problem2(const ModeMassMatrix& w, int N, double L,
                            const std::vector<double>* weights = nullptr,
                            const Problem2Options& options = {});

/// Dual function h(alpha) = max over feasible fields of sum_j alpha_j g_j (row mass).
double dual_bound(const ModeMassMatrix& w, std::span<const double> alpha,
                  std::span<const double> row_weights, double L);

}  // namespace obsdesign
