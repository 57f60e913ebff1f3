#pragma once

#include <span>
#include <vector>

#include "obsdesign/functionals.hpp"
#include "obsdesign/initial_data.hpp"
#include "obsdesign/mesh.hpp"

namespace obsdesign {

/// Optimal observation set for fixed initial data: a level set of phi.
struct LevelSetResult {
    double threshold = 0.0;
    SubsetIndicator set;
    double achieved_fraction = 0.0;
    double residual = 0.0;
    /// Midpoint-rule G_T of the selected set, sum of phi(center) * measure.
    double value = 0.0;
    /// Threshold found by bisection on the volume map lambda -> |{phi >= lambda}|.
    double dichotomy_threshold = 0.0;
    /// True when the bisection set differs from the greedy set only in the tie layer.
    bool dichotomy_agrees = false;
    /// Cells whose phi equals the cut value within 1e-12 (relative).
    std::size_t tie_cells = 0;
    /// More than 5% of the cells tie at the cut: the optimal set is not unique.
    bool non_unique = false;
    /// phi at every cell center.
    std::vector<double> phi;
};

/// Level-set design from per-cell values of phi (greedy by value, lowest cell id on ties).
/// Throws DegenerateDesignError when phi vanishes identically.
LevelSetResult solve_problem1(const Mesh& mesh, std::vector<double> cell_values, double L);

/// Level-set design for initial data over the horizon T, with phi sampled at cell centers.
LevelSetResult solve_problem1(const InitialData& data, double T, const Mesh& mesh, double L);

}  // namespace obsdesign
