#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace obsdesign {

/// Linear program  min c^T x  s.t.  A x = b,  lower <= x <= upper.
/// Upper bounds may be +infinity; lower bounds must be finite.
struct LinearProgram {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
    LpStatus status = LpStatus::IterationLimit;
    Eigen::VectorXd x;
    /// Row duals y with c - A^T y >= 0 at lower-bounded and <= 0 at upper-bounded columns.
    Eigen::VectorXd y;
    double objective = 0.0;
    long iterations = 0;
};

struct LpOptions {
    long max_iterations = 200000;
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-11;
    int refactor_interval = 64;
};

/// Bounded-variable revised simplex (two phases, Dantzig pricing with a Bland
/// fallback on long degenerate runs). `start` optionally gives initial values
/// for the nonbasic columns; each is snapped to its nearest finite bound.
LpResult solve_lp(const LinearProgram& lp, const LpOptions& options = {},
                  const Eigen::VectorXd* start = nullptr);

}  // namespace obsdesign
