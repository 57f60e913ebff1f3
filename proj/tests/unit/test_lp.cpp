#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "obsdesign/lp.hpp"

using namespace obsdesign;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Primal feasibility, complementary reduced costs and strong duality.
void expect_kkt(const LinearProgram& lp, const LpResult& r, double tol = 1e-8) {
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_LT((lp.A * r.x - lp.b).cwiseAbs().maxCoeff(), tol);
    const Eigen::VectorXd d = lp.c - lp.A.transpose() * r.y;
    double dual_obj = lp.b.dot(r.y);
    for (Eigen::Index j = 0; j < lp.c.size(); ++j) {
        EXPECT_GE(r.x[j], lp.lower[j] - tol);
        EXPECT_LE(r.x[j], lp.upper[j] + tol);
        const bool at_lower = std::abs(r.x[j] - lp.lower[j]) <= tol;
        const bool at_upper = std::isfinite(lp.upper[j]) && std::abs(r.x[j] - lp.upper[j]) <= tol;
        if (!at_lower && !at_upper) {
            EXPECT_NEAR(d[j], 0.0, tol) << j;
        } else if (at_lower && !at_upper) {
            EXPECT_GE(d[j], -tol) << j;
        } else if (at_upper && !at_lower) {
            EXPECT_LE(d[j], tol) << j;
        }
        dual_obj += d[j] * (at_upper && !at_lower ? lp.upper[j] : lp.lower[j]);
    }
    EXPECT_NEAR(lp.c.dot(r.x), r.objective, tol);
    EXPECT_NEAR(dual_obj, r.objective, 1e-7 * (1.0 + std::abs(r.objective)));
}

}  // namespace

TEST(Lp, SmallKnownOptimum) {
    // min -x - 2y  s.t. x + y + s = 4, x + 3y + t = 6, all >= 0  ->  x = 3, y = 1.
    LinearProgram lp;
    lp.A.resize(2, 4);
    lp.A << 1, 1, 1, 0, 1, 3, 0, 1;
    lp.b = Eigen::Vector2d(4, 6);
    lp.c = Eigen::Vector4d(-1, -2, 0, 0);
    lp.lower = Eigen::VectorXd::Zero(4);
    lp.upper = Eigen::VectorXd::Constant(4, kInf);
    const auto r = solve_lp(lp);
    expect_kkt(lp, r);
    EXPECT_NEAR(r.x[0], 3.0, 1e-12);
    EXPECT_NEAR(r.x[1], 1.0, 1e-12);
    EXPECT_NEAR(r.objective, -5.0, 1e-12);
}

TEST(Lp, UpperBoundsActive) {
    // max sum w_i x_i with sum x_i = 2.5, 0 <= x <= 1 (fractional knapsack).
    LinearProgram lp;
    lp.A = Eigen::MatrixXd::Ones(1, 5);
    lp.b = Eigen::VectorXd::Constant(1, 2.5);
    lp.c = -Eigen::VectorXd::LinSpaced(5, 1.0, 5.0);
    lp.lower = Eigen::VectorXd::Zero(5);
    lp.upper = Eigen::VectorXd::Ones(5);
    const auto r = solve_lp(lp);
    expect_kkt(lp, r);
    EXPECT_NEAR(r.objective, -(5 + 4 + 0.5 * 3), 1e-12);
}

TEST(Lp, Infeasible) {
    LinearProgram lp;
    lp.A = Eigen::MatrixXd::Ones(1, 2);
    lp.b = Eigen::VectorXd::Constant(1, 3.0);
    lp.c = Eigen::VectorXd::Zero(2);
    lp.lower = Eigen::VectorXd::Zero(2);
    lp.upper = Eigen::VectorXd::Ones(2);
    EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);
}

TEST(Lp, Unbounded) {
    LinearProgram lp;
    lp.A.resize(1, 2);
    lp.A << 1, -1;
    lp.b = Eigen::VectorXd::Zero(1);
    lp.c = Eigen::Vector2d(-1, 0);
    lp.lower = Eigen::VectorXd::Zero(2);
    lp.upper = Eigen::VectorXd::Constant(2, kInf);
    EXPECT_EQ(solve_lp(lp).status, LpStatus::Unbounded);
}

TEST(Lp, DegenerateProblem) {
    // Many redundant constraints through the same vertex.
    LinearProgram lp;
    const int m = 6;
    lp.A = Eigen::MatrixXd::Zero(m, 2 + m);
    for (int i = 0; i < m; ++i) {
        lp.A(i, 0) = 1.0 + i;
        lp.A(i, 1) = 1.0;
        lp.A(i, 2 + i) = 1.0;
    }
    lp.b = Eigen::VectorXd::LinSpaced(m, 1.0, static_cast<double>(m));
    lp.c = Eigen::VectorXd::Zero(2 + m);
    lp.c[0] = -1.0;
    lp.c[1] = -1.0;
    lp.lower = Eigen::VectorXd::Zero(2 + m);
    lp.upper = Eigen::VectorXd::Constant(2 + m, kInf);
    expect_kkt(lp, solve_lp(lp));
}

TEST(LpProperty, RandomFeasibleProgramsSatisfyKkt) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const int m = 2 + t % 5;
        const int n = m + 3 + t % 7;
        LinearProgram lp;
        lp.A.resize(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) lp.A(i, j) = u(rng);
        Eigen::VectorXd x0(n);
        lp.lower.resize(n);
        lp.upper.resize(n);
        for (int j = 0; j < n; ++j) {
            lp.lower[j] = -pos(rng);
            lp.upper[j] = j % 3 == 0 ? kInf : pos(rng) + 0.1;
            x0[j] = std::isfinite(lp.upper[j]) ? 0.5 * (lp.lower[j] + lp.upper[j]) : lp.lower[j] + pos(rng);
        }
        lp.b = lp.A * x0;
        lp.c.resize(n);
        for (int j = 0; j < n; ++j) lp.c[j] = std::isfinite(lp.upper[j]) ? u(rng) : pos(rng);
        expect_kkt(lp, solve_lp(lp));
    }
}

TEST(Lp, WarmStartReachesSameOptimum) {
    LinearProgram lp;
    lp.A = Eigen::MatrixXd::Ones(1, 5);
    lp.b = Eigen::VectorXd::Constant(1, 2.5);
    lp.c = -Eigen::VectorXd::LinSpaced(5, 1.0, 5.0);
    lp.lower = Eigen::VectorXd::Zero(5);
    lp.upper = Eigen::VectorXd::Ones(5);
    const Eigen::VectorXd start = Eigen::VectorXd::Ones(5);
    const auto r = solve_lp(lp, {}, &start);
    expect_kkt(lp, r);
    EXPECT_NEAR(r.objective, -10.5, 1e-12);
}
