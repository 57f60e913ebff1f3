#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "obsdesign/error.hpp"
#include "obsdesign/mesh.hpp"
#include "obsdesign/mode_mass.hpp"
#include "obsdesign/modes.hpp"

using namespace obsdesign;
using std::numbers::pi;

TEST(Mesh, TotalMeasureMatchesVolume) {
    for (const auto& d : {DomainSpec{DomainKind::Interval1D, Boundary::Dirichlet},
                          DomainSpec{DomainKind::Square2D, Boundary::Neumann},
                          DomainSpec{DomainKind::Torus2D, Boundary::Periodic},
                          DomainSpec{DomainKind::Disk2D, Boundary::Dirichlet}}) {
        const Mesh m = build_mesh(d, 37, 23);
        EXPECT_NEAR(m.total_measure(), d.volume(), 1e-12) << to_string(d.kind);
    }
}

TEST(Mesh, ReferenceResolutions) {
    EXPECT_EQ(reference_mesh({DomainKind::Interval1D, Boundary::Dirichlet}).size(), 2048u);
    EXPECT_EQ(reference_mesh({DomainKind::Square2D, Boundary::Dirichlet}).size(), 65536u);
    const Mesh disk = reference_mesh({DomainKind::Disk2D, Boundary::Dirichlet});
    EXPECT_EQ(disk.n0, 256);
    EXPECT_EQ(disk.n1, 512);
}

TEST(Mesh, CellIndexing) {
    const Mesh m = build_mesh({DomainKind::Square2D, Boundary::Dirichlet}, 8, 4);
    EXPECT_EQ(m.cell(3, 2), 19u);
    EXPECT_EQ(m.i0(19), 3);
    EXPECT_EQ(m.i1(19), 2);
    const Point c = m.center(m.cell(0, 0));
    EXPECT_NEAR(c.u, pi / 16, 1e-15);
    EXPECT_NEAR(c.v, pi / 8, 1e-15);
}

TEST(Mesh, DiskRadialMeasure) {
    const Mesh m = build_mesh({DomainKind::Disk2D, Boundary::Dirichlet}, 4, 8);
    EXPECT_NEAR(m.measure(m.cell(0, 0)), 0.5 * 0.0625 * (2 * pi / 8), 1e-15);
    EXPECT_NEAR(m.measure(m.cell(3, 5)), 0.5 * (1.0 - 0.5625) * (2 * pi / 8), 1e-15);
}

TEST(Mesh, InvalidResolutionThrows) {
    EXPECT_THROW(build_mesh({DomainKind::Interval1D, Boundary::Dirichlet}, 0), ConfigError);
}

TEST(MeshProperty, IndicatorToFieldPreservesMass) {
    const Mesh m = build_mesh({DomainKind::Disk2D, Boundary::Dirichlet}, 32, 64);
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.37);
    for (int t = 0; t < 100; ++t) {
        SubsetIndicator s = empty_set(m);
        for (auto& b : s.bits) b = coin(rng) ? 1 : 0;
        EXPECT_EQ(measure_of(m, s), mass_of(m, to_field(s)));
    }
}

TEST(Mesh, SymmetricDifference) {
    const Mesh m = build_mesh({DomainKind::Interval1D, Boundary::Dirichlet}, 10);
    SubsetIndicator a = empty_set(m), b = empty_set(m);
    a.bits[1] = a.bits[2] = 1;
    b.bits[2] = b.bits[3] = 1;
    EXPECT_EQ(symmetric_difference_cells(a, b), 2u);
    EXPECT_NEAR(symmetric_difference_measure(m, a, b), 2 * pi / 10, 1e-15);
    EXPECT_EQ(full_set(m).count(), 10u);
    EXPECT_THROW(check_cell_count(m, 9, "x"), ConfigError);
}

// The j = 1 mass of the fixed union [0, pi/3] converges at rate ~ n^-2 under midpoint quadrature
// (on [0, pi/2] the midpoint rule is exact by antisymmetry of cos 2x).
TEST(Mesh, RefinementSlopeIsMinusTwo) {
    const DomainSpec d{DomainKind::Interval1D, Boundary::Dirichlet};
    const auto modes = window_modes(d, 1);
    std::vector<double> errs;
    for (int n : {24, 48, 96, 192, 384}) {
        const Mesh m = build_mesh(d, n);
        const auto w = mode_mass(m, modes, 1);
        double s = 0.0;
        for (std::size_t c = 0; c < m.size() / 3; ++c) s += w.entry(0, c);
        errs.push_back(std::abs(s - (1.0 / 3.0 - std::sqrt(3.0) / (4.0 * pi))));
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double slope = std::log(errs[i] / errs[i - 1]) / std::log(2.0);
        EXPECT_NEAR(slope, -2.0, 0.05);
    }
}
