#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "obsdesign/error.hpp"
#include "obsdesign/functionals.hpp"
#include "obsdesign/mode_mass.hpp"
#include "obsdesign/sequences.hpp"

using namespace obsdesign;
using std::numbers::pi;

namespace {
const DomainSpec kInterval{DomainKind::Interval1D, Boundary::Dirichlet};
const DomainSpec kSquare{DomainKind::Square2D, Boundary::Dirichlet};
const DomainSpec kDisk{DomainKind::Disk2D, Boundary::Dirichlet};
}  // namespace

TEST(Equidistributed, BlockMassesWithinOneCell) {
    const Mesh mesh = build_mesh(kSquare, 64, 64);
    const auto set = equidistributed_set(mesh, 8, 8, 0.3);
    const double cell = mesh.measure(0);
    for (int b1 = 0; b1 < 8; ++b1)
        for (int b0 = 0; b0 < 8; ++b0) {
            double sel = 0.0, tot = 0.0;
            for (int i1 = 8 * b1; i1 < 8 * b1 + 8; ++i1)
                for (int i0 = 8 * b0; i0 < 8 * b0 + 8; ++i0) {
                    tot += mesh.measure(mesh.cell(i0, i1));
                    if (set.bits[mesh.cell(i0, i1)]) sel += mesh.measure(mesh.cell(i0, i1));
                }
            EXPECT_LE(std::abs(sel - 0.3 * tot), cell + 1e-12);
        }
    EXPECT_NEAR(measure_of(mesh, set), 0.3 * pi * pi, cell);
}

TEST(Equidistributed, LowestIdsFirstInsideBlock) {
    const Mesh mesh = build_mesh(kInterval, 100);
    const auto set = equidistributed_set(mesh, 1, 1, 0.25);
    for (int c = 0; c < 100; ++c) EXPECT_EQ(set.bits[c], c < 25 ? 1 : 0);
}

TEST(Equidistributed, ApproachesLAsBlocksRefine) {
    const Mesh mesh = build_mesh(kInterval, 8192);
    const auto w = mode_mass(mesh, window_modes(kInterval, 20), 3);
    EXPECT_LT(std::abs(J(w, equidistributed_set(mesh, 64, 1, 0.3), 20).value - 0.3), 0.02);
    EXPECT_GT(std::abs(J(w, equidistributed_set(mesh, 1, 1, 0.3), 20).value - 0.3), 0.1);
    const Mesh sq = build_mesh(kSquare, 128, 128);
    const auto w2 = mode_mass(sq, window_modes(kSquare, 10), 1);
    EXPECT_LT(std::abs(J(w2, equidistributed_set(sq, 32, 32, 0.5), 100).value - 0.5), 0.02);
}

TEST(Equidistributed, InfeasibleBlocks) {
    const Mesh mesh = build_mesh(kInterval, 16);
    EXPECT_THROW(equidistributed_set(mesh, 8, 1, 0.3), ConfigError);
    EXPECT_THROW(equidistributed_set(mesh, 32, 1, 0.5), ConfigError);
}

TEST(OmegaFamily, ClosedFormDivisibleBranch) {
    EXPECT_NEAR(omega_family_sin2_mass(1, 0.5, 2), pi / 4, 1e-15);
}

TEST(OmegaFamily, ClosedFormAgainstExactIntegration) {
    for (int N : {1, 3, 5})
        for (double L : {0.3, 0.5})
            for (int j = 1; j <= 30; ++j) {
                double s = 0.0;
                for (const auto& [a, b] : omega_family_intervals(N, L))
                    s += 0.5 * (b - a) - (std::sin(2 * j * b) - std::sin(2 * j * a)) / (4.0 * j);
                EXPECT_NEAR(omega_family_sin2_mass(N, L, j), s, 1e-13) << N << " " << L << " " << j;
            }
}

TEST(OmegaFamily, OverlapRejected) { EXPECT_THROW(omega_family_intervals(2, 0.999), ConfigError); }

TEST(OmegaFamily, CoverageFieldMassIsExact) {
    const Mesh mesh = build_mesh(kInterval, 1000);
    const auto iv = omega_family_intervals(5, 0.3);
    EXPECT_NEAR(mass_of(mesh, coverage_field(mesh, iv)), 0.3 * pi, 1e-12);
}

TEST(Disk, RadialSetAndAngularMass) {
    const Mesh mesh = build_mesh(kDisk, 16, 64);
    const Intervals sector{{0.0, pi / 2}};
    const auto set = radial_set_disk(mesh, sector);
    EXPECT_NEAR(measure_of(mesh, set), pi / 4, 1e-12);
    EXPECT_NEAR(angular_mass(sector, 0, 1), 0.25, 1e-15);
    EXPECT_NEAR(angular_mass(sector, 3, 1) + angular_mass(sector, 3, 2), 0.5, 1e-15);
    // Mode mass of a sector set factorizes into the angular mass.
    const auto modes = window_modes(kDisk, 3);
    const auto w = mode_mass(mesh, modes, 3);
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const auto& idx = modes[j].index;
        const std::vector<double> v(set.bits.begin(), set.bits.end());
        EXPECT_NEAR(w.row_dot(static_cast<int>(j), v), angular_mass(sector, idx[0], idx[2]) * w.row_sum(j), 1e-6);
    }
    EXPECT_THROW(angular_mass(sector, 0, 2), ConfigError);
}
