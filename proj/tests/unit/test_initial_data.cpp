#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "obsdesign/error.hpp"
#include "obsdesign/initial_data.hpp"

using namespace obsdesign;
using std::numbers::pi;

TEST(InitialData, WaveFromProjections) {
    const DomainSpec d{DomainKind::Interval1D, Boundary::Dirichlet};
    const auto modes = window_modes(d, 2);
    const auto data = wave_from_projections(modes, {1.0, 2.0}, {0.0, 4.0});
    EXPECT_NEAR(std::abs(data.a[0] - std::complex<double>(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(data.a[1] - std::complex<double>(1.0, -1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(data.b[1] - std::complex<double>(1.0, 1.0)), 0.0, 1e-15);
}

TEST(InitialData, EnergyNorm) {
    const DomainSpec d{DomainKind::Interval1D, Boundary::Dirichlet};
    const auto w = InitialData::wave(window_modes(d, 2), {1.0, 0.0}, {0.0, 1.0});
    EXPECT_DOUBLE_EQ(w.energy_norm_squared(), 2.0 * (1.0 + 4.0));
    const auto s = InitialData::schrodinger(window_modes(d, 2), {1.0, 1.0});
    EXPECT_DOUBLE_EQ(s.energy_norm_squared(), 1.0 + 16.0);
}

TEST(InitialData, ValidationAndZero) {
    const DomainSpec d{DomainKind::Interval1D, Boundary::Dirichlet};
    EXPECT_THROW(InitialData::wave(window_modes(d, 2), {1.0}, {0.0, 1.0}), ConfigError);
    EXPECT_TRUE(InitialData::schrodinger(window_modes(d, 2), {0.0, 0.0}).is_zero());
    EXPECT_FALSE(random_initial_data(Equation::Wave, window_modes(d, 3), 1).is_zero());
}

TEST(InitialData, RandomIsReproducible) {
    const DomainSpec d{DomainKind::Square2D, Boundary::Dirichlet};
    const auto a = random_initial_data(Equation::Schrodinger, window_modes(d, 3), 42);
    const auto b = random_initial_data(Equation::Schrodinger, window_modes(d, 3), 42);
    EXPECT_EQ(a.c, b.c);
}

TEST(InitialData, SquarePresets) {
    const auto p1 = square_preset(1, 15);
    EXPECT_EQ(p1.size(), 225u);
    // a = b = y0 projection / 2 with projection (pi/2) a_{nk}.
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const auto& idx = p1.modes[i].index;
        const double ank = 1.0 / (idx[0] * idx[0] + idx[1] * idx[1]);
        EXPECT_NEAR(p1.a[i].real(), pi / 4 * ank, 1e-15);
        EXPECT_EQ(p1.a[i], p1.b[i]);
    }
    const auto p2 = square_preset(2, 4);
    for (std::size_t i = 0; i < p2.size(); ++i) {
        const auto& idx = p2.modes[i].index;
        if ((idx[0] + idx[1]) % 2 == 0) {
            EXPECT_EQ(p2.a[i], 0.0);
        }
    }
    EXPECT_THROW(square_preset(3, 4), ConfigError);
}

TEST(InitialData, ParseEquation) {
    EXPECT_EQ(parse_equation("wave"), Equation::Wave);
    EXPECT_EQ(parse_equation("schrodinger"), Equation::Schrodinger);
    EXPECT_THROW(parse_equation("heat"), ConfigError);
}
