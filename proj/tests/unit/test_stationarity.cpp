#include <gtest/gtest.h>

#include <cmath>

#include "obsdesign/error.hpp"
#include "obsdesign/stationarity.hpp"

using namespace obsdesign;

namespace {
const DomainSpec kInterval{DomainKind::Interval1D, Boundary::Dirichlet};
}

TEST(Stationarity, WeightedLargeLIsCertified) {
    const Mesh mesh = build_mesh(kInterval, 1024);
    const auto w = mode_mass(mesh, window_modes(kInterval, 12), 1);
    const auto r = detect_stationarity(w, 0.9, true, 12);
    ASSERT_TRUE(r.n0.has_value());
    EXPECT_TRUE(r.certified);
    EXPECT_LE(*r.n0, 10);
    EXPECT_GE(r.excluded_margin, 1e-6);
    for (int n = *r.n0; n <= 12; ++n) EXPECT_NEAR(r.values[n - 1], r.values[*r.n0 - 1], 1e-6);
}

TEST(Stationarity, UnweightedHasSpillover) {
    const Mesh mesh = build_mesh(kInterval, 1024);
    const auto w = mode_mass(mesh, window_modes(kInterval, 10), 1);
    const auto r = detect_stationarity(w, 0.9, false, 10);
    EXPECT_FALSE(r.n0.has_value());
    EXPECT_TRUE(std::isnan(r.excluded_margin));
    for (int n = 1; n < 10; ++n) EXPECT_LT(r.values[n], r.values[n - 1] - 1e-8);
}

TEST(Stationarity, MixedSquareWindows) {
    const DomainSpec d{DomainKind::Square2D, Boundary::MixedDN};
    const Mesh mesh = build_mesh(d, 48, 48);
    const auto r = detect_stationarity([&](int n) { return mode_mass(mesh, window_modes(d, n), 1); }, 0.9, true, 4);
    ASSERT_TRUE(r.n0.has_value());
    EXPECT_TRUE(r.certified);
}

TEST(Stationarity, InvalidArguments) {
    const Mesh mesh = build_mesh(kInterval, 64);
    const auto w = mode_mass(mesh, window_modes(kInterval, 3), 1);
    EXPECT_THROW(detect_stationarity(w, 0.9, true, 1), ConfigError);
    EXPECT_THROW(detect_stationarity(w, 0.9, true, 4), ConfigError);
    EXPECT_THROW(detect_stationarity(w, 1.5, true, 3), ConfigError);
}
