#pragma once

#include <array>
#include <vector>

#include "obsdesign/domain.hpp"

namespace obsdesign {

/// One-dimensional factor of a separable eigenfunction.
///
/// Kinds: Sin(n) = sqrt(2/pi) sin(n x), Cos(n) = sqrt(2/pi) cos(n x) (n >= 1),
/// Const = 1/sqrt(pi) on [0, pi]; PeriodicCos/PeriodicSin/PeriodicConst are
/// the analogous orthonormal functions on [0, 2 pi] (1/sqrt(pi), 1/sqrt(2 pi));
/// Radial(j, k) = R_jk(r) on [0, 1] with weight r.
struct Factor {
    enum class Kind { Sin, Cos, Const, PeriodicCos, PeriodicSin, PeriodicConst, Radial, One };
    Kind kind = Kind::One;
    int n = 0;
    int k = 0;

    double operator()(double t) const;
};

/// Eigenfunction of the Laplacian written as factor_u(u) * factor_v(v).
struct EigenMode {
    /// j for 1D, (j, k) for square/torus, (j, k, m) for the disk; unused slots are 0.
    std::array<int, 3> index{0, 0, 0};
    double lambda = 0.0;
    Factor fu;
    Factor fv;
    DomainKind kind = DomainKind::Interval1D;

    double eval(Point p) const { return fu(p.u) * fv(p.v); }
    bool operator==(const EigenMode& o) const { return index == o.index && lambda == o.lambda; }
};

/// Construct a single mode from its multi-index. Throws ConfigError for invalid indices.
EigenMode make_mode(const DomainSpec& domain, std::array<int, 3> index);

/// All modes with lambda <= cutoff, sorted by lambda then lexicographic index.
/// The constant mode is excluded unless include_constant_mode is set (Neumann/torus only).
std::vector<EigenMode> enumerate_modes(const DomainSpec& domain, double cutoff,
                                       bool include_constant_mode = false);

/// Index-box window of size parameter N, sorted like enumerate_modes.
///
/// Interval: j = 1..N. Square Dirichlet: 1 <= j, k <= N. Square Neumann:
/// 0 <= j, k <= N-1 without (0,0). Mixed: j = 1..N, k = 0..N-1. Torus:
/// |j|, |k| <= N without (0,0). Disk: j = 0..N-1, k = 1..N, both m for j >= 1.
std::vector<EigenMode> window_modes(const DomainSpec& domain, int n);

/// First n modes of the enumeration order (n lowest frequencies).
std::vector<EigenMode> first_modes(const DomainSpec& domain, int n);

}  // namespace obsdesign
