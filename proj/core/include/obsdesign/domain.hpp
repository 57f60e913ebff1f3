#pragma once

#include <string>
#include <string_view>

namespace obsdesign {

enum class DomainKind { Interval1D, Square2D, Torus2D, Disk2D };

/// Boundary condition. `Periodic` is the only value accepted for the torus.
enum class Boundary { Dirichlet, Neumann, MixedDN, Periodic };

/// A model domain together with its boundary condition.
///
/// Extents: Interval1D = [0, pi], Square2D = [0, pi]^2, Torus2D = [0, 2 pi]^2,
/// Disk2D = unit disk (points are handled in polar coordinates).
struct DomainSpec {
    DomainKind kind = DomainKind::Interval1D;
    Boundary boundary = Boundary::Dirichlet;

    /// Throws ConfigError for unsupported (kind, boundary) pairs.
    void validate() const;

    /// Lebesgue measure V(Omega).
    double volume() const;

    /// Spatial dimension (1 or 2).
    int dimension() const { return kind == DomainKind::Interval1D ? 1 : 2; }

    bool operator==(const DomainSpec&) const = default;
};

/// Point in the natural coordinates of the domain: (x1, x2) for the interval,
/// square and torus (x2 ignored in 1D), (r, theta) for the disk.
struct Point {
    double u = 0.0;
    double v = 0.0;
};

std::string to_string(DomainKind kind);
std::string to_string(Boundary bc);
DomainKind parse_domain_kind(std::string_view name);
Boundary parse_boundary(std::string_view name);

}  // namespace obsdesign
