#include "obsdesign/domain.hpp"

#include <numbers>

#include "obsdesign/error.hpp"

namespace obsdesign {

void DomainSpec::validate() const {
    const auto fail = [this] {
        throw ConfigError("unsupported domain/boundary pair: " + to_string(kind) + "/" +
                          to_string(boundary));
    };
    switch (kind) {
        case DomainKind::Interval1D:
            if (boundary != Boundary::Dirichlet && boundary != Boundary::Neumann) fail();
            break;
        case DomainKind::Square2D:
            if (boundary == Boundary::Periodic) fail();
            break;
        case DomainKind::Torus2D:
            if (boundary != Boundary::Periodic) fail();
            break;
        case DomainKind::Disk2D:
            if (boundary != Boundary::Dirichlet) fail();
            break;
    }
}

double DomainSpec::volume() const {
    using std::numbers::pi;
    switch (kind) {
        case DomainKind::Interval1D: return pi;
        case DomainKind::Square2D: return pi * pi;
        case DomainKind::Torus2D: return 4.0 * pi * pi;
        case DomainKind::Disk2D: return pi;
    }
    return 0.0;
}

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::Interval1D: return "interval";
        case DomainKind::Square2D: return "square";
        case DomainKind::Torus2D: return "torus";
        case DomainKind::Disk2D: return "disk";
    }
    return "?";
}

std::string to_string(Boundary bc) {
    switch (bc) {
        case Boundary::Dirichlet: return "dirichlet";
        case Boundary::Neumann: return "neumann";
        case Boundary::MixedDN: return "mixed";
        case Boundary::Periodic: return "periodic";
    }
    return "?";
}

DomainKind parse_domain_kind(std::string_view name) {
    if (name == "interval" || name == "1d") return DomainKind::Interval1D;
    if (name == "square") return DomainKind::Square2D;
    if (name == "torus") return DomainKind::Torus2D;
    if (name == "disk") return DomainKind::Disk2D;
    throw ConfigError("unknown domain '" + std::string(name) + "'");
}

Boundary parse_boundary(std::string_view name) {
    if (name == "dirichlet") return Boundary::Dirichlet;
    if (name == "neumann") return Boundary::Neumann;
    if (name == "mixed" || name == "mixed_dn") return Boundary::MixedDN;
    if (name == "periodic") return Boundary::Periodic;
    throw ConfigError("unknown boundary condition '" + std::string(name) + "'");
}

}  // namespace obsdesign
