#include "obsdesign/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "obsdesign/bessel.hpp"
#include "obsdesign/error.hpp"

namespace obsdesign {
namespace {

using std::numbers::pi;

const double kSqrt2OverPi = std::sqrt(2.0 / pi);
const double kInvSqrtPi = 1.0 / std::sqrt(pi);
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * pi);

Factor periodic_factor(int j) {
    if (j > 0) return {Factor::Kind::PeriodicCos, j, 0};
    if (j < 0) return {Factor::Kind::PeriodicSin, -j, 0};
    return {Factor::Kind::PeriodicConst, 0, 0};
}

Factor neumann_factor(int j) {
    if (j == 0) return {Factor::Kind::Const, 0, 0};
    return {Factor::Kind::Cos, j, 0};
}

[[noreturn]] void bad_index(const DomainSpec& d, std::array<int, 3> idx) {
    std::ostringstream msg;
    msg << "invalid mode index (" << idx[0] << ", " << idx[1] << ", " << idx[2] << ") for "
        << to_string(d.kind) << "/" << to_string(d.boundary);
    throw ConfigError(msg.str());
}

void sort_modes(std::vector<EigenMode>& modes) {
    std::sort(modes.begin(), modes.end(), [](const EigenMode& a, const EigenMode& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.index < b.index;
    });
}

}  // namespace

double Factor::operator()(double t) const {
    switch (kind) {
        case Kind::Sin: return kSqrt2OverPi * std::sin(n * t);
        case Kind::Cos: return kSqrt2OverPi * std::cos(n * t);
        case Kind::Const: return kInvSqrtPi;
        case Kind::PeriodicCos: return kInvSqrtPi * std::cos(n * t);
        case Kind::PeriodicSin: return kInvSqrtPi * std::sin(n * t);
        case Kind::PeriodicConst: return kInvSqrt2Pi;
        case Kind::Radial: return disk_radial(n, k, std::clamp(t, 0.0, 1.0));
        case Kind::One: return 1.0;
    }
    return 0.0;
}

EigenMode make_mode(const DomainSpec& domain, std::array<int, 3> idx) {
    domain.validate();
    EigenMode m;
    m.kind = domain.kind;
    m.index = idx;
    const int j = idx[0];
    const int k = idx[1];
    switch (domain.kind) {
        case DomainKind::Interval1D:
            if (j < 1 || k != 0 || idx[2] != 0) bad_index(domain, idx);
            m.fu = domain.boundary == Boundary::Dirichlet ? Factor{Factor::Kind::Sin, j, 0}
                                                          : Factor{Factor::Kind::Cos, j, 0};
            m.fv = Factor{};
            m.lambda = j;
            break;
        case DomainKind::Square2D:
            if (idx[2] != 0) bad_index(domain, idx);
            if (domain.boundary == Boundary::Dirichlet) {
                if (j < 1 || k < 1) bad_index(domain, idx);
                m.fu = {Factor::Kind::Sin, j, 0};
                m.fv = {Factor::Kind::Sin, k, 0};
            } else if (domain.boundary == Boundary::Neumann) {
                if (j < 0 || k < 0 || (j == 0 && k == 0)) bad_index(domain, idx);
                m.fu = neumann_factor(j);
                m.fv = neumann_factor(k);
            } else {
                if (j < 1 || k < 0) bad_index(domain, idx);
                m.fu = {Factor::Kind::Sin, j, 0};
                m.fv = neumann_factor(k);
            }
            m.lambda = std::sqrt(static_cast<double>(j * j + k * k));
            break;
        case DomainKind::Torus2D:
            if (idx[2] != 0 || (j == 0 && k == 0)) bad_index(domain, idx);
            m.fu = periodic_factor(j);
            m.fv = periodic_factor(k);
            m.lambda = std::sqrt(static_cast<double>(j * j + k * k));
            break;
        case DomainKind::Disk2D: {
            const int mm = idx[2];
            if (j < 0 || j > kBesselMaxOrder || k < 1 || k > kBesselMaxZeroIndex) bad_index(domain, idx);
            if (mm != 1 && mm != 2) bad_index(domain, idx);
            if (j == 0 && mm != 1) bad_index(domain, idx);
            m.fu = {Factor::Kind::Radial, j, k};
            if (j == 0) {
                m.fv = {Factor::Kind::PeriodicConst, 0, 0};
            } else {
                m.fv = {mm == 1 ? Factor::Kind::PeriodicCos : Factor::Kind::PeriodicSin, j, 0};
            }
            m.lambda = bessel_zero(j, k);
            break;
        }
    }
    return m;
}

std::vector<EigenMode> enumerate_modes(const DomainSpec& domain, double cutoff,
                                       bool include_constant_mode) {
    domain.validate();
    if (!(cutoff > 0.0)) throw ConfigError("enumerate_modes: cutoff must be positive");
    std::vector<EigenMode> out;
    const int jmax = static_cast<int>(std::floor(cutoff));
    const auto within = [cutoff](int j, int k) { return j * j + k * k <= cutoff * cutoff; };
    switch (domain.kind) {
        case DomainKind::Interval1D:
            for (int j = 1; j <= jmax; ++j) out.push_back(make_mode(domain, {j, 0, 0}));
            break;
        case DomainKind::Square2D: {
            const int lo_j = domain.boundary == Boundary::Neumann ? 0 : 1;
            const int lo_k = domain.boundary == Boundary::Dirichlet ? 1 : 0;
            for (int j = lo_j; j <= jmax; ++j) {
                for (int k = lo_k; k <= jmax; ++k) {
                    if (j == 0 && k == 0) continue;
                    if (within(j, k)) out.push_back(make_mode(domain, {j, k, 0}));
                }
            }
            break;
        }
        case DomainKind::Torus2D:
            for (int j = -jmax; j <= jmax; ++j) {
                for (int k = -jmax; k <= jmax; ++k) {
                    if (j == 0 && k == 0) continue;
                    if (within(j, k)) out.push_back(make_mode(domain, {j, k, 0}));
                }
            }
            break;
        case DomainKind::Disk2D:
            if (bessel_zero(kBesselMaxOrder, 1) <= cutoff) {
                throw DomainError("enumerate_modes: cutoff exceeds the tabulated Bessel range");
            }
            for (int j = 0; j <= kBesselMaxOrder; ++j) {
                if (bessel_zero(j, kBesselMaxZeroIndex) <= cutoff) {
                    throw DomainError("enumerate_modes: cutoff exceeds the tabulated Bessel range");
                }
                for (int k = 1; k <= kBesselMaxZeroIndex && bessel_zero(j, k) <= cutoff; ++k) {
                    out.push_back(make_mode(domain, {j, k, 1}));
                    if (j > 0) out.push_back(make_mode(domain, {j, k, 2}));
                }
            }
            break;
    }
    sort_modes(out);
    const bool has_constant = domain.boundary == Boundary::Neumann || domain.kind == DomainKind::Torus2D;
    if (include_constant_mode && !has_constant) {
        throw ConfigError("enumerate_modes: the constant mode exists only for Neumann or periodic domains");
    }
    if (include_constant_mode) {
        EigenMode c;
        c.kind = domain.kind;
        c.lambda = 0.0;
        if (domain.kind == DomainKind::Torus2D) {
            c.fu = {Factor::Kind::PeriodicConst, 0, 0};
            c.fv = {Factor::Kind::PeriodicConst, 0, 0};
        } else {
            c.fu = {Factor::Kind::Const, 0, 0};
            c.fv = domain.kind == DomainKind::Square2D ? Factor{Factor::Kind::Const, 0, 0} : Factor{};
        }
        out.insert(out.begin(), c);
    }
    return out;
}

std::vector<EigenMode> window_modes(const DomainSpec& domain, int n) {
    domain.validate();
    if (n < 1) throw ConfigError("window_modes: N must be >= 1");
    std::vector<EigenMode> out;
    switch (domain.kind) {
        case DomainKind::Interval1D:
            for (int j = 1; j <= n; ++j) out.push_back(make_mode(domain, {j, 0, 0}));
            break;
        case DomainKind::Square2D:
            if (domain.boundary == Boundary::Dirichlet) {
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) out.push_back(make_mode(domain, {j, k, 0}));
            } else if (domain.boundary == Boundary::Neumann) {
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (j != 0 || k != 0) out.push_back(make_mode(domain, {j, k, 0}));
            } else {
                for (int j = 1; j <= n; ++j)
                    for (int k = 0; k < n; ++k) out.push_back(make_mode(domain, {j, k, 0}));
            }
            break;
        case DomainKind::Torus2D:
            for (int j = -n; j <= n; ++j)
                for (int k = -n; k <= n; ++k)
                    if (j != 0 || k != 0) out.push_back(make_mode(domain, {j, k, 0}));
            break;
        case DomainKind::Disk2D:
            if (n > kBesselMaxZeroIndex) throw DomainError("window_modes: disk window exceeds Bessel table");
            for (int j = 0; j < n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    out.push_back(make_mode(domain, {j, k, 1}));
                    if (j > 0) out.push_back(make_mode(domain, {j, k, 2}));
                }
            }
            break;
    }
    sort_modes(out);
    return out;
}

std::vector<EigenMode> first_modes(const DomainSpec& domain, int n) {
    if (n < 1) throw ConfigError("first_modes: n must be >= 1");
    double cutoff = 2.0;
    std::vector<EigenMode> modes = enumerate_modes(domain, cutoff);
    while (static_cast<int>(modes.size()) < n) {
        cutoff *= 1.25;
        modes = enumerate_modes(domain, cutoff);
    }
    modes.resize(n);
    return modes;
}

}  // namespace obsdesign
