#include "obsdesign/initial_data.hpp"

#include <numbers>
#include <random>

#include "obsdesign/error.hpp"

namespace obsdesign {

std::string to_string(Equation eq) {
    return eq == Equation::Wave ? "wave" : "schrodinger";
}

Equation parse_equation(std::string_view name) {
    if (name == "wave") return Equation::Wave;
    if (name == "schrodinger" || name == "schroedinger") return Equation::Schrodinger;
    throw ConfigError("unknown equation '" + std::string(name) + "'");
}

void InitialData::validate() const {
    if (modes.empty()) throw ConfigError("initial data: empty mode list");
    if (equation == Equation::Wave) {
        if (a.size() != modes.size() || b.size() != modes.size()) {
            throw ConfigError("initial data: wave coefficients must match the mode count");
        }
    } else if (c.size() != modes.size()) {
        throw ConfigError("initial data: Schrodinger coefficients must match the mode count");
    }
}

bool InitialData::is_zero() const {
    for (const auto& v : a)
        if (v != 0.0) return false;
    for (const auto& v : b)
        if (v != 0.0) return false;
    for (const auto& v : c)
        if (v != 0.0) return false;
    return true;
}

double InitialData::energy_norm_squared() const {
    double s = 0.0;
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const double l2 = modes[j].lambda * modes[j].lambda;
        if (equation == Equation::Wave) {
            s += 2.0 * l2 * (std::norm(a[j]) + std::norm(b[j]));
        } else {
            s += l2 * l2 * std::norm(c[j]);
        }
    }
    return s;
}

InitialData InitialData::wave(std::vector<EigenMode> modes, std::vector<std::complex<double>> a,
                              std::vector<std::complex<double>> b) {
    InitialData d;
    d.equation = Equation::Wave;
    d.modes = std::move(modes);
    d.a = std::move(a);
    d.b = std::move(b);
    d.validate();
    return d;
}

InitialData InitialData::schrodinger(std::vector<EigenMode> modes,
                                     std::vector<std::complex<double>> c) {
    InitialData d;
    d.equation = Equation::Schrodinger;
    d.modes = std::move(modes);
    d.c = std::move(c);
    d.validate();
    return d;
}

InitialData wave_from_projections(std::vector<EigenMode> modes,
                                  const std::vector<std::complex<double>>& y0,
                                  const std::vector<std::complex<double>>& y1) {
    if (y0.size() != modes.size() || y1.size() != modes.size()) {
        throw ConfigError("wave_from_projections: projection count mismatch");
    }
    const std::complex<double> i(0.0, 1.0);
    std::vector<std::complex<double>> a(modes.size());
    std::vector<std::complex<double>> b(modes.size());
    for (std::size_t j = 0; j < modes.size(); ++j) {
        const double lam = modes[j].lambda;
        a[j] = 0.5 * (y0[j] - i / lam * y1[j]);
        b[j] = 0.5 * (y0[j] + i / lam * y1[j]);
    }
    return InitialData::wave(std::move(modes), std::move(a), std::move(b));
}

InitialData random_initial_data(Equation eq, std::vector<EigenMode> modes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto draw = [&] { return std::complex<double>(normal(rng), normal(rng)); };
    const std::size_t m = modes.size();
    if (eq == Equation::Wave) {
        std::vector<std::complex<double>> a(m);
        std::vector<std::complex<double>> b(m);
        for (std::size_t j = 0; j < m; ++j) {
            a[j] = draw();
            b[j] = draw();
        }
        return InitialData::wave(std::move(modes), std::move(a), std::move(b));
    }
    std::vector<std::complex<double>> c(m);
    for (auto& v : c) v = draw();
    return InitialData::schrodinger(std::move(modes), std::move(c));
}

InitialData square_preset(int preset, int n0, Equation eq) {
    if (preset != 1 && preset != 2) throw ConfigError("square_preset: preset must be 1 or 2");
    if (n0 < 1) throw ConfigError("square_preset: N0 must be >= 1");
    const DomainSpec square{DomainKind::Square2D, Boundary::Dirichlet};
    std::vector<EigenMode> modes;
    std::vector<std::complex<double>> y0;
    for (int n = 1; n <= n0; ++n) {
        for (int k = 1; k <= n0; ++k) {
            double ank = 0.0;
            if (preset == 1) {
                ank = 1.0 / (n * n + k * k);
            } else {
                ank = ((n + k) % 2 == 0 ? 0.0 : 2.0) / (static_cast<double>(n) * n * k * k);
            }
            modes.push_back(make_mode(square, {n, k, 0}));
            // sin(n x1) sin(k x2) = (pi / 2) phi_{n,k}
            y0.emplace_back(0.5 * std::numbers::pi * ank, 0.0);
        }
    }
    if (eq == Equation::Schrodinger) return InitialData::schrodinger(std::move(modes), std::move(y0));
    std::vector<std::complex<double>> y1(y0.size(), 0.0);
    return wave_from_projections(std::move(modes), y0, y1);
}

}  // namespace obsdesign
