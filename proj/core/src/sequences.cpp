#include "obsdesign/sequences.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "obsdesign/error.hpp"

namespace obsdesign {
namespace {

using std::numbers::pi;

bool inside(const Intervals& iv, double t) {
    for (const auto& [a, b] : iv)
        if (t >= a && t <= b) return true;
    return false;
}

}  // namespace

SubsetIndicator equidistributed_set(const Mesh& mesh, int p0, int p1, double L) {
    if (!(L > 0.0 && L < 1.0)) throw ConfigError("equidistributed_set: L must lie in (0, 1)");
    if (mesh.domain.kind == DomainKind::Interval1D) p1 = 1;
    if (p0 < 1 || p1 < 1 || p0 > mesh.n0 || p1 > mesh.n1) {
        throw ConfigError("equidistributed_set: invalid block counts");
    }
    const auto min_cells = static_cast<std::size_t>(std::ceil(1.0 / L));
    SubsetIndicator set = empty_set(mesh);
    set.target_fraction = L;
    double block_total = 0.0;
    double selected_total = 0.0;
    for (int b1 = 0; b1 < p1; ++b1) {
        const int lo1 = static_cast<int>(static_cast<long>(b1) * mesh.n1 / p1);
        const int hi1 = static_cast<int>(static_cast<long>(b1 + 1) * mesh.n1 / p1);
        for (int b0 = 0; b0 < p0; ++b0) {
            const int lo0 = static_cast<int>(static_cast<long>(b0) * mesh.n0 / p0);
            const int hi0 = static_cast<int>(static_cast<long>(b0 + 1) * mesh.n0 / p0);
            std::vector<std::size_t> cells;
            for (int i1 = lo1; i1 < hi1; ++i1)
                for (int i0 = lo0; i0 < hi0; ++i0) cells.push_back(mesh.cell(i0, i1));
            if (cells.size() < min_cells) {
                throw ConfigError("equidistributed_set: block with " + std::to_string(cells.size()) +
                                  " cells cannot hold fraction L");
            }
            for (auto c : cells) block_total += mesh.measure(c);
            const double wanted = L * block_total;
            for (auto c : cells) {
                const double m = mesh.measure(c);
                if (selected_total + 0.5 * m > wanted) break;
                set.bits[c] = 1;
                selected_total += m;
            }
        }
    }
    return set;
}

Intervals omega_family_intervals(int N, double L) {
    if (N < 1) throw ConfigError("omega_family: N must be >= 1");
    if (!(L > 0.0 && L < 1.0)) throw ConfigError("omega_family: L must lie in (0, 1)");
    const double half = L * pi / (2.0 * N);
    Intervals iv;
    for (int k = 1; k <= N; ++k) {
        const double c = k * pi / (N + 1);
        iv.emplace_back(c - half, c + half);
    }
    if (iv.front().first < 0.0 || iv.back().second > pi) {
        throw ConfigError("omega_family: intervals leave [0, pi]");
    }
    for (std::size_t k = 1; k < iv.size(); ++k) {
        if (iv[k].first < iv[k - 1].second) throw ConfigError("omega_family: intervals overlap");
    }
    return iv;
}

double omega_family_sin2_mass(int N, double L, int j) {
    if (j < 1) throw ConfigError("omega_family_sin2_mass: j must be >= 1");
    omega_family_intervals(N, L);
    const double s = std::sin(j * L * pi / N);
    if (j % (N + 1) == 0) return L * pi / 2.0 - (N / (2.0 * j)) * s;
    return L * pi / 2.0 + (1.0 / (2.0 * j)) * s;
}

SubsetIndicator omega_family_1d(const Mesh& mesh, int N, double L) {
    if (mesh.domain.kind != DomainKind::Interval1D) throw ConfigError("omega_family_1d: 1D mesh required");
    const auto iv = omega_family_intervals(N, L);
    return indicator_from(mesh, [&](Point p) { return inside(iv, p.u); }, L);
}

DensityField coverage_field(const Mesh& mesh, const Intervals& intervals) {
    DensityField f;
    f.values.assign(mesh.size(), 0.0);
    for (std::size_t c = 0; c < mesh.size(); ++c) {
        const double a = mesh.edges0[mesh.i0(c)];
        const double b = mesh.edges0[mesh.i0(c) + 1];
        double cov = 0.0;
        for (const auto& [lo, hi] : intervals) cov += std::max(0.0, std::min(b, hi) - std::max(a, lo));
        f.values[c] = std::min(1.0, cov / (b - a));
    }
    return f;
}

SubsetIndicator radial_set_disk(const Mesh& mesh, const Intervals& angular) {
    if (mesh.domain.kind != DomainKind::Disk2D) throw ConfigError("radial_set_disk: disk mesh required");
    double total = 0.0;
    for (const auto& [a, b] : angular) {
        if (a < 0.0 || b > 2.0 * pi || b < a) throw ConfigError("radial_set_disk: intervals must lie in [0, 2 pi]");
        total += b - a;
    }
    return indicator_from(mesh, [&](Point p) { return inside(angular, p.v); }, total / (2.0 * pi));
}

double angular_mass(const Intervals& angular, int j, int m) {
    if (j < 0 || (m != 1 && m != 2) || (j == 0 && m != 1)) throw ConfigError("angular_mass: invalid index");
    double s = 0.0;
    for (const auto& [a, b] : angular) {
        if (j == 0) {
            s += (b - a) / (2.0 * pi);
            continue;
        }
        const auto prim = [&](double t) {
            const double osc = std::sin(2.0 * j * t) / (4.0 * j);
            return (0.5 * t + (m == 1 ? osc : -osc)) / pi;
        };
        s += prim(b) - prim(a);
    }
    return s;
}

}  // namespace obsdesign
