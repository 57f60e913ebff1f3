#include "obsdesign/mesh.hpp"

#include <numbers>
#include <string>

#include "obsdesign/error.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {
namespace {

using std::numbers::pi;

std::vector<double> uniform_edges(double a, double b, int n) {
    std::vector<double> e(n + 1);
    for (int i = 0; i <= n; ++i) e[i] = a + (b - a) * static_cast<double>(i) / n;
    e[n] = b;
    return e;
}

std::vector<double> lengths(const std::vector<double>& e) {
    std::vector<double> m(e.size() - 1);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) m[i] = e[i + 1] - e[i];
    return m;
}

}  // namespace

Point Mesh::center(std::size_t c) const {
    const int a = i0(c);
    const int b = i1(c);
    return {0.5 * (edges0[a] + edges0[a + 1]), 0.5 * (edges1[b] + edges1[b + 1])};
}

std::vector<double> Mesh::measures() const {
    std::vector<double> m(size());
    for (std::size_t c = 0; c < m.size(); ++c) m[c] = measure(c);
    return m;
}

double Mesh::total_measure() const {
    const auto m = measures();
    return pairwise_sum(m);
}

Mesh build_mesh(const DomainSpec& domain, int n0, int n1) {
    domain.validate();
    Mesh mesh;
    mesh.domain = domain;
    switch (domain.kind) {
        case DomainKind::Interval1D:
            if (n0 < 1) throw ConfigError("build_mesh: resolution must be >= 1");
            mesh.n0 = n0;
            mesh.n1 = 1;
            mesh.edges0 = uniform_edges(0.0, pi, n0);
            mesh.edges1 = {0.0, 1.0};
            break;
        case DomainKind::Square2D:
        case DomainKind::Torus2D: {
            if (n1 <= 0) n1 = n0;
            if (n0 < 1 || n1 < 1) throw ConfigError("build_mesh: resolution must be >= 1");
            const double side = domain.kind == DomainKind::Square2D ? pi : 2.0 * pi;
            mesh.n0 = n0;
            mesh.n1 = n1;
            mesh.edges0 = uniform_edges(0.0, side, n0);
            mesh.edges1 = uniform_edges(0.0, side, n1);
            break;
        }
        case DomainKind::Disk2D:
            if (n1 <= 0) n1 = 2 * n0;
            if (n0 < 1 || n1 < 1) throw ConfigError("build_mesh: resolution must be >= 1");
            mesh.n0 = n0;
            mesh.n1 = n1;
            mesh.edges0 = uniform_edges(0.0, 1.0, n0);
            mesh.edges1 = uniform_edges(0.0, 2.0 * pi, n1);
            break;
    }
    if (domain.kind == DomainKind::Disk2D) {
        mesh.axis_measure0.resize(n0);
        for (int i = 0; i < n0; ++i) {
            const double ri = mesh.edges0[i];
            const double ro = mesh.edges0[i + 1];
            mesh.axis_measure0[i] = 0.5 * (ro - ri) * (ro + ri);
        }
    } else {
        mesh.axis_measure0 = lengths(mesh.edges0);
    }
    mesh.axis_measure1 = lengths(mesh.edges1);
    return mesh;
}

Mesh reference_mesh(const DomainSpec& domain) {
    switch (domain.kind) {
        case DomainKind::Interval1D: return build_mesh(domain, 2048);
        case DomainKind::Square2D:
        case DomainKind::Torus2D: return build_mesh(domain, 256, 256);
        case DomainKind::Disk2D: return build_mesh(domain, 256, 512);
    }
    return {};
}

std::size_t SubsetIndicator::count() const {
    std::size_t n = 0;
    for (auto b : bits) n += b ? 1 : 0;
    return n;
}

void check_cell_count(const Mesh& mesh, std::size_t n, const char* what) {
    if (n != mesh.size()) {
        throw ConfigError(std::string(what) + ": expected " + std::to_string(mesh.size()) +
                          " cells, got " + std::to_string(n));
    }
}

double measure_of(const Mesh& mesh, const SubsetIndicator& set) {
    check_cell_count(mesh, set.bits.size(), "measure_of");
    std::vector<double> v(mesh.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = set.bits[c] ? mesh.measure(c) : 0.0;
    return pairwise_sum(v);
}

double mass_of(const Mesh& mesh, const DensityField& field) {
    check_cell_count(mesh, field.values.size(), "mass_of");
    std::vector<double> v(mesh.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = field.values[c] * mesh.measure(c);
    return pairwise_sum(v);
}

SubsetIndicator full_set(const Mesh& mesh) {
    return {std::vector<std::uint8_t>(mesh.size(), 1), 1.0};
}

SubsetIndicator empty_set(const Mesh& mesh) {
    return {std::vector<std::uint8_t>(mesh.size(), 0), 0.0};
}

DensityField to_field(const SubsetIndicator& set) {
    DensityField f;
    f.values.resize(set.bits.size());
    for (std::size_t c = 0; c < set.bits.size(); ++c) f.values[c] = set.bits[c] ? 1.0 : 0.0;
    f.target_fraction = set.target_fraction;
    return f;
}

DensityField constant_field(const Mesh& mesh, double value) {
    return {std::vector<double>(mesh.size(), value), value};
}

std::size_t symmetric_difference_cells(const SubsetIndicator& a, const SubsetIndicator& b) {
    if (a.bits.size() != b.bits.size()) throw ConfigError("symmetric_difference: size mismatch");
    std::size_t n = 0;
    for (std::size_t c = 0; c < a.bits.size(); ++c) n += (a.bits[c] != 0) != (b.bits[c] != 0);
    return n;
}

double symmetric_difference_measure(const Mesh& mesh, const SubsetIndicator& a,
                                    const SubsetIndicator& b) {
    if (a.bits.size() != b.bits.size()) throw ConfigError("symmetric_difference: size mismatch");
    check_cell_count(mesh, a.bits.size(), "symmetric_difference");
    std::vector<double> v(mesh.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] = ((a.bits[c] != 0) != (b.bits[c] != 0)) ? mesh.measure(c) : 0.0;
    }
    return pairwise_sum(v);
}

}  // namespace obsdesign
