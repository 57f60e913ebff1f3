#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "obsdesign/domain.hpp"

namespace obsdesign {

/// Uniform tensor-product cell decomposition.
///
/// Axis 0 is x1 (interval/square/torus) or r (disk); axis 1 is x2 or theta.
/// In 1D axis 1 is a single dummy cell of unit measure. Cell c has axis
/// indices (c % n0, c / n0) and measure axis_measure0[i0] * axis_measure1[i1];
/// on the disk the radial axis measure is (r_out^2 - r_in^2) / 2.
struct Mesh {
    DomainSpec domain;
    int n0 = 0;
    int n1 = 0;
    std::vector<double> edges0;
    std::vector<double> edges1;
    std::vector<double> axis_measure0;
    std::vector<double> axis_measure1;

    std::size_t size() const { return static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1); }
    int i0(std::size_t c) const { return static_cast<int>(c % static_cast<std::size_t>(n0)); }
    int i1(std::size_t c) const { return static_cast<int>(c / static_cast<std::size_t>(n0)); }
    std::size_t cell(int a, int b) const {
        return static_cast<std::size_t>(b) * static_cast<std::size_t>(n0) + static_cast<std::size_t>(a);
    }
    double measure(std::size_t c) const { return axis_measure0[i0(c)] * axis_measure1[i1(c)]; }
    Point center(std::size_t c) const;
    std::vector<double> measures() const;
    double total_measure() const;
};

/// Build a uniform mesh. For the interval `n1` is ignored; for the square and
/// torus `n1 <= 0` means n1 = n0; for the disk (n0, n1) = (n_r, n_theta).
Mesh build_mesh(const DomainSpec& domain, int n0, int n1 = 0);

/// Reference resolution: interval 2048, square/torus 256x256, disk 256x512.
Mesh reference_mesh(const DomainSpec& domain);

/// Binary design: one bit per mesh cell.
struct SubsetIndicator {
    std::vector<std::uint8_t> bits;
    double target_fraction = 0.0;

    std::size_t count() const;
};

/// Relaxed design with values in [0, 1] per mesh cell.
struct DensityField {
    std::vector<double> values;
    double target_fraction = 0.0;
};

/// Pairwise-summed measure of the selected cells.
double measure_of(const Mesh& mesh, const SubsetIndicator& set);

/// Pairwise-summed integral of the field.
double mass_of(const Mesh& mesh, const DensityField& field);

/// Indicator of the cells satisfying `pred(center)`.
template <class Pred>
SubsetIndicator indicator_from(const Mesh& mesh, Pred pred, double target_fraction = 0.0) {
    SubsetIndicator s;
    s.bits.resize(mesh.size());
    for (std::size_t c = 0; c < mesh.size(); ++c) s.bits[c] = pred(mesh.center(c)) ? 1 : 0;
    s.target_fraction = target_fraction;
    return s;
}

SubsetIndicator full_set(const Mesh& mesh);
SubsetIndicator empty_set(const Mesh& mesh);
DensityField to_field(const SubsetIndicator& set);
DensityField constant_field(const Mesh& mesh, double value);

/// Number of cells in which the two indicators differ.
std::size_t symmetric_difference_cells(const SubsetIndicator& a, const SubsetIndicator& b);

/// Measure of the symmetric difference of two sets.
double symmetric_difference_measure(const Mesh& mesh, const SubsetIndicator& a,
                                    const SubsetIndicator& b);

/// Throws ConfigError when a per-cell vector does not match the mesh.
void check_cell_count(const Mesh& mesh, std::size_t n, const char* what);

}  // namespace obsdesign
