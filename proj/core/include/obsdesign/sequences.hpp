#pragma once

#include <utility>
#include <vector>

#include "obsdesign/mesh.hpp"

namespace obsdesign {

/// Fraction-L selection inside each of p0 x p1 macro blocks (p1 ignored in 1D).
/// Inside a block the lowest cell ids are taken first; the selected measure of
/// every block matches L * (block measure) within one cell.
SubsetIndicator equidistributed_set(const Mesh& mesh, int p0, int p1, double L);

/// Closed intervals on a line.
using Intervals = std::vector<std::pair<double, double>>;

/// omega_N = union_{k=1..N} [k pi/(N+1) - L pi/(2N), k pi/(N+1) + L pi/(2N)].
/// Throws ConfigError when the intervals overlap or leave [0, pi].
Intervals omega_family_intervals(int N, double L);

/// int_{omega_N} sin^2(j x) dx in closed form.
double omega_family_sin2_mass(int N, double L, int j);

/// omega_N cellified on a 1D mesh: cells whose center lies in omega_N.
SubsetIndicator omega_family_1d(const Mesh& mesh, int N, double L);

/// Fraction of every cell covered by the union of intervals (axis 0 only).
DensityField coverage_field(const Mesh& mesh, const Intervals& intervals);

/// Disk cells whose theta-center lies in the angular set (intervals within [0, 2 pi]).
SubsetIndicator radial_set_disk(const Mesh& mesh, const Intervals& angular);

/// int over the angular set of Y_{jm}(theta)^2 in closed form
/// (Y_0 = 1/sqrt(2 pi), Y_{j1} = cos(j theta)/sqrt(pi), Y_{j2} = sin(j theta)/sqrt(pi)).
double angular_mass(const Intervals& angular, int j, int m);

}  // namespace obsdesign
