#pragma once

#include <vector>

#include "obsdesign/mesh.hpp"

namespace obsdesign {

/// alpha = p / q with gcd(p, q) = 1, p + q even, alpha < 2 - sqrt(3) (so 3p < q); K peaks; base height b0.
struct CantorParams {
    long p = 1;
    long q = 5;
    int K = 8;
    double b0 = 1.0;
    /// Heights are this factor times the largest value allowed by the constraints.
    double safety = 0.9;

    /// Throws ConfigError when an invariant fails (also q^{K+1} >= 2^62).
    void validate() const;
    double alpha() const { return static_cast<double>(p) / static_cast<double>(q); }
};

/// Fractal set C in [-pi, pi] (symmetric) and the even piecewise-linear f supported on it.
///
/// C cap [0, pi] = [0, alpha pi] cup I_1 cup ... cup I_K with I_k centered at
/// s_k = pi - (pi/2^k)(alpha+1)^k of half-width (pi/2^k) alpha (1-alpha)^k;
/// f is a triangle of height b_0 on [-alpha pi, alpha pi] and of height b_k on +-I_k.
struct CantorSet {
    CantorParams params;
    /// s_1..s_K.
    std::vector<double> centers;
    /// Half-widths of I_1..I_K.
    std::vector<double> half_widths;
    /// b_0..b_K.
    std::vector<double> heights;
    /// sigma_0..sigma_K.
    std::vector<double> sigmas;
    /// Result of the ordering/disjointness check on the intervals.
    bool disjoint = false;

    /// |C cap [0, pi]|.
    double measure_half() const;
    /// True when y (reduced to [-pi, pi] modulo 2 pi) lies in C.
    bool contains(double y) const;
    /// f(y), y reduced modulo 2 pi.
    double f(double y) const;
};

CantorSet build_cantor(const CantorParams& params);

/// int g cos(n x) for the triangle of height b on [a - l/2, a + l/2]:
/// (4b/(l n^2)) cos(n a)(1 - cos(n l/2)); n = 0 gives the area b l / 2.
double triangle_cosine_coefficient(double a, double l, double b, long n);

struct CantorCoefficients {
    /// a_n = int_{-pi}^{pi} f cos(n x) dx for n = 1..N_max (index n - 1).
    std::vector<double> a;
    /// Partial sums of a_1..a_n.
    std::vector<double> partial_sums;
    /// a_0 = int f.
    double a0 = 0.0;
    /// |contribution of the omitted peaks k > K to a_n| <= tail_constant / n^2.
    double tail_constant = 0.0;
};

/// Closed-form coefficients with exact rational phase reduction. Throws
/// CertificationError carrying n when some a_n <= 0.
CantorCoefficients cantor_coefficients(const CantorSet& set, long n_max);

/// a_n by composite Gauss-Legendre quadrature of f cos(n x) on the linear pieces.
double cantor_coefficient_quadrature(const CantorSet& set, long n);

/// phi(x) = sum_n a_n sin^2(n x) at the cell centers of a 1D mesh on [0, pi].
/// This is the time-energy density on [0, pi] (Dirichlet) at T = 2 pi of data
/// with a_n = b_n = sqrt(a_n / (8 n^2)).
std::vector<double> cantor_energy_density(const std::vector<double>& a, const Mesh& mesh);

/// Cells of [0, pi] whose center x satisfies 2x (mod 2 pi) outside C: the level
/// set where phi attains its maximum.
SubsetIndicator cantor_optimal_complement(const CantorSet& set, const Mesh& mesh);

}  // namespace obsdesign
