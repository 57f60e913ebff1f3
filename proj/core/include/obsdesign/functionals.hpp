#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "obsdesign/initial_data.hpp"
#include "obsdesign/mesh.hpp"
#include "obsdesign/mode_mass.hpp"

namespace obsdesign {

/// E(omega) = int_0^T exp(i omega t) dt, with a series for small |omega| and the
/// exact value T for |omega| < 1e-12.
std::complex<double> time_exponential_integral(double omega, double T);

/// Cross coefficients alpha_{jk} of the initial data over the horizon T.
struct CrossCoefficients {
    Eigen::MatrixXcd alpha;
    double T = 0.0;
    Equation equation = Equation::Wave;
};

CrossCoefficients cross_coefficients(const InitialData& data, double T);

/// Real symmetric matrix K_{jk} = s_j s_k Re(alpha_{jk}) with s_j = lambda_j (wave)
/// or lambda_j^2 (Schrodinger), so that phi(x) = v(x)^T K v(x), v_j = phi_j(x).
Eigen::MatrixXd energy_kernel(const InitialData& data, const CrossCoefficients& coeffs);

/// phi(x) = int_0^T |d_t y(t, x)|^2 dt, clamped at 0.
double time_energy_density(const InitialData& data, const CrossCoefficients& coeffs, Point x);
double time_energy_density(const InitialData& data, double T, Point x);

/// phi at every listed point (blocked dense evaluation, diagonal fast path).
std::vector<double> energy_density_at_points(const InitialData& data,
                                             const CrossCoefficients& coeffs,
                                             std::span<const Point> points);

/// phi at every cell center of the mesh.
std::vector<double> energy_density_at_centers(const InitialData& data,
                                              const CrossCoefficients& coeffs, const Mesh& mesh);

/// int_c phi for every cell by q x q Gauss quadrature of phi.
std::vector<double> energy_cell_integrals(const InitialData& data, const CrossCoefficients& coeffs,
                                          const Mesh& mesh, int q = 1);

/// G_T(set) = int_set phi by q x q Gauss quadrature of phi on every selected cell.
double G_T(const Mesh& mesh, const SubsetIndicator& set, const InitialData& data,
           const CrossCoefficients& coeffs, int q = 1);

/// G_T(set) = sum_{jk} K_{jk} int_set phi_j phi_k using the cross-mass matrix.
double G_T_spectral(const Mesh& mesh, const SubsetIndicator& set, const InitialData& data,
                    const CrossCoefficients& coeffs, int q = 1);

/// Value of min_j over a window of (weight_j * row mass), the minimizing row and all row masses.
struct JResult {
    double value = 0.0;
    int argmin = 0;
    std::vector<double> masses;
};

/// J over the first `window` rows of the mass matrix. `values` is a set (0/1) or a field.
JResult J(const ModeMassMatrix& w, std::span<const double> values, int window);
JResult J(const ModeMassMatrix& w, const SubsetIndicator& set, int window);

/// gamma_j = lambda_j^2 / (1 + lambda_j^2).
std::vector<double> gamma_weights(std::span<const double> lambdas);

JResult J_weighted(const ModeMassMatrix& w, std::span<const double> values,
                   std::span<const double> gamma, int window);

/// T * J (Schrodinger) or (T / 2) * J (wave).
double randomized_constant(Equation eq, double j_value, double T);
double randomized_constant(Equation eq, const ModeMassMatrix& w, std::span<const double> values,
                           double T, int window);

/// Groups of mode positions whose lambdas agree within `tol`, in ascending lambda order.
std::vector<std::vector<int>> eigenvalue_clusters(std::span<const double> lambdas, double tol = 1e-9);

struct ClusteredConstant {
    double value = 0.0;
    int cluster = 0;
    std::vector<double> cluster_minima;
};

/// min over eigenvalue clusters of the smallest eigenvalue of the cluster Gram
/// G_{kl} = int_omega phi_k phi_l. `gram` is the full cross-mass matrix of the modes.
ClusteredConstant asymptotic_constant_clustered(std::span<const double> lambdas,
                                                const Eigen::MatrixXd& gram);

/// Truncated HUM Gram operator on (A_k, B_k) coordinates.
struct HumResult {
    Eigen::MatrixXcd gram;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    /// lambda_min / 2: observability constant at truncation level for the energy norm.
    double observability_constant = 0.0;
    /// 1 / lambda_min, infinite when not observable.
    double control_norm = 0.0;
    /// lambda_min > 1e-10 * lambda_max.
    bool observable = false;
};

/// Gram_{(j,s),(k,s')} = G_{jk} E(s' lambda_k - s lambda_j), s, s' in {+1, -1};
/// row/column 2j is the + component of mode j and 2j + 1 the - component.
HumResult hum_gram(std::span<const double> lambdas, const Eigen::MatrixXd& gram, double T);

}  // namespace obsdesign
