#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "obsdesign/mesh.hpp"
#include "obsdesign/modes.hpp"

namespace obsdesign {

/// Per-cell masses w_{j,c} ~ int_c phi_j^2 for a list of modes.
///
/// Stored either in separable form w_{j,c} = A_j[i0] * B_j[i1] (assembled from
/// a mesh) or densely (rows x cells, row-major).
class ModeMassMatrix {
public:
    ModeMassMatrix() = default;

    static ModeMassMatrix separable(int n0, int n1, std::vector<std::vector<double>> a,
                                    std::vector<std::vector<double>> b,
                                    std::vector<double> lambdas, std::vector<double> cell_measures);
    static ModeMassMatrix dense(int rows, int cols, std::vector<double> row_major,
                                std::vector<double> lambdas, std::vector<double> cell_measures);

    int rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double entry(int j, std::size_t c) const;
    std::vector<double> row(int j) const;
    double row_sum(int j) const;

    /// sum_c values[c] * w_{j,c}, pairwise summed in a fixed order.
    double row_dot(int j, std::span<const double> values) const;
    /// row_dot for rows [0, count) (all rows when count < 0).
    std::vector<double> row_dots(std::span<const double> values, int count = -1) const;

    /// out[c] = sum_j coef[j] * w_{j,c}.
    std::vector<double> combine(std::span<const double> coef) const;

    /// Rows [0, n) as a new matrix.
    ModeMassMatrix leading_rows(int n) const;

    const std::vector<double>& lambdas() const { return lambdas_; }
    const std::vector<double>& cell_measures() const { return measures_; }

private:
    bool separable_ = true;
    int rows_ = 0;
    std::size_t cols_ = 0;
    int n0_ = 0;
    int n1_ = 0;
    std::vector<std::vector<double>> a_;
    std::vector<std::vector<double>> b_;
    std::vector<double> dense_;
    std::vector<double> lambdas_;
    std::vector<double> measures_;
};

/// Gauss quadrature (q in {1, 2, 3} points per axis) of phi_j^2 over every cell.
ModeMassMatrix mode_mass(const Mesh& mesh, const std::vector<EigenMode>& modes, int q = 1);

/// G_{jk} = sum_c a_c int_c phi_j phi_k (q-point Gauss per axis).
Eigen::MatrixXd cross_mass(const Mesh& mesh, const std::vector<EigenMode>& modes,
                           std::span<const double> field, int q = 1);

/// Values of every mode at every cell center, row-major (modes x cells).
std::vector<double> mode_values_at_centers(const Mesh& mesh, const std::vector<EigenMode>& modes);

}  // namespace obsdesign
