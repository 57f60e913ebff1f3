#include "obsdesign/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "obsdesign/error.hpp"
#include "obsdesign/parallel.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {
namespace {

constexpr std::size_t kBlock = 2048;

bool is_diagonal(const Eigen::MatrixXd& k) {
    const double diag = k.diagonal().cwiseAbs().maxCoeff();
    double off = 0.0;
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < k.cols(); ++j)
            if (i != j) off = std::max(off, std::abs(k(i, j)));
    return off <= 1e-13 * diag;
}

void check_window(const ModeMassMatrix& w, int window) {
    if (window < 1 || window > w.rows()) {
        throw ConfigError("J: window " + std::to_string(window) + " outside 1.." +
                          std::to_string(w.rows()));
    }
}

}  // namespace

std::complex<double> time_exponential_integral(double omega, double T) {
    if (std::abs(omega) < 1e-12) return {T, 0.0};
    const double x = 0.5 * omega * T;
    double s = 0.0;
    if (std::abs(omega) < 1e-6) {
        const double x2 = x * x;
        s = T * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0)));
    } else {
        s = 2.0 * std::sin(x) / omega;
    }
    return std::polar(s, x);
}

CrossCoefficients cross_coefficients(const InitialData& data, double T) {
    data.validate();
    if (!(T > 0.0)) throw ConfigError("cross_coefficients: T must be positive");
    const auto m = static_cast<Eigen::Index>(data.size());
    CrossCoefficients out;
    out.T = T;
    out.equation = data.equation;
    out.alpha.resize(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const double lj = data.modes[j].lambda;
        for (Eigen::Index k = 0; k < m; ++k) {
            const double lk = data.modes[k].lambda;
            std::complex<double> v;
            if (data.equation == Equation::Wave) {
                const auto aj = data.a[j];
                const auto bj = data.b[j];
                const auto ak = std::conj(data.a[k]);
                const auto bk = std::conj(data.b[k]);
                v = aj * ak * time_exponential_integral(lj - lk, T) -
                    aj * bk * time_exponential_integral(lj + lk, T) -
                    bj * ak * time_exponential_integral(-(lj + lk), T) +
                    bj * bk * time_exponential_integral(-(lj - lk), T);
            } else {
                v = data.c[j] * std::conj(data.c[k]) *
                    time_exponential_integral(lj * lj - lk * lk, T);
            }
            out.alpha(j, k) = v;
        }
    }
    for (Eigen::Index j = 0; j < m; ++j) out.alpha(j, j).imag(0.0);
    return out;
}

Eigen::MatrixXd energy_kernel(const InitialData& data, const CrossCoefficients& coeffs) {
    const auto m = static_cast<Eigen::Index>(data.size());
    if (coeffs.alpha.rows() != m) throw ConfigError("energy_kernel: coefficient size mismatch");
    Eigen::VectorXd s(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const double l = data.modes[j].lambda;
        s(j) = data.equation == Equation::Wave ? l : l * l;
    }
    Eigen::MatrixXd k = coeffs.alpha.real();
    k = s.asDiagonal() * k * s.asDiagonal();
    return 0.5 * (k + k.transpose());
}

double time_energy_density(const InitialData& data, const CrossCoefficients& coeffs, Point x) {
    const Point pts[1] = {x};
    return energy_density_at_points(data, coeffs, pts)[0];
}

double time_energy_density(const InitialData& data, double T, Point x) {
    return time_energy_density(data, cross_coefficients(data, T), x);
}

std::vector<double> energy_density_at_points(const InitialData& data,
                                             const CrossCoefficients& coeffs,
                                             std::span<const Point> points) {
    const Eigen::MatrixXd k = energy_kernel(data, coeffs);
    const bool diag = is_diagonal(k);
    const Eigen::VectorXd kd = k.diagonal();
    const auto m = static_cast<Eigen::Index>(data.size());
    std::vector<double> out(points.size());
    const std::size_t blocks = (points.size() + kBlock - 1) / kBlock;
    parallel_for(blocks, [&](std::size_t bb, std::size_t be) {
        Eigen::MatrixXd p(m, static_cast<Eigen::Index>(kBlock));
        for (std::size_t blk = bb; blk < be; ++blk) {
            const std::size_t start = blk * kBlock;
            const std::size_t len = std::min(kBlock, points.size() - start);
            const auto n = static_cast<Eigen::Index>(len);
            for (Eigen::Index i = 0; i < n; ++i) {
                const Point x = points[start + static_cast<std::size_t>(i)];
                for (Eigen::Index j = 0; j < m; ++j) p(j, i) = data.modes[j].eval(x);
            }
            Eigen::RowVectorXd phi;
            if (diag) {
                phi = kd.transpose() * p.leftCols(n).array().square().matrix();
            } else {
                phi = (p.leftCols(n).array() * (k * p.leftCols(n)).array()).colwise().sum();
            }
            for (Eigen::Index i = 0; i < n; ++i) {
                out[start + static_cast<std::size_t>(i)] = std::max(0.0, phi(i));
            }
        }
    }, 1);
    return out;
}

std::vector<double> energy_density_at_centers(const InitialData& data,
                                              const CrossCoefficients& coeffs, const Mesh& mesh) {
    std::vector<Point> pts(mesh.size());
    for (std::size_t c = 0; c < pts.size(); ++c) pts[c] = mesh.center(c);
    return energy_density_at_points(data, coeffs, pts);
}

std::vector<double> energy_cell_integrals(const InitialData& data, const CrossCoefficients& coeffs,
                                          const Mesh& mesh, int q) {
    if (q < 1 || q > 3) throw ConfigError("energy_cell_integrals: q must be 1, 2 or 3");
    const GaussRule rule = gauss_legendre(q);
    const bool one_d = mesh.domain.kind == DomainKind::Interval1D;
    const bool disk = mesh.domain.kind == DomainKind::Disk2D;
    const int q1 = one_d ? 1 : q;
    const std::size_t per = static_cast<std::size_t>(q) * q1;
    std::vector<Point> pts(mesh.size() * per);
    std::vector<double> wts(pts.size());
    for (std::size_t c = 0; c < mesh.size(); ++c) {
        const int a = mesh.i0(c);
        const int b = mesh.i1(c);
        const double h0 = 0.5 * (mesh.edges0[a + 1] - mesh.edges0[a]);
        const double m0 = 0.5 * (mesh.edges0[a + 1] + mesh.edges0[a]);
        const double h1 = 0.5 * (mesh.edges1[b + 1] - mesh.edges1[b]);
        const double m1 = 0.5 * (mesh.edges1[b + 1] + mesh.edges1[b]);
        std::size_t idx = c * per;
        for (int p = 0; p < q; ++p) {
            const double u = m0 + h0 * rule.nodes[p];
            for (int r = 0; r < q1; ++r) {
                const double v = one_d ? m1 : m1 + h1 * rule.nodes[r];
                const double wv = one_d ? 2.0 * h1 : h1 * rule.weights[r];
                pts[idx] = {u, v};
                wts[idx] = h0 * rule.weights[p] * (disk ? u : 1.0) * wv;
                ++idx;
            }
        }
    }
    const auto phi = energy_density_at_points(data, coeffs, pts);
    std::vector<double> out(mesh.size());
    for (std::size_t c = 0; c < mesh.size(); ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < per; ++i) s += wts[c * per + i] * phi[c * per + i];
        out[c] = s;
    }
    return out;
}

double G_T(const Mesh& mesh, const SubsetIndicator& set, const InitialData& data,
           const CrossCoefficients& coeffs, int q) {
    check_cell_count(mesh, set.bits.size(), "G_T");
    const auto cells = energy_cell_integrals(data, coeffs, mesh, q);
    std::vector<double> v(cells.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = set.bits[c] ? cells[c] : 0.0;
    return pairwise_sum(v);
}

double G_T_spectral(const Mesh& mesh, const SubsetIndicator& set, const InitialData& data,
                    const CrossCoefficients& coeffs, int q) {
    const auto field = to_field(set);
    const Eigen::MatrixXd g = cross_mass(mesh, data.modes, field.values, q);
    const Eigen::MatrixXd k = energy_kernel(data, coeffs);
    return (k.array() * g.array()).sum();
}

JResult J(const ModeMassMatrix& w, std::span<const double> values, int window) {
    check_window(w, window);
    JResult r;
    r.masses = w.row_dots(values, window);
    r.argmin = 0;
    r.value = r.masses[0];
    for (int j = 1; j < window; ++j) {
        if (r.masses[j] < r.value) {
            r.value = r.masses[j];
            r.argmin = j;
        }
    }
    return r;
}

JResult J(const ModeMassMatrix& w, const SubsetIndicator& set, int window) {
    const auto f = to_field(set);
    return J(w, f.values, window);
}

std::vector<double> gamma_weights(std::span<const double> lambdas) {
    std::vector<double> g(lambdas.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double l2 = lambdas[j] * lambdas[j];
        g[j] = l2 / (1.0 + l2);
    }
    return g;
}

JResult J_weighted(const ModeMassMatrix& w, std::span<const double> values,
                   std::span<const double> gamma, int window) {
    check_window(w, window);
    if (gamma.size() < static_cast<std::size_t>(window)) {
        throw ConfigError("J_weighted: fewer weights than window rows");
    }
    JResult r = J(w, values, window);
    r.argmin = 0;
    r.value = gamma[0] * r.masses[0];
    for (int j = 1; j < window; ++j) {
        const double v = gamma[j] * r.masses[j];
        if (v < r.value) {
            r.value = v;
            r.argmin = j;
        }
    }
    return r;
}

double randomized_constant(Equation eq, double j_value, double T) {
    if (!(T > 0.0)) throw ConfigError("randomized_constant: T must be positive");
    return eq == Equation::Schrodinger ? T * j_value : 0.5 * T * j_value;
}

double randomized_constant(Equation eq, const ModeMassMatrix& w, std::span<const double> values,
                           double T, int window) {
    return randomized_constant(eq, J(w, values, window).value, T);
}

std::vector<std::vector<int>> eigenvalue_clusters(std::span<const double> lambdas, double tol) {
    std::vector<int> order(lambdas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return lambdas[a] < lambdas[b]; });
    std::vector<std::vector<int>> clusters;
    for (int idx : order) {
        if (!clusters.empty() && std::abs(lambdas[idx] - lambdas[clusters.back().front()]) < tol) {
            clusters.back().push_back(idx);
        } else {
            clusters.push_back({idx});
        }
    }
    return clusters;
}

ClusteredConstant asymptotic_constant_clustered(std::span<const double> lambdas,
                                                const Eigen::MatrixXd& gram) {
    const auto m = static_cast<Eigen::Index>(lambdas.size());
    if (m == 0) throw NumericalError("asymptotic_constant_clustered: empty mode list");
    if (gram.rows() != m || gram.cols() != m) {
        throw ConfigError("asymptotic_constant_clustered: Gram size mismatch");
    }
    ClusteredConstant out;
    out.value = std::numeric_limits<double>::infinity();
    const auto clusters = eigenvalue_clusters(lambdas);
    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        const auto& cl = clusters[ci];
        const auto n = static_cast<Eigen::Index>(cl.size());
        double mn = 0.0;
        if (n == 1) {
            mn = gram(cl[0], cl[0]);
        } else {
            Eigen::MatrixXd g(n, n);
            for (Eigen::Index a = 0; a < n; ++a)
                for (Eigen::Index b = 0; b < n; ++b) g(a, b) = gram(cl[a], cl[b]);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
            if (es.info() != Eigen::Success) {
                throw NumericalError("asymptotic_constant_clustered: eigen solver failed");
            }
            mn = es.eigenvalues()(0);
        }
        out.cluster_minima.push_back(mn);
        if (mn < out.value) {
            out.value = mn;
            out.cluster = static_cast<int>(ci);
        }
    }
    return out;
}

HumResult hum_gram(std::span<const double> lambdas, const Eigen::MatrixXd& gram, double T) {
    if (!(T > 0.0)) throw ConfigError("hum_gram: T must be positive");
    const auto m = static_cast<Eigen::Index>(lambdas.size());
    if (gram.rows() != m || gram.cols() != m) throw ConfigError("hum_gram: Gram size mismatch");
    HumResult r;
    r.gram.resize(2 * m, 2 * m);
    const double sign[2] = {1.0, -1.0};
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index k = 0; k < m; ++k) {
            for (int s = 0; s < 2; ++s) {
                for (int t = 0; t < 2; ++t) {
                    const double omega = sign[t] * lambdas[k] - sign[s] * lambdas[j];
                    r.gram(2 * j + s, 2 * k + t) = gram(j, k) * time_exponential_integral(omega, T);
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r.gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("hum_gram: eigen solver failed");
    r.lambda_min = es.eigenvalues()(0);
    r.lambda_max = es.eigenvalues()(2 * m - 1);
    r.observable = r.lambda_min > 1e-10 * std::max(r.lambda_max, 0.0);
    r.observability_constant = r.observable ? 0.5 * r.lambda_min : 0.0;
    r.control_norm = r.observable ? 1.0 / r.lambda_min : std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace obsdesign
