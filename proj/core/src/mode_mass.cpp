#include "obsdesign/mode_mass.hpp"

#include <string>

#include "obsdesign/error.hpp"
#include "obsdesign/parallel.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {
namespace {

/// Factor values and quadrature weights at q Gauss points in every cell of one axis.
struct AxisSamples {
    int cells = 0;
    int q = 0;
    std::vector<double> weights;  // cells * q, includes the radial weight r
    std::vector<std::vector<double>> values;  // per mode, cells * q
};

AxisSamples sample_axis(const std::vector<double>& edges, bool radial, int q,
                        const std::vector<EigenMode>& modes, bool first_axis) {
    const GaussRule rule = gauss_legendre(q);
    AxisSamples s;
    s.cells = static_cast<int>(edges.size()) - 1;
    s.q = q;
    s.weights.resize(static_cast<std::size_t>(s.cells) * q);
    std::vector<double> points(s.weights.size());
    for (int i = 0; i < s.cells; ++i) {
        const double a = edges[i];
        const double b = edges[i + 1];
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (int p = 0; p < q; ++p) {
            const double t = mid + half * rule.nodes[p];
            points[i * q + p] = t;
            s.weights[i * q + p] = half * rule.weights[p] * (radial ? t : 1.0);
        }
    }
    s.values.resize(modes.size());
    parallel_for(modes.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) {
            const Factor& f = first_axis ? modes[j].fu : modes[j].fv;
            auto& v = s.values[j];
            v.resize(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) v[i] = f(points[i]);
        }
    }, 1);
    return s;
}

std::vector<double> axis_cross(const AxisSamples& s, std::size_t j, std::size_t k) {
    std::vector<double> out(s.cells);
    const auto& vj = s.values[j];
    const auto& vk = s.values[k];
    for (int i = 0; i < s.cells; ++i) {
        double acc = 0.0;
        for (int p = 0; p < s.q; ++p) {
            const std::size_t idx = static_cast<std::size_t>(i) * s.q + p;
            acc += s.weights[idx] * vj[idx] * vk[idx];
        }
        out[i] = acc;
    }
    return out;
}

void check_q(int q) {
    if (q < 1 || q > 3) throw ConfigError("quadrature order must be 1, 2 or 3, got " + std::to_string(q));
}

}  // namespace

ModeMassMatrix ModeMassMatrix::separable(int n0, int n1, std::vector<std::vector<double>> a,
                                         std::vector<std::vector<double>> b,
                                         std::vector<double> lambdas,
                                         std::vector<double> cell_measures) {
    if (a.size() != b.size() || a.size() != lambdas.size()) {
        throw ConfigError("ModeMassMatrix: inconsistent factor counts");
    }
    ModeMassMatrix m;
    m.separable_ = true;
    m.rows_ = static_cast<int>(a.size());
    m.n0_ = n0;
    m.n1_ = n1;
    m.cols_ = static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1);
    if (cell_measures.size() != m.cols_) throw ConfigError("ModeMassMatrix: measure count mismatch");
    m.a_ = std::move(a);
    m.b_ = std::move(b);
    m.lambdas_ = std::move(lambdas);
    m.measures_ = std::move(cell_measures);
    return m;
}

ModeMassMatrix ModeMassMatrix::dense(int rows, int cols, std::vector<double> row_major,
                                     std::vector<double> lambdas,
                                     std::vector<double> cell_measures) {
    if (row_major.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) ||
        lambdas.size() != static_cast<std::size_t>(rows) ||
        cell_measures.size() != static_cast<std::size_t>(cols)) {
        throw ConfigError("ModeMassMatrix: inconsistent dense dimensions");
    }
    ModeMassMatrix m;
    m.separable_ = false;
    m.rows_ = rows;
    m.cols_ = static_cast<std::size_t>(cols);
    m.dense_ = std::move(row_major);
    m.lambdas_ = std::move(lambdas);
    m.measures_ = std::move(cell_measures);
    return m;
}

double ModeMassMatrix::entry(int j, std::size_t c) const {
    if (separable_) {
        return a_[j][c % static_cast<std::size_t>(n0_)] * b_[j][c / static_cast<std::size_t>(n0_)];
    }
    return dense_[static_cast<std::size_t>(j) * cols_ + c];
}

std::vector<double> ModeMassMatrix::row(int j) const {
    std::vector<double> r(cols_);
    for (std::size_t c = 0; c < cols_; ++c) r[c] = entry(j, c);
    return r;
}

double ModeMassMatrix::row_sum(int j) const {
    const auto r = row(j);
    return pairwise_sum(r);
}

double ModeMassMatrix::row_dot(int j, std::span<const double> values) const {
    if (values.size() != cols_) throw ConfigError("row_dot: value count mismatch");
    if (separable_) {
        const auto& a = a_[j];
        const auto& b = b_[j];
        std::vector<double> partial(n1_);
        for (int i1 = 0; i1 < n1_; ++i1) {
            const double* v = values.data() + static_cast<std::size_t>(i1) * n0_;
            double s = 0.0;
            for (int i0 = 0; i0 < n0_; ++i0) s += a[i0] * v[i0];
            partial[i1] = b[i1] * s;
        }
        return pairwise_sum(partial);
    }
    std::vector<double> prod(cols_);
    const double* row = dense_.data() + static_cast<std::size_t>(j) * cols_;
    for (std::size_t c = 0; c < cols_; ++c) prod[c] = values[c] * row[c];
    return pairwise_sum(prod);
}

std::vector<double> ModeMassMatrix::row_dots(std::span<const double> values, int count) const {
    if (count < 0 || count > rows_) count = rows_;
    std::vector<double> out(count);
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) out[j] = row_dot(static_cast<int>(j), values);
    }, 1);
    return out;
}

std::vector<double> ModeMassMatrix::combine(std::span<const double> coef) const {
    if (coef.size() != static_cast<std::size_t>(rows_)) throw ConfigError("combine: coefficient count mismatch");
    std::vector<double> out(cols_, 0.0);
    if (separable_) {
        parallel_for(static_cast<std::size_t>(n1_), [&](std::size_t b, std::size_t e) {
            for (int j = 0; j < rows_; ++j) {
                if (coef[j] == 0.0) continue;
                const auto& a = a_[j];
                for (std::size_t i1 = b; i1 < e; ++i1) {
                    const double s = coef[j] * b_[j][i1];
                    double* o = out.data() + i1 * static_cast<std::size_t>(n0_);
                    for (int i0 = 0; i0 < n0_; ++i0) o[i0] += s * a[i0];
                }
            }
        }, 16);
        return out;
    }
    parallel_for(cols_, [&](std::size_t b, std::size_t e) {
        for (int j = 0; j < rows_; ++j) {
            const double cj = coef[j];
            if (cj == 0.0) continue;
            const double* row = dense_.data() + static_cast<std::size_t>(j) * cols_;
            for (std::size_t c = b; c < e; ++c) out[c] += cj * row[c];
        }
    });
    return out;
}

ModeMassMatrix ModeMassMatrix::leading_rows(int n) const {
    if (n < 1 || n > rows_) throw ConfigError("leading_rows: row count out of range");
    std::vector<double> lam(lambdas_.begin(), lambdas_.begin() + n);
    if (separable_) {
        return separable(n0_, n1_, {a_.begin(), a_.begin() + n}, {b_.begin(), b_.begin() + n},
                         std::move(lam), measures_);
    }
    return dense(n, static_cast<int>(cols_),
                 {dense_.begin(), dense_.begin() + static_cast<std::ptrdiff_t>(n * cols_)},
                 std::move(lam), measures_);
}

ModeMassMatrix mode_mass(const Mesh& mesh, const std::vector<EigenMode>& modes, int q) {
    check_q(q);
    const bool disk = mesh.domain.kind == DomainKind::Disk2D;
    const AxisSamples s0 = sample_axis(mesh.edges0, disk, q, modes, true);
    const AxisSamples s1 = sample_axis(mesh.edges1, false, q, modes, false);
    std::vector<std::vector<double>> a(modes.size());
    std::vector<std::vector<double>> b(modes.size());
    std::vector<double> lam(modes.size());
    for (std::size_t j = 0; j < modes.size(); ++j) {
        a[j] = axis_cross(s0, j, j);
        b[j] = axis_cross(s1, j, j);
        lam[j] = modes[j].lambda;
    }
    return ModeMassMatrix::separable(mesh.n0, mesh.n1, std::move(a), std::move(b), std::move(lam),
                                     mesh.measures());
}

Eigen::MatrixXd cross_mass(const Mesh& mesh, const std::vector<EigenMode>& modes,
                           std::span<const double> field, int q) {
    check_q(q);
    check_cell_count(mesh, field.size(), "cross_mass");
    const bool disk = mesh.domain.kind == DomainKind::Disk2D;
    const AxisSamples s0 = sample_axis(mesh.edges0, disk, q, modes, true);
    const AxisSamples s1 = sample_axis(mesh.edges1, false, q, modes, false);
    const std::size_t m = modes.size();
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) pairs.emplace_back(j, k);
    parallel_for(pairs.size(), [&](std::size_t b, std::size_t e) {
        std::vector<double> prod(mesh.size());
        for (std::size_t p = b; p < e; ++p) {
            const auto [j, k] = pairs[p];
            const auto x = axis_cross(s0, j, k);
            const auto y = axis_cross(s1, j, k);
            for (std::size_t c = 0; c < prod.size(); ++c) {
                prod[c] = field[c] * x[mesh.i0(c)] * y[mesh.i1(c)];
            }
            const double v = pairwise_sum(prod);
            g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v;
            g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
        }
    }, 1);
    return g;
}

std::vector<double> mode_values_at_centers(const Mesh& mesh, const std::vector<EigenMode>& modes) {
    std::vector<double> out(modes.size() * mesh.size());
    parallel_for(modes.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t j = b; j < e; ++j) {
            std::vector<double> fu(mesh.n0);
            std::vector<double> fv(mesh.n1);
            for (int i = 0; i < mesh.n0; ++i) fu[i] = modes[j].fu(0.5 * (mesh.edges0[i] + mesh.edges0[i + 1]));
            for (int i = 0; i < mesh.n1; ++i) fv[i] = modes[j].fv(0.5 * (mesh.edges1[i] + mesh.edges1[i + 1]));
            for (std::size_t c = 0; c < mesh.size(); ++c) {
                out[j * mesh.size() + c] = fu[mesh.i0(c)] * fv[mesh.i1(c)];
            }
        }
    }, 1);
    return out;
}

}  // namespace obsdesign
