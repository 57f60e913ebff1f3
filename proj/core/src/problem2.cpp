#include "obsdesign/problem2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "obsdesign/error.hpp"
#include "obsdesign/lp.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool ties(double ref, double v, double rel) {
    return std::abs(ref - v) <= rel * std::max(std::abs(ref), std::abs(v));
}

/// Cells grouped into tie classes of `primary` (descending), each class split
/// further by ties of the optional `secondary` density.
std::vector<std::vector<std::size_t>> tie_classes(std::span<const double> primary,
                                                  const std::vector<double>* secondary,
                                                  double rel) {
    std::vector<std::size_t> order(primary.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return primary[a] > primary[b]; });
    std::vector<std::vector<std::size_t>> classes;
    std::size_t s = 0;
    while (s < order.size()) {
        const double ref = primary[order[s]];
        std::size_t e = s + 1;
        while (e < order.size() && ties(ref, primary[order[e]], rel)) ++e;
        if (secondary == nullptr) {
            classes.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(s),
                                 order.begin() + static_cast<std::ptrdiff_t>(e));
        } else {
            std::vector<std::size_t> group(order.begin() + static_cast<std::ptrdiff_t>(s),
                                           order.begin() + static_cast<std::ptrdiff_t>(e));
            const auto& sec = *secondary;
            std::stable_sort(group.begin(), group.end(),
                             [&](std::size_t a, std::size_t b) { return sec[a] > sec[b]; });
            std::size_t gs = 0;
            while (gs < group.size()) {
                std::size_t ge = gs + 1;
                while (ge < group.size() && ties(sec[group[gs]], sec[group[ge]], rel)) ++ge;
                classes.emplace_back(group.begin() + static_cast<std::ptrdiff_t>(gs),
                                     group.begin() + static_cast<std::ptrdiff_t>(ge));
                gs = ge;
            }
        }
        s = e;
    }
    return classes;
}

struct Candidate {
    std::vector<double> field;
    std::vector<double> alpha;
    std::vector<double> rows;
    double value = -kInf;
    double upper = kInf;
    double threshold = 0.0;
    long lp_iterations = 0;
    double gap() const { return upper - value; }
};

class Solver {
public:
    Solver(const ModeMassMatrix& w, int n, double L, std::vector<double> g, const Problem2Options& opt)
        : w_(w), n_(n), g_(std::move(g)), opt_(opt), meas_(w.cell_measures()) {
        volume_ = pairwise_sum(meas_);
        target_ = L * volume_;
    }

    std::vector<double> density(std::span<const double> alpha) const {
        std::vector<double> coef(w_.rows(), 0.0);
        for (int j = 0; j < n_; ++j) coef[j] = alpha[j] * g_[j];
        auto d = w_.combine(coef);
        for (std::size_t c = 0; c < d.size(); ++c) d[c] /= meas_[c];
        return d;
    }

    std::vector<double> rows(std::span<const double> field) const {
        auto r = w_.row_dots(field, n_);
        for (int j = 0; j < n_; ++j) r[j] *= g_[j];
        return r;
    }

    FillResult fill(std::span<const double> alpha) const {
        const auto d = density(alpha);
        return sorted_fill(d, meas_, target_, opt_.tie_rel);
    }

    double upper_bound(std::span<const double> alpha) const { return fill(alpha).value; }

    /// Aggregated band LP around the ordering induced by alpha_ref.
    bool polish_once(const std::vector<std::vector<std::size_t>>& classes, double band,
                     std::span<const double> alpha_ref, const FillResult& ref_fill, Candidate& out) const {
        const std::size_t ncls = classes.size();
        std::vector<int> label(meas_.size(), -2);
        std::vector<std::size_t> free_cls;
        double fixed_mass = 0.0;
        double cum = 0.0;
        for (std::size_t k = 0; k < ncls; ++k) {
            double cm = 0.0;
            for (auto c : classes[k]) cm += meas_[c];
            const double lo = cum;
            const double hi = cum + cm;
            cum = hi;
            if (hi < target_ - band) {
                for (auto c : classes[k]) label[c] = -1;
                fixed_mass += cm;
            } else if (lo > target_ + band) {
                // fixed at zero
            } else {
                for (auto c : classes[k]) label[c] = static_cast<int>(free_cls.size());
                free_cls.push_back(k);
            }
        }
        const auto G = static_cast<Eigen::Index>(free_cls.size());
        if (G == 0) return false;
        const Eigen::Index R = n_;
        Eigen::MatrixXd W = Eigen::MatrixXd::Zero(R, G);
        Eigen::VectorXd F = Eigen::VectorXd::Zero(R);
        Eigen::VectorXd M = Eigen::VectorXd::Zero(G);
        for (std::size_t c = 0; c < meas_.size(); ++c)
            if (label[c] >= 0) M(label[c]) += meas_[c];
        for (Eigen::Index j = 0; j < R; ++j) {
            const auto row = w_.row(static_cast<int>(j));
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (label[c] >= 0) {
                    W(j, label[c]) += row[c];
                } else if (label[c] == -1) {
                    F(j) += row[c];
                }
            }
            W.row(j) *= g_[j];
            F(j) *= g_[j];
        }
        const double rhs_mass = target_ - fixed_mass;
        if (rhs_mass < -1e-14 * volume_ || rhs_mass > M.sum() + 1e-14 * volume_) return false;

        LinearProgram lp;
        const Eigen::Index ncol = G + 1 + R;
        lp.A = Eigen::MatrixXd::Zero(R + 1, ncol);
        lp.A.block(0, 0, R, G) = W;
        lp.A.col(G).head(R).setConstant(-1.0);
        lp.A.block(0, G + 1, R, R) = -Eigen::MatrixXd::Identity(R, R);
        lp.A.row(R).head(G) = M.transpose();
        lp.b.resize(R + 1);
        lp.b.head(R) = -F;
        lp.b(R) = std::clamp(rhs_mass, 0.0, M.sum());
        lp.c = Eigen::VectorXd::Zero(ncol);
        lp.c(G) = -1.0;
        lp.lower = Eigen::VectorXd::Zero(ncol);
        lp.upper = Eigen::VectorXd::Constant(ncol, kInf);
        lp.upper.head(G).setOnes();
        Eigen::VectorXd start = Eigen::VectorXd::Zero(ncol);
        for (Eigen::Index f = 0; f < G; ++f) start(f) = ref_fill.field[classes[free_cls[f]].front()];
        const LpResult res = solve_lp(lp, {}, &start);
        out.lp_iterations += res.iterations;
        if (res.status != LpStatus::Optimal) return false;

        std::vector<double> field(meas_.size(), 0.0);
        for (std::size_t c = 0; c < field.size(); ++c) {
            if (label[c] == -1) {
                field[c] = 1.0;
            } else if (label[c] >= 0) {
                field[c] = std::clamp(res.x(label[c]), 0.0, 1.0);
            }
        }
        std::vector<double> alpha(n_);
        double sum = 0.0;
        for (int j = 0; j < n_; ++j) {
            alpha[j] = std::max(0.0, res.y(j));
            sum += alpha[j];
        }
        if (!(sum > 0.0)) return false;
        for (auto& a : alpha) a /= sum;

        // Rows that coincide after aggregation carry arbitrary dual splits; spread
        // them like the reference weights so the dual stays symmetric.
        std::vector<double> sym = alpha;
        std::vector<char> done(n_, 0);
        for (int j = 0; j < n_; ++j) {
            if (done[j]) continue;
            std::vector<int> grp{j};
            const double scale = std::max(W.row(j).cwiseAbs().maxCoeff(), std::abs(F(j)));
            for (int k = j + 1; k < n_; ++k) {
                if (done[k]) continue;
                if (std::abs(F(j) - F(k)) > 1e-9 * scale) continue;
                bool same = true;
                for (Eigen::Index f = 0; f < G && same; ++f) {
                    same = std::abs(W(j, f) - W(k, f)) <= 1e-9 * scale;
                }
                if (same) grp.push_back(k);
            }
            for (int k : grp) done[k] = 1;
            if (grp.size() < 2) continue;
            double tot = 0.0;
            double ref = 0.0;
            for (int k : grp) {
                tot += alpha[k];
                ref += alpha_ref[k];
            }
            for (int k : grp) {
                sym[k] = ref > 0.0 ? tot * alpha_ref[k] / ref : tot / static_cast<double>(grp.size());
            }
        }

        Candidate cand;
        cand.field = std::move(field);
        cand.rows = rows(cand.field);
        cand.value = *std::min_element(cand.rows.begin(), cand.rows.end());
        const FillResult fs = fill(sym);
        const FillResult fa = fill(alpha);
        if (fs.value <= fa.value) {
            cand.upper = fs.value;
            cand.alpha = sym;
            cand.threshold = fs.threshold;
        } else {
            cand.upper = fa.value;
            cand.alpha = alpha;
            cand.threshold = fa.threshold;
        }
        cand.lp_iterations = out.lp_iterations;
        if (cand.gap() < out.gap() || out.field.empty()) {
            out = std::move(cand);
        } else {
            out.lp_iterations = cand.lp_iterations;
        }
        return true;
    }

    Candidate polish(std::span<const double> alpha_ref) const {
        Candidate best;
        const auto d = density(alpha_ref);
        const FillResult ref_fill = sorted_fill(d, meas_, target_, opt_.tie_rel);
        const auto classes = tie_classes(d, nullptr, opt_.tie_rel);
        for (double frac : {0.02, 0.08, 0.32, 2.0}) {
            polish_once(classes, frac * volume_, alpha_ref, ref_fill, best);
            if (!best.field.empty() && best.gap() <= opt_.tol) return best;
        }
        if (!best.field.empty()) {
            const auto d2 = density(best.alpha);
            const auto refined = tie_classes(d, &d2, opt_.tie_rel);
            if (refined.size() > classes.size()) {
                polish_once(refined, 2.0 * volume_, alpha_ref, ref_fill, best);
                if (best.gap() <= opt_.tol) return best;
            }
        }
        if (meas_.size() <= opt_.exact_lp_cells) {
            std::vector<std::vector<std::size_t>> singles(meas_.size());
            std::vector<std::size_t> order(meas_.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
            for (std::size_t i = 0; i < order.size(); ++i) singles[i] = {order[i]};
            polish_once(singles, 2.0 * volume_, alpha_ref, ref_fill, best);
        }
        return best;
    }

    SaddleResult run() const {
        const std::size_t cells = meas_.size();
        long max_iter = opt_.max_iter;
        if (max_iter <= 0) {
            max_iter = static_cast<long>(std::ceil(50.0 * n_ * std::log(std::max<double>(2.0, cells))));
        }
        std::vector<double> alpha(n_, 1.0 / n_);
        std::vector<double> alpha_avg(n_, 0.0);
        double eta_sum = 0.0;
        std::vector<double> field_avg(cells, 0.0);

        Candidate best;
        best.lp_iterations = 0;
        SaddleResult out;
        long next_polish = 20;
        long k = 0;
        bool polished_ok = false;
        long lp_iters = 0;
        for (k = 1; k <= max_iter; ++k) {
            const FillResult f = fill(alpha);
            if (f.value < best.upper) {
                best.upper = f.value;
                best.alpha = alpha;
                best.threshold = f.threshold;
            }
            const auto r = rows(f.field);
            const double jk = *std::min_element(r.begin(), r.end());
            if (jk > best.value) {
                best.value = jk;
                best.field = f.field;
                best.rows = r;
            }
            const double inv = 1.0 / static_cast<double>(k);
            for (std::size_t c = 0; c < cells; ++c) field_avg[c] += (f.field[c] - field_avg[c]) * inv;
            if (n_ > 1) {
                const auto ra = rows(field_avg);
                const double ja = *std::min_element(ra.begin(), ra.end());
                if (ja > best.value) {
                    best.value = ja;
                    best.field = field_avg;
                    best.rows = ra;
                }
            }
            out.gap_log.push_back(best.gap());
            if (best.gap() <= opt_.tol) break;

            const double rmax = std::max(1e-300, *std::max_element(r.begin(), r.end()));
            const double eta = std::sqrt(2.0 * std::log(static_cast<double>(n_)) / static_cast<double>(k)) / rmax;
            eta_sum += eta;
            for (int j = 0; j < n_; ++j) alpha_avg[j] += eta * alpha[j];
            double rmin = *std::min_element(r.begin(), r.end());
            double s = 0.0;
            for (int j = 0; j < n_; ++j) {
                alpha[j] *= std::exp(-eta * (r[j] - rmin));
                s += alpha[j];
            }
            for (auto& a : alpha) a /= s;

            if (opt_.polish && (k == next_polish || k == max_iter)) {
                next_polish *= 2;
                std::vector<double> ref(n_);
                for (int j = 0; j < n_; ++j) ref[j] = alpha_avg[j] / eta_sum;
                Candidate p = polish(ref);
                lp_iters += p.lp_iterations;
                if (!p.field.empty()) {
                    if (p.value > best.value) {
                        best.value = p.value;
                        best.field = p.field;
                        best.rows = p.rows;
                    }
                    if (p.upper < best.upper) {
                        best.upper = p.upper;
                        best.alpha = p.alpha;
                        best.threshold = p.threshold;
                    }
                    out.gap_log.push_back(best.gap());
                    if (best.gap() <= opt_.tol) {
                        polished_ok = true;
                        break;
                    }
                }
            }
        }
        out.iterations = std::min(k, max_iter);
        out.lp_iterations = lp_iters;
        out.field.values = std::move(best.field);
        out.field.target_fraction = target_ / volume_;
        out.alpha = std::move(best.alpha);
        out.value = best.value;
        out.upper_bound = best.upper;
        out.gap = std::max(0.0, best.upper - best.value);
        out.row_masses = std::move(best.rows);
        out.threshold = best.threshold;
        out.converged = out.gap <= opt_.tol;
        out.method = polished_ok ? "eg+lp" : "eg";
        std::size_t bang = 0;
        for (double v : out.field.values) bang += (v <= 1e-9 || v >= 1.0 - 1e-9) ? 1 : 0;
        out.bang_bang_fraction = cells == 0 ? 0.0 : static_cast<double>(bang) / static_cast<double>(cells);
        return out;
    }

private:
    const ModeMassMatrix& w_;
    int n_;
    std::vector<double> g_;
    Problem2Options opt_;
    const std::vector<double>& meas_;
    double volume_ = 0.0;
    double target_ = 0.0;
};

}  // namespace

FillResult sorted_fill(std::span<const double> density, std::span<const double> measures,
                       double target_mass, double tie_rel) {
    if (density.size() != measures.size()) throw ConfigError("sorted_fill: size mismatch");
    FillResult r;
    r.field.assign(density.size(), 0.0);
    const auto classes = tie_classes(density, nullptr, tie_rel);
    double remaining = target_mass;
    for (const auto& cls : classes) {
        if (remaining <= 0.0) break;
        double cm = 0.0;
        for (auto c : cls) cm += measures[c];
        r.threshold = density[cls.front()];
        if (cm <= remaining * (1.0 + 1e-13)) {
            for (auto c : cls) r.field[c] = 1.0;
            remaining -= cm;
        } else {
            const double frac = remaining / cm;
            for (auto c : cls) r.field[c] = frac;
            remaining = 0.0;
        }
    }
    std::vector<double> v(density.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = r.field[c] * density[c] * measures[c];
    r.value = pairwise_sum(v);
    return r;
}

SaddleResult solve_problem2(const ModeMassMatrix& w, int N, double L,
                            const std::vector<double>* weights, const Problem2Options& options) {
    if (N < 1 || N > w.rows()) {
        throw ConfigError("problem2: N must lie in 1.." + std::to_string(w.rows()));
    }
    if (!(L > 0.0 && L < 1.0)) throw ConfigError("problem2: L must lie in (0, 1)");
    if (!(options.tol > 0.0)) throw ConfigError("problem2: tol must be positive");
    std::vector<double> g(N, 1.0);
    if (weights != nullptr) {
        if (weights->size() < static_cast<std::size_t>(N)) {
            throw ConfigError("problem2: fewer weights than window rows");
        }
        std::copy(weights->begin(), weights->begin() + N, g.begin());
    }
    const Solver s(w, N, L, std::move(g), options);
    return s.run();
}

double dual_bound(const ModeMassMatrix& w, std::span<const double> alpha,
                  std::span<const double> row_weights, double L) {
    const int n = static_cast<int>(alpha.size());
    if (n < 1 || n > w.rows() || row_weights.size() < alpha.size()) {
        throw ConfigError("dual_bound: inconsistent sizes");
    }
    std::vector<double> coef(w.rows(), 0.0);
    for (int j = 0; j < n; ++j) coef[j] = alpha[j] * row_weights[j];
    auto d = w.combine(coef);
    const auto& meas = w.cell_measures();
    for (std::size_t c = 0; c < d.size(); ++c) d[c] /= meas[c];
    return sorted_fill(d, meas, L * pairwise_sum(meas)).value;
}

}  // namespace obsdesign
