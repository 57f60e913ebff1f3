#include "obsdesign/lp.hpp"

#include <cmath>
#include <limits>

#include "obsdesign/error.hpp"

namespace obsdesign {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class State { Basic, AtLower, AtUpper };

class Simplex {
public:
    Simplex(const LinearProgram& lp, const LpOptions& opt) : lp_(lp), opt_(opt) {
        m_ = static_cast<int>(lp.A.rows());
        n_ = static_cast<int>(lp.A.cols());
        total_ = n_ + m_;
        lower_.resize(total_);
        upper_.resize(total_);
        lower_.head(n_) = lp.lower;
        upper_.head(n_) = lp.upper;
        lower_.tail(m_).setZero();
        upper_.tail(m_).setConstant(kInf);
        sign_ = Eigen::VectorXd::Ones(m_);
        x_ = Eigen::VectorXd::Zero(total_);
        state_.assign(total_, State::AtLower);
        basis_.resize(m_);
    }

    void init(const Eigen::VectorXd* start) {
        for (int j = 0; j < n_; ++j) {
            double v = lower_(j);
            if (start != nullptr && std::isfinite(upper_(j)) &&
                std::abs((*start)(j)-upper_(j)) < std::abs((*start)(j)-lower_(j))) {
                v = upper_(j);
            }
            x_(j) = v;
            state_[j] = v == upper_(j) && upper_(j) != lower_(j) ? State::AtUpper : State::AtLower;
        }
        const Eigen::VectorXd r = lp_.b - lp_.A * x_.head(n_);
        for (int i = 0; i < m_; ++i) {
            sign_(i) = r(i) >= 0.0 ? 1.0 : -1.0;
            x_(n_ + i) = std::abs(r(i));
            state_[n_ + i] = State::Basic;
            basis_[i] = n_ + i;
        }
        binv_ = sign_.asDiagonal();
    }

    LpStatus run(const Eigen::VectorXd& cost, long& iterations) {
        long degenerate = 0;
        long since_refactor = 0;
        while (iterations < opt_.max_iterations) {
            if (since_refactor >= opt_.refactor_interval) {
                refactor();
                since_refactor = 0;
            }
            Eigen::VectorXd cb(m_);
            for (int i = 0; i < m_; ++i) cb(i) = cost(basis_[i]);
            const Eigen::VectorXd y = binv_.transpose() * cb;
            const Eigen::VectorXd d_orig = cost.head(n_) - lp_.A.transpose() * y;
            const bool bland = degenerate > 50;
            int q = -1;
            double best = 0.0;
            double dir = 0.0;
            for (int j = 0; j < total_; ++j) {
                if (state_[j] == State::Basic || lower_(j) == upper_(j)) continue;
                const double dj = j < n_ ? d_orig(j) : cost(j) - sign_(j - n_) * y(j - n_);
                double gain = 0.0;
                double dj_dir = 0.0;
                if (state_[j] == State::AtLower && dj < -opt_.optimality_tol) {
                    gain = -dj;
                    dj_dir = 1.0;
                } else if (state_[j] == State::AtUpper && dj > opt_.optimality_tol) {
                    gain = dj;
                    dj_dir = -1.0;
                }
                if (gain <= 0.0) continue;
                if (bland) {
                    q = j;
                    dir = dj_dir;
                    break;
                }
                if (gain > best) {
                    best = gain;
                    q = j;
                    dir = dj_dir;
                }
            }
            if (q < 0) {
                y_ = y;
                return LpStatus::Optimal;
            }
            const Eigen::VectorXd w = binv_ * column(q);
            double theta = upper_(q) - lower_(q);
            int leave = -1;
            bool leave_to_upper = false;
            double pivot_mag = 0.0;
            for (int i = 0; i < m_; ++i) {
                const double wi = w(i) * dir;
                const int bi = basis_[i];
                double lim = kInf;
                bool to_upper = false;
                if (wi > 1e-11) {
                    lim = (x_(bi) - lower_(bi)) / wi;
                } else if (wi < -1e-11 && std::isfinite(upper_(bi))) {
                    lim = (upper_(bi) - x_(bi)) / (-wi);
                    to_upper = true;
                } else {
                    continue;
                }
                lim = std::max(lim, 0.0);
                const bool better = bland ? (lim < theta - 1e-15 ||
                                             (lim <= theta + 1e-15 && leave >= 0 && bi < basis_[leave]))
                                          : (lim < theta - 1e-15 ||
                                             (lim <= theta + 1e-15 && std::abs(wi) > pivot_mag));
                if (better || (leave < 0 && lim <= theta)) {
                    theta = lim;
                    leave = i;
                    leave_to_upper = to_upper;
                    pivot_mag = std::abs(wi);
                }
            }
            if (!std::isfinite(theta)) return LpStatus::Unbounded;
            ++iterations;
            ++since_refactor;
            degenerate = theta <= 1e-14 ? degenerate + 1 : 0;
            x_(q) += dir * theta;
            for (int i = 0; i < m_; ++i) x_(basis_[i]) -= theta * dir * w(i);
            if (leave < 0) {
                state_[q] = dir > 0 ? State::AtUpper : State::AtLower;
                x_(q) = dir > 0 ? upper_(q) : lower_(q);
                continue;
            }
            const int out = basis_[leave];
            state_[out] = leave_to_upper ? State::AtUpper : State::AtLower;
            x_(out) = leave_to_upper ? upper_(out) : lower_(out);
            basis_[leave] = q;
            state_[q] = State::Basic;
            const double piv = w(leave);
            binv_.row(leave) /= piv;
            for (int i = 0; i < m_; ++i) {
                if (i != leave && w(i) != 0.0) binv_.row(i) -= w(i) * binv_.row(leave);
            }
        }
        return LpStatus::IterationLimit;
    }

    void refactor() {
        Eigen::MatrixXd bmat(m_, m_);
        for (int i = 0; i < m_; ++i) bmat.col(i) = column(basis_[i]);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(bmat);
        binv_ = lu.inverse();
        Eigen::VectorXd rhs = lp_.b;
        for (int j = 0; j < total_; ++j) {
            if (state_[j] != State::Basic && x_(j) != 0.0) rhs -= x_(j) * column(j);
        }
        const Eigen::VectorXd xb = binv_ * rhs;
        for (int i = 0; i < m_; ++i) x_(basis_[i]) = xb(i);
    }

    double artificial_sum() const { return x_.tail(m_).sum(); }

    /// Fix artificials at zero and pivot basic ones out where possible.
    void drop_artificials(long& iterations) {
        for (int i = 0; i < m_; ++i) upper_(n_ + i) = 0.0;
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            const Eigen::RowVectorXd row = binv_.row(r);
            int q = -1;
            double best = 1e-9;
            for (int j = 0; j < n_; ++j) {
                if (state_[j] == State::Basic) continue;
                const double v = std::abs(row.dot(lp_.A.col(j)));
                if (v > best) {
                    best = v;
                    q = j;
                }
            }
            if (q < 0) continue;
            const Eigen::VectorXd w = binv_ * column(q);
            const int out = basis_[r];
            state_[out] = State::AtLower;
            x_(out) = 0.0;
            basis_[r] = q;
            state_[q] = State::Basic;
            const double piv = w(r);
            binv_.row(r) /= piv;
            for (int i = 0; i < m_; ++i) {
                if (i != r && w(i) != 0.0) binv_.row(i) -= w(i) * binv_.row(r);
            }
            ++iterations;
        }
        refactor();
    }

    Eigen::VectorXd column(int j) const {
        if (j < n_) return lp_.A.col(j);
        Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
        e(j - n_) = sign_(j - n_);
        return e;
    }

    const LinearProgram& lp_;
    LpOptions opt_;
    int m_ = 0;
    int n_ = 0;
    int total_ = 0;
    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
    Eigen::VectorXd sign_;
    Eigen::VectorXd x_;
    Eigen::VectorXd y_;
    std::vector<State> state_;
    std::vector<int> basis_;
    Eigen::MatrixXd binv_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const LpOptions& options, const Eigen::VectorXd* start) {
    const auto m = lp.A.rows();
    const auto n = lp.A.cols();
    if (lp.b.size() != m || lp.c.size() != n || lp.lower.size() != n || lp.upper.size() != n) {
        throw ConfigError("solve_lp: inconsistent dimensions");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        if (!std::isfinite(lp.lower(j)) || lp.upper(j) < lp.lower(j)) {
            throw ConfigError("solve_lp: invalid bounds");
        }
    }
    if (start != nullptr && start->size() != n) throw ConfigError("solve_lp: start size mismatch");
    Simplex s(lp, options);
    s.init(start);
    LpResult res;
    Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(n + m);
    cost1.tail(m).setOnes();
    LpStatus st = s.run(cost1, res.iterations);
    if (st == LpStatus::IterationLimit) {
        res.status = st;
        return res;
    }
    s.refactor();
    if (s.artificial_sum() > options.feasibility_tol * (1.0 + lp.b.cwiseAbs().maxCoeff())) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    s.drop_artificials(res.iterations);
    Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(n + m);
    cost2.head(n) = lp.c;
    st = s.run(cost2, res.iterations);
    s.refactor();
    res.status = st;
    res.x = s.x_.head(n);
    res.y = s.y_.size() == m ? s.y_ : Eigen::VectorXd::Zero(m);
    res.objective = lp.c.dot(res.x);
    return res;
}

}  // namespace obsdesign
