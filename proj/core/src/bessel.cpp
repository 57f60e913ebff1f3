#include "obsdesign/bessel.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include "obsdesign/error.hpp"

namespace obsdesign {
namespace {

constexpr double kSeriesLimit = 8.0;

double series_j(int n, double x) {
    const double h = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= h / i;
    double sum = term;
    const double h2 = h * h;
    for (int m = 1; m < 200; ++m) {
        term *= -h2 / (static_cast<double>(m) * (m + n));
        sum += term;
        if (m > h && std::abs(term) <= 1e-17 * std::abs(sum)) break;
        if (std::abs(term) < 1e-300) break;
    }
    return sum;
}

/// Miller downward recurrence normalized by J_0 + 2 sum J_{2k} = 1.
double miller_j(int n, double x) {
    const int base = std::max(n, static_cast<int>(x));
    int start = base + 20 + static_cast<int>(std::sqrt(40.0 * base));
    if (start % 2 == 1) ++start;
    double next = 0.0;
    double cur = 1e-300;
    double result = 0.0;
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        const double prev = (2.0 * k / x) * cur - next;
        next = cur;
        cur = prev;
        // cur now holds the unnormalized J_{k-1}.
        if (k - 1 == n) result = cur;
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            next *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += cur;
    return result / norm;
}

double j_unchecked(int n, double x) {
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kSeriesLimit) return series_j(n, x);
    return miller_j(n, x);
}

double jprime_unchecked(int n, double x) {
    if (n == 0) return -j_unchecked(1, x);
    if (x == 0.0) return n == 1 ? 0.5 : 0.0;
    return j_unchecked(n - 1, x) - (n / x) * j_unchecked(n, x);
}

double refine_zero(int n, double a, double b) {
    double fa = j_unchecked(n, a);
    const double fb = j_unchecked(n, b);
    if (fa * fb > 0.0) {
        std::ostringstream msg;
        msg << "bessel_zero: no sign change of J_" << n << " on bracket [" << a << ", " << b << "]";
        throw NumericalError(msg.str());
    }
    for (int it = 0; it < 40 && b - a > 1e-9; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = j_unchecked(n, m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    double z = 0.5 * (a + b);
    for (int it = 0; it < 4; ++it) {
        const double step = j_unchecked(n, z) / jprime_unchecked(n, z);
        const double cand = z - step;
        if (!(cand > a && cand < b)) break;
        z = cand;
        if (std::abs(step) < 1e-15 * z) break;
    }
    return z;
}

struct ZeroTable {
    // zeros[n][k-1]; order n holds kBesselMaxZeroIndex + (kBesselMaxOrder - n) zeros
    // so that the next order can be bracketed by interlacing.
    std::vector<std::vector<double>> zeros;
    std::vector<std::vector<double>> derivs;
};

ZeroTable build_table() {
    ZeroTable t;
    t.zeros.resize(kBesselMaxOrder + 1);
    t.derivs.resize(kBesselMaxOrder + 1);
    const int count0 = kBesselMaxZeroIndex + kBesselMaxOrder;
    auto& z0 = t.zeros[0];
    for (int k = 1; k <= count0; ++k) {
        const double beta = (k - 0.25) * std::numbers::pi;
        const double guess = beta + 1.0 / (8.0 * beta) - 31.0 / (384.0 * beta * beta * beta);
        double a = guess - 0.3;
        double b = guess + 0.3;
        while (j_unchecked(0, a) * j_unchecked(0, b) > 0.0) {
            a -= 0.1;
            b += 0.1;
            if (b - a > 3.0) {
                std::ostringstream msg;
                msg << "bessel_zero: failed to bracket zero " << k << " of J_0 near " << guess;
                throw NumericalError(msg.str());
            }
        }
        z0.push_back(refine_zero(0, a, b));
    }
    for (int n = 1; n <= kBesselMaxOrder; ++n) {
        const auto& prev = t.zeros[n - 1];
        const int count = kBesselMaxZeroIndex + kBesselMaxOrder - n;
        for (int k = 1; k <= count; ++k) {
            t.zeros[n].push_back(refine_zero(n, prev[k - 1], prev[k]));
        }
    }
    for (int n = 0; n <= kBesselMaxOrder; ++n) {
        for (int k = 1; k <= kBesselMaxZeroIndex; ++k) {
            t.derivs[n].push_back(jprime_unchecked(n, t.zeros[n][k - 1]));
        }
    }
    return t;
}

const ZeroTable& table() {
    static const ZeroTable t = build_table();
    return t;
}

void check_zero_index(int order, int k) {
    if (order < 0 || order > kBesselMaxOrder || k < 1 || k > kBesselMaxZeroIndex) {
        std::ostringstream msg;
        msg << "bessel zero index out of range: order " << order << ", k " << k;
        throw DomainError(msg.str());
    }
}

}  // namespace

double bessel_j(int order, double x) {
    if (order < 0 || order > kBesselMaxOrder || !(x >= 0.0) || x > kBesselMaxArgument) {
        std::ostringstream msg;
        msg << "bessel_j argument out of range: order " << order << ", x " << x;
        throw DomainError(msg.str());
    }
    return j_unchecked(order, x);
}

double bessel_j_prime(int order, double x) {
    if (order < 0 || order > kBesselMaxOrder || !(x >= 0.0) || x > kBesselMaxArgument) {
        std::ostringstream msg;
        msg << "bessel_j_prime argument out of range: order " << order << ", x " << x;
        throw DomainError(msg.str());
    }
    return jprime_unchecked(order, x);
}

double bessel_zero(int order, int k) {
    check_zero_index(order, k);
    return table().zeros[order][k - 1];
}

double bessel_j_prime_at_zero(int order, int k) {
    check_zero_index(order, k);
    return table().derivs[order][k - 1];
}

double disk_radial(int j, int k, double r) {
    check_zero_index(j, k);
    if (!(r >= 0.0) || r > 1.0) throw DomainError("disk_radial: r must lie in [0, 1]");
    const auto& t = table();
    const double z = t.zeros[j][k - 1];
    return std::numbers::sqrt2 * j_unchecked(j, z * r) / std::abs(t.derivs[j][k - 1]);
}

}  // namespace obsdesign
