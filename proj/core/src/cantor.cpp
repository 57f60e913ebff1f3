#include "obsdesign/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "obsdesign/error.hpp"
#include "obsdesign/quadrature.hpp"

namespace obsdesign {
namespace {

using std::numbers::pi;
__extension__ typedef __int128 i128;

i128 ipow(i128 base, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

i128 mod_pos(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

/// 1 - cos(pi u / d) = 2 sin^2(pi u / (2 d)) for u reduced modulo 2d.
double one_minus_cos_pi(i128 u, i128 d) {
    const i128 r = mod_pos(u, 2 * d);
    const double s = std::sin(pi * static_cast<double>(r) / (2.0 * static_cast<double>(d)));
    return 2.0 * s * s;
}

/// cos(pi u / d) for u reduced modulo 2d.
double cos_pi(i128 u, i128 d) {
    const i128 r = mod_pos(u, 2 * d);
    return std::cos(pi * static_cast<double>(r) / static_cast<double>(d));
}

double reduce_angle(double y) {
    y = std::remainder(y, 2.0 * pi);
    return std::abs(y);
}

}  // namespace

void CantorParams::validate() const {
    if (p < 1 || q < 1) throw ConfigError("cantor: p and q must be positive");
    if (std::gcd(p, q) != 1) throw ConfigError("cantor: p and q must be coprime");
    if ((p + q) % 2 != 0) throw ConfigError("cantor: p + q must be even");
    if (!(3 * p < q)) throw ConfigError("cantor: alpha = p/q must be < 1/3");
    // inf I_1 > alpha pi  <=>  alpha^2 - 4 alpha + 1 > 0  <=>  alpha < 2 - sqrt(3).
    if (!(q * q - 4 * p * q + p * p > 0)) throw ConfigError("cantor: alpha = p/q must be < 2 - sqrt(3)");
    if (K < 1 || K > 30) throw ConfigError("cantor: K must lie in [1, 30]");
    if (!(b0 > 0.0) || !std::isfinite(b0)) throw ConfigError("cantor: b0 must be positive");
    if (!(safety > 0.0 && safety <= 1.0)) throw ConfigError("cantor: safety must lie in (0, 1]");
    const i128 limit = static_cast<i128>(1) << 62;
    i128 v = 1;
    for (int i = 0; i <= K; ++i) {
        v *= q;
        if (v >= limit) throw ConfigError("cantor: q^(K+1) must stay below 2^62");
    }
}

double CantorSet::measure_half() const {
    double s = params.alpha() * pi;
    for (double h : half_widths) s += 2.0 * h;
    return s;
}

bool CantorSet::contains(double y) const {
    const double t = reduce_angle(y);
    if (t <= params.alpha() * pi) return true;
    for (std::size_t k = 0; k < centers.size(); ++k)
        if (std::abs(t - centers[k]) <= half_widths[k]) return true;
    return false;
}

double CantorSet::f(double y) const {
    const double t = reduce_angle(y);
    const double base = params.alpha() * pi;
    if (t <= base) return heights[0] * (1.0 - t / base);
    for (std::size_t k = 0; k < centers.size(); ++k) {
        const double d = std::abs(t - centers[k]);
        if (d <= half_widths[k]) return heights[k + 1] * (1.0 - d / half_widths[k]);
    }
    return 0.0;
}

CantorSet build_cantor(const CantorParams& params) {
    params.validate();
    const long p = params.p;
    const long q = params.q;
    const int K = params.K;
    const double alpha = params.alpha();

    CantorSet set;
    set.params = params;
    for (int k = 1; k <= K; ++k) {
        set.centers.push_back(pi - (pi / std::ldexp(1.0, k)) * std::pow(alpha + 1.0, k));
        set.half_widths.push_back((pi / std::ldexp(1.0, k)) * alpha * std::pow(1.0 - alpha, k));
    }

    // sigma_0 = min_{n < 2q} 1 - cos(n pi p / q).
    double s0 = 2.0;
    for (long n = 1; n <= 2 * q - 1; ++n) s0 = std::min(s0, one_minus_cos_pi(static_cast<i128>(n) * p, q));
    if (!(s0 > 0.0)) throw NumericalError("cantor: sigma_0 is not positive");
    set.sigmas.push_back(s0);
    // sigma_m = min_{r < 2q, r != q} 1 - cos((r pi / 2^{m-1}) (p/q) (q-p)^m); (q-p)^m / 2^{m-1} = 2 ((q-p)/2)^m.
    const i128 half_gap = (q - p) / 2;
    for (int m = 1; m <= K; ++m) {
        const i128 num = 2 * static_cast<i128>(p) * ipow(half_gap, m);
        double sm = 2.0;
        for (long r = 1; r <= 2 * q - 1; ++r) {
            if (r != q) sm = std::min(sm, one_minus_cos_pi(num * r, q));
        }
        if (!(sm > 0.0)) throw NumericalError("cantor: sigma_" + std::to_string(m) + " is not positive");
        set.sigmas.push_back(sm);
    }

    set.heights.push_back(params.b0);
    const double shrink = (1.0 - alpha) / 2.0;
    for (int k = 1; k <= K; ++k) {
        double bound = std::pow(shrink, k) * std::ldexp(1.0, -k) * set.sigmas[0] * params.b0 / 8.0;
        for (int m = 1; m < k; ++m) {
            bound = std::min(bound, std::pow(shrink, k - m) * std::ldexp(1.0, -(k - m + 2)) *
                                        set.heights[m] * set.sigmas[m]);
        }
        set.heights.push_back(params.safety * bound);
    }

    bool ok = set.centers[0] - set.half_widths[0] > alpha * pi;
    for (int k = 0; k + 1 < K; ++k) {
        ok = ok && set.centers[k] + set.half_widths[k] < set.centers[k + 1] - set.half_widths[k + 1];
    }
    ok = ok && set.centers[K - 1] + set.half_widths[K - 1] < pi;
    set.disjoint = ok;
    if (!ok) throw NumericalError("cantor: intervals are not disjoint and ordered");
    return set;
}

double triangle_cosine_coefficient(double a, double l, double b, long n) {
    if (!(l > 0.0)) throw ConfigError("triangle_cosine_coefficient: width must be positive");
    if (n == 0) return 0.5 * b * l;
    const double nn = static_cast<double>(n);
    const double s = std::sin(nn * l / 4.0);
    return 4.0 * b / (l * nn * nn) * std::cos(nn * a) * 2.0 * s * s;
}

CantorCoefficients cantor_coefficients(const CantorSet& set, long n_max) {
    if (n_max < 1) throw ConfigError("cantor_coefficients: N_max must be >= 1");
    const auto& prm = set.params;
    const int K = prm.K;
    const double alpha = prm.alpha();
    const i128 p = prm.p;
    const i128 q = prm.q;

    // n s_k / pi = n - n (p+q)^k / (2q)^k; n l_k / 2 / pi = n p (q-p)^k / (q^{k+1} 2^k).
    std::vector<i128> phase_num(K + 1), phase_den(K + 1), width_num(K + 1), width_den(K + 1);
    std::vector<double> scale(K + 1);
    for (int k = 1; k <= K; ++k) {
        phase_num[k] = ipow(p + q, k);
        phase_den[k] = ipow(2 * q, k);
        width_num[k] = p * ipow(q - p, k);
        width_den[k] = ipow(q, k + 1) * ipow(2, k);
        scale[k] = std::ldexp(1.0, k + 1) * set.heights[k] / (alpha * std::pow(1.0 - alpha, k) * pi);
    }
    const double base_scale = set.heights[0] / (alpha * pi);

    CantorCoefficients out;
    out.a.resize(static_cast<std::size_t>(n_max));
    out.partial_sums.resize(static_cast<std::size_t>(n_max));
    double running = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const i128 nn = n;
        double acc = 2.0 * base_scale * one_minus_cos_pi(nn * p, q);
        for (int k = 1; k <= K; ++k) {
            const double c = cos_pi(nn * phase_den[k] - nn * phase_num[k], phase_den[k]);
            acc += 2.0 * scale[k] * c * one_minus_cos_pi(nn * width_num[k], width_den[k]);
        }
        const double an = acc / (static_cast<double>(n) * static_cast<double>(n));
        if (!(an > 0.0)) {
            throw CertificationError("cantor: coefficient a_" + std::to_string(n) + " is not positive", n);
        }
        out.a[n - 1] = an;
        running += an;
        out.partial_sums[n - 1] = running;
    }
    out.a0 = set.heights[0] * alpha * pi;
    for (int k = 1; k <= K; ++k) out.a0 += 2.0 * set.heights[k] * set.half_widths[k - 1];
    out.tail_constant = set.sigmas[0] * prm.b0 * std::ldexp(1.0, -K) / (alpha * pi);
    return out;
}

double cantor_coefficient_quadrature(const CantorSet& set, long n) {
    if (n < 0) throw ConfigError("cantor_coefficient_quadrature: n must be >= 0");
    static const GaussRule rule = gauss_legendre(12);
    const double nn = static_cast<double>(n);
    const auto piece = [&](double a, double b) {
        const int panels = std::max(2, static_cast<int>(std::ceil(nn * (b - a) / pi * 2.0)));
        const double h = (b - a) / panels;
        double s = 0.0;
        for (int i = 0; i < panels; ++i) {
            const double lo = a + i * h;
            for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
                const double x = lo + 0.5 * h * (rule.nodes[g] + 1.0);
                s += 0.5 * h * rule.weights[g] * set.f(x) * std::cos(nn * x);
            }
        }
        return s;
    };
    double total = piece(0.0, set.params.alpha() * pi);
    for (std::size_t k = 0; k < set.centers.size(); ++k) {
        total += piece(set.centers[k] - set.half_widths[k], set.centers[k]);
        total += piece(set.centers[k], set.centers[k] + set.half_widths[k]);
    }
    return 2.0 * total;
}

std::vector<double> cantor_energy_density(const std::vector<double>& a, const Mesh& mesh) {
    if (mesh.domain.kind != DomainKind::Interval1D) {
        throw ConfigError("cantor_energy_density: 1D mesh required");
    }
    const std::size_t M = mesh.size();
    const double total = std::accumulate(a.begin(), a.end(), 0.0);
    std::vector<double> phi(M);
    const double h = mesh.edges0[1] - mesh.edges0[0];
    const bool uniform = std::abs(mesh.edges0[0]) < 1e-15 && std::abs(h * M - pi) < 1e-12;
    if (uniform) {
        // sin^2(n x_c) = (1 - cos(pi n (2c+1)/M)) / 2 depends on n modulo 2M only.
        std::vector<double> folded(2 * M, 0.0);
        for (std::size_t n = 1; n <= a.size(); ++n) folded[n % (2 * M)] += a[n - 1];
        std::vector<double> table(4 * M);
        for (std::size_t t = 0; t < 4 * M; ++t) table[t] = std::cos(pi * static_cast<double>(t) / (2.0 * M));
        for (std::size_t c = 0; c < M; ++c) {
            // cos(pi r (2c+1) / M) = table[2 r (2c+1) mod 4M].
            const std::size_t step = (2 * (2 * c + 1)) % (4 * M);
            std::size_t idx = 0;
            double s = 0.0;
            for (std::size_t r = 0; r < 2 * M; ++r) {
                s += folded[r] * table[idx];
                idx += step;
                if (idx >= 4 * M) idx -= 4 * M;
            }
            phi[c] = 0.5 * (total - s);
        }
    } else {
        for (std::size_t c = 0; c < M; ++c) {
            const double x = mesh.center(c).u;
            double s = 0.0;
            for (std::size_t n = 1; n <= a.size(); ++n) {
                const double v = std::sin(static_cast<double>(n) * x);
                s += a[n - 1] * v * v;
            }
            phi[c] = s;
        }
    }
    return phi;
}

SubsetIndicator cantor_optimal_complement(const CantorSet& set, const Mesh& mesh) {
    if (mesh.domain.kind != DomainKind::Interval1D) {
        throw ConfigError("cantor_optimal_complement: 1D mesh required");
    }
    const double L = 1.0 - set.measure_half() / pi;
    return indicator_from(mesh, [&](Point x) { return !set.contains(2.0 * x.u); }, L);
}

}  // namespace obsdesign
