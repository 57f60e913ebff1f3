#pragma once

namespace obsdesign {

inline constexpr int kBesselMaxOrder = 60;
inline constexpr int kBesselMaxZeroIndex = 60;
inline constexpr double kBesselMaxArgument = 200.0;

/// Bessel function of the first kind J_order(x), 0 <= order <= 60, 0 <= x <= 200.
/// Throws DomainError outside that range.
double bessel_j(int order, double x);

/// Derivative J'_order(x) = (J_{order-1}(x) - J_{order+1}(x)) / 2 (J'_0 = -J_1).
double bessel_j_prime(int order, double x);

/// k-th positive zero of J_order, 0 <= order <= 60, 1 <= k <= 60.
/// Values come from a table computed once on first use.
double bessel_zero(int order, int k);

/// J'_order evaluated at the k-th zero.
double bessel_j_prime_at_zero(int order, int k);

/// Normalized disk radial profile R_jk(r) = sqrt(2) J_j(z_jk r) / |J'_j(z_jk)|.
double disk_radial(int j, int k, double r);

}  // namespace obsdesign
