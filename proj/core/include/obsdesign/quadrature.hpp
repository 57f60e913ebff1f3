#pragma once

#include <span>
#include <vector>

namespace obsdesign {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (n >= 1), nodes ascending.
GaussRule gauss_legendre(int n);

/// Sum of `values` by pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace obsdesign
