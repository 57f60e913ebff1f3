#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "obsdesign/modes.hpp"

namespace obsdesign {

enum class Equation { Wave, Schrodinger };

std::string to_string(Equation eq);
Equation parse_equation(std::string_view name);

/// Truncated Fourier data of the initial condition.
///
/// Wave: y(t) = sum_j (a_j e^{i lambda_j t} + b_j e^{-i lambda_j t}) phi_j.
/// Schrodinger: y(t) = sum_j c_j e^{i lambda_j^2 t} phi_j.
struct InitialData {
    Equation equation = Equation::Wave;
    std::vector<EigenMode> modes;
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;
    std::vector<std::complex<double>> c;

    std::size_t size() const { return modes.size(); }

    /// Throws ConfigError when the coefficient vectors do not match the mode list.
    void validate() const;

    /// True when every coefficient is zero.
    bool is_zero() const;

    /// Energy norm: 2 sum lambda^2 (|a|^2 + |b|^2) for the wave equation,
    /// sum lambda^4 |c|^2 for the Schrodinger equation.
    double energy_norm_squared() const;

    static InitialData wave(std::vector<EigenMode> modes, std::vector<std::complex<double>> a,
                            std::vector<std::complex<double>> b);
    static InitialData schrodinger(std::vector<EigenMode> modes,
                                   std::vector<std::complex<double>> c);
};

/// Wave data from y0 = sum_j p_j phi_j, y1 = sum_j q_j phi_j (real or complex projections).
InitialData wave_from_projections(std::vector<EigenMode> modes,
                                  const std::vector<std::complex<double>>& y0,
                                  const std::vector<std::complex<double>>& y1);

/// Random complex coefficients with independent standard normal real and imaginary parts.
InitialData random_initial_data(Equation eq, std::vector<EigenMode> modes, std::uint64_t seed);

/// Square Dirichlet data with y1 = 0 and y0 = sum_{n,k <= n0} a_{n,k} sin(n x1) sin(k x2).
/// preset 1: a_{n,k} = 1/(n^2 + k^2); preset 2: a_{n,k} = (1 - (-1)^{n+k}) / (n^2 k^2).
InitialData square_preset(int preset, int n0, Equation eq = Equation::Wave);

}  // namespace obsdesign
