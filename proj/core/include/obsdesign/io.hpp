#pragma once

#include <ostream>
#include <span>
#include <string>

#include "obsdesign/cantor.hpp"
#include "obsdesign/functionals.hpp"
#include "obsdesign/mesh.hpp"

namespace obsdesign {

/// Shortest decimal text that reads back to the same double ("nan", "inf", "-inf" otherwise).
std::string format_double(double x);

/// CSV with columns cell_id, center coordinates (x1[,x2] or r,theta), measure, value.
void write_field_csv(std::ostream& out, const Mesh& mesh, std::span<const double> values);
void write_set_csv(std::ostream& out, const Mesh& mesh, const SubsetIndicator& set);

/// Gnuplot grid: one "u v value" line per cell, blank line between rows of axis 1.
void write_gnuplot_grid(std::ostream& out, const Mesh& mesh, std::span<const double> values);

/// CSV with columns n, a_n, partial_sum.
void write_cantor_csv(std::ostream& out, const CantorCoefficients& coeffs);

/// JSON text of (value, argmin, per-mode masses, lambdas of the window).
std::string j_result_json(const JResult& result, std::span<const double> lambdas);

/// JSON text of the full Cantor geometry (parameters, centers, half-widths, heights, sigmas).
std::string cantor_set_json(const CantorSet& set);

/// Write text to a file, throwing ConfigError when it cannot be opened.
void write_file(const std::string& path, const std::string& text);

}  // namespace obsdesign
