#include "obsdesign/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "obsdesign/error.hpp"

namespace obsdesign {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

void write_header(std::ostream& out, const Mesh& mesh) {
    out << "cell_id,";
    switch (mesh.domain.kind) {
        case DomainKind::Interval1D: out << "x1,"; break;
        case DomainKind::Disk2D: out << "r,theta,"; break;
        default: out << "x1,x2,"; break;
    }
    out << "measure,value\n";
}

void write_row(std::ostream& out, const Mesh& mesh, std::size_t c, const std::string& value) {
    const Point p = mesh.center(c);
    out << c << ',' << format_double(p.u) << ',';
    if (mesh.domain.kind != DomainKind::Interval1D) out << format_double(p.v) << ',';
    out << format_double(mesh.measure(c)) << ',' << value << '\n';
}

}  // namespace

void write_field_csv(std::ostream& out, const Mesh& mesh, std::span<const double> values) {
    check_cell_count(mesh, values.size(), "write_field_csv");
    write_header(out, mesh);
    for (std::size_t c = 0; c < mesh.size(); ++c) write_row(out, mesh, c, format_double(values[c]));
}

void write_set_csv(std::ostream& out, const Mesh& mesh, const SubsetIndicator& set) {
    check_cell_count(mesh, set.bits.size(), "write_set_csv");
    write_header(out, mesh);
    for (std::size_t c = 0; c < mesh.size(); ++c) write_row(out, mesh, c, set.bits[c] ? "1" : "0");
}

void write_gnuplot_grid(std::ostream& out, const Mesh& mesh, std::span<const double> values) {
    check_cell_count(mesh, values.size(), "write_gnuplot_grid");
    for (int i1 = 0; i1 < mesh.n1; ++i1) {
        for (int i0 = 0; i0 < mesh.n0; ++i0) {
            const std::size_t c = mesh.cell(i0, i1);
            const Point p = mesh.center(c);
            out << format_double(p.u) << ' ' << format_double(p.v) << ' ' << format_double(values[c]) << '\n';
        }
        out << '\n';
    }
}

void write_cantor_csv(std::ostream& out, const CantorCoefficients& coeffs) {
    out << "n,a_n,partial_sum\n";
    for (std::size_t i = 0; i < coeffs.a.size(); ++i) {
        out << i + 1 << ',' << format_double(coeffs.a[i]) << ',' << format_double(coeffs.partial_sums[i]) << '\n';
    }
}

std::string j_result_json(const JResult& result, std::span<const double> lambdas) {
    nlohmann::ordered_json j;
    j["value"] = result.value;
    j["argmin"] = result.argmin;
    j["masses"] = result.masses;
    j["lambdas"] = std::vector<double>(lambdas.begin(), lambdas.end());
    return j.dump(2);
}

std::string cantor_set_json(const CantorSet& set) {
    nlohmann::ordered_json j;
    j["p"] = set.params.p;
    j["q"] = set.params.q;
    j["K"] = set.params.K;
    j["alpha"] = set.params.alpha();
    j["b0"] = set.params.b0;
    j["safety"] = set.params.safety;
    j["base_interval"] = {-set.params.alpha() * std::numbers::pi, set.params.alpha() * std::numbers::pi};
    j["centers"] = set.centers;
    j["half_widths"] = set.half_widths;
    j["heights"] = set.heights;
    j["sigmas"] = set.sigmas;
    j["disjoint"] = set.disjoint;
    j["measure_half"] = set.measure_half();
    return j.dump(2);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << text;
    if (!f) throw ConfigError("failed writing output file: " + path);
}

}  // namespace obsdesign
