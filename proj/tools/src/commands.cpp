#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "obsdesign/cantor.hpp"
#include "obsdesign/error.hpp"
#include "obsdesign/functionals.hpp"
#include "obsdesign/initial_data.hpp"
#include "obsdesign/io.hpp"
#include "obsdesign/mesh.hpp"
#include "obsdesign/mode_mass.hpp"
#include "obsdesign/modes.hpp"
#include "obsdesign/problem1.hpp"
#include "obsdesign/problem2.hpp"
#include "obsdesign/sequences.hpp"
#include "obsdesign/stationarity.hpp"

namespace obsdesign::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double pi = std::numbers::pi;

/// Every configuration value, parsed and range-checked before any command runs.
struct Settings {
    DomainSpec domain;
    Equation equation = Equation::Wave;
    std::vector<double> L;
    std::vector<long> N;
    double T = 0.0;
    std::string data;
    int data_n0 = 0;
    int data_modes = 0;
    std::vector<std::complex<double>> data_a, data_b, data_c;
    int mesh_n0 = 0;
    int mesh_n1 = 0;
    int q = 1;
    double tol = 0.0;
    long max_iter = 0;
    bool weighted = false;
    int stationarity_n_max = 0;
    std::string set;
    std::string set_file;
    int set_N = 0;
    int set_P0 = 0;
    int set_P1 = 0;
    std::vector<long> nogap_P;
    CantorParams cantor;
    long cantor_n_max = 0;
    int cantor_mesh = 0;
    long cantor_modes = 0;
    std::uint64_t seed = 0;
    bool gnuplot = false;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("config: " + what);
}

std::vector<std::complex<double>> parse_coefficients(const RunConfig& cfg, const std::string& key) {
    std::vector<std::complex<double>> out;
    std::stringstream ss(cfg.text(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
        const auto colon = item.find(':');
        const double re = parse_number(key, item.substr(0, colon));
        const double im = colon == std::string::npos ? 0.0 : parse_number(key, item.substr(colon + 1));
        out.emplace_back(re, im);
    }
    return out;
}

int checked_int(long v, long lo, long hi, const std::string& key) {
    require(v >= lo && v <= hi, key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

Settings resolve(const RunConfig& cfg) {
    Settings s;
    s.domain.kind = parse_domain_kind(cfg.text("domain"));
    s.domain.boundary = parse_boundary(cfg.text("boundary"));
    s.domain.validate();
    s.equation = parse_equation(cfg.text("equation"));
    s.L = cfg.numbers("L");
    require(!s.L.empty(), "L must not be empty");
    for (double l : s.L) require(l > 0.0 && l < 1.0, "L must lie in (0, 1)");
    s.N = cfg.integers("N");
    require(!s.N.empty(), "N must not be empty");
    for (long n : s.N) checked_int(n, 1, 200, "N");
    s.T = cfg.number("T");
    require(s.T > 0.0, "T must be positive");
    s.data = cfg.text("data");
    require(s.data == "preset1" || s.data == "preset2" || s.data == "random" || s.data == "coefficients",
            "data must be preset1, preset2, random or coefficients");
    s.data_n0 = checked_int(cfg.integer("data.n0"), 1, 100, "data.n0");
    s.data_modes = checked_int(cfg.integer("data.modes"), 1, 10000, "data.modes");
    s.data_a = parse_coefficients(cfg, "data.a");
    s.data_b = parse_coefficients(cfg, "data.b");
    s.data_c = parse_coefficients(cfg, "data.c");
    s.mesh_n0 = checked_int(cfg.integer("mesh.n0"), 0, 1 << 24, "mesh.n0");
    s.mesh_n1 = checked_int(cfg.integer("mesh.n1"), 0, 1 << 16, "mesh.n1");
    s.q = checked_int(cfg.integer("quadrature"), 1, 3, "quadrature");
    s.tol = cfg.number("tol");
    require(s.tol > 0.0, "tol must be positive");
    s.max_iter = cfg.integer("max_iter");
    require(s.max_iter >= 0, "max_iter must be >= 0");
    s.weighted = cfg.flag("weighted");
    s.stationarity_n_max = checked_int(cfg.integer("stationarity.n_max"), 0, 200, "stationarity.n_max");
    require(s.stationarity_n_max != 1, "stationarity.n_max must be 0 or >= 2");
    s.set = cfg.text("set");
    require(s.set == "half" || s.set == "full" || s.set == "omega" || s.set == "equidistributed" ||
                s.set == "file",
            "set must be half, full, omega, equidistributed or file");
    s.set_file = cfg.text("set.file");
    require(s.set != "file" || !s.set_file.empty(), "set = file requires set.file");
    s.set_N = checked_int(cfg.integer("set.N"), 1, 1000, "set.N");
    s.set_P0 = checked_int(cfg.integer("set.P0"), 1, 1 << 20, "set.P0");
    s.set_P1 = checked_int(cfg.integer("set.P1"), 1, 1 << 20, "set.P1");
    s.nogap_P = cfg.integers("nogap.P");
    require(!s.nogap_P.empty(), "nogap.P must not be empty");
    for (long p : s.nogap_P) checked_int(p, 1, 1 << 20, "nogap.P");
    s.cantor.p = cfg.integer("cantor.p");
    s.cantor.q = cfg.integer("cantor.q");
    s.cantor.K = checked_int(cfg.integer("cantor.K"), 1, 30, "cantor.K");
    s.cantor.b0 = cfg.number("cantor.b0");
    s.cantor.safety = cfg.number("cantor.safety");
    s.cantor.validate();
    s.cantor_n_max = cfg.integer("cantor.n_max");
    require(s.cantor_n_max >= 1 && s.cantor_n_max <= 100000000, "cantor.n_max must lie in [1, 1e8]");
    s.cantor_mesh = checked_int(cfg.integer("cantor.mesh"), 0, 1 << 24, "cantor.mesh");
    s.cantor_modes = cfg.integer("cantor.modes");
    require(s.cantor_modes >= 0 && s.cantor_modes <= 100000000, "cantor.modes must lie in [0, 1e8]");
    const long seed = cfg.integer("seed");
    require(seed >= 0, "seed must be >= 0");
    s.seed = static_cast<std::uint64_t>(seed);
    s.gnuplot = cfg.flag("gnuplot");
    return s;
}

double single_L(const Settings& s) {
    require(s.L.size() == 1, "this command takes a single L");
    return s.L.front();
}

int single_N(const Settings& s) {
    require(s.N.size() == 1, "this command takes a single N");
    return static_cast<int>(s.N.front());
}

Mesh make_mesh(const Settings& s) {
    if (s.mesh_n0 == 0) return reference_mesh(s.domain);
    return build_mesh(s.domain, s.mesh_n0, s.mesh_n1);
}

json config_json(const RunConfig& cfg) {
    json j = json::object();
    for (const auto& [k, v] : cfg.entries()) j[k] = v;
    return j;
}

json header(const std::string& command, const RunConfig& cfg) {
    json j;
    j["command"] = command;
    j["config"] = config_json(cfg);
    return j;
}

json mesh_json(const Mesh& mesh) {
    return json{{"domain", to_string(mesh.domain.kind)},
                {"boundary", to_string(mesh.domain.boundary)},
                {"n0", mesh.n0},
                {"n1", mesh.n1},
                {"cells", mesh.size()}};
}

std::string path_in(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

template <class Fn>
void write_stream(const std::string& path, Fn fn) {
    std::ostringstream out;
    fn(out);
    write_file(path, out.str());
}

void write_json(const std::string& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

std::vector<double> set_values(const SubsetIndicator& set) {
    return std::vector<double>(set.bits.begin(), set.bits.end());
}

InitialData make_data(const Settings& s) {
    if (s.data == "preset1" || s.data == "preset2") {
        require(s.domain == DomainSpec{DomainKind::Square2D, Boundary::Dirichlet},
                "presets are defined on the Dirichlet square");
        return square_preset(s.data == "preset1" ? 1 : 2, s.data_n0, s.equation);
    }
    if (s.data == "random") return random_initial_data(s.equation, first_modes(s.domain, s.data_modes), s.seed);
    if (s.equation == Equation::Schrodinger) {
        require(!s.data_c.empty(), "coefficients data requires data.c for the Schrodinger equation");
        return InitialData::schrodinger(first_modes(s.domain, static_cast<int>(s.data_c.size())), s.data_c);
    }
    require(!s.data_a.empty(), "coefficients data requires data.a for the wave equation");
    auto b = s.data_b.empty() ? std::vector<std::complex<double>>(s.data_a.size(), 0.0) : s.data_b;
    require(b.size() == s.data_a.size(), "data.a and data.b must have the same length");
    return InitialData::wave(first_modes(s.domain, static_cast<int>(s.data_a.size())), s.data_a, b);
}

void cmd_problem1(const Settings& s, const RunConfig& cfg, const std::string& out) {
    const double L = single_L(s);
    const Mesh mesh = make_mesh(s);
    const InitialData data = make_data(s);
    const LevelSetResult r = solve_problem1(data, s.T, mesh, L);
    write_stream(path_in(out, "phi.csv"), [&](std::ostream& o) { write_field_csv(o, mesh, r.phi); });
    write_stream(path_in(out, "set.csv"), [&](std::ostream& o) { write_set_csv(o, mesh, r.set); });
    if (s.gnuplot) {
        write_stream(path_in(out, "phi.dat"), [&](std::ostream& o) { write_gnuplot_grid(o, mesh, r.phi); });
        const auto v = set_values(r.set);
        write_stream(path_in(out, "set.dat"), [&](std::ostream& o) { write_gnuplot_grid(o, mesh, v); });
    }
    json j = header("problem1", cfg);
    j["mesh"] = mesh_json(mesh);
    j["modes"] = data.size();
    j["result"] = {{"threshold", r.threshold},
                   {"selected_cells", r.set.count()},
                   {"achieved_fraction", r.achieved_fraction},
                   {"residual", r.residual},
                   {"value", r.value},
                   {"dichotomy_threshold", r.dichotomy_threshold},
                   {"dichotomy_agrees", r.dichotomy_agrees},
                   {"tie_cells", r.tie_cells},
                   {"non_unique", r.non_unique}};
    write_json(path_in(out, "problem1.json"), j);
}

json saddle_json(const SaddleResult& r) {
    return json{{"value", r.value},
                {"upper_bound", r.upper_bound},
                {"gap", r.gap},
                {"converged", r.converged},
                {"method", r.method},
                {"iterations", r.iterations},
                {"lp_iterations", r.lp_iterations},
                {"bang_bang_fraction", r.bang_bang_fraction},
                {"threshold", r.threshold},
                {"alpha", r.alpha},
                {"row_masses", r.row_masses},
                {"gap_log", r.gap_log}};
}

SubsetIndicator rounded_set(const DensityField& f) {
    SubsetIndicator set;
    set.target_fraction = f.target_fraction;
    set.bits.resize(f.values.size());
    for (std::size_t c = 0; c < f.values.size(); ++c) set.bits[c] = f.values[c] >= 0.5;
    return set;
}

void cmd_problem2(const Settings& s, const RunConfig& cfg, const std::string& out) {
    const Mesh mesh = make_mesh(s);
    Problem2Options opt;
    opt.tol = s.tol;
    opt.max_iter = s.max_iter;
    json runs = json::array();
    for (long n : s.N) {
        const auto w = mode_mass(mesh, window_modes(s.domain, static_cast<int>(n)), s.q);
        const auto gamma = gamma_weights(w.lambdas());
        for (double L : s.L) {
            const auto r = solve_problem2(w, w.rows(), L, s.weighted ? &gamma : nullptr, opt);
            const std::string stem = "problem2_N" + std::to_string(n) + "_L" + format_double(L);
            write_stream(path_in(out, stem + "_field.csv"),
                         [&](std::ostream& o) { write_field_csv(o, mesh, r.field.values); });
            write_stream(path_in(out, stem + "_set.csv"),
                         [&](std::ostream& o) { write_set_csv(o, mesh, rounded_set(r.field)); });
            if (s.gnuplot) {
                write_stream(path_in(out, stem + "_field.dat"),
                             [&](std::ostream& o) { write_gnuplot_grid(o, mesh, r.field.values); });
            }
            json j = header("problem2", cfg);
            j["mesh"] = mesh_json(mesh);
            j["N"] = n;
            j["L"] = L;
            j["weighted"] = s.weighted;
            j["rows"] = w.rows();
            j["lambdas"] = w.lambdas();
            j["result"] = saddle_json(r);
            write_json(path_in(out, stem + ".json"), j);
            runs.push_back({{"N", n}, {"L", L}, {"value", r.value}, {"gap", r.gap}, {"converged", r.converged}});
        }
    }
    json summary = header("problem2", cfg);
    summary["runs"] = runs;
    if (s.stationarity_n_max > 0) {
        StationarityOptions so;
        so.solver = opt;
        const auto st = detect_stationarity(
            [&](int n) { return mode_mass(mesh, window_modes(s.domain, n), s.q); }, single_L(s), s.weighted,
            s.stationarity_n_max, so);
        summary["stationarity"] = {{"n0", st.n0 ? json(*st.n0) : json(nullptr)},
                                   {"certified", st.certified},
                                   {"excluded_margin", std::isnan(st.excluded_margin) ? json(nullptr)
                                                                                      : json(st.excluded_margin)},
                                   {"values", st.values},
                                   {"field_changes", st.field_changes}};
    }
    write_json(path_in(out, "problem2.json"), summary);
}

std::vector<double> read_set_file(const std::string& path, const Mesh& mesh) {
    std::ifstream f(path);
    if (!f) throw ConfigError("set.file: cannot open '" + path + "'");
    std::string line;
    std::getline(f, line);
    std::vector<double> values;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const auto comma = line.rfind(',');
        const double v = parse_number("set.file", line.substr(comma + 1));
        if (v < 0.0 || v > 1.0) throw ConfigError("set.file: values must lie in [0, 1]");
        values.push_back(v);
    }
    if (values.size() != mesh.size()) {
        throw ConfigError("set.file: " + std::to_string(values.size()) + " rows for a mesh of " +
                          std::to_string(mesh.size()) + " cells");
    }
    return values;
}

std::vector<double> make_set(const Settings& s, const Mesh& mesh, double L) {
    if (s.set == "file") return read_set_file(s.set_file, mesh);
    if (s.set == "full") return set_values(full_set(mesh));
    if (s.set == "omega") {
        require(s.domain.kind == DomainKind::Interval1D, "set = omega requires the interval");
        return set_values(omega_family_1d(mesh, s.set_N, L));
    }
    if (s.set == "equidistributed") return set_values(equidistributed_set(mesh, s.set_P0, s.set_P1, L));
    // half: first coordinate below the midpoint of its range (theta < pi on the disk).
    const bool disk = s.domain.kind == DomainKind::Disk2D;
    const double mid = s.domain.kind == DomainKind::Torus2D ? pi : pi / 2;
    return set_values(indicator_from(mesh, [&](Point p) { return disk ? p.v < pi : p.u < mid; }, 0.5));
}

void cmd_constants(const Settings& s, const RunConfig& cfg, const std::string& out) {
    const double L = single_L(s);
    const int N = single_N(s);
    const Mesh mesh = make_mesh(s);
    const auto values = make_set(s, mesh, L);
    const auto modes = window_modes(s.domain, N);
    const auto w = mode_mass(mesh, modes, s.q);
    const auto gamma = gamma_weights(w.lambdas());
    const auto jr = J(w, values, w.rows());
    const auto jw = J_weighted(w, values, gamma, w.rows());
    const auto gram = cross_mass(mesh, modes, values, s.q);
    const auto clustered = asymptotic_constant_clustered(w.lambdas(), gram);
    const auto hum = hum_gram(w.lambdas(), gram, s.T);
    double mass = 0.0;
    for (std::size_t c = 0; c < mesh.size(); ++c) mass += values[c] * mesh.measure(c);
    write_stream(path_in(out, "set.csv"), [&](std::ostream& o) { write_field_csv(o, mesh, values); });
    json j = header("constants", cfg);
    j["mesh"] = mesh_json(mesh);
    j["set"] = {{"kind", s.set}, {"fraction", mass / mesh.total_measure()}};
    j["N"] = N;
    j["rows"] = w.rows();
    j["T"] = s.T;
    j["J"] = json::parse(j_result_json(jr, w.lambdas()));
    j["J_weighted"] = {{"value", jw.value}, {"argmin", jw.argmin}};
    j["randomized"] = {{"wave_T_over_2_J", randomized_constant(Equation::Wave, jr.value, s.T)},
                       {"schrodinger_T_J", randomized_constant(Equation::Schrodinger, jr.value, s.T)}};
    j["asymptotic"] = {{"clustered", clustered.value},
                       {"clustered_cluster", clustered.cluster},
                       {"wave_factor2_convention", clustered.value / 2}};
    j["hum"] = {{"lambda_min", hum.lambda_min},
                {"lambda_max", hum.lambda_max},
                {"observability_constant", hum.observability_constant},
                {"observable", hum.observable}};
    if (s.set == "omega") {
        double closed = std::numeric_limits<double>::infinity();
        for (const auto& m : modes) closed = std::min(closed, 2.0 / pi * omega_family_sin2_mass(s.set_N, L, m.index[0]));
        j["omega_closed_form_J"] = closed;
    }
    write_json(path_in(out, "constants.json"), j);
}

void cmd_nogap(const Settings& s, const RunConfig& cfg, const std::string& out) {
    const double L = single_L(s);
    const int N = single_N(s);
    require(s.domain.kind == DomainKind::Interval1D || s.domain.kind == DomainKind::Square2D,
            "nogap supports the interval and the square");
    const Mesh mesh = make_mesh(s);
    const auto w = mode_mass(mesh, window_modes(s.domain, N), s.q);
    json entries = json::array();
    for (long P : s.nogap_P) {
        const int p = static_cast<int>(P);
        const auto set = equidistributed_set(mesh, p, s.domain.dimension() == 2 ? p : 1, L);
        const double value = J(w, set, w.rows()).value;
        entries.push_back({{"P", P}, {"J", value}, {"gap", L - value}, {"fraction", measure_of(mesh, set) / mesh.total_measure()}});
        write_stream(path_in(out, "nogap_P" + std::to_string(P) + "_set.csv"),
                     [&](std::ostream& o) { write_set_csv(o, mesh, set); });
    }
    json j = header("nogap", cfg);
    j["mesh"] = mesh_json(mesh);
    j["L"] = L;
    j["N"] = N;
    j["rows"] = w.rows();
    j["sequence"] = entries;
    write_json(path_in(out, "nogap.json"), j);
}

void cmd_cantor(const Settings& s, const RunConfig& cfg, const std::string& out) {
    const CantorSet set = build_cantor(s.cantor);
    const auto coeffs = cantor_coefficients(set, s.cantor_n_max);
    write_stream(path_in(out, "cantor_coefficients.csv"), [&](std::ostream& o) { write_cantor_csv(o, coeffs); });
    double min_a = coeffs.a.front();
    long argmin = 1;
    for (std::size_t i = 0; i < coeffs.a.size(); ++i) {
        if (coeffs.a[i] < min_a) {
            min_a = coeffs.a[i];
            argmin = static_cast<long>(i) + 1;
        }
    }
    json j = header("cantor", cfg);
    j["set"] = json::parse(cantor_set_json(set));
    j["certification"] = {{"n_max", s.cantor_n_max},
                          {"certified", true},
                          {"min_a_n", min_a},
                          {"argmin_n", argmin},
                          {"a0", coeffs.a0},
                          {"tail_constant", coeffs.tail_constant}};
    if (s.cantor_mesh > 0) {
        long modes = s.cantor_modes;
        if (modes == 0) {
            modes = 2;
            for (int k = 0; k <= s.cantor.K; ++k) modes *= s.cantor.q;
            modes -= 1;
        }
        const auto full = modes <= s.cantor_n_max ? coeffs : cantor_coefficients(set, modes);
        std::vector<double> a(full.a.begin(), full.a.begin() + modes);
        const Mesh mesh = build_mesh(DomainSpec{DomainKind::Interval1D, Boundary::Dirichlet}, s.cantor_mesh);
        const auto phi = cantor_energy_density(a, mesh);
        const auto target = cantor_optimal_complement(set, mesh);
        const auto r = solve_problem1(mesh, phi, target.target_fraction);
        write_stream(path_in(out, "cantor_phi.csv"), [&](std::ostream& o) { write_field_csv(o, mesh, phi); });
        write_stream(path_in(out, "cantor_set.csv"), [&](std::ostream& o) { write_set_csv(o, mesh, r.set); });
        j["round_trip"] = {{"mesh", mesh_json(mesh)},
                           {"modes", modes},
                           {"target_fraction", target.target_fraction},
                           {"symmetric_difference_cells", symmetric_difference_cells(r.set, target)}};
    }
    write_json(path_in(out, "cantor.json"), j);
}

json error_json(const std::string& command, const RunConfig& cfg, const std::string& type,
                const std::string& message, int code) {
    json j;
    j["command"] = command;
    j["error"] = {{"type", type}, {"message", message}, {"exit_code", code}};
    j["config"] = config_json(cfg);
    return j;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& config, const std::string& out_dir,
                std::ostream& err) {
    json failure;
    int code = kSuccess;
    try {
        if (out_dir.empty()) throw ConfigError("an output directory is required");
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw ConfigError("cannot create output directory '" + out_dir + "': " + ec.message());
        const Settings s = resolve(config);
        if (command == "problem1") {
            cmd_problem1(s, config, out_dir);
        } else if (command == "problem2") {
            cmd_problem2(s, config, out_dir);
        } else if (command == "constants") {
            cmd_constants(s, config, out_dir);
        } else if (command == "cantor") {
            cmd_cantor(s, config, out_dir);
        } else if (command == "nogap") {
            cmd_nogap(s, config, out_dir);
        } else {
            throw ConfigError("unknown command '" + command + "'");
        }
        return kSuccess;
    } catch (const CertificationError& e) {
        code = kCertification;
        failure = error_json(command, config, "certification", e.what(), code);
        failure["error"]["offending_index"] = e.offending_index();
    } catch (const ConfigError& e) {
        code = kValidation;
        failure = error_json(command, config, "validation", e.what(), code);
    } catch (const DomainError& e) {
        code = kValidation;
        failure = error_json(command, config, "validation", e.what(), code);
    } catch (const DegenerateDesignError& e) {
        code = kNumerical;
        failure = error_json(command, config, "degenerate_design", e.what(), code);
    } catch (const std::exception& e) {
        code = kNumerical;
        failure = error_json(command, config, "numerical", e.what(), code);
    }
    const std::string text = failure.dump(2) + "\n";
    err << text;
    std::error_code ec;
    if (std::filesystem::is_directory(out_dir, ec)) {
        std::ofstream f(path_in(out_dir, "error.json"));
        f << text;
    }
    return code;
}

}  // namespace obsdesign::cli
