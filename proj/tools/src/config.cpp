#include "config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "obsdesign/error.hpp"

namespace obsdesign::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long parse_long(const std::string& key, const std::string& s) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("config: '" + key + "' expects an integer, got '" + s + "'");
    }
    return v;
}

}  // namespace

double parse_number(const std::string& key, const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        throw ConfigError("config: '" + key + "' expects a finite number, got '" + s + "'");
    }
    return v;
}

const std::map<std::string, std::string>& RunConfig::defaults() {
    static const std::map<std::string, std::string> d = {
        {"domain", "square"},
        {"boundary", "dirichlet"},
        {"equation", "wave"},
        {"L", "0.6"},
        {"N", "20"},
        {"T", "3"},
        {"data", "preset1"},
        {"data.n0", "15"},
        {"data.modes", "8"},
        {"data.a", ""},
        {"data.b", ""},
        {"data.c", ""},
        {"mesh.n0", "0"},
        {"mesh.n1", "0"},
        {"quadrature", "1"},
        {"tol", "1e-6"},
        {"max_iter", "0"},
        {"weighted", "false"},
        {"stationarity.n_max", "0"},
        {"set", "half"},
        {"set.file", ""},
        {"set.N", "5"},
        {"set.P0", "32"},
        {"set.P1", "32"},
        {"nogap.P", "8,16,32,64"},
        {"cantor.p", "1"},
        {"cantor.q", "5"},
        {"cantor.K", "8"},
        {"cantor.b0", "1"},
        {"cantor.safety", "0.9"},
        {"cantor.n_max", "5000"},
        {"cantor.mesh", "8192"},
        {"cantor.modes", "0"},
        {"seed", "1"},
        {"gnuplot", "false"},
    };
    return d;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: unknown key '" + key + "'");
    it->second = value;
}

const std::string& RunConfig::text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: unknown key '" + key + "'");
    return it->second;
}

double RunConfig::number(const std::string& key) const { return parse_number(key, text(key)); }

long RunConfig::integer(const std::string& key) const { return parse_long(key, text(key)); }

bool RunConfig::flag(const std::string& key) const {
    const auto& v = text(key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config: '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<double> RunConfig::numbers(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : split_list(text(key))) out.push_back(parse_number(key, s));
    return out;
}

std::vector<long> RunConfig::integers(const std::string& key) const {
    std::vector<long> out;
    for (const auto& s : split_list(text(key))) out.push_back(parse_long(key, s));
    return out;
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = source + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");
        cfg.set(key, trim(line.substr(eq + 1)));
    }
    return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    RunConfig cfg;
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw ConfigError("config: cannot open '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        cfg = parse_config_text(ss.str(), path);
    }
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("override '" + o + "' is not key=value");
        cfg.set(trim(o.substr(0, eq)), trim(o.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace obsdesign::cli
