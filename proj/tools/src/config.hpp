#pragma once

#include <map>
#include <string>
#include <vector>

namespace obsdesign::cli {

/// Resolved key/value configuration. Every known key is present after `load_config`.
class RunConfig {
public:
    /// Defaults of every accepted key, in key order.
    static const std::map<std::string, std::string>& defaults();

    /// Set a key, throwing ConfigError for unknown keys.
    void set(const std::string& key, const std::string& value);

    const std::string& text(const std::string& key) const;
    double number(const std::string& key) const;
    long integer(const std::string& key) const;
    bool flag(const std::string& key) const;
    std::vector<double> numbers(const std::string& key) const;
    std::vector<long> integers(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_ = defaults();
};

/// Finite double from the whole of `text`; ConfigError names `what` otherwise.
double parse_number(const std::string& what, const std::string& text);

/// Parse `key = value` lines ('#' starts a comment, blank lines are skipped).
/// Duplicate or unknown keys throw ConfigError.
RunConfig parse_config_text(const std::string& text, const std::string& source = "config");

/// Read the file (when `path` is non-empty), then apply `key=value` overrides.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

}  // namespace obsdesign::cli
