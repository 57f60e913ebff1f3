#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "obsdesign/error.hpp"

int main(int argc, char** argv) {
    using namespace obsdesign::cli;
    CLI::App app{"Optimal observation domains for wave and Schrodinger equations"};
    app.require_subcommand(1);
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir;
    for (const char* name : {"problem1", "problem2", "constants", "cantor", "nogap"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--override", overrides, "key=value overriding the configuration file")
            ->allow_extra_args(false);
        sub->add_option("--out", out_dir, "output directory")->required();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    RunConfig config;
    try {
        config = load_config(config_path, overrides);
    } catch (const obsdesign::ConfigError& e) {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["error"] = {{"type", "validation"}, {"message", e.what()}, {"exit_code", static_cast<int>(kValidation)}};
        std::cerr << j.dump(2) << "\n";
        return kValidation;
    }
    return run_command(command, config, out_dir, std::cerr);
}
