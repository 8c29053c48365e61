#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "parajc/config.hpp"
#include "parajc/errors.hpp"
#include "parajc/scenarios.hpp"
#include "parajc/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 2;
constexpr int exit_numerical_error = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parajc::ConfigError("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parajc: parametric Jaynes-Cummings scenario runner"};
    app.set_version_flag("--version", parajc::library_version);

    std::string scenario, config_path, out_dir = ".", print_defaults;
    app.add_option("scenario", scenario, "scenario id (" + [] {
                       std::string s;
                       for (const auto& id : parajc::scenario_ids) s += id + " ";
                       return s;
                   }() + ")");
    app.add_option("--config", config_path, "configuration file (key = value sections)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--print-defaults", print_defaults,
                   "print the complete default config for a scenario and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help / --version
        app.exit(e);
        return exit_config_error;
    }

    try {
        if (!print_defaults.empty()) {
            std::cout << parajc::emit_config(parajc::default_config(print_defaults));
            return exit_ok;
        }
        if (scenario.empty())
            throw parajc::ConfigError("missing scenario; see --help");

        parajc::ScenarioConfig config = config_path.empty()
                                            ? parajc::default_config(scenario)
                                            : parajc::parse_config(read_file(config_path));
        if (!config_path.empty() && config.id != scenario)
            throw parajc::ConfigError("config file declares scenario '" + config.id +
                                      "' but '" + scenario + "' was requested");
        config.id = scenario;

        const parajc::RunManifest manifest = parajc::run_scenario(config, out_dir);
        std::cout << manifest.scenario << ": wrote " << manifest.outputs.size()
                  << " files to " << out_dir << " in " << manifest.duration_seconds << " s\n";
        return exit_ok;
    } catch (const parajc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical_error;
    }
}
