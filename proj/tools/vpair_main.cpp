#include "vpair/algebra.hpp"
#include "vpair/entanglement.hpp"
#include "vpair/errors.hpp"
#include "vpair/geometry.hpp"
#include "vpair/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 ok, 1 usage/config, 2 numerical invariant, 3 I/O.
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIo = 3;

struct RunFlags {
    std::optional<std::string> config_path;
    std::optional<std::string> preset;
    std::vector<std::pair<std::string, std::string>> overrides;
};

void add_override_option(CLI::App* cmd, RunFlags& flags, const std::string& key,
                         const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + key,
        [&flags, key](const std::string& v) { flags.overrides.emplace_back(key, v); },
        help);
}

int do_run(const RunFlags& flags) {
    vpair::ConfigDocument doc;
    if (flags.config_path) doc = vpair::load_config_document(*flags.config_path);
    if (flags.preset) doc.preset = *flags.preset;
    for (const auto& kv : flags.overrides) doc.entries.push_back(kv);

    const std::vector<vpair::PresetRun> runs = vpair::resolve_runs(doc);
    for (const auto& run : runs) {
        const auto paths = vpair::run_scenario(run.config);
        for (const auto& p : paths) std::cout << p << "\n";
    }
    return 0;
}

int do_coefficients(const std::optional<std::string>& preset, double r,
                    double theta, double phi, double gamma, bool csv) {
    vpair::Geometry g = [&]() {
        if (preset) {
            if (*preset == "I") return vpair::configuration_preset(
                vpair::Configuration::I, r, gamma);
            if (*preset == "II") return vpair::configuration_preset(
                vpair::Configuration::II, r, gamma);
            throw vpair::ConfigError("preset must be I or II, got '" + *preset + "'");
        }
        return vpair::Geometry(r, theta, phi, gamma);
    }();
    vpair::print_coefficients(g, csv, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        vpair::run_basis_self_test();

        CLI::App app{"Two V-type three-level atoms in a common vacuum: "
                     "collective-decay trajectories, negativity, figure presets"};
        app.require_subcommand(1);

        // run
        auto* run = app.add_subcommand("run", "Run a scenario and write CSV");
        RunFlags flags;
        std::string config_path, preset_name;
        run->add_option("--config", config_path, "Flat key = value config file");
        run->add_option("--preset", preset_name, "Figure preset name (fig2..fig15)");
        for (const char* key : {"r_over_lambda", "theta", "phi", "gamma", "zero_vc",
                                "initial_state", "t_max", "dt", "observables",
                                "sweep_param", "sweep_values", "output", "parallel"})
            add_override_option(run, flags, key, std::string("Override config key ") + key);

        // presets
        auto* pres = app.add_subcommand("presets", "List the figure presets");

        // coefficients
        auto* coef = app.add_subcommand("coefficients",
                                        "Print the collective coupling coefficients");
        std::string coef_preset;
        double coef_r = 0.2, coef_theta = 3.14159265358979, coef_phi = 0.785398163397448;
        double coef_gamma = 1.0;
        bool coef_csv = false;
        coef->add_option("--preset", coef_preset, "Configuration preset I or II");
        coef->add_option("--r", coef_r, "Separation R/lambda");
        coef->add_option("--theta", coef_theta, "Polar angle (radians)");
        coef->add_option("--phi", coef_phi, "Azimuthal angle (radians)");
        coef->add_option("--gamma", coef_gamma, "Single-atom decay rate");
        coef->add_flag("--csv", coef_csv, "Machine-readable output");

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e) == 0 ? 0 : kExitUsage;
        }

        if (pres->parsed()) {
            vpair::list_presets(std::cout);
            return 0;
        }
        if (coef->parsed()) {
            std::optional<std::string> p;
            if (!coef_preset.empty()) p = coef_preset;
            return do_coefficients(p, coef_r, coef_theta, coef_phi, coef_gamma,
                                   coef_csv);
        }
        if (!config_path.empty()) flags.config_path = config_path;
        if (!preset_name.empty()) flags.preset = preset_name;
        return do_run(flags);
    } catch (const vpair::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vpair::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const vpair::InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
