#ifndef VPAIR_SCENARIO_HPP
#define VPAIR_SCENARIO_HPP

#include "vpair/algebra.hpp"
#include "vpair/geometry.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vpair {

// One simulation run (or a phi sweep of runs), fully resolved.  Mirrors
// the flat key = value config format; every field has a config key and a
// CLI flag of the same name.
struct ScenarioConfig {
    double r_over_lambda = 0.2;
    double theta = 0;  // set via preset or explicitly
    double phi = 0;
    double gamma = 1.0;
    bool zero_vc = false;  // drop the cross-coupling terms after computing them
    std::string initial_state = "product:1:3";  // StateLabel or path to a matrix file
    double t_max = 10.0;
    double dt = 0.01;
    std::vector<std::string> observables;  // empty = all observable_names()
    std::optional<std::string> sweep_param;  // only "phi" is supported
    std::vector<double> sweep_values;
    std::string output = "trajectory.csv";
    int parallel = 1;

    Geometry geometry() const;
};

// An ordered key = value document ('#' comments, blank lines ignored)
// with an optional preset reference pulled out.  Entries listed after the
// preset key override the preset's values.
struct ConfigDocument {
    std::optional<std::string> preset;
    std::vector<std::pair<std::string, std::string>> entries;
};

ConfigDocument parse_config_document(const std::string& text,
                                     const std::string& origin);
ConfigDocument load_config_document(const std::string& path);
void apply_config_key(ScenarioConfig& cfg, const std::string& key,
                      const std::string& value, const std::string& origin);

// A named figure preset expanding to one or more fully resolved configs.
// Multi-run presets tag each run with a variant suffix; the run's output
// name carries it.
struct PresetRun {
    std::string variant;  // "" for single-run presets
    ScenarioConfig config;
};
struct Preset {
    std::string name;
    std::string title;
    std::vector<PresetRun> runs;
};

const std::vector<Preset>& presets();                 // fig2 .. fig15
const Preset& find_preset(const std::string& name);   // throws ConfigError
void list_presets(std::ostream& os);

// Expand the document into concrete runs: preset runs (or one default
// run) with the document's entries applied on top of each.
std::vector<PresetRun> resolve_runs(const ConfigDocument& doc);

// Execute one config (expanding a phi sweep if present) and write CSV.
// Returns the paths written, trajectory files first, sweep summary last.
std::vector<std::string> run_scenario(const ScenarioConfig& cfg);

// Coefficient table for a geometry; machine readable when csv is true.
void print_coefficients(const Geometry& g, bool csv, std::ostream& os);

// Load a 9x9 density matrix from a text file: 9 lines of 9 whitespace
// separated entries in a+bi form; validated on load.
DensityMatrix load_state_file(const std::string& path);

}  // namespace vpair

#endif
