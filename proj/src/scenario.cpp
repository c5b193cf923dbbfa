#include "vpair/scenario.hpp"

#include "vpair/dynamics.hpp"
#include "vpair/entanglement.hpp"
#include "vpair/errors.hpp"
#include "vpair/format.hpp"
#include "vpair/states.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

namespace vpair {

namespace {

constexpr const char* kToolVersion = "vpair 1.0.0";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& v, const std::string& key,
                    const std::string& origin) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(origin + ": key '" + key + "': expected number, got '" +
                          v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& key,
                const std::string& origin) {
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw ConfigError(origin + ": key '" + key + "': expected boolean, got '" +
                      v + "'");
}

bool looks_like_state_label(const std::string& s) {
    const auto head = s.substr(0, s.find(':'));
    return head == "product" || head == "bell" || head == "dicke" ||
           head == "superposition" || head == "asymptotic";
}

DensityMatrix resolve_initial_state(const std::string& state_ref) {
    if (looks_like_state_label(state_ref))
        return StateLabel::parse(state_ref).make();
    return load_state_file(state_ref);
}

std::string output_with_suffix(const std::string& output, const std::string& tag) {
    const auto dot = output.rfind('.');
    if (dot == std::string::npos || output.find('/', dot) != std::string::npos)
        return output + "_" + tag;
    return output.substr(0, dot) + "_" + tag + output.substr(dot);
}

std::string observables_csv(const std::vector<std::string>& obs) {
    std::string out;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (i) out += ",";
        out += obs[i];
    }
    return out;
}

// Metadata block: resolved config keys as '# key = value' (stripping the
// leading '# ' yields a loadable config file), then informational lines
// behind a second '#' so they stay comments after the strip.
void write_metadata(std::ostream& os, const ScenarioConfig& cfg,
                    const CouplingCoefficients& c) {
    os << "# r_over_lambda = " << format_double_exact(cfg.r_over_lambda) << "\n";
    os << "# theta = " << format_double_exact(cfg.theta) << "\n";
    os << "# phi = " << format_double_exact(cfg.phi) << "\n";
    os << "# gamma = " << format_double_exact(cfg.gamma) << "\n";
    os << "# zero_vc = " << (cfg.zero_vc ? "true" : "false") << "\n";
    os << "# initial_state = " << cfg.initial_state << "\n";
    os << "# t_max = " << format_double_exact(cfg.t_max) << "\n";
    os << "# dt = " << format_double_exact(cfg.dt) << "\n";
    os << "# observables = " << observables_csv(cfg.observables) << "\n";
    if (cfg.sweep_param) {
        os << "# sweep_param = " << *cfg.sweep_param << "\n";
        std::string vals;
        for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
            if (i) vals += ",";
            vals += format_double_exact(cfg.sweep_values[i]);
        }
        os << "# sweep_values = " << vals << "\n";
    }
    os << "# # coefficients: xi = " << format_double(2.0 * std::numbers::pi * cfg.r_over_lambda)
       << " gamma13_c = " << format_double(c.gamma13_c)
       << " gamma23_c = " << format_double(c.gamma23_c)
       << " gamma_vc = " << format_double(c.gamma_vc)
       << " omega13 = " << format_double(c.omega13)
       << " omega23 = " << format_double(c.omega23)
       << " omega_vc = " << format_double(c.omega_vc) << "\n";
    os << "# # " << kToolVersion << "\n";
}

void write_trajectory_csv(const std::string& path, const ScenarioConfig& cfg,
                          const CouplingCoefficients& c,
                          const std::vector<ObservableSeries>& series) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open output file '" + path + "'");
    write_metadata(os, cfg, c);
    os << "t";
    for (const auto& s : series) os << "," << s.name;
    os << "\n";
    const std::size_t n = series.empty() ? 0 : series.front().times.size();
    for (std::size_t i = 0; i < n; ++i) {
        os << format_double(series.front().times[i]);
        for (const auto& s : series) os << "," << format_double(s.values[i]);
        os << "\n";
    }
    if (!os) throw IoError("error writing '" + path + "'");
}

struct SweepRow {
    double value;
    std::optional<double> birth;
    double peak;
};

std::vector<std::string> run_sweep(const ScenarioConfig& cfg,
                                   const CouplingCoefficients& coeffs,
                                   const Liouvillian& liouv) {
    if (*cfg.sweep_param != "phi")
        throw ConfigError("unsupported sweep parameter '" + *cfg.sweep_param +
                          "' (only 'phi' is available)");
    if (cfg.sweep_values.empty())
        throw ConfigError("sweep_values must be non-empty");
    for (double v : cfg.sweep_values)
        if (!(v >= 0.0 && v <= std::numbers::pi / 2.0))
            throw ConfigError("sweep value " + format_double(v) +
                              " outside [0, pi/2]");

    const Propagator prop = make_propagator(liouv, cfg.dt);
    const auto n_steps = static_cast<std::size_t>(std::llround(cfg.t_max / cfg.dt));

    const std::size_t n = cfg.sweep_values.size();
    std::vector<std::string> paths(n);
    std::vector<SweepRow> rows(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                const double value = cfg.sweep_values[i];
                ScenarioConfig sub = cfg;
                sub.sweep_param.reset();
                sub.sweep_values.clear();
                StateLabel lab{};
                lab.kind = StateLabel::Kind::Superposition;
                lab.phi = value;
                sub.initial_state = lab.str();
                sub.output = output_with_suffix(cfg.output, "phi" + format_double(value));

                Trajectory traj = evolve_with(prop, lab.make(), n_steps);
                traj.meta.coeffs = coeffs;
                std::vector<ObservableSeries> series;
                for (const auto& name : sub.observables)
                    series.push_back(extract_observable(traj, name));
                write_trajectory_csv(sub.output, sub, coeffs, series);
                paths[i] = sub.output;

                const ObservableSeries neg = extract_observable(traj, "negativity");
                rows[i] = SweepRow{value, birth_time(neg),
                                   *std::max_element(neg.values.begin(), neg.values.end())};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int n_threads = std::max(1, std::min<int>(cfg.parallel, static_cast<int>(n)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    const std::string summary_path = output_with_suffix(cfg.output, "summary");
    std::ofstream os(summary_path, std::ios::binary);
    if (!os) throw IoError("cannot open output file '" + summary_path + "'");
    write_metadata(os, cfg, coeffs);
    os << "phi,birth_time,peak_negativity\n";
    for (const auto& row : rows) {
        os << format_double(row.value) << ","
           << (row.birth ? format_double(*row.birth) : "nan") << ","
           << format_double(row.peak) << "\n";
    }
    if (!os) throw IoError("error writing '" + summary_path + "'");

    paths.push_back(summary_path);
    return paths;
}

}  // namespace

Geometry ScenarioConfig::geometry() const {
    try {
        return Geometry(r_over_lambda, theta, phi, gamma);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
}

ConfigDocument parse_config_document(const std::string& text,
                                     const std::string& origin) {
    ConfigDocument doc;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (key == "preset")
            doc.preset = value;
        else
            doc.entries.emplace_back(key, value);
    }
    return doc;
}

ConfigDocument load_config_document(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_document(buf.str(), path);
}

void apply_config_key(ScenarioConfig& cfg, const std::string& key,
                      const std::string& value, const std::string& origin) {
    if (key == "r_over_lambda") {
        cfg.r_over_lambda = parse_double(value, key, origin);
    } else if (key == "theta") {
        cfg.theta = parse_double(value, key, origin);
    } else if (key == "phi") {
        cfg.phi = parse_double(value, key, origin);
    } else if (key == "gamma") {
        cfg.gamma = parse_double(value, key, origin);
    } else if (key == "zero_vc") {
        cfg.zero_vc = parse_bool(value, key, origin);
    } else if (key == "initial_state") {
        cfg.initial_state = value;
    } else if (key == "t_max") {
        cfg.t_max = parse_double(value, key, origin);
    } else if (key == "dt") {
        cfg.dt = parse_double(value, key, origin);
    } else if (key == "observables") {
        cfg.observables.clear();
        for (const auto& part : split(value, ',')) {
            const std::string name = trim(part);
            if (!is_observable_name(name))
                throw ConfigError(origin + ": unknown observable '" + name + "'");
            cfg.observables.push_back(name);
        }
    } else if (key == "sweep_param") {
        cfg.sweep_param = value;
    } else if (key == "sweep_values") {
        cfg.sweep_values.clear();
        for (const auto& part : split(value, ','))
            cfg.sweep_values.push_back(parse_double(trim(part), key, origin));
    } else if (key == "output") {
        cfg.output = value;
    } else if (key == "parallel") {
        cfg.parallel = static_cast<int>(parse_double(value, key, origin));
        if (cfg.parallel < 1)
            throw ConfigError(origin + ": parallel must be >= 1");
    } else {
        throw ConfigError(origin + ": unknown config key '" + key + "'");
    }
}

std::vector<PresetRun> resolve_runs(const ConfigDocument& doc) {
    std::vector<PresetRun> runs;
    if (doc.preset) {
        runs = find_preset(*doc.preset).runs;
    } else {
        PresetRun run;
        run.config.theta = std::numbers::pi;  // Configuration I placement
        run.config.phi = std::numbers::pi / 4.0;
        runs.push_back(run);
    }
    bool output_overridden = false;
    for (auto& run : runs)
        for (const auto& [key, value] : doc.entries) {
            apply_config_key(run.config, key, value, "config");
            if (key == "output") output_overridden = true;
        }
    // A user-supplied output on a multi-run preset is a stem; keep the
    // variant tags so the runs do not overwrite each other.
    if (output_overridden && runs.size() > 1)
        for (auto& run : runs)
            run.config.output = output_with_suffix(run.config.output, run.variant);
    for (auto& run : runs)
        if (run.config.observables.empty()) run.config.observables = observable_names();
    return runs;
}

std::vector<std::string> run_scenario(const ScenarioConfig& cfg_in) {
    ScenarioConfig cfg = cfg_in;
    if (cfg.observables.empty()) cfg.observables = observable_names();
    for (const auto& name : cfg.observables)
        if (!is_observable_name(name))
            throw ConfigError("unknown observable '" + name + "'");
    if (!(cfg.dt > 0.0) || !(cfg.t_max > 0.0))
        throw ConfigError("t_max and dt must be positive");

    const Geometry g = cfg.geometry();
    CouplingCoefficients coeffs = coupling_coefficients(g);
    if (cfg.zero_vc) coeffs = coeffs.with_vc_zeroed();
    const Liouvillian liouv = build_liouvillian(coeffs);

    if (cfg.sweep_param) return run_sweep(cfg, coeffs, liouv);

    const DensityMatrix rho0 = resolve_initial_state(cfg.initial_state);
    Trajectory traj = evolve(liouv, rho0, cfg.t_max, cfg.dt);
    traj.meta.geometry = g;
    traj.meta.initial_state = cfg.initial_state;

    std::vector<ObservableSeries> series;
    for (const auto& name : cfg.observables)
        series.push_back(extract_observable(traj, name));
    write_trajectory_csv(cfg.output, cfg, coeffs, series);
    return {cfg.output};
}

namespace {

ScenarioConfig base_config(Configuration which, double r, const std::string& state,
                           const std::string& output) {
    ScenarioConfig cfg;
    cfg.r_over_lambda = r;
    cfg.theta = which == Configuration::I ? std::numbers::pi : std::numbers::pi / 2.0;
    cfg.phi = std::numbers::pi / 4.0;
    cfg.initial_state = state;
    cfg.output = output;
    return cfg;
}

std::vector<Preset> make_presets() {
    const double pi = std::numbers::pi;
    std::vector<Preset> all;

    auto single = [&](const std::string& name, const std::string& title,
                      Configuration conf, double r, const std::string& state,
                      std::vector<std::string> obs) {
        Preset p{name, title, {}};
        ScenarioConfig cfg = base_config(conf, r, state, name + ".csv");
        cfg.observables = std::move(obs);
        p.runs.push_back({"", cfg});
        all.push_back(std::move(p));
    };
    auto pair = [&](const std::string& name, const std::string& title,
                    std::vector<std::tuple<std::string, Configuration, std::string>> variants,
                    double r, std::vector<std::string> obs) {
        Preset p{name, title, {}};
        for (auto& [tag, conf, state] : variants) {
            ScenarioConfig cfg =
                base_config(conf, r, state, name + "_" + tag + ".csv");
            cfg.observables = obs;
            p.runs.push_back({tag, cfg});
        }
        all.push_back(std::move(p));
    };

    single("fig2", "|rho37| for product:1:3, configuration I, R/lambda = 0.2",
           Configuration::I, 0.2, "product:1:3", {"rho37_abs"});
    single("fig3",
           "|rho38|, |rho67|, |rho68| for product:1:3, configuration II, R/lambda = 0.2",
           Configuration::II, 0.2, "product:1:3",
           {"rho38_abs", "rho67_abs", "rho68_abs"});
    pair("fig4", "negativity of product:1:3 in configurations I and II, R/lambda = 0.2",
         {{"I", Configuration::I, "product:1:3"},
          {"II", Configuration::II, "product:1:3"}},
         0.2, {"negativity"});
    pair("fig5", "negativity of product:1:2 in configurations I and II, R/lambda = 0.2",
         {{"I", Configuration::I, "product:1:2"},
          {"II", Configuration::II, "product:1:2"}},
         0.2, {"negativity"});
    single("fig6",
           "delayed sudden birth: negativity of product:1:1, configuration I, R/lambda = 0.2",
           Configuration::I, 0.2, "product:1:1", {"negativity"});

    {
        Preset p{"fig7",
                 "negativity of the superposition family for several angles, "
                 "configuration I, R/lambda = 0.2",
                 {}};
        ScenarioConfig cfg = base_config(Configuration::I, 0.2,
                                         "superposition:0", "fig7.csv");
        cfg.observables = {"negativity"};
        cfg.sweep_param = "phi";
        cfg.sweep_values = {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, pi / 2.0};
        p.runs.push_back({"", cfg});
        all.push_back(std::move(p));
    }
    {
        Preset p{"fig8",
                 "entanglement birth time vs superposition angle (33-point grid), "
                 "configuration I, R/lambda = 0.2",
                 {}};
        ScenarioConfig cfg = base_config(Configuration::I, 0.2,
                                         "superposition:0", "fig8.csv");
        cfg.observables = {"negativity"};
        cfg.sweep_param = "phi";
        for (int i = 0; i < 33; ++i)
            cfg.sweep_values.push_back(pi / 2.0 * static_cast<double>(i) / 32.0);
        p.runs.push_back({"", cfg});
        all.push_back(std::move(p));
    }

    single("fig9",
           "no delayed birth with cross coupling: negativity of product:1:1, "
           "configuration II, R/lambda = 0.2",
           Configuration::II, 0.2, "product:1:1", {"negativity"});
    pair("fig10", "|rho37| for the symmetric and antisymmetric Dicke states, "
                  "configuration I, R/lambda = 0.2",
         {{"s13", Configuration::I, "dicke:sym:1:3"},
          {"a13", Configuration::I, "dicke:anti:1:3"}},
         0.2, {"rho37_abs"});
    pair("fig11", "disentanglement of dicke:sym:1:3 vs dicke:anti:1:3, "
                  "configuration I, R/lambda = 0.2",
         {{"s13", Configuration::I, "dicke:sym:1:3"},
          {"a13", Configuration::I, "dicke:anti:1:3"}},
         0.2, {"negativity"});
    pair("fig12", "disentanglement of dicke:anti:1:3 with (configuration II) and "
                  "without (configuration I) cross coupling, R/lambda = 0.2",
         {{"vc", Configuration::II, "dicke:anti:1:3"},
          {"novc", Configuration::I, "dicke:anti:1:3"}},
         0.2, {"negativity"});
    single("fig13",
           "antisymmetric/symmetric Dicke populations for bell:2, configuration I, "
           "R/lambda = 0.08",
           Configuration::I, 0.08, "bell:2", {"pop_a13", "pop_s13", "pop_a12"});
    pair("fig14", "disentanglement of bell:1 vs bell:2, configuration I, R/lambda = 0.08",
         {{"bell1", Configuration::I, "bell:1"},
          {"bell2", Configuration::I, "bell:2"}},
         0.08, {"negativity"});
    pair("fig15", "disentanglement of bell:2 with (configuration II) and without "
                  "(configuration I) cross coupling, R/lambda = 0.08",
         {{"vc", Configuration::II, "bell:2"},
          {"novc", Configuration::I, "bell:2"}},
         0.08, {"negativity"});

    return all;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = make_presets();
    return all;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p;
    throw ConfigError("unknown preset '" + name + "' (see the presets command)");
}

void list_presets(std::ostream& os) {
    for (const auto& p : presets()) {
        os << p.name << "\n  " << p.title << "\n";
        for (const auto& run : p.runs) {
            const auto& c = run.config;
            os << "    ";
            if (!run.variant.empty()) os << run.variant << ": ";
            os << "r_over_lambda = " << format_double(c.r_over_lambda)
               << ", theta = " << format_double(c.theta)
               << ", phi = " << format_double(c.phi);
            if (c.sweep_param)
                os << ", sweep " << *c.sweep_param << " (" << c.sweep_values.size()
                   << " values)";
            else
                os << ", initial_state = " << c.initial_state;
            os << ", t_max = " << format_double(c.t_max)
               << ", dt = " << format_double(c.dt)
               << ", observables = " << observables_csv(c.observables)
               << ", output = " << c.output << "\n";
        }
    }
}

void print_coefficients(const Geometry& g, bool csv, std::ostream& os) {
    const CouplingCoefficients c = coupling_coefficients(g);
    const double xi = 2.0 * std::numbers::pi * g.r_over_lambda;
    if (csv) {
        os << "xi,gamma,gamma13_c,gamma23_c,gamma_vc,omega13,omega23,omega_vc\n";
        os << format_double(xi) << "," << format_double(c.gamma) << ","
           << format_double(c.gamma13_c) << "," << format_double(c.gamma23_c) << ","
           << format_double(c.gamma_vc) << "," << format_double(c.omega13) << ","
           << format_double(c.omega23) << "," << format_double(c.omega_vc) << "\n";
        return;
    }
    os << "xi         = " << format_double(xi) << "\n"
       << "gamma      = " << format_double(c.gamma) << "\n"
       << "gamma13_c  = " << format_double(c.gamma13_c) << "\n"
       << "gamma23_c  = " << format_double(c.gamma23_c) << "\n"
       << "gamma_vc   = " << format_double(c.gamma_vc) << "\n"
       << "omega13    = " << format_double(c.omega13) << "\n"
       << "omega23    = " << format_double(c.omega23) << "\n"
       << "omega_vc   = " << format_double(c.omega_vc) << "\n";
}

namespace {

Complex parse_complex_entry(const std::string& token, const std::string& where) {
    const std::string s = trim(token);
    if (s.empty()) throw IoError(where + ": empty entry");
    auto bad = [&]() {
        return IoError(where + ": cannot parse complex entry '" + s +
                       "' (expected a+bi form)");
    };
    // Locate the sign separating real and imaginary parts: not at index 0
    // and not part of an exponent.
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            sep = i;  // keep the last one; exponents inside imag part skip it
    }
    try {
        if (s.back() == 'i' || s.back() == 'I') {
            if (sep == std::string::npos) {
                // pure imaginary "bi"
                const std::string im = s.substr(0, s.size() - 1);
                return Complex(0.0, im.empty() || im == "+" ? 1.0
                                    : im == "-" ? -1.0 : std::stod(im));
            }
            const std::string re = s.substr(0, sep);
            std::string im = s.substr(sep, s.size() - sep - 1);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            std::size_t p1 = 0, p2 = 0;
            const double rv = std::stod(re, &p1);
            const double iv = std::stod(im, &p2);
            if (p1 != re.size() || p2 != im.size()) throw bad();
            return Complex(rv, iv);
        }
        // pure real
        std::size_t pos = 0;
        const double rv = std::stod(s, &pos);
        if (pos != s.size()) throw bad();
        return Complex(rv, 0.0);
    } catch (const std::exception&) {
        throw bad();
    }
}

}  // namespace

DensityMatrix load_state_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read state file '" + path + "'");
    Mat9 m;
    std::string line;
    int row = 0;
    int lineno = 0;
    while (row < 9 && std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string token;
        int col = 0;
        while (ls >> token) {
            if (col >= 9)
                throw IoError(path + ":" + std::to_string(lineno) +
                              ": more than 9 entries in a row");
            m(row, col) = parse_complex_entry(
                token, path + ":" + std::to_string(lineno));
            ++col;
        }
        if (col != 9)
            throw IoError(path + ":" + std::to_string(lineno) + ": expected 9 entries, got " +
                          std::to_string(col));
        ++row;
    }
    if (row != 9)
        throw IoError(path + ": expected 9 matrix rows, got " + std::to_string(row));
    return DensityMatrix::validated(m);
}

}  // namespace vpair
