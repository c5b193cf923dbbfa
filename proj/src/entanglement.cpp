#include "vpair/entanglement.hpp"

#include "vpair/errors.hpp"
#include "vpair/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vpair {

namespace {

// Allowed 1-based positions for each closed-form zero pattern (upper
// triangle; hermitian mirror implied).
struct Pattern {
    const char* name;
    std::vector<std::pair<int, int>> allowed;
};

const Pattern& pattern13() {
    static const Pattern p{"single-excitation block {3,6,7,8} + rho99", [] {
        std::vector<std::pair<int, int>> a;
        const int blk[] = {3, 6, 7, 8};
        for (int r : blk)
            for (int c : blk) a.emplace_back(r, c);
        a.emplace_back(9, 9);
        return a;
    }()};
    return p;
}

const Pattern& pattern12() {
    static const Pattern p{"blocks {3,7},{6,8} + rho22, rho99",
                           {{2, 2}, {3, 3}, {3, 7}, {7, 3}, {6, 6}, {6, 8},
                            {8, 6}, {7, 7}, {8, 8}, {9, 9}}};
    return p;
}

const Pattern& pattern11() {
    static const Pattern p{"block {3,7} + rho11, rho99",
                           {{1, 1}, {3, 3}, {3, 7}, {7, 3}, {7, 7}, {9, 9}}};
    return p;
}

const Pattern& pattern13t() {
    static const Pattern p{"block {3,7} + rho99",
                           {{3, 3}, {3, 7}, {7, 3}, {7, 7}, {9, 9}}};
    return p;
}

bool matches(const Mat9& rho, const Pattern& p, double tol,
             std::pair<int, int>* offender = nullptr, double* magnitude = nullptr) {
    bool allowed[9][9] = {};
    for (auto [r, c] : p.allowed) allowed[r - 1][c - 1] = true;
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) {
            if (allowed[r][c]) continue;
            const double mag = std::abs(rho(r, c));
            if (mag > tol) {
                if (offender) *offender = {r + 1, c + 1};
                if (magnitude) *magnitude = mag;
                return false;
            }
        }
    return true;
}

void require_pattern(const Mat9& rho, const Pattern& p, double tol,
                     const char* op) {
    std::pair<int, int> off;
    double mag = 0;
    if (!matches(rho, p, tol, &off, &mag)) {
        std::ostringstream os;
        os << op << ": entry (" << off.first << "," << off.second << ") has |value| "
           << mag << " > " << tol << ", outside the " << p.name << " pattern";
        throw InvariantError(os.str());
    }
}

double entry_abs(const Mat9& rho, int r1, int c1) {
    return std::abs(rho(r1 - 1, c1 - 1));
}

double entry_re(const Mat9& rho, int r1, int c1) {
    return rho(r1 - 1, c1 - 1).real();
}

}  // namespace

double negativity(const Mat9& rho) {
    const Vec9d evs = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
    double neg = 0.0;
    for (int i = 0; i < 9; ++i)
        if (evs(i) < 0.0) neg -= evs(i);
    return neg;
}

double negativity(const DensityMatrix& rho) { return negativity(rho.matrix()); }

bool matches_pattern13(const Mat9& rho, double tol) { return matches(rho, pattern13(), tol); }
bool matches_pattern12(const Mat9& rho, double tol) { return matches(rho, pattern12(), tol); }
bool matches_pattern11(const Mat9& rho, double tol) { return matches(rho, pattern11(), tol); }
bool matches_pattern13t(const Mat9& rho, double tol) { return matches(rho, pattern13t(), tol); }

double negativity_form13(const Mat9& rho, double pattern_tol) {
    require_pattern(rho, pattern13(), pattern_tol, "negativity_form13");
    const double c2 = entry_abs(rho, 3, 7) * entry_abs(rho, 3, 7) +
                      entry_abs(rho, 3, 8) * entry_abs(rho, 3, 8) +
                      entry_abs(rho, 6, 7) * entry_abs(rho, 6, 7) +
                      entry_abs(rho, 6, 8) * entry_abs(rho, 6, 8);
    const double r99 = entry_re(rho, 9, 9);
    return 0.5 * (std::sqrt(4.0 * c2 + r99 * r99) - r99);
}

double negativity_form12(const Mat9& rho, double pattern_tol) {
    require_pattern(rho, pattern12(), pattern_tol, "negativity_form12");
    const double c2 = entry_abs(rho, 3, 7) * entry_abs(rho, 3, 7) +
                      entry_abs(rho, 6, 8) * entry_abs(rho, 6, 8);
    const double r99 = entry_re(rho, 9, 9);
    return 0.5 * (std::sqrt(4.0 * c2 + r99 * r99) - r99);
}

double negativity_form11(const Mat9& rho, double pattern_tol) {
    require_pattern(rho, pattern11(), pattern_tol, "negativity_form11");
    const double r11 = entry_re(rho, 1, 1);
    const double r99 = entry_re(rho, 9, 9);
    const double c = entry_abs(rho, 3, 7);
    const double n_tilde =
        0.5 * (std::sqrt((r11 - r99) * (r11 - r99) + 4.0 * c * c) - r11 - r99);
    return std::max(0.0, n_tilde);
}

double negativity_form13t(const Mat9& rho, double pattern_tol) {
    require_pattern(rho, pattern13t(), pattern_tol, "negativity_form13t");
    const double c = entry_abs(rho, 3, 7);
    const double r99 = entry_re(rho, 9, 9);
    return 0.5 * (std::sqrt(4.0 * c * c + r99 * r99) - r99);
}

DickePopulations dicke_populations(const DensityMatrix& rho) {
    auto pop = [&](const Vec9& ket) {
        const Complex v = (ket.adjoint() * rho.matrix() * ket)(0, 0);
        return v.real();
    };
    DickePopulations p;
    p.s12 = pop(dicke_ket(DickeParity::Sym, 1, 2));
    p.s13 = pop(dicke_ket(DickeParity::Sym, 1, 3));
    p.s23 = pop(dicke_ket(DickeParity::Sym, 2, 3));
    p.a12 = pop(dicke_ket(DickeParity::Anti, 1, 2));
    p.a13 = pop(dicke_ket(DickeParity::Anti, 1, 3));
    p.a23 = pop(dicke_ket(DickeParity::Anti, 2, 3));
    return p;
}

CoherenceMagnitudes coherence_magnitudes(const DensityMatrix& rho) {
    CoherenceMagnitudes c;
    c.rho37 = entry_abs(rho.matrix(), 3, 7);
    c.rho38 = entry_abs(rho.matrix(), 3, 8);
    c.rho67 = entry_abs(rho.matrix(), 6, 7);
    c.rho68 = entry_abs(rho.matrix(), 6, 8);
    return c;
}

double excited_population(const DensityMatrix& rho) {
    // <sigma_11^A + sigma_22^A + sigma_11^B + sigma_22^B>: diagonal weights
    // 2,2,1,2,2,1,1,1,0 over the lexicographic basis.
    static const double w[9] = {2, 2, 1, 2, 2, 1, 1, 1, 0};
    double total = 0.0;
    for (int i = 0; i < 9; ++i) total += w[i] * rho.matrix()(i, i).real();
    return total;
}

const std::vector<std::string>& observable_names() {
    static const std::vector<std::string> names = {
        "negativity", "rho37_abs", "rho38_abs", "rho67_abs", "rho68_abs",
        "pop_s12", "pop_s13", "pop_s23", "pop_a12", "pop_a13", "pop_a23",
        "pop_excited_total"};
    return names;
}

bool is_observable_name(const std::string& name) {
    const auto& names = observable_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

double evaluate_observable(const std::string& name, const DensityMatrix& rho) {
    if (name == "negativity") return negativity(rho);
    if (name == "rho37_abs") return coherence_magnitudes(rho).rho37;
    if (name == "rho38_abs") return coherence_magnitudes(rho).rho38;
    if (name == "rho67_abs") return coherence_magnitudes(rho).rho67;
    if (name == "rho68_abs") return coherence_magnitudes(rho).rho68;
    if (name == "pop_excited_total") return excited_population(rho);
    const DickePopulations p = dicke_populations(rho);
    if (name == "pop_s12") return p.s12;
    if (name == "pop_s13") return p.s13;
    if (name == "pop_s23") return p.s23;
    if (name == "pop_a12") return p.a12;
    if (name == "pop_a13") return p.a13;
    if (name == "pop_a23") return p.a23;
    throw std::domain_error("unknown observable '" + name + "'");
}

ObservableSeries extract_observable(const Trajectory& t, const std::string& name) {
    ObservableSeries s;
    s.name = name;
    s.times = t.times;
    s.values.reserve(t.states.size());
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        const double v = evaluate_observable(name, t.states[i]);
        if (!std::isfinite(v))
            throw InvariantError("observable '" + name + "' not finite at t = " +
                                 std::to_string(t.times[i]));
        if (name == "negativity" && (v < -1e-10 || v > 1.0 + 1e-10))
            throw InvariantError("negativity " + std::to_string(v) +
                                 " outside [0, 1] at t = " + std::to_string(t.times[i]));
        s.values.push_back(v);
    }
    return s;
}

std::optional<double> birth_time(const ObservableSeries& series,
                                 double threshold, int hold) {
    const std::size_t n = series.values.size();
    if (hold < 1) throw std::domain_error("hold must be >= 1");
    if (n < 2) return std::nullopt;

    const double dt = series.times[1] - series.times[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double step = series.times[i + 1] - series.times[i];
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(series.times[i + 1])))
            throw std::domain_error("birth_time requires a uniform time grid");
    }

    const auto h = static_cast<std::size_t>(hold);
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
        run = series.values[i] > threshold ? run + 1 : 0;
        if (run == h) {
            const std::size_t start = i + 1 - h;
            // Report the last grid time at or below threshold before the
            // sustained run (0 when entangled from the first sample on).
            return series.times[start == 0 ? 0 : start - 1];
        }
    }
    return std::nullopt;
}

}  // namespace vpair
