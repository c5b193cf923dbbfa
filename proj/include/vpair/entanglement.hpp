#ifndef VPAIR_ENTANGLEMENT_HPP
#define VPAIR_ENTANGLEMENT_HPP

#include "vpair/algebra.hpp"
#include "vpair/dynamics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vpair {

// Entanglement negativity: absolute sum of the negative eigenvalues of
// the partial transpose, equivalently (trace norm - 1)/2.  Transposition
// is taken over subsystem B by convention.
double negativity(const DensityMatrix& rho);
double negativity(const Mat9& rho);

// Closed forms for the zero patterns that the dynamics preserves.  Each
// validates its pattern (entries outside it must stay below `pattern_tol`)
// and throws InvariantError naming the offending entry otherwise.
// Positions are 1-based (row, col) in the lexicographic basis.
//
// form13: single-excitation block {3,6,7,8} plus rho99.
// form12: blocks {3,7} and {6,8} plus rho22, rho99.
// form11: block {3,7} plus rho11, rho99 (thresholded: may be 0 with
//         nonzero rho37).
// form13t: block {3,7} plus rho99; the single-coherence case of form13.
double negativity_form13(const Mat9& rho, double pattern_tol = 1e-8);
double negativity_form12(const Mat9& rho, double pattern_tol = 1e-8);
double negativity_form11(const Mat9& rho, double pattern_tol = 1e-8);
double negativity_form13t(const Mat9& rho, double pattern_tol = 1e-8);

// True when every entry outside the named pattern is below tol.
bool matches_pattern13(const Mat9& rho, double tol = 1e-8);
bool matches_pattern12(const Mat9& rho, double tol = 1e-8);
bool matches_pattern11(const Mat9& rho, double tol = 1e-8);
bool matches_pattern13t(const Mat9& rho, double tol = 1e-8);

struct DickePopulations {
    double s12, s13, s23;  // <s_kl| rho |s_kl>
    double a12, a13, a23;  // <a_kl| rho |a_kl>
};
DickePopulations dicke_populations(const DensityMatrix& rho);

struct CoherenceMagnitudes {
    double rho37, rho38, rho67, rho68;
};
CoherenceMagnitudes coherence_magnitudes(const DensityMatrix& rho);

// Sum of excited-level populations over both atoms; non-increasing along
// every trajectory of the generator.
double excited_population(const DensityMatrix& rho);

struct ObservableSeries {
    std::string name;
    std::vector<double> times;
    std::vector<double> values;
};

// Fixed observable names (also the CSV column headers):
//   negativity, rho37_abs, rho38_abs, rho67_abs, rho68_abs,
//   pop_s12, pop_s13, pop_s23, pop_a12, pop_a13, pop_a23,
//   pop_excited_total
const std::vector<std::string>& observable_names();
bool is_observable_name(const std::string& name);
double evaluate_observable(const std::string& name, const DensityMatrix& rho);
ObservableSeries extract_observable(const Trajectory& t, const std::string& name);

// First appearance of sustained entanglement on a uniform grid: locate
// the earliest run of `hold` consecutive samples above `threshold` and
// report the grid time just before it (time 0 when the run starts at the
// first sample).  With that convention a series that is positive from the
// first positive-time sample has birth time 0; the resolution is one grid
// step.  Empty optional when no such run exists.
std::optional<double> birth_time(const ObservableSeries& series,
                                 double threshold = 1e-7, int hold = 10);

}  // namespace vpair

#endif
