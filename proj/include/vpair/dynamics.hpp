#ifndef VPAIR_DYNAMICS_HPP
#define VPAIR_DYNAMICS_HPP

#include "vpair/algebra.hpp"
#include "vpair/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vpair {

// Rate convention: each dissipator enters as
//     kappa * (2 c rho c'^dag - c'^dag c rho - rho c'^dag c),
// i.e. the rate multiplies the full bracket, so an excited population
// decays as exp(-2*gamma*t).  All generators below use it.

// Spontaneous decay of one atom: jump channels sigma_31 and sigma_32,
// each at rate gamma.
Superoperator build_single_atom_generator(Atom atom, double gamma);

// The interatomic part: collective damping (gamma13_c/gamma23_c),
// dipole-dipole commutator (omega13/omega23) and the two cross-coupling
// blocks (gamma_vc/omega_vc), with the +i sign on the commutators.
Superoperator build_cross_generator(const CouplingCoefficients& c);

struct Liouvillian {
    Superoperator superop;  // 81x81
    CouplingCoefficients coeffs;
};

// L = L^A + L^B + L^AB.
Liouvillian build_liouvillian(const CouplingCoefficients& c);

Mat9 apply_superoperator(const Superoperator& s, const Mat9& m);

// One-step propagator exp(L*dt).  Computed once per (L, dt); stepping a
// state afterwards costs a single 81x81 mat-vec.
struct Propagator {
    Superoperator matrix;
    double dt;
};
Propagator make_propagator(const Liouvillian& l, double dt);

struct TrajectoryMeta {
    std::optional<Geometry> geometry;
    CouplingCoefficients coeffs{};
    std::string initial_state;
    double t_max = 0;
    double dt = 0;
};

struct Trajectory {
    std::vector<double> times;  // i * dt, starting at 0
    std::vector<DensityMatrix> states;
    TrajectoryMeta meta;
};

// States on the grid {0, dt, ..., n*dt} with n = round(t_max/dt).  Every
// stored state is re-validated; a violation beyond the DensityMatrix
// tolerances aborts with an IntegrationError naming step and invariant.
Trajectory evolve(const Liouvillian& l, const DensityMatrix& rho0,
                  double t_max, double dt);
Trajectory evolve_with(const Propagator& p, const DensityMatrix& rho0,
                       std::size_t n_steps);

struct AsymptoticOptions {
    // Modes with decay rate |Re(lambda)| below this are treated as
    // stationary.  Separates the near-degenerate slow cluster that forms
    // at small separations from the O(gamma) bulk.
    double rate_cutoff = 1e-3;
};

// t -> infinity limit by spectral projection of rho0 onto the slow
// subspace of L along its decaying complement.
DensityMatrix asymptotic_state(const Liouvillian& l, const DensityMatrix& rho0,
                               const AsymptoticOptions& opts = {});

// Cross-check route: repeated application of exp(L*step) until two
// consecutive states differ by less than `tol` elementwise.  Throws
// InvariantError carrying the last residual when max_time is exhausted
// first (which happens when a metastable plateau decays too slowly).
DensityMatrix asymptotic_state_by_integration(const Liouvillian& l,
                                              const DensityMatrix& rho0,
                                              double step = 1.0,
                                              double max_time = 1e4,
                                              double tol = 1e-10);

}  // namespace vpair

#endif
