#ifndef VPAIR_GEOMETRY_HPP
#define VPAIR_GEOMETRY_HPP

#include <string>

namespace vpair {

// Separations below this are outside numerical scope: the coherent
// couplings grow like 1/xi^3 and the strict R -> 0 limit is singular.
constexpr double kMinSeparation = 1e-4;

// Relative placement of the two atoms plus the single-atom decay rate.
// Only the ratio R/lambda enters the coupling formulas, so R and lambda
// are never stored separately.  Angles in radians; gamma defaults to 1 so
// times are the dimensionless gamma*t and all rates come out in units of
// gamma.
struct Geometry {
    Geometry(double r_over_lambda, double theta, double phi, double gamma = 1.0);

    double r_over_lambda;
    double theta;  // angle with the z axis, [0, pi]
    double phi;    // angle with the x axis, [0, 2*pi)
    double gamma;
};

enum class Configuration { I, II };

// Configuration I: atoms along the z axis (theta = pi, phi = pi/4); the
// cross-coupling coefficients vanish.  Configuration II: atoms in the xy
// plane (theta = pi/2, phi = pi/4); they do not.
Geometry configuration_preset(Configuration which, double r_over_lambda,
                              double gamma = 1.0);

// The four radial interference functions of the field propagator at
// dimensionless separation xi = 2*pi*R/lambda.
struct RadialFactors {
    double p_i;
    double q_i;
    double p_r;
    double q_r;
    double xi;
};

RadialFactors radial_factors(double xi);

// Collective coupling constants.  gamma13_c/gamma23_c are the collective
// damping rates, omega13/omega23 the dipole-dipole shifts, gamma_vc and
// omega_vc the cross couplings between the two orthogonal transition
// dipoles.  All in units of gamma when gamma = 1.
struct CouplingCoefficients {
    double gamma;
    double gamma13_c;
    double gamma23_c;
    double gamma_vc;
    double omega13;
    double omega23;
    double omega_vc;

    CouplingCoefficients with_vc_zeroed() const {
        CouplingCoefficients c = *this;
        c.gamma_vc = 0.0;
        c.omega_vc = 0.0;
        return c;
    }
};

CouplingCoefficients coupling_coefficients(const Geometry& g);

// Smallest eigenvalue of the 4x4 dissipation matrix over the jump
// channels {(A,1),(B,1),(A,2),(B,2)}.  Nonnegative within tolerance is
// required for complete positivity of the generator;
// coupling_coefficients() warns on stderr when that fails.
double dissipation_matrix_min_eigenvalue(const CouplingCoefficients& c);

std::string to_string(Configuration which);

}  // namespace vpair

#endif
