#include "vpair/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace vpair {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Geometry::Geometry(double r_over_lambda_, double theta_, double phi_, double gamma_)
    : r_over_lambda(r_over_lambda_), theta(theta_), phi(phi_), gamma(gamma_) {
    // Configs routinely carry decimal renderings of pi (3.1416, 6.2832);
    // snap angles within 1e-4 of a domain boundary onto it.
    if (theta < 0.0 && theta >= -1e-4) theta = 0.0;
    if (theta > std::numbers::pi && theta <= std::numbers::pi + 1e-4)
        theta = std::numbers::pi;
    if (phi < 0.0 && phi >= -1e-4) phi = 0.0;
    if (phi >= kTwoPi && phi < kTwoPi + 1e-4) phi = 0.0;
    std::ostringstream bad;
    if (!(r_over_lambda >= kMinSeparation))
        bad << "r_over_lambda = " << r_over_lambda << " must be >= "
            << kMinSeparation << " (the R -> 0 limit is singular); ";
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        bad << "theta = " << theta << " outside [0, pi]; ";
    if (!(phi >= 0.0 && phi < kTwoPi))
        bad << "phi = " << phi << " outside [0, 2*pi); ";
    if (!(gamma > 0.0))
        bad << "gamma = " << gamma << " must be > 0; ";
    const std::string msg = bad.str();
    if (!msg.empty()) throw std::domain_error("invalid geometry: " + msg);
}

Geometry configuration_preset(Configuration which, double r_over_lambda,
                              double gamma) {
    const double theta = which == Configuration::I ? std::numbers::pi
                                                   : std::numbers::pi / 2.0;
    return Geometry(r_over_lambda, theta, std::numbers::pi / 4.0, gamma);
}

std::string to_string(Configuration which) {
    return which == Configuration::I ? "I" : "II";
}

RadialFactors radial_factors(double xi) {
    if (!(xi > 0.0))
        throw std::domain_error("radial_factors: xi must be > 0, got " +
                                std::to_string(xi));
    RadialFactors f;
    f.xi = xi;
    if (xi < 1e-2) {
        // Direct evaluation of p_i/q_i cancels three O(1/xi^2) terms down
        // to O(1); switch to the series to keep full precision.
        const double x2 = xi * xi;
        f.p_i = 2.0 / 3.0 - (2.0 / 15.0) * x2 + x2 * x2 / 140.0;
        f.q_i = -x2 / 15.0 + x2 * x2 / 210.0;
        f.p_r = -1.0 / (x2 * xi) + 0.5 / xi - (3.0 / 8.0) * xi +
                (5.0 / 144.0) * x2 * xi;
        f.q_r = -3.0 / (x2 * xi) - 0.5 / xi - xi / 8.0 + x2 * xi / 48.0;
        return f;
    }
    const double s = std::sin(xi), c = std::cos(xi);
    const double x2 = xi * xi, x3 = x2 * xi;
    f.p_i = s / xi + c / x2 - s / x3;
    f.q_i = s / xi + 3.0 * c / x2 - 3.0 * s / x3;
    f.p_r = c / xi - s / x2 - c / x3;
    f.q_r = c / xi - 3.0 * s / x2 - 3.0 * c / x3;
    return f;
}

CouplingCoefficients coupling_coefficients(const Geometry& g) {
    const RadialFactors f = radial_factors(kTwoPi * g.r_over_lambda);
    // Angles like theta = pi are meant exactly; flush the ~1e-16 residue
    // of sin/cos there so coefficients that vanish identically are 0.
    auto snap = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
    const double st = snap(std::sin(g.theta));
    const double st2 = st * st;
    const double cp = snap(std::cos(g.phi)), sp = snap(std::sin(g.phi));
    const double pref = 1.5 * g.gamma;

    CouplingCoefficients c;
    c.gamma = g.gamma;
    c.gamma13_c = pref * (f.p_i - st2 * cp * cp * f.q_i);
    c.omega13 = pref * (f.p_r - st2 * cp * cp * f.q_r);
    c.gamma23_c = pref * (f.p_i - st2 * sp * sp * f.q_i);
    c.omega23 = pref * (f.p_r - st2 * sp * sp * f.q_r);
    c.gamma_vc = -pref * st2 * sp * cp * f.q_i;
    c.omega_vc = -pref * st2 * sp * cp * f.q_r;

    // Complete positivity requires the channel dissipation matrix to be
    // PSD.  The closed forms guarantee it, so a violation here flags a
    // coefficient bug rather than bad input: warn, don't throw.
    const double min_eig = dissipation_matrix_min_eigenvalue(c);
    if (min_eig < -1e-12 * g.gamma) {
        std::cerr << "vpair: warning: dissipation matrix not PSD (min eigenvalue "
                  << min_eig << ") for r/lambda = " << g.r_over_lambda
                  << ", theta = " << g.theta << ", phi = " << g.phi << "\n";
    }
    if (std::abs(c.gamma13_c) > g.gamma + 1e-12 ||
        std::abs(c.gamma23_c) > g.gamma + 1e-12) {
        std::cerr << "vpair: warning: collective damping outside [-gamma, gamma]"
                  << " (gamma13_c = " << c.gamma13_c << ", gamma23_c = "
                  << c.gamma23_c << ")\n";
    }
    return c;
}

double dissipation_matrix_min_eigenvalue(const CouplingCoefficients& c) {
    // Channel order {(A,1),(B,1),(A,2),(B,2)}; gamma on the diagonal,
    // collective damping within a transition, cross coupling across.
    Eigen::Matrix4d a;
    a << c.gamma, c.gamma13_c, 0.0, c.gamma_vc,
         c.gamma13_c, c.gamma, c.gamma_vc, 0.0,
         0.0, c.gamma_vc, c.gamma, c.gamma23_c,
         c.gamma_vc, 0.0, c.gamma23_c, c.gamma;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace vpair
