#ifndef VPAIR_TEST_SUPPORT_HPP
#define VPAIR_TEST_SUPPORT_HPP

#include "vpair/algebra.hpp"
#include "vpair/geometry.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace vpair::test {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline Complex random_complex(double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng()), u(rng())};
}

inline Mat9 random_matrix() {
    Mat9 m;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) m(i, j) = random_complex();
    return m;
}

inline Mat9 random_hermitian() {
    const Mat9 m = random_matrix();
    return 0.5 * (m + m.adjoint());
}

// Ginibre construction: G G^dag normalized to unit trace.
inline Mat9 random_density() {
    const Mat9 g = random_matrix();
    Mat9 rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

inline Mat3 random_density3() {
    Mat3 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = random_complex();
    Mat3 rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

// Random PSD block of size n embedded at the given (0-based) positions,
// plus the listed diagonal weights; trace normalized.
inline Mat9 random_patterned(const std::vector<int>& block,
                             const std::vector<int>& lone_diagonals) {
    const int n = static_cast<int>(block.size());
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = random_complex();
    Eigen::MatrixXcd b = g * g.adjoint();

    Mat9 rho = Mat9::Zero();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rho(block[i], block[j]) = b(i, j);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int d : lone_diagonals) rho(d, d) = u(rng());
    rho /= rho.trace();
    return rho;
}

// Form (3,6,7,8)-block + rho99.
inline Mat9 random_pattern13_state() {
    return random_patterned({2, 5, 6, 7}, {8});
}
// Blocks {3,7} and {6,8} + rho22 + rho99.
inline Mat9 random_pattern12_state() {
    const Mat9 a = random_patterned({2, 6}, {1});
    const Mat9 b = random_patterned({5, 7}, {8});
    Mat9 rho = a + b;
    rho /= rho.trace();
    return rho;
}
// Block {3,7} + rho11 + rho99.
inline Mat9 random_pattern11_state() {
    return random_patterned({2, 6}, {0, 8});
}
// Block {3,7} + rho99.
inline Mat9 random_pattern13t_state() {
    return random_patterned({2, 6}, {8});
}

// Single V-type atom under its own decay (rate convention: populations
// fall as exp(-2*gamma*t), excited-ground coherences as exp(-gamma*t)).
inline Mat3 single_atom_channel(const Mat3& rho0, double gamma, double t) {
    const double p = std::exp(-2.0 * gamma * t);
    const double c = std::exp(-gamma * t);
    Mat3 rho = Mat3::Zero();
    rho(0, 0) = p * rho0(0, 0);
    rho(1, 1) = p * rho0(1, 1);
    rho(0, 1) = p * rho0(0, 1);
    rho(1, 0) = p * rho0(1, 0);
    rho(0, 2) = c * rho0(0, 2);
    rho(2, 0) = c * rho0(2, 0);
    rho(1, 2) = c * rho0(1, 2);
    rho(2, 1) = c * rho0(2, 1);
    rho(2, 2) = rho0(2, 2) + (1.0 - p) * (rho0(0, 0) + rho0(1, 1)).real();
    return rho;
}

inline Mat3 partial_trace_B(const Mat9& rho) {
    Mat3 out = Mat3::Zero();
    for (int j = 0; j < 3; ++j)
        for (int jp = 0; jp < 3; ++jp)
            for (int k = 0; k < 3; ++k) out(j, jp) += rho(3 * j + k, 3 * jp + k);
    return out;
}

inline Mat3 partial_trace_A(const Mat9& rho) {
    Mat3 out = Mat3::Zero();
    for (int k = 0; k < 3; ++k)
        for (int kp = 0; kp < 3; ++kp)
            for (int j = 0; j < 3; ++j) out(k, kp) += rho(3 * j + k, 3 * j + kp);
    return out;
}

// Independent evaluation of the radial interference functions in long
// double; the library result must agree to ~1e-12 well away from 0.
struct RadialOracle {
    long double p_i, q_i, p_r, q_r;
};
inline RadialOracle radial_oracle(long double xi) {
    const long double s = std::sin(xi), c = std::cos(xi);
    const long double x2 = xi * xi, x3 = x2 * xi;
    return {s / xi + c / x2 - s / x3, s / xi + 3 * c / x2 - 3 * s / x3,
            c / xi - s / x2 - c / x3, c / xi - 3 * s / x2 - 3 * c / x3};
}

}  // namespace vpair::test

#endif
