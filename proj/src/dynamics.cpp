#include "vpair/dynamics.hpp"

#include "vpair/errors.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vpair {

namespace {

Superoperator kron81(const Mat9& a, const Mat9& b) {
    Superoperator s(81, 81);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            s.block(9 * i, 9 * j, 9, 9) = a(i, j) * b;
    return s;
}

// kappa * (2 ci rho cj^dag - cj^dag ci rho - rho cj^dag ci) as a
// superoperator over column-major vec, via vec(A rho B) = (B^T kron A) vec.
Superoperator dissipator(const Mat9& ci, const Mat9& cj, double kappa) {
    const Mat9 cjd = cj.adjoint();
    const Mat9 t = cjd * ci;
    return kappa * (2.0 * kron81(cjd.transpose(), ci) -
                    kron81(Mat9::Identity(), t) -
                    kron81(t.transpose(), Mat9::Identity()));
}

// +i * omega * [x, rho]
Superoperator commutator(const Mat9& x, double omega) {
    return Complex(0.0, omega) *
           (kron81(Mat9::Identity(), x) - kron81(x.transpose(), Mat9::Identity()));
}

}  // namespace

Superoperator build_single_atom_generator(Atom atom, double gamma) {
    if (!(gamma > 0.0))
        throw std::domain_error("gamma must be > 0, got " + std::to_string(gamma));
    const Mat9 s31 = transition_operator(3, 1, atom);
    const Mat9 s32 = transition_operator(3, 2, atom);
    return dissipator(s31, s31, gamma) + dissipator(s32, s32, gamma);
}

Superoperator build_cross_generator(const CouplingCoefficients& c) {
    const Mat9 s31A = transition_operator(3, 1, Atom::A);
    const Mat9 s32A = transition_operator(3, 2, Atom::A);
    const Mat9 s31B = transition_operator(3, 1, Atom::B);
    const Mat9 s32B = transition_operator(3, 2, Atom::B);

    Superoperator l = Superoperator::Zero(81, 81);

    // Collective damping: same transition, opposite atoms.
    l += dissipator(s31A, s31B, c.gamma13_c) + dissipator(s31B, s31A, c.gamma13_c);
    l += dissipator(s32A, s32B, c.gamma23_c) + dissipator(s32B, s32A, c.gamma23_c);

    // Dipole-dipole exchange x_k = sigma_k3 x sigma_3k + sigma_3k x sigma_k3.
    const Mat9 x1 = kron(sigma(1, 3), sigma(3, 1)) + kron(sigma(3, 1), sigma(1, 3));
    const Mat9 x2 = kron(sigma(2, 3), sigma(3, 2)) + kron(sigma(3, 2), sigma(2, 3));
    l += commutator(x1, c.omega13) + commutator(x2, c.omega23);

    // Cross damping: transition 1 on one atom against transition 2 on the
    // other, both orderings, both atoms.
    l += dissipator(s31A, s32B, c.gamma_vc) + dissipator(s31B, s32A, c.gamma_vc);
    l += dissipator(s32A, s31B, c.gamma_vc) + dissipator(s32B, s31A, c.gamma_vc);

    // Cross exchange.
    const Mat9 xvc = kron(sigma(2, 3), sigma(3, 1)) + kron(sigma(3, 2), sigma(1, 3)) +
                     kron(sigma(3, 1), sigma(2, 3)) + kron(sigma(1, 3), sigma(3, 2));
    l += commutator(xvc, c.omega_vc);

    return l;
}

Liouvillian build_liouvillian(const CouplingCoefficients& c) {
    Liouvillian l;
    l.coeffs = c;
    l.superop = build_single_atom_generator(Atom::A, c.gamma) +
                build_single_atom_generator(Atom::B, c.gamma) +
                build_cross_generator(c);
    return l;
}

Mat9 apply_superoperator(const Superoperator& s, const Mat9& m) {
    if (s.rows() != 81 || s.cols() != 81)
        throw std::domain_error("superoperator must be 81x81");
    return devectorize(s * vectorize(m));
}

Propagator make_propagator(const Liouvillian& l, double dt) {
    if (!(dt > 0.0))
        throw std::domain_error("dt must be > 0, got " + std::to_string(dt));
    Propagator p;
    p.dt = dt;
    p.matrix = Superoperator(l.superop * dt).exp();
    // exp(L dt) inherits the hermiticity-preserving symmetry
    //   P[(i,j),(k,l)] = conj(P[(j,i),(l,k)])
    // of the generator, but the Pade evaluation's roundoff does not, and
    // the residue accumulates linearly over long trajectories (noticeable
    // once the dipole-dipole shifts reach ~1e6 gamma).  Project it back.
    Superoperator sym(81, 81);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            for (int k = 0; k < 9; ++k)
                for (int l2 = 0; l2 < 9; ++l2)
                    sym(i + 9 * j, k + 9 * l2) =
                        0.5 * (p.matrix(i + 9 * j, k + 9 * l2) +
                               std::conj(p.matrix(j + 9 * i, l2 + 9 * k)));
    p.matrix = sym;
    return p;
}

Trajectory evolve_with(const Propagator& p, const DensityMatrix& rho0,
                       std::size_t n_steps) {
    Trajectory traj;
    traj.times.reserve(n_steps + 1);
    traj.states.reserve(n_steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(rho0);

    Vec81 v = vectorize(rho0.matrix());
    for (std::size_t step = 1; step <= n_steps; ++step) {
        v = p.matrix * v;
        const double t = static_cast<double>(step) * p.dt;
        try {
            traj.states.push_back(DensityMatrix::validated(devectorize(v)));
        } catch (const InvariantError& e) {
            throw IntegrationError(step, t, e.what());
        }
        traj.times.push_back(t);
    }
    return traj;
}

Trajectory evolve(const Liouvillian& l, const DensityMatrix& rho0,
                  double t_max, double dt) {
    if (!(t_max > 0.0))
        throw std::domain_error("t_max must be > 0, got " + std::to_string(t_max));
    const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
    const Propagator p = make_propagator(l, dt);
    Trajectory traj = evolve_with(p, rho0, n);
    traj.meta.coeffs = l.coeffs;
    traj.meta.t_max = t_max;
    traj.meta.dt = dt;
    return traj;
}

DensityMatrix asymptotic_state(const Liouvillian& l, const DensityMatrix& rho0,
                               const AsymptoticOptions& opts) {
    Eigen::ComplexEigenSolver<Superoperator> solver(l.superop);
    if (solver.info() != Eigen::Success)
        throw InvariantError("asymptotic_state: eigendecomposition failed");

    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    const Vec81 coef = vectors.partialPivLu().solve(vectorize(rho0.matrix()));

    Vec81 out = Vec81::Zero(81);
    int kept = 0;
    for (int i = 0; i < 81; ++i) {
        if (std::abs(values(i).real()) < opts.rate_cutoff) {
            out += vectors.col(i) * coef(i);
            ++kept;
        }
    }
    if (kept == 0)
        throw InvariantError("asymptotic_state: no stationary mode below rate cutoff " +
                             std::to_string(opts.rate_cutoff));

    // The projection is Hermitian up to eigensolver roundoff (the slow
    // cluster comes in conjugate pairs); symmetrize before validating.
    Mat9 m = devectorize(out);
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix::validated(m);
}

DensityMatrix asymptotic_state_by_integration(const Liouvillian& l,
                                              const DensityMatrix& rho0,
                                              double step, double max_time,
                                              double tol) {
    const Propagator p = make_propagator(l, step);
    Vec81 v = vectorize(rho0.matrix());
    double residual = 0.0;
    for (double t = 0.0; t < max_time; t += step) {
        const Vec81 next = p.matrix * v;
        residual = (next - v).cwiseAbs().maxCoeff();
        v = next;
        if (residual < tol) {
            Mat9 m = devectorize(v);
            m = 0.5 * (m + m.adjoint()).eval();
            return DensityMatrix::validated(m);
        }
    }
    std::ostringstream os;
    os << "asymptotic_state_by_integration: not converged within t = " << max_time
       << " (last residual " << residual << ", tol " << tol << ")";
    throw InvariantError(os.str());
}

}  // namespace vpair
