#include "vpair/algebra.hpp"

#include "vpair/errors.hpp"

#include <Eigen/Eigenvalues>

#include <random>
#include <sstream>
#include <stdexcept>

namespace vpair {

namespace {

void check_level(int v, const char* name) {
    if (v < 1 || v > 3) {
        throw std::domain_error(std::string(name) + " must be in 1..3, got " +
                                std::to_string(v));
    }
}

}  // namespace

Mat3 sigma(int j, int k) {
    check_level(j, "j");
    check_level(k, "k");
    Mat3 m = Mat3::Zero();
    m(j - 1, k - 1) = 1.0;
    return m;
}

Mat9 kron(const Mat3& a, const Mat3& b) {
    Mat9 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    return out;
}

Mat9 transition_operator(int j, int k, Atom atom) {
    const Mat3 s = sigma(j, k);
    const Mat3 id = Mat3::Identity();
    return atom == Atom::A ? kron(s, id) : kron(id, s);
}

Vec81 vectorize(const Mat9& m) {
    Vec81 v(81);
    for (int j = 0; j < 9; ++j)
        for (int i = 0; i < 9; ++i)
            v(i + 9 * j) = m(i, j);
    return v;
}

Mat9 devectorize(const Vec81& v) {
    if (v.size() != 81) {
        throw std::domain_error("devectorize: expected length 81, got " +
                                std::to_string(v.size()));
    }
    Mat9 m;
    for (int j = 0; j < 9; ++j)
        for (int i = 0; i < 9; ++i)
            m(i, j) = v(i + 9 * j);
    return m;
}

Mat9 partial_transpose(const Mat9& rho, Subsystem which) {
    Mat9 out;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int jp = 0; jp < 3; ++jp)
                for (int kp = 0; kp < 3; ++kp) {
                    if (which == Subsystem::B)
                        out(3 * j + k, 3 * jp + kp) = rho(3 * j + kp, 3 * jp + k);
                    else
                        out(3 * j + k, 3 * jp + kp) = rho(3 * jp + k, 3 * j + kp);
                }
    return out;
}

Vec9d hermitian_eigenvalues(const Mat9& m, double herm_tol) {
    const double resid = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (resid > herm_tol) {
        std::ostringstream os;
        os << "hermitian_eigenvalues: hermiticity residual " << resid
           << " exceeds " << herm_tol;
        throw std::domain_error(os.str());
    }
    const Mat9 h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat9> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

DensityMatrix DensityMatrix::validated(const Mat9& m) {
    std::ostringstream bad;
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol)
        bad << "hermiticity residual " << herm << " > " << kHermTol << "; ";
    const double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (tr_err > kTraceTol)
        bad << "|trace - 1| = " << tr_err << " > " << kTraceTol << "; ";
    // Positivity checked on the hermitized matrix so a pure hermiticity
    // failure does not also produce a meaningless eigenvalue complaint.
    const Mat9 h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat9> solver(h, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < kEigenFloor)
        bad << "min eigenvalue " << min_eig << " < " << kEigenFloor << "; ";
    const std::string msg = bad.str();
    if (!msg.empty())
        throw InvariantError("invalid density matrix: " + msg);
    return DensityMatrix(m);
}

double trace_distance(const Mat9& a, const Mat9& b) {
    const Mat9 d = 0.5 * ((a - b) + (a - b).adjoint());
    Eigen::SelfAdjointEigenSolver<Mat9> solver(d, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

void run_basis_self_test() {
    auto fail = [](const std::string& what) {
        throw std::logic_error("basis self-test failed: " + what);
    };

    // Index map |j,k> -> 3(j-1)+(k-1); 1-based positions 3,6,7,8 are the
    // single-excitation states, 9 the ground state.
    if (basis_index(1, 3) != 2 || basis_index(2, 3) != 5 ||
        basis_index(3, 1) != 6 || basis_index(3, 2) != 7 ||
        basis_index(3, 3) != 8)
        fail("lexicographic index map");

    Vec9 e13 = Vec9::Zero(), e23 = Vec9::Zero(), e33 = Vec9::Zero();
    e13(basis_index(1, 3)) = 1.0;
    e23(basis_index(2, 3)) = 1.0;
    e33(basis_index(3, 3)) = 1.0;

    // sigma_31 on atom A lowers |1_A,3_B> to |3_A,3_B> and kills |2_A,3_B>.
    const Mat9 low_a = transition_operator(3, 1, Atom::A);
    if ((low_a * e13 - e33).norm() > 1e-15) fail("sigma_31^A action");
    if ((low_a * e23).norm() > 1e-15) fail("sigma_31^A orthogonality");

    // sigma_13^B sigma_31^B projects onto states with B in level 1.
    const Mat9 proj_b = transition_operator(1, 3, Atom::B) *
                        transition_operator(3, 1, Atom::B);
    Vec9 e31 = Vec9::Zero();
    e31(basis_index(3, 1)) = 1.0;
    if ((proj_b * e31 - e31).norm() > 1e-15 || (proj_b * e13).norm() > 1e-15)
        fail("sigma_13 sigma_31 projector");

    // Vectorization identity vec(A rho B) = (B^T kron A) vec(rho) on a
    // fixed pseudo-random triple.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto rand9 = [&]() {
        Mat9 m;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) m(i, j) = Complex(u(rng), u(rng));
        return m;
    };
    const Mat9 a = rand9(), rho = rand9(), b = rand9();
    Superoperator big(81, 81);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            big.block(9 * i, 9 * j, 9, 9) = b.transpose()(i, j) * a;
    if ((big * vectorize(rho) - vectorize(a * rho * b)).norm() > 1e-10)
        fail("vectorization identity");
    if ((devectorize(vectorize(rho)) - rho).norm() != 0.0)
        fail("vec/devec round trip");

    // Partial transpose moves the |1,3><3,1| coherence to rows/cols (1,9).
    Mat9 c = Mat9::Zero();
    c(basis_index(1, 3), basis_index(3, 1)) = 1.0;
    const Mat9 pt = partial_transpose(c, Subsystem::B);
    if (std::abs(pt(basis_index(1, 1), basis_index(3, 3)) - 1.0) > 1e-15)
        fail("partial transpose index motion");
}

}  // namespace vpair
