#include "vpair/algebra.hpp"

#include "test_support.hpp"
#include "vpair/errors.hpp"
#include "vpair/states.hpp"

#include <doctest.h>

#include <set>

using namespace vpair;

TEST_CASE("basis self test") { CHECK_NOTHROW(run_basis_self_test()); }

TEST_CASE("transition operators move basis states") {
    const Vec9 e13 = basis_ket(1, 3), e23 = basis_ket(2, 3), e33 = basis_ket(3, 3);
    const Mat9 lower_a = transition_operator(3, 1, Atom::A);
    CHECK((lower_a * e13 - e33).norm() == doctest::Approx(0.0));
    CHECK((lower_a * e23).norm() == doctest::Approx(0.0));

    const Mat9 proj = transition_operator(1, 3, Atom::B) *
                      transition_operator(3, 1, Atom::B);
    const Vec9 e31 = basis_ket(3, 1);
    CHECK((proj * e31 - e31).norm() == doctest::Approx(0.0));
    CHECK((proj * basis_ket(1, 2)).norm() == doctest::Approx(0.0));
}

TEST_CASE("transition operator rejects bad level indices") {
    CHECK_THROWS_AS(transition_operator(0, 1, Atom::A), std::domain_error);
    CHECK_THROWS_AS(transition_operator(1, 4, Atom::B), std::domain_error);
    CHECK_THROWS_AS(sigma(4, 1), std::domain_error);
}

TEST_CASE("single-atom operator algebra: sigma_jk sigma_lm = delta_kl sigma_jm") {
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                for (int m = 1; m <= 3; ++m) {
                    const Mat3 lhs = sigma(j, k) * sigma(l, m);
                    const Mat3 rhs = (k == l) ? sigma(j, m) : Mat3(Mat3::Zero());
                    CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
                }
}

TEST_CASE("vectorization round trip and identities") {
    const Mat9 m = test::random_matrix();
    CHECK((devectorize(vectorize(m)) - m).cwiseAbs().maxCoeff() == 0.0);
    CHECK(vectorize(Mat9::Zero()).norm() == 0.0);

    const Mat9 a = test::random_matrix(), rho = test::random_matrix(),
               b = test::random_matrix();
    Superoperator s(81, 81);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            s.block(9 * i, 9 * j, 9, 9) = b.transpose()(i, j) * a;
    CHECK((s * vectorize(rho) - vectorize(a * rho * b)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial transpose of a product state stays PSD") {
    const Mat3 ra = test::random_density3();
    const Mat3 rb = test::random_density3();
    const Mat9 rho = kron(ra, rb);
    const Mat9 pt = partial_transpose(rho, Subsystem::B);
    CHECK((pt - kron(ra, Mat3(rb.transpose()))).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(hermitian_eigenvalues(pt).minCoeff() > -1e-12);
}

TEST_CASE("partial transpose is an involution") {
    const Mat9 rho = test::random_density();
    const Mat9 twice = partial_transpose(partial_transpose(rho, Subsystem::B),
                                         Subsystem::B);
    CHECK((twice - rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("maximally entangled state: min eigenvalue of the partial transpose") {
    const Mat9 rho = bell_state(1).matrix();
    const Vec9d evs = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
    CHECK(evs.minCoeff() == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("partial transpose spectra agree for both subsystem choices") {
    for (int trial = 0; trial < 100; ++trial) {
        const Mat9 rho = test::random_density();
        const Vec9d a = hermitian_eigenvalues(partial_transpose(rho, Subsystem::A));
        const Vec9d b = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("hermitian eigenvalues basics") {
    const Mat9 id9 = Mat9::Identity() / 9.0;
    const Vec9d e1 = hermitian_eigenvalues(id9);
    for (int i = 0; i < 9; ++i) CHECK(e1(i) == doctest::Approx(1.0 / 9.0));

    Mat9 d = Mat9::Zero();
    for (int i = 0; i < 9; ++i) d(i, i) = (i + 1) / 45.0;
    const Vec9d e2 = hermitian_eigenvalues(d);
    for (int i = 0; i < 9; ++i)
        CHECK(e2(i) == doctest::Approx((i + 1) / 45.0).epsilon(1e-14));

    const Mat9 h = test::random_hermitian();
    CHECK(hermitian_eigenvalues(h).sum() ==
          doctest::Approx(h.trace().real()).epsilon(1e-10));

    Mat9 bad = test::random_matrix();
    bad(0, 1) = 7.0;
    bad(1, 0) = 0.0;
    CHECK_THROWS_AS(hermitian_eigenvalues(bad), std::domain_error);
}

TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(DensityMatrix::validated(test::random_density()));

    Mat9 off_trace = test::random_density();
    off_trace *= 1.01;
    CHECK_THROWS_WITH_AS(DensityMatrix::validated(off_trace),
                         doctest::Contains("trace"), InvariantError);

    Mat9 non_herm = test::random_density();
    non_herm(0, 3) += Complex(0.0, 1e-3);
    CHECK_THROWS_WITH_AS(DensityMatrix::validated(non_herm),
                         doctest::Contains("hermiticity"), InvariantError);

    Mat9 indefinite = Mat9::Zero();
    indefinite(0, 0) = 1.1;
    indefinite(8, 8) = -0.1;
    CHECK_THROWS_WITH_AS(DensityMatrix::validated(indefinite),
                         doctest::Contains("eigenvalue"), InvariantError);
}

TEST_CASE("density matrix spectra are probability-like") {
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = DensityMatrix::validated(test::random_density());
        const Vec9d evs = hermitian_eigenvalues(rho.matrix());
        CHECK(evs.sum() == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(evs.minCoeff() >= -1e-8);
        CHECK(evs.maxCoeff() <= 1.0 + 1e-8);
    }
}

TEST_CASE("trace distance") {
    const Mat9 a = test::random_density();
    CHECK(trace_distance(a, a) == doctest::Approx(0.0));
    const Mat9 b = basis_ket(1, 1) * basis_ket(1, 1).adjoint();
    const Mat9 c = basis_ket(3, 3) * basis_ket(3, 3).adjoint();
    CHECK(trace_distance(b, c) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lexicographic positions of the single-excitation sector") {
    // 1-based positions {3,6,7,8} plus ground at 9 drive every closed form.
    const std::set<int> expected{2, 5, 6, 7};
    std::set<int> got;
    for (auto [j, k] : {std::pair{1, 3}, {2, 3}, {3, 1}, {3, 2}}) {
        Vec9 v = basis_ket(j, k);
        for (int i = 0; i < 9; ++i)
            if (std::abs(v(i)) > 0.5) got.insert(i);
    }
    CHECK(got == expected);
    CHECK(basis_index(3, 3) == 8);
}
