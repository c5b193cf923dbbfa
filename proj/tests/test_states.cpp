#include "vpair/states.hpp"

#include "test_support.hpp"
#include "vpair/entanglement.hpp"
#include "vpair/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vpair;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("product states sit at the documented positions") {
    CHECK(product_state(3, 3).entry(8, 8).real() == doctest::Approx(1.0));
    CHECK(product_state(1, 3).entry(2, 2).real() == doctest::Approx(1.0));
    CHECK(negativity(product_state(1, 2)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(product_state(0, 1), std::domain_error);
}

TEST_CASE("bell states are maximally entangled and mutually orthogonal") {
    for (int a = 1; a <= 9; ++a) {
        const DensityMatrix rho = bell_state(a);
        CHECK(negativity(rho) == doctest::Approx(1.0).epsilon(1e-12));
        // Both marginals are maximally mixed.
        const Mat3 ra = test::partial_trace_B(rho.matrix());
        const Mat3 rb = test::partial_trace_A(rho.matrix());
        CHECK((ra - Mat3::Identity() / 3.0).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((rb - Mat3::Identity() / 3.0).cwiseAbs().maxCoeff() < 1e-12);
    }
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b) {
            const Complex olap = bell_ket(a).adjoint() * bell_ket(b);
            CHECK(std::abs(olap - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
    CHECK_THROWS_AS(bell_state(0), std::domain_error);
    CHECK_THROWS_AS(bell_state(10), std::domain_error);
}

TEST_CASE("antisymmetric Dicke populations split the bell basis") {
    // alpha in {1,4,7}: zero antisymmetric populations; the rest: 1/6 each.
    for (int a : {1, 4, 7}) {
        const DickePopulations p = dicke_populations(bell_state(a));
        CHECK(std::abs(p.a12) < 1e-12);
        CHECK(std::abs(p.a13) < 1e-12);
        CHECK(std::abs(p.a23) < 1e-12);
    }
    for (int a : {2, 3, 5, 6, 8, 9}) {
        const DickePopulations p = dicke_populations(bell_state(a));
        CHECK(p.a12 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
        CHECK(p.a13 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
        CHECK(p.a23 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    }
}

TEST_CASE("dicke states") {
    CHECK(negativity(dicke_state(DickeParity::Anti, 1, 3)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(negativity(dicke_state(DickeParity::Sym, 1, 3)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const DickePopulations p = dicke_populations(dicke_state(DickeParity::Anti, 1, 3));
    CHECK(p.a13 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(p.a12) + std::abs(p.a23) + std::abs(p.s12) + std::abs(p.s13) +
              std::abs(p.s23) <
          1e-12);
    CHECK_THROWS_AS(dicke_state(DickeParity::Sym, 2, 2), std::domain_error);
    CHECK_THROWS_AS(dicke_state(DickeParity::Anti, 3, 1), std::domain_error);
}

TEST_CASE("dicke swap behaviour") {
    // Swap two-atom labels: |j,k> -> |k,j>.
    Mat9 swap = Mat9::Zero();
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            swap(basis_index(k, j), basis_index(j, k)) = 1.0;
    const Vec9 s = dicke_ket(DickeParity::Sym, 1, 2);
    const Vec9 a = dicke_ket(DickeParity::Anti, 1, 2);
    CHECK((swap * s - s).norm() < 1e-15);
    CHECK((swap * a + a).norm() < 1e-15);
    const Mat9 proj = a * a.adjoint();
    CHECK((swap * proj * swap.adjoint() - proj).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("superposition family endpoints and separability") {
    CHECK(trace_distance(superposition_state(0.0).matrix(),
                         product_state(1, 1).matrix()) < 1e-14);
    CHECK(trace_distance(superposition_state(kPi / 2.0).matrix(),
                         product_state(1, 3).matrix()) < 1e-14);
    // Equal weights still factorize: |1_A> x (|1_B>+|3_B>)/sqrt(2).
    CHECK(negativity(superposition_state(kPi / 4.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(superposition_state(-0.1), std::domain_error);
    CHECK_THROWS_AS(superposition_state(kPi / 2.0 + 0.1), std::domain_error);
}

TEST_CASE("asymptotic state of the second bell family") {
    const DensityMatrix rho = asymptotic_psi2_state();
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-15);
    CHECK(hermitian_eigenvalues(rho.matrix()).minCoeff() > -1e-12);
    CHECK(std::abs(rho.entry(2, 6)) == doctest::Approx(1.0 / 8.0));  // |rho37|
    CHECK(rho.entry(8, 8).real() == doctest::Approx(0.5));
    // Eigenvalue-route negativity; the single negative eigenvalue of the
    // partial transpose is the real root of 6912 x^3 - 4896 x^2 + 216 x + 65
    // (frozen from an exact-arithmetic evaluation, 2026-08-09).
    const double n = negativity(rho);
    CHECK(n == doctest::Approx(0.0906800460425716).epsilon(1e-12));
    const double poly = 6912.0 * std::pow(-n, 3) - 4896.0 * std::pow(-n, 2) +
                        216.0 * (-n) + 65.0;
    CHECK(std::abs(poly) < 1e-9);
}

TEST_CASE("asymptotic state of a12") {
    const DensityMatrix rho = asymptotic_a12_state();
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-15);
    const double closed = negativity_form12(rho.matrix());
    const double eig = negativity(rho);
    CHECK(closed == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-14));
    CHECK(std::abs(closed - eig) < 1e-12);
    // It is the even mixture of the two stable antisymmetric Dicke states.
    const Mat9 mix = 0.5 * dicke_state(DickeParity::Anti, 1, 3).matrix() +
                     0.5 * dicke_state(DickeParity::Anti, 2, 3).matrix();
    CHECK(trace_distance(rho.matrix(), mix) < 1e-14);
}

TEST_CASE("state labels parse and print canonically") {
    for (const char* text : {"product:1:3", "bell:2", "dicke:anti:1:3",
                             "dicke:sym:2:3", "asymptotic:psi2", "asymptotic:a12"}) {
        const StateLabel lab = StateLabel::parse(text);
        CHECK(lab.str() == text);
        CHECK_NOTHROW(lab.make());
    }
    const StateLabel sup = StateLabel::parse("superposition:0.7853981633974483");
    CHECK(sup.phi == doctest::Approx(kPi / 4.0).epsilon(1e-15));
    CHECK(StateLabel::parse(sup.str()).phi == sup.phi);

    CHECK_THROWS_AS(StateLabel::parse("bell"), ConfigError);
    CHECK_THROWS_AS(StateLabel::parse("bell:x"), ConfigError);
    CHECK_THROWS_AS(StateLabel::parse("dicke:odd:1:3"), ConfigError);
    CHECK_THROWS_AS(StateLabel::parse("plasma:1:1"), ConfigError);
    CHECK_THROWS_AS(StateLabel::parse("bell:12").make(), ConfigError);
}

TEST_CASE("every constructor output is a valid density matrix") {
    // Constructors validate internally; spot-check the full catalog runs.
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) CHECK_NOTHROW(product_state(j, k));
    for (int a = 1; a <= 9; ++a) CHECK_NOTHROW(bell_state(a));
    for (auto [k, l] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        CHECK_NOTHROW(dicke_state(DickeParity::Sym, k, l));
        CHECK_NOTHROW(dicke_state(DickeParity::Anti, k, l));
    }
    CHECK_NOTHROW(superposition_state(0.3));
}
