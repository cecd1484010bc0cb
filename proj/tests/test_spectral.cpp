#include "normkit/spectral.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace normkit;
using namespace normkit::testing;

namespace {

CMatrix diag3(Complex a, Complex b, Complex c) {
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

}  // namespace

TEST_CASE("normal_eig recovers a diagonal spectrum with a permutation-like U") {
    const CMatrix a = diag3(Complex(0, 2), Complex(2, 1), -3.0);
    const NormalEigenDecomposition dec = normal_eig(a);
    CVector expected(3);
    expected << Complex(-3, 0), Complex(0, 2), Complex(2, 1);  // lexicographic by (re, im)
    CHECK((dec.lambda - expected).norm() <= 1e-12);
    // each eigenvector is a standard basis vector up to phase
    for (Index j = 0; j < 3; ++j) {
        double largest = dec.u.col(j).cwiseAbs().maxCoeff();
        CHECK(largest == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK((a * dec.u - dec.u * dec.lambda.asDiagonal().toDenseMatrix()).norm() <= 1e-12);
}

TEST_CASE("normal_eig on a scalar matrix") {
    const Complex alpha(1.5, -0.5);
    const CMatrix a = alpha * CMatrix::Identity(4, 4);
    const NormalEigenDecomposition dec = normal_eig(a);
    for (Index j = 0; j < 4; ++j) CHECK(std::abs(dec.lambda(j) - alpha) <= 1e-13);
    CHECK((dec.u.adjoint() * dec.u - CMatrix::Identity(4, 4)).norm() <= 1e-12);
}

TEST_CASE("normal_eig matches the construction oracle on random normal matrices") {
    std::mt19937_64 rng(1);
    for (Index n : {3, 8, 16, 64}) {
        const CMatrix u = random_unitary(n, rng);
        const CVector lam = random_cvector(n, rng);
        const CMatrix a = u * lam.asDiagonal() * u.adjoint();
        const NormalEigenDecomposition dec = normal_eig(a);
        CHECK(multiset_distance(dec.lambda, lam) <= 1e-10 * (1.0 + lam.cwiseAbs().maxCoeff()));
        CHECK((a * dec.u - dec.u * dec.lambda.asDiagonal().toDenseMatrix()).norm() <=
              1e-10 * a.norm());
        CHECK((dec.u.adjoint() * dec.u - CMatrix::Identity(n, n)).norm() <= 1e-11 * n);
    }
}

TEST_CASE("normal_eig handles repeated eigenvalues") {
    std::mt19937_64 rng(2);
    const CMatrix u = random_unitary(5, rng);
    CVector lam(5);
    lam << Complex(1, 1), Complex(1, 1), Complex(0, 2), Complex(0, 2), Complex(-1, 0);
    const CMatrix a = u * lam.asDiagonal() * u.adjoint();
    const NormalEigenDecomposition dec = normal_eig(a);
    CHECK(multiset_distance(dec.lambda, lam) <= 1e-10);
    CHECK((a * dec.u - dec.u * dec.lambda.asDiagonal().toDenseMatrix()).norm() <= 1e-10 * a.norm());
}

TEST_CASE("normal_eig rejects non-normal input") {
    CMatrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(normal_eig(m), PreconditionError);
}

TEST_CASE("simultaneous_diag of two diagonal matrices") {
    const CMatrix a = diag3(1.0, 2.0, Complex(0, 3));
    const CMatrix e = diag3(5.0, 7.0, 9.0);
    const SimDiag sd = simultaneous_diag(a, e);
    CHECK((a * sd.w - sd.w * sd.lambda_a.asDiagonal().toDenseMatrix()).norm() <= 1e-10);
    CHECK((e * sd.w - sd.w * sd.lambda_e.asDiagonal().toDenseMatrix()).norm() <= 1e-10);
}

TEST_CASE("simultaneous_diag refines inside repeated eigenvalue clusters") {
    std::mt19937_64 rng(3);
    const CMatrix u = random_unitary(3, rng);
    CVector la(3), le(3);
    la << 1.0, 1.0, 2.0;
    le << 5.0, 5.0, 7.0;
    const CMatrix a = u * la.asDiagonal() * u.adjoint();
    const CMatrix e = u * le.asDiagonal() * u.adjoint();
    const SimDiag sd = simultaneous_diag(a, e);
    CHECK((a * sd.w - sd.w * sd.lambda_a.asDiagonal().toDenseMatrix()).norm() <= 1e-10);
    CHECK((e * sd.w - sd.w * sd.lambda_e.asDiagonal().toDenseMatrix()).norm() <= 1e-10);
    CHECK((sd.w.adjoint() * sd.w - CMatrix::Identity(3, 3)).norm() <= 1e-11);
}

TEST_CASE("simultaneous_diag rejects a non-commuting pair") {
    CMatrix a(2, 2), e(2, 2);
    a << 0, 1, 1, 0;
    e << 0, 1, -1, 0;
    // oracle: [A,E] = diag(-2, 2) by direct 2x2 multiplication
    const CMatrix c = commutator(a, e);
    CHECK(std::abs(c(0, 0) - Complex(-2, 0)) <= 1e-15);
    CHECK(std::abs(c(1, 1) - Complex(2, 0)) <= 1e-15);
    CHECK_THROWS_AS(simultaneous_diag(a, e), PreconditionError);
}

TEST_CASE("group_on_line reproduces the single-member line of the augmentation example") {
    const CMatrix a = diag3(Complex(0, 2), Complex(2, 1), -3.0);
    const NormalEigenDecomposition dec = normal_eig(a);
    const Unimodular theta(Complex(1, 1));
    const EigenLine line = group_on_line(dec, Complex(1, 0), theta);
    REQUIRE(line.p() == 1);
    CHECK(std::abs(dec.lambda(line.member_indices[0]) - Complex(2, 1)) <= 1e-12);
    CHECK(line.rho(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("group_on_line reproduces the two-member line") {
    const CMatrix a = diag3(Complex(0, 2), Complex(2, 1), -3.0);
    const NormalEigenDecomposition dec = normal_eig(a);
    const Unimodular theta(Complex(-2, 1));
    const EigenLine line = group_on_line(dec, Complex(-2, 3), theta);
    REQUIRE(line.p() == 2);
    CVector members(2);
    for (Index j = 0; j < 2; ++j) members(j) = dec.lambda(line.member_indices[j]);
    CVector expected(2);
    expected << Complex(0, 2), Complex(2, 1);
    CHECK(multiset_distance(members, expected) <= 1e-12);
    // line.y + rho * theta reconstructs each member
    const Unimodular tc = theta.canonical();
    for (Index j = 0; j < 2; ++j)
        CHECK(std::abs(line.y + line.rho(j) * tc.value() - members(j)) <= 1e-12);
}

TEST_CASE("group_on_line far from the spectrum is empty") {
    const CMatrix a = diag3(Complex(0, 2), Complex(2, 1), -3.0);
    const NormalEigenDecomposition dec = normal_eig(a);
    const EigenLine line = group_on_line(dec, Complex(100, 100), Unimodular(Complex(1, 0.37)));
    CHECK(line.p() == 0);
}

TEST_CASE("eigenline members span the perpendicular-part eigenspace") {
    // the two-member line of the example: its eigenvectors are eigenvectors of
    // Theta-perp(A) with the shared eigenvalue Theta-perp(lambda_1), and the
    // restriction of A - lambda_1 I to the members is theta-Hermitian
    const CMatrix a = diag3(Complex(0, 2), Complex(2, 1), -3.0);
    const NormalEigenDecomposition dec = normal_eig(a);
    const Unimodular theta = Unimodular(Complex(-2, 1)).canonical();
    const EigenLine line = group_on_line(dec, Complex(-2, 3), theta);
    REQUIRE(line.p() == 2);
    const CMatrix sp = theta_perp_part(a, theta);
    const Complex l1 = dec.lambda(line.member_indices[0]);
    const Complex target = theta_perp_part(l1, theta);
    CMatrix up(3, 2);
    for (Index j = 0; j < 2; ++j) up.col(j) = dec.u.col(line.member_indices[j]);
    CHECK((sp * up - target * up).norm() <= 1e-10);
    const CMatrix restricted = up.adjoint() * (a - l1 * CMatrix::Identity(3, 3)) * up;
    CHECK(is_theta_hermitian(restricted, theta));
}

TEST_CASE("theta_separates on the vertical pair") {
    CVector lam(2);
    lam << Complex(0, 0), Complex(0, 1);
    CHECK_FALSE(theta_separates(lam, Unimodular(), 1e-3));
    CHECK(theta_separates(lam, Unimodular(Complex(0, 1)), 1e-3));
}

TEST_CASE("feasible_theta prefers theta = 1 and always passes its own check") {
    std::mt19937_64 rng(4);
    CVector easy(2);
    easy << 0.0, 1.0;
    CHECK(std::abs(feasible_theta(easy, rng).value() - Complex(1, 0)) <= 1e-15);
    const CVector lam = random_cvector(7, rng);
    const Unimodular theta = feasible_theta(lam, rng);
    CHECK(theta_separates(lam, theta));
}
