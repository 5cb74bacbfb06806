#include "doctest.h"

#include <cmath>

#include "numrad/decompositions.hpp"
#include "numrad/linalg.hpp"
#include "numrad/radius.hpp"
#include "numrad/sampling.hpp"

using namespace numrad;
using doctest::Approx;

namespace {
ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) { return ComplexMatrix(2, 2, {a, b, c, d}); }
const ComplexMatrix kJordan = mat2(0, 1, 0, 0);
}  // namespace

TEST_CASE("absolute_value hand cases") {
    CHECK(max_abs_diff(absolute_value(kJordan),
                       ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0})) <= 1e-14);
    CHECK(max_abs_diff(absolute_value(ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0})),
                       ComplexMatrix::identity(2)) <= 1e-14);
    ComplexMatrix u = sample_operator({OpClass::Unitary, 4, 1});
    CHECK(max_abs_diff(absolute_value(u), ComplexMatrix::identity(4)) <= 1e-13);
}

TEST_CASE("absolute_value preserves the norm") {
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix t = sample_operator({OpClass::General, 2 + trial % 6, 800ull + trial});
        CHECK(std::abs(op_norm(absolute_value(t)) - op_norm(t)) <= 1e-10);
    }
}

TEST_CASE("polar of the 2x2 shift") {
    auto pp = polar(kJordan);
    CHECK(max_abs_diff(pp.isometryPart, kJordan) <= 1e-14);
    CHECK(max_abs_diff(pp.modulus, ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0})) <= 1e-14);
    // U*U is the projection onto range(P)
    CHECK(max_abs_diff(pp.isometryPart.adjoint() * pp.isometryPart,
                       ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0})) <= 1e-8);
}

TEST_CASE("polar reconstruction and kernel condition on random instances") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 6;
        ComplexMatrix t = sample_operator({OpClass::General, n, 900ull + trial});
        auto pp = polar(t);
        CHECK((pp.isometryPart * pp.modulus - t).frobenius() <= 1e-10 * (1.0 + op_norm(t)));
        // modulus from polar equals absolute_value within 1e-10
        CHECK(max_abs_diff(pp.modulus, absolute_value(t)) <= 1e-10);
        // U*U == projection onto range(P): idempotent, hermitian, and fixes P
        ComplexMatrix proj = pp.isometryPart.adjoint() * pp.isometryPart;
        CHECK((proj * proj - proj).frobenius() <= 1e-8);
        CHECK((proj * pp.modulus - pp.modulus).frobenius() <= 1e-8 * (1.0 + op_norm(t)));
    }
}

TEST_CASE("polar of an invertible matrix has unitary U = T P^{-1}") {
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4;
        // Gaussian matrices are almost surely well-conditioned enough here
        ComplexMatrix t = sample_operator({OpClass::General, n, 12000ull + trial});
        if (std::abs(determinant(t)) < 1e-3) continue;
        auto pp = polar(t);
        CHECK((pp.isometryPart.adjoint() * pp.isometryPart - ComplexMatrix::identity(n)).frobenius() <=
              1e-8);
        ComplexMatrix pinv = apply_spectral_function(pp.modulus, [](double x) { return 1.0 / x; });
        CHECK(max_abs_diff(pp.isometryPart, t * pinv) <= 1e-8 * (1.0 + op_norm(t)));
    }
}

TEST_CASE("polar of zero is zero") {
    auto pp = polar(ComplexMatrix::zero(3, 3));
    CHECK(pp.isometryPart.frobenius() == 0.0);
    CHECK(pp.modulus.frobenius() == 0.0);
}

TEST_CASE("cartesian decomposition") {
    ComplexMatrix h = sample_operator({OpClass::SelfAdjoint, 4, 2});
    auto cp = cartesian(h);
    CHECK(cp.imagPart.frobenius() <= 1e-15);

    auto cj = cartesian(kJordan);
    CHECK(max_abs_diff(cj.realPart, mat2(0, 0.5, 0.5, 0)) == 0.0);
    CHECK(max_abs_diff(cj.imagPart, mat2(0, cplx(0, -0.5), cplx(0, 0.5), 0)) == 0.0);

    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 6;
        ComplexMatrix t = sample_operator({OpClass::General, n, 1100ull + trial});
        auto cp2 = cartesian(t);
        CHECK(is_hermitian(cp2.realPart, 0.0));
        CHECK(is_hermitian(cp2.imagPart, 0.0));
        CHECK((cp2.realPart + cplx(0, 1) * cp2.imagPart - t).frobenius() <= 1e-12 * n);
    }
}

TEST_CASE("aluthge params validation") {
    CHECK_THROWS_AS(AluthgeParams(0.3, 0.3), ParamOutOfRange);
    CHECK_THROWS_AS(AluthgeParams(-0.1, 1.1), ParamOutOfRange);
}

TEST_CASE("aluthge transform fixes normal operators") {
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix t = sample_operator({OpClass::Normal, 3 + trial % 3, 1200ull + trial});
        CHECK(max_abs_diff(aluthge(t, {0.5, 0.5}), t) <= 1e-9);
        CHECK(max_abs_diff(aluthge(t, {0.25, 0.75}), t) <= 1e-9);
    }
}

TEST_CASE("aluthge of the 2x2 shift") {
    CHECK(aluthge(kJordan, {0.5, 0.5}).frobenius() <= 1e-14);
    // s=1,t=0: |T| U, and the direct product agrees
    auto pp = polar(kJordan);
    CHECK(max_abs_diff(aluthge(kJordan, {1.0, 0.0}), pp.modulus * pp.isometryPart) <= 1e-13);
    CHECK(aluthge(kJordan, {1.0, 0.0}).frobenius() <= 1e-13);  // equals zero here
    // s=0,t=1: U |T|
    CHECK(max_abs_diff(aluthge(kJordan, {0.0, 1.0}), pp.isometryPart * pp.modulus) <= 1e-13);
}

TEST_CASE("aluthge norm contraction property") {
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 5;
        ComplexMatrix t = sample_operator({OpClass::General, n, 1300ull + trial});
        for (double s : {0.0, 0.25, 0.5, 1.0}) {
            CHECK(op_norm(aluthge(t, {s, 1.0 - s})) <= op_norm(t) + 1e-10);
        }
    }
}
