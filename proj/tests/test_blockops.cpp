#include "doctest.h"

#include <cmath>

#include "numrad/blockops.hpp"
#include "numrad/radius.hpp"
#include "numrad/sampling.hpp"

using namespace numrad;
using doctest::Approx;

namespace {
double w(const ComplexMatrix& m) { return numerical_radius(m).value; }
}  // namespace

TEST_CASE("block2 assembly and extraction") {
    ComplexMatrix a = sample_operator({OpClass::General, 3, 1});
    ComplexMatrix b = sample_operator({OpClass::General, 3, 2});
    ComplexMatrix c = sample_operator({OpClass::General, 3, 3});
    ComplexMatrix d = sample_operator({OpClass::General, 3, 4});
    Block2 blk = block2(a, b, c, d);
    CHECK(extract_block(blk.assembled, 0, 0) == a);
    CHECK(extract_block(blk.assembled, 0, 1) == b);
    CHECK(extract_block(blk.assembled, 1, 0) == c);
    CHECK(extract_block(blk.assembled, 1, 1) == d);

    Block2 eye = block2(ComplexMatrix::identity(2), ComplexMatrix::zero(2, 2),
                        ComplexMatrix::zero(2, 2), ComplexMatrix::identity(2));
    CHECK(eye.assembled == ComplexMatrix::identity(4));

    ComplexMatrix one(1, 1, {cplx(1.0)});
    ComplexMatrix z1 = ComplexMatrix::zero(1, 1);
    CHECK(w(block2(z1, one, z1, z1).assembled) == Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(block2(a, b, c, sample_operator({OpClass::General, 2, 5})),
                    DimensionMismatch);
}

TEST_CASE("off_diag identities") {
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + trial % 3;
        ComplexMatrix s = sample_operator({OpClass::General, n, 100ull + trial});
        ComplexMatrix t = sample_operator({OpClass::General, n, 200ull + trial});
        CHECK(std::abs(w(off_diag(s, s).assembled) - w(s)) <= 1e-8 * (1.0 + w(s)));
        CHECK(std::abs(w(off_diag(t, s).assembled) - w(off_diag(s, t).assembled)) <= 1e-8);
        const double base = w(off_diag(t, s).assembled);
        for (double th : {0.0, 1.0471975511965976, 3.141592653589793}) {
            ComplexMatrix rotated = cplx(std::cos(th), std::sin(th)) * s;
            CHECK(std::abs(w(off_diag(t, rotated).assembled) - base) <= 1e-8);
        }
    }
}

TEST_CASE("direct_sum takes the max radius") {
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + trial % 3;
        ComplexMatrix s = sample_operator({OpClass::General, n, 300ull + trial});
        ComplexMatrix t = sample_operator({OpClass::General, n, 400ull + trial});
        CHECK(std::abs(w(direct_sum(t, s).assembled) - std::max(w(t), w(s))) <= 1e-8);
        CHECK(std::abs(w(direct_sum(t, t).assembled) - w(t)) <= 1e-8);
    }
    ComplexMatrix z = ComplexMatrix::zero(2, 2);
    CHECK(w(direct_sum(z, z).assembled) == 0.0);
}

TEST_CASE("lemma 4.1(d) full form") {
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + trial % 3;
        ComplexMatrix t = sample_operator({OpClass::General, n, 500ull + trial});
        ComplexMatrix s = sample_operator({OpClass::General, n, 600ull + trial});
        const double lhs = w(block2(t, s, s, t).assembled);
        const double rhs = std::max(w(t - s), w(t + s));
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + rhs));
    }
}

TEST_CASE("power identity is exact") {
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 4;
        ComplexMatrix a = sample_operator({OpClass::General, n, 700ull + trial});
        ComplexMatrix b = sample_operator({OpClass::General, n, 800ull + trial});
        Block2 off = off_diag(a, b);
        Block2 ds = direct_sum(a * b, b * a);
        CHECK(off.assembled * off.assembled == ds.assembled);  // bit-exact
    }
}

TEST_CASE("unitary conjugation identities") {
    const int n = 3;
    ComplexMatrix a = sample_operator({OpClass::General, n, 900});
    ComplexMatrix b = sample_operator({OpClass::General, n, 901});
    ComplexMatrix c = sample_operator({OpClass::General, n, 902});
    ComplexMatrix d = sample_operator({OpClass::General, n, 903});
    ComplexMatrix m = block2(a, b, c, d).assembled;

    // W = [[0,I],[I,0]] swaps blocks exactly
    ComplexMatrix wswap = off_diag(ComplexMatrix::identity(n), ComplexMatrix::identity(n)).assembled;
    ComplexMatrix conj = wswap.adjoint() * m * wswap;
    CHECK(extract_block(conj, 0, 0) == d);
    CHECK(extract_block(conj, 0, 1) == c);
    CHECK(extract_block(conj, 1, 0) == b);
    CHECK(extract_block(conj, 1, 1) == a);

    // R = [[I,-I],[I,I]]/sqrt(2) is unitary and R* off(A,B) R has the
    // half-sum/difference blocks
    const double r2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix eye = ComplexMatrix::identity(n);
    ComplexMatrix rot = block2(eye.scaled(r2), eye.scaled(-r2), eye.scaled(r2), eye.scaled(r2)).assembled;
    CHECK((rot.adjoint() * rot - ComplexMatrix::identity(2 * n)).frobenius() <= 1e-15 * n);
    ComplexMatrix off = off_diag(a, b).assembled;
    ComplexMatrix conj2 = rot.adjoint() * off * rot;
    ComplexMatrix apb = 0.5 * (a + b), amb = 0.5 * (a - b);
    CHECK(max_abs_diff(extract_block(conj2, 0, 0), apb) <= 1e-15 * (1.0 + op_norm(a) + op_norm(b)));
    CHECK(max_abs_diff(extract_block(conj2, 0, 1), amb) <= 1e-15 * (1.0 + op_norm(a) + op_norm(b)));
    CHECK(max_abs_diff(extract_block(conj2, 1, 0), cplx(-1.0) * amb) <=
          1e-15 * (1.0 + op_norm(a) + op_norm(b)));
    CHECK(max_abs_diff(extract_block(conj2, 1, 1), cplx(-1.0) * apb) <=
          1e-15 * (1.0 + op_norm(a) + op_norm(b)));
}
