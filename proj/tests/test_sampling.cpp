#include "doctest.h"

#include <cmath>

#include "numrad/linalg.hpp"
#include "numrad/radius.hpp"
#include "numrad/sampling.hpp"

using namespace numrad;

TEST_CASE("sampling is deterministic per spec") {
    for (OpClass c : {OpClass::General, OpClass::Normal, OpClass::SelfAdjoint, OpClass::Positive,
                      OpClass::Unitary, OpClass::SquareZero}) {
        ComplexMatrix a = sample_operator({c, 4, 42});
        ComplexMatrix b = sample_operator({c, 4, 42});
        CHECK(a == b);  // bit-identical
        ComplexMatrix other = sample_operator({c, 4, 43});
        CHECK(!(a == other));
    }
}

TEST_CASE("class properties hold by construction") {
    for (int trial = 0; trial < 10; ++trial) {
        const std::uint64_t seed = 500 + trial;
        ComplexMatrix sa = sample_operator({OpClass::SelfAdjoint, 4, seed});
        CHECK(max_abs_diff(sa, sa.adjoint()) <= 1e-15);

        ComplexMatrix ps = sample_operator({OpClass::Positive, 4, seed});
        CHECK(is_hermitian(ps, 1e-14));
        CHECK(hermitian_eigenvalues(ps).front() >= -1e-12);

        ComplexMatrix un = sample_operator({OpClass::Unitary, 4, seed});
        CHECK((un.adjoint() * un - ComplexMatrix::identity(4)).frobenius() <= 1e-12);

        ComplexMatrix nm = sample_operator({OpClass::Normal, 4, seed});
        CHECK((nm * nm.adjoint() - nm.adjoint() * nm).frobenius() <= 1e-12);

        ComplexMatrix sz = sample_operator({OpClass::SquareZero, 4, seed});
        CHECK((sz * sz).frobenius() == 0.0);  // exact by block construction
    }
}

TEST_CASE("samples are norm-capped at 2") {
    for (OpClass c : {OpClass::General, OpClass::Normal, OpClass::SelfAdjoint, OpClass::Positive,
                      OpClass::SquareZero}) {
        for (int trial = 0; trial < 5; ++trial)
            CHECK(op_norm(sample_operator({c, 6, 900ull + trial})) <= 2.0 + 1e-12);
    }
}

TEST_CASE("squarezero requires even dim") {
    CHECK_THROWS_AS(sample_operator({OpClass::SquareZero, 3, 1}), BadDim);
}

TEST_CASE("unit vectors are unit and deterministic") {
    Rng r1(7), r2(7);
    auto v1 = sample_unit_vector(r1, 5);
    auto v2 = sample_unit_vector(r2, 5);
    CHECK(std::abs(vec_norm(v1) - 1.0) <= 1e-14);
    for (int i = 0; i < 5; ++i) CHECK(v1[i] == v2[i]);
}

TEST_CASE("class names round trip") {
    for (OpClass c : {OpClass::General, OpClass::Normal, OpClass::SelfAdjoint, OpClass::Positive,
                      OpClass::Unitary, OpClass::SquareZero})
        CHECK(op_class_from_name(op_class_name(c)) == c);
    CHECK_THROWS_AS(op_class_from_name("bogus"), ConfigError);
}
