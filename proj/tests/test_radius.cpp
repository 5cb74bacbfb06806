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

// brute-force grid oracle, independent of the bracketing strategy
double grid_oracle_w(const ComplexMatrix& t, int K) {
    double best = 0.0;
    for (int k = 0; k < K; ++k)
        best = std::max(best, real_part_extreme(t, 6.283185307179586 * k / K));
    return best;
}

}  // namespace

TEST_CASE("op_norm basics") {
    CHECK(op_norm(mat2(0, 2, 0, 0)) == Approx(2.0));
    CHECK(op_norm(sample_operator({OpClass::Unitary, 4, 3})) == Approx(1.0).epsilon(1e-12));
    ComplexMatrix t = sample_operator({OpClass::General, 5, 10});
    auto ev = hermitian_eigenvalues(t.adjoint() * t);
    CHECK(std::abs(op_norm(t) - std::sqrt(ev.back())) <= 1e-10);
}

TEST_CASE("real_part_extreme") {
    ComplexMatrix h = sample_operator({OpClass::SelfAdjoint, 4, 21});
    auto ev = hermitian_eigenvalues(h);
    CHECK(real_part_extreme(h, 0.0) == Approx(ev.back()).epsilon(1e-12));
    for (double th : {0.0, 0.7, 2.1, 4.4})
        CHECK(real_part_extreme(kJordan, th) == Approx(0.5).epsilon(1e-12));
    // positive homogeneity
    ComplexMatrix t = sample_operator({OpClass::General, 3, 22});
    CHECK(real_part_extreme(t.scaled(3.0), 1.1) ==
          Approx(3.0 * real_part_extreme(t, 1.1)).epsilon(1e-12));
}

TEST_CASE("numerical_radius hand values") {
    auto r = numerical_radius(kJordan);
    CHECK(r.value == Approx(0.5).epsilon(1e-10));
    CHECK(numerical_radius(ComplexMatrix::diagonal(std::vector<double>{-2.0, 1.0})).value ==
          Approx(2.0).epsilon(1e-10));
}

TEST_CASE("numerical_radius enclosure and witness invariants") {
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + trial % 6;
        ComplexMatrix t = sample_operator({OpClass::General, n, 3100ull + trial});
        auto r = numerical_radius(t);
        CHECK(r.lower <= r.value);
        CHECK(r.value <= r.upper);
        CHECK(r.upper - r.lower <= 1e-9 * (1.0 + op_norm(t)));
        CHECK(std::abs(vec_norm(r.witness) - 1.0) <= 1e-12);
        const cplx q = inner(t.apply(r.witness), r.witness);
        CHECK(std::abs(q) >= r.lower - 1e-12);
        CHECK(r.thetaStar >= 0.0);
        CHECK(r.thetaStar < 6.2832);
    }
}

TEST_CASE("numerical_radius matches a fine grid oracle") {
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 5;
        ComplexMatrix t = sample_operator({OpClass::General, n, 3200ull + trial});
        const double w = numerical_radius(t).value;
        const double oracle = grid_oracle_w(t, 100000);
        CHECK(w >= oracle - 1e-12);  // grid can only undershoot
        CHECK(std::abs(w - oracle) <= 1e-6);
    }
}

TEST_CASE("numerical_radius norm equivalence bounds") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 5;
        ComplexMatrix t = sample_operator({OpClass::General, n, 3300ull + trial});
        const double w = numerical_radius(t).value;
        const double nm = op_norm(t);
        CHECK(w >= 0.5 * nm - 1e-8 * std::max(1.0, nm));
        CHECK(w <= nm + 1e-10);
        // w(T) = w(T*)
        CHECK(std::abs(numerical_radius(t.adjoint()).value - w) <= 1e-9);
        // unitary invariance
        ComplexMatrix u = sample_operator({OpClass::Unitary, n, 3400ull + trial});
        CHECK(std::abs(numerical_radius(u.adjoint() * t * u).value - w) <= 1e-8);
    }
}

TEST_CASE("numerical_radius equality classes") {
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix nm = sample_operator({OpClass::Normal, 4, 3500ull + trial});
        CHECK(std::abs(numerical_radius(nm).value - op_norm(nm)) <= 1e-8);
        CHECK(std::abs(numerical_radius(nm).value - spectral_radius(nm)) <= 1e-8);
        ComplexMatrix sz = sample_operator({OpClass::SquareZero, 4, 3600ull + trial});
        CHECK(std::abs(numerical_radius(sz).value - 0.5 * op_norm(sz)) <= 1e-8);
    }
}

TEST_CASE("fov_boundary geometry") {
    // normal matrix: numerical range is the convex hull of the eigenvalues
    ComplexMatrix d3 = ComplexMatrix::diagonal(std::vector<cplx>{{1, 0}, {0, 1}, {-1, 0}});
    auto fb = fov_boundary(d3, 240);
    for (const cplx& p : fb.points) {
        // hull of {1, i, -1}: Im >= 0 side bounded by the two edges, Im >= -tol
        CHECK(p.imag() >= -1e-10);
        CHECK(p.imag() <= 1.0 + 1e-10);
        CHECK(p.real() + p.imag() <= 1.0 + 1e-10);
        CHECK(-p.real() + p.imag() <= 1.0 + 1e-10);
    }

    auto fj = fov_boundary(kJordan, 360);
    for (const cplx& p : fj.points) CHECK(std::abs(p) == Approx(0.5).epsilon(1e-9));

    ComplexMatrix t = sample_operator({OpClass::General, 4, 77});
    const double w = numerical_radius(t).value;
    for (const cplx& p : fov_boundary(t, 64).points) CHECK(std::abs(p) <= w + 1e-9);

    CHECK_THROWS_AS(fov_boundary(t, 2), ConfigError);
}

TEST_CASE("crawford hand values") {
    CHECK(crawford(ComplexMatrix::identity(3)) == Approx(1.0).epsilon(1e-9));
    CHECK(crawford(ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0})) == Approx(0.0));
    CHECK(crawford(ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0})) == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("crawford bounds and invariance") {
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + trial % 4;
        ComplexMatrix t = sample_operator({OpClass::General, n, 3700ull + trial});
        const double c = crawford(t);
        CHECK(c >= 0.0);
        CHECK(c <= numerical_radius(t).value + 1e-9);
        ComplexMatrix u = sample_operator({OpClass::Unitary, n, 3800ull + trial});
        CHECK(std::abs(crawford(u.adjoint() * t * u) - c) <= 1e-7);
    }
}

TEST_CASE("crawford vs sampled minimum") {
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 2 + trial;
        ComplexMatrix t = sample_operator({OpClass::General, n, 3900ull + trial});
        const double c = crawford(t);
        Rng rng(4000ull + trial);
        double smin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 20000; ++i) {
            auto x = sample_unit_vector(rng, n);
            smin = std::min(smin, std::abs(inner(t.apply(x), x)));
        }
        CHECK(c <= smin + 1e-6);
    }
}

TEST_CASE("spectral_radius") {
    CHECK(spectral_radius(ComplexMatrix::diagonal(std::vector<double>{2.0, -3.0})) == Approx(3.0));
    CHECK(spectral_radius(kJordan) <= 1e-12);
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(4100ull + trial);
        const double a = std::abs(rng.gaussian()), b = std::abs(rng.gaussian());
        const double c = std::abs(rng.gaussian()), d = std::abs(rng.gaussian());
        ComplexMatrix m = mat2(a, b, c, d);
        const double closed = 0.5 * ((a + d) + std::sqrt((a - d) * (a - d) + 4 * b * c));
        CHECK(std::abs(spectral_radius(m) - closed) <= 1e-10 * (1.0 + closed));
        // spectral radius dominated by the numerical radius
        CHECK(spectral_radius(m) <= numerical_radius(m).value + 1e-8);
    }
}

TEST_CASE("w_nonneg_entries") {
    CHECK(w_nonneg_entries(mat2(0, 1, 0, 0)) == Approx(0.5));
    CHECK(w_nonneg_entries(mat2(3, 0, 0, 7)) == Approx(7.0));
    CHECK_THROWS_AS(w_nonneg_entries(mat2(-1, 0, 0, 1)), NegativeEntry);
    CHECK_THROWS_AS(w_nonneg_entries(mat2(cplx(0, 1), 0, 0, 1)), NegativeEntry);
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(4200ull + trial);
        ComplexMatrix m = mat2(std::abs(rng.gaussian()), std::abs(rng.gaussian()),
                               std::abs(rng.gaussian()), std::abs(rng.gaussian()));
        CHECK(std::abs(w_nonneg_entries(m) - numerical_radius(m).value) <= 1e-9);
    }
}
