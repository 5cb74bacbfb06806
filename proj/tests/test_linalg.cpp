#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "numrad/linalg.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/sampling.hpp"

using namespace numrad;
using doctest::Approx;

namespace {

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) { return ComplexMatrix(2, 2, {a, b, c, d}); }

double recon_residual_eig(const ComplexMatrix& H, const HermitianEig& eg) {
    const int n = H.rows();
    std::vector<cplx> w(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(i) * n + k] = eg.eigenvectors(i, k) * eg.eigenvalues[k];
    ComplexMatrix rec = ComplexMatrix(n, n, std::move(w)) * eg.eigenvectors.adjoint();
    return (rec - H).frobenius();
}

double recon_residual_svd(const ComplexMatrix& T, const SvdParts& sv) {
    const int n = T.rows();
    std::vector<cplx> w(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(i) * n + k] = sv.left(i, k) * sv.singulars[k];
    ComplexMatrix rec = ComplexMatrix(n, n, std::move(w)) * sv.right.adjoint();
    return (rec - T).frobenius();
}

double unitarity_residual(const ComplexMatrix& V) {
    return (V.adjoint() * V - ComplexMatrix::identity(V.rows())).frobenius();
}

// power iteration on T*T: independent oracle for the top singular value
double power_iteration_norm(const ComplexMatrix& T, int iters) {
    ComplexMatrix g = T.adjoint() * T;
    std::vector<cplx> x(g.rows(), cplx(1.0));
    double lam = 0.0;
    for (int it = 0; it < iters; ++it) {
        auto y = g.apply(x);
        const double nn = vec_norm(y);
        if (nn == 0.0) return 0.0;
        for (auto& z : y) z /= nn;
        lam = nn;
        x = std::move(y);
    }
    return std::sqrt(lam);
}

}  // namespace

TEST_CASE("eig_hermitian diagonal and involution cases") {
    auto eg = eig_hermitian(ComplexMatrix::diagonal(std::vector<double>{3.0, 1.0}));
    CHECK(eg.eigenvalues[0] == Approx(1.0));
    CHECK(eg.eigenvalues[1] == Approx(3.0));

    auto eg2 = eig_hermitian(mat2(0, 1, 1, 0));
    CHECK(eg2.eigenvalues[0] == Approx(-1.0));
    CHECK(eg2.eigenvalues[1] == Approx(1.0));
}

TEST_CASE("eig_hermitian rejects non-hermitian input") {
    CHECK_THROWS_AS(eig_hermitian(mat2(0, 1, 0, 0)), NotHermitian);
}

TEST_CASE("eig_hermitian reconstruction on seeded random instances") {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 15;  // up to 16
        ComplexMatrix h = sample_operator({OpClass::SelfAdjoint, n, 1000ull + trial});
        auto eg = eig_hermitian(h);
        const double tol = 1e-12 * n * (1.0 + h.frobenius());
        CHECK(recon_residual_eig(h, eg) <= tol);
        CHECK(unitarity_residual(eg.eigenvectors) <= 1e-12 * n);
        CHECK(std::is_sorted(eg.eigenvalues.begin(), eg.eigenvalues.end()));
    }
}

TEST_CASE("hermitian_eigenvalues agrees with the full solver") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 7;
        ComplexMatrix h = sample_operator({OpClass::SelfAdjoint, n, 555ull + trial});
        auto full = eig_hermitian(h).eigenvalues;
        auto vals = hermitian_eigenvalues(h);
        for (int i = 0; i < n; ++i) CHECK(vals[i] == Approx(full[i]).epsilon(1e-12));
    }
}

TEST_CASE("svd diagonal and nilpotent cases") {
    auto sv = svd(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.0}));
    CHECK(sv.singulars[0] == Approx(2.0));
    CHECK(sv.singulars[1] == Approx(0.0));

    auto sv2 = svd(mat2(0, 1, 0, 0));
    CHECK(sv2.singulars[0] == Approx(1.0));
    CHECK(sv2.singulars[1] == Approx(0.0));
}

TEST_CASE("svd reconstruction on seeded random instances") {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 15;
        ComplexMatrix t = sample_operator({OpClass::General, n, 2000ull + trial});
        auto sv = svd(t);
        const double tol = 1e-12 * n * (1.0 + t.frobenius());
        CHECK(recon_residual_svd(t, sv) <= tol);
        CHECK(unitarity_residual(sv.left) <= 1e-12 * n);
        CHECK(unitarity_residual(sv.right) <= 1e-12 * n);
        CHECK(std::is_sorted(sv.singulars.rbegin(), sv.singulars.rend()));
        CHECK(sv.singulars.back() >= 0.0);
    }
}

TEST_CASE("svd top singular value matches power-iteration oracle") {
    ComplexMatrix t = sample_operator({OpClass::General, 5, 42});
    auto sv = svd(t);
    CHECK(std::abs(sv.singulars[0] - power_iteration_norm(t, 500)) <= 1e-10);
}

TEST_CASE("svd singulars of a self-adjoint matrix are |eigenvalues|") {
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 5;
        ComplexMatrix h = sample_operator({OpClass::SelfAdjoint, n, 3000ull + trial});
        auto ev = hermitian_eigenvalues(h);
        std::vector<double> ab(ev.size());
        for (std::size_t i = 0; i < ev.size(); ++i) ab[i] = std::abs(ev[i]);
        std::sort(ab.rbegin(), ab.rend());
        auto sv = svd(h);
        for (std::size_t i = 0; i < ab.size(); ++i)
            CHECK(std::abs(sv.singulars[i] - ab[i]) <= 1e-10);
    }
}

TEST_CASE("eig_general basic spectra") {
    auto ev = eig_general(ComplexMatrix::diagonal(std::vector<double>{2.0, -3.0}));
    CHECK(ev[0].real() == Approx(-3.0));
    CHECK(ev[1].real() == Approx(2.0));

    auto ev2 = eig_general(mat2(0, 1, 0, 0));
    CHECK(std::abs(ev2[0]) <= 1e-12);
    CHECK(std::abs(ev2[1]) <= 1e-12);

    // companion matrix of z^2 - 3z + 2: roots 1, 2
    auto ev3 = eig_general(mat2(0, -2, 1, 3));
    CHECK(std::abs(ev3[0] - cplx(1.0)) <= 1e-10);
    CHECK(std::abs(ev3[1] - cplx(2.0)) <= 1e-10);
}

TEST_CASE("eig_general eigenvalue product matches the determinant") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 7;
        ComplexMatrix t = sample_operator({OpClass::General, n, 4000ull + trial});
        cplx prod = 1.0;
        for (const cplx& l : eig_general(t)) prod *= l;
        const cplx det = determinant(t);
        CHECK(std::abs(prod - det) <= 1e-8 * (1.0 + std::abs(det)));
    }
}

TEST_CASE("eig_general on normal matrices recovers the planted spectrum") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 5;
        ComplexMatrix t = sample_operator({OpClass::Normal, n, 5000ull + trial});
        // eigenvalues of T must reproduce T's action: check via det(T - l I) ~ 0
        for (const cplx& l : eig_general(t)) {
            ComplexMatrix shifted = t - ComplexMatrix::identity(n).scaled(l);
            CHECK(std::abs(determinant(shifted)) <= 1e-7 * (1.0 + std::pow(t.frobenius(), n)));
        }
    }
}

TEST_CASE("apply_spectral_function diagonal, polynomial, clamping") {
    auto r = apply_spectral_function(ComplexMatrix::diagonal(std::vector<double>{4.0, 9.0}),
                                     [](double t) { return std::sqrt(t); });
    CHECK(r(0, 0).real() == Approx(2.0));
    CHECK(r(1, 1).real() == Approx(3.0));

    ComplexMatrix p = sample_operator({OpClass::Positive, 4, 99});
    auto sq = apply_spectral_function(p, [](double t) { return t * t; });
    CHECK(max_abs_diff(sq, p * p) <= 1e-10);

    // eigenvalue -1e-14 clamps to 0 before sqrt (no NaN)
    ComplexMatrix tiny = ComplexMatrix::diagonal(std::vector<double>{1.0, -1e-14});
    auto root = apply_spectral_function(tiny, [](double t) { return std::sqrt(t); });
    CHECK(root(1, 1).real() == 0.0);
    CHECK(root(0, 0).real() == Approx(1.0));
}

TEST_CASE("apply_spectral_function error paths") {
    ComplexMatrix notpsd = ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0});
    CHECK_THROWS_AS(apply_spectral_function(notpsd, [](double t) { return t; }), NotPsd);

    ComplexMatrix p = sample_operator({OpClass::Positive, 3, 7});
    CHECK_THROWS_AS(
        apply_spectral_function(p, [](double) { return std::numeric_limits<double>::quiet_NaN(); }),
        DomainError);
}

TEST_CASE("psd_power zero exponent is the exact identity") {
    ComplexMatrix p = sample_operator({OpClass::Positive, 4, 11});
    CHECK(psd_power(p, 0.0) == ComplexMatrix::identity(4));
}

TEST_CASE("qr_unitary produces a unitary factor") {
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 6;
        ComplexMatrix q = sample_operator({OpClass::Unitary, n, 6000ull + trial});
        CHECK(unitarity_residual(q) <= 1e-13 * n);
    }
}

TEST_CASE("adjoint involution and product-adjoint identity") {
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 15;
        ComplexMatrix a = sample_operator({OpClass::General, n, 7000ull + trial});
        ComplexMatrix b = sample_operator({OpClass::General, n, 7100ull + trial});
        CHECK(a.adjoint().adjoint() == a);  // exact
        CHECK(((a * b).adjoint() - b.adjoint() * a.adjoint()).frobenius() <= 1e-12 * n);
    }
}

TEST_CASE("matrix text format round trip") {
    ComplexMatrix a = sample_operator({OpClass::General, 3, 123});
    std::string text = format_matrix(a);
    std::istringstream in(text);
    ComplexMatrix back = read_matrix(in);
    CHECK(back == a);  // %.17g round-trips doubles exactly

    std::istringstream bad("2\n1,0 2,0\n3,0\n");
    CHECK_THROWS_AS(read_matrix(bad), IoError);
    std::istringstream bad2("2\n1,0 2,0\n3,0 nope\n");
    CHECK_THROWS_AS(read_matrix(bad2), IoError);
}
