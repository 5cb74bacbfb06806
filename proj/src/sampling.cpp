#include "numrad/sampling.hpp"

#include <cmath>

#include "numrad/linalg.hpp"

namespace numrad {

const char* op_class_name(OpClass c) {
    switch (c) {
        case OpClass::General: return "general";
        case OpClass::Normal: return "normal";
        case OpClass::SelfAdjoint: return "selfadjoint";
        case OpClass::Positive: return "positive";
        case OpClass::Unitary: return "unitary";
        case OpClass::SquareZero: return "squarezero";
    }
    return "general";
}

OpClass op_class_from_name(const std::string& name) {
    if (name == "general") return OpClass::General;
    if (name == "normal") return OpClass::Normal;
    if (name == "selfadjoint") return OpClass::SelfAdjoint;
    if (name == "positive") return OpClass::Positive;
    if (name == "unitary") return OpClass::Unitary;
    if (name == "squarezero") return OpClass::SquareZero;
    throw ConfigError("unknown operator class: " + name);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : eng_(mix_seed(seed, 0x6b79d2c1e3a5f708ULL)) {}

std::uint64_t Rng::next_u64() { return eng_(); }

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 in (0,1]
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

cplx Rng::gaussian_cplx() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

int Rng::pick(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

std::vector<cplx> sample_unit_vector(Rng& rng, int dim) {
    std::vector<cplx> v(dim);
    double n2 = 0.0;
    do {
        for (int i = 0; i < dim; ++i) v[i] = rng.gaussian_cplx();
        n2 = 0.0;
        for (const cplx& z : v) n2 += std::norm(z);
    } while (n2 < 1e-12);
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& z : v) z *= inv;
    return v;
}

namespace {

ComplexMatrix gaussian_matrix(Rng& rng, int n) {
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (cplx& z : e) z = rng.gaussian_cplx();
    return ComplexMatrix(n, n, std::move(e));
}

double spectral_norm(const ComplexMatrix& m) {
    ComplexMatrix g = m.adjoint() * m;
    std::vector<cplx> buf(g.data().begin(), g.data().end());
    HermitianExtremes ext(m.rows());
    return std::sqrt(std::max(0.0, ext.lambda_max(buf.data())));
}

ComplexMatrix clamp_norm(const ComplexMatrix& m, double cap) {
    const double nm = spectral_norm(m);
    if (nm <= cap || nm == 0.0) return m;
    return m.scaled(cap / nm);
}

}  // namespace

ComplexMatrix sample_operator(const SampleSpec& spec) {
    if (spec.dim < 1) throw BadDim("sample_operator: dim must be >= 1");
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(spec.opClass) + 17));
    const int n = spec.dim;
    switch (spec.opClass) {
        case OpClass::General:
            return clamp_norm(gaussian_matrix(rng, n), 2.0);
        case OpClass::SelfAdjoint: {
            ComplexMatrix g = gaussian_matrix(rng, n);
            return clamp_norm(g.scaled(0.5) + g.adjoint().scaled(0.5), 2.0);
        }
        case OpClass::Positive: {
            ComplexMatrix g = gaussian_matrix(rng, n);
            return clamp_norm(g.adjoint() * g, 2.0);
        }
        case OpClass::Normal: {
            ComplexMatrix q = qr_unitary(gaussian_matrix(rng, n));
            std::vector<cplx> d(n);
            for (cplx& z : d) z = rng.gaussian_cplx();
            ComplexMatrix lam = ComplexMatrix::diagonal(std::span<const cplx>(d));
            return clamp_norm(q * lam * q.adjoint(), 2.0);
        }
        case OpClass::Unitary:
            return qr_unitary(gaussian_matrix(rng, n));
        case OpClass::SquareZero: {
            if (n % 2 != 0) throw BadDim("sample_operator: squarezero requires even dim");
            const int h = n / 2;
            std::vector<cplx> e(static_cast<std::size_t>(n) * n, cplx(0.0));
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < h; ++j)
                    e[static_cast<std::size_t>(i) * n + (h + j)] = rng.gaussian_cplx();
            return clamp_norm(ComplexMatrix(n, n, std::move(e)), 2.0);
        }
    }
    throw ConfigError("sample_operator: unhandled class");
}

}  // namespace numrad
