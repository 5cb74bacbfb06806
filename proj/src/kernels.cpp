#include "numrad/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace numrad::kern {

// Scalar reference kernels. The operation trees below are the contract every
// SIMD backend must reproduce bit-for-bit (compiled with -ffp-contract=off).

namespace {

inline void cmul(double ar, double ai, double br, double bi, double& cr, double& ci) {
    cr = ar * br - ai * bi;
    ci = ar * bi + ai * br;
}

void s_vadd(const cplx* a, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < 2 * n; ++i) pd[i] = pa[i] + pb[i];
}

void s_vsub(const cplx* a, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < 2 * n; ++i) pd[i] = pa[i] - pb[i];
}

void s_vscale(cplx s, const cplx* a, cplx* dst, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    const double* pa = reinterpret_cast<const double*>(a);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < n; ++i) {
        double cr, ci;
        cmul(sr, si, pa[2 * i], pa[2 * i + 1], cr, ci);
        pd[2 * i] = cr;
        pd[2 * i + 1] = ci;
    }
}

void s_vaxpy(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        double cr, ci;
        cmul(sr, si, px[2 * i], px[2 * i + 1], cr, ci);
        py[2 * i] = py[2 * i] + cr;
        py[2 * i + 1] = py[2 * i + 1] + ci;
    }
}

void s_vcombine(cplx s, const cplx* a, cplx t, const cplx* b, cplx* dst, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    const double tr = t.real(), ti = t.imag();
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < n; ++i) {
        double ur, ui, vr, vi;
        cmul(sr, si, pa[2 * i], pa[2 * i + 1], ur, ui);
        cmul(tr, ti, pb[2 * i], pb[2 * i + 1], vr, vi);
        pd[2 * i] = ur + vr;
        pd[2 * i + 1] = ui + vi;
    }
}

void s_rot_pair(double c, cplx s, cplx* x, cplx* y, std::size_t n) {
    const double sr = s.real(), si = s.imag();
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = px[2 * i], xi = px[2 * i + 1];
        const double yr = py[2 * i], yi = py[2 * i + 1];
        // u = s*y, v = conj(s)*x
        const double ur = sr * yr - si * yi;
        const double ui = sr * yi + si * yr;
        const double vr = sr * xr + si * xi;
        const double vi = sr * xi - si * xr;
        px[2 * i] = c * xr + ur;
        px[2 * i + 1] = c * xi + ui;
        py[2 * i] = c * yr - vr;
        py[2 * i + 1] = c * yi - vi;
    }
}

constexpr Backend kScalar = {
    "scalar", s_vadd, s_vsub, s_vscale, s_vaxpy, s_vcombine, s_rot_pair,
};

}  // namespace

const Backend& scalar_backend() { return kScalar; }

#if defined(__x86_64__) || defined(__i386__)
const Backend* avx2_backend();  // kernels_avx2.cpp, nullptr when unsupported at runtime
#endif
#if defined(__aarch64__)
const Backend* neon_backend();  // kernels_neon.cpp
#endif

std::vector<const Backend*> available_backends() {
    std::vector<const Backend*> out{&kScalar};
#if defined(__x86_64__) || defined(__i386__)
    if (const Backend* b = avx2_backend()) out.push_back(b);
#endif
#if defined(__aarch64__)
    if (const Backend* b = neon_backend()) out.push_back(b);
#endif
    return out;
}

namespace {

const Backend* select_backend() {
    const char* want = std::getenv("NUMRAD_KERNELS");
    auto backends = available_backends();
    if (want) {
        for (const Backend* b : backends)
            if (std::strcmp(b->name, want) == 0) return b;
        return &kScalar;
    }
    return backends.back();  // fastest available
}

}  // namespace

const Backend& active() {
    static const Backend* chosen = select_backend();
    return *chosen;
}

}  // namespace numrad::kern
