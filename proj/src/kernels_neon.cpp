// NEON backend (aarch64). One complex double per 128-bit register. The
// sign-flip multiplies below are exact, so the per-element rounding sequence
// matches the scalar reference.

#include "numrad/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace numrad::kern {

namespace {

// s*z = (sr*zr - si*zi, sr*zi + si*zr)
static inline float64x2_t cmul_neon(double sr, double si, float64x2_t z) {
    float64x2_t zswap = vextq_f64(z, z, 1);                    // (zi, zr)
    const float64x2_t sign = {-1.0, 1.0};
    float64x2_t b = vmulq_f64(vmulq_n_f64(zswap, si), sign);   // (-si*zi, si*zr)
    return vaddq_f64(vmulq_n_f64(z, sr), b);
}

// conj(s)*z = (sr*zr + si*zi, sr*zi - si*zr)
static inline float64x2_t cmulc_neon(double sr, double si, float64x2_t z) {
    float64x2_t zswap = vextq_f64(z, z, 1);
    const float64x2_t sign = {1.0, -1.0};
    float64x2_t b = vmulq_f64(vmulq_n_f64(zswap, si), sign);
    return vaddq_f64(vmulq_n_f64(z, sr), b);
}

void n_vadd(const cplx* a, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(pd + 2 * i, vaddq_f64(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
}

void n_vsub(const cplx* a, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(pd + 2 * i, vsubq_f64(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
}

void n_vscale(cplx s, const cplx* a, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(pd + 2 * i, cmul_neon(s.real(), s.imag(), vld1q_f64(pa + 2 * i)));
}

void n_vaxpy(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t t = cmul_neon(s.real(), s.imag(), vld1q_f64(px + 2 * i));
        vst1q_f64(py + 2 * i, vaddq_f64(vld1q_f64(py + 2 * i), t));
    }
}

void n_vcombine(cplx s, const cplx* a, cplx t, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t u = cmul_neon(s.real(), s.imag(), vld1q_f64(pa + 2 * i));
        float64x2_t v = cmul_neon(t.real(), t.imag(), vld1q_f64(pb + 2 * i));
        vst1q_f64(pd + 2 * i, vaddq_f64(u, v));
    }
}

void n_rot_pair(double c, cplx s, cplx* x, cplx* y, std::size_t n) {
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t vx = vld1q_f64(px + 2 * i);
        float64x2_t vy = vld1q_f64(py + 2 * i);
        float64x2_t u = cmul_neon(s.real(), s.imag(), vy);
        float64x2_t v = cmulc_neon(s.real(), s.imag(), vx);
        vst1q_f64(px + 2 * i, vaddq_f64(vmulq_n_f64(vx, c), u));
        vst1q_f64(py + 2 * i, vsubq_f64(vmulq_n_f64(vy, c), v));
    }
}

constexpr Backend kNeon = {
    "neon", n_vadd, n_vsub, n_vscale, n_vaxpy, n_vcombine, n_rot_pair,
};

}  // namespace

const Backend* neon_backend() { return &kNeon; }

}  // namespace numrad::kern

#endif  // __aarch64__
