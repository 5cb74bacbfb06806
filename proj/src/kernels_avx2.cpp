// AVX2 backend. Two complex doubles per 256-bit register, interleaved re/im.
// Complex multiply uses the mul/mul/addsub pattern, which matches the scalar
// reference's rounding exactly (one rounding per multiply, one per add/sub).

#include "numrad/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace numrad::kern {

namespace {

#if defined(__AVX2__)

// (s*z) for two packed complex: s broadcast as (sr,sr,sr,sr)/(si,si,si,si).
static inline __m256d cmul_pd(__m256d sr, __m256d si, __m256d z) {
    __m256d zswap = _mm256_shuffle_pd(z, z, 0x5);  // (zi, zr) pairs
    return _mm256_addsub_pd(_mm256_mul_pd(sr, z), _mm256_mul_pd(si, zswap));
}

// conj(s)*z = (sr*zr + si*zi, sr*zi - si*zr)
static inline __m256d cmulc_pd(__m256d sr, __m256d si, __m256d z) {
    __m256d zswap = _mm256_shuffle_pd(z, z, 0x5);
    __m256d b = _mm256_mul_pd(si, zswap);
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d bneg = _mm256_xor_pd(b, signmask);
    return _mm256_addsub_pd(_mm256_mul_pd(sr, z), bneg);
}

void a_vadd(const cplx* a, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t m = 2 * n, i = 0;
    for (; i + 4 <= m; i += 4)
        _mm256_storeu_pd(pd + i, _mm256_add_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    for (; i < m; ++i) pd[i] = pa[i] + pb[i];
}

void a_vsub(const cplx* a, const cplx* b, cplx* dst, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t m = 2 * n, i = 0;
    for (; i + 4 <= m; i += 4)
        _mm256_storeu_pd(pd + i, _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    for (; i < m; ++i) pd[i] = pa[i] - pb[i];
}

void a_vscale(cplx s, const cplx* a, cplx* dst, std::size_t n) {
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const double* pa = reinterpret_cast<const double*>(a);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(pd + 2 * i, cmul_pd(sr, si, _mm256_loadu_pd(pa + 2 * i)));
    if (i < n) {
        double cr = s.real() * pa[2 * i] - s.imag() * pa[2 * i + 1];
        double ci = s.real() * pa[2 * i + 1] + s.imag() * pa[2 * i];
        pd[2 * i] = cr;
        pd[2 * i + 1] = ci;
    }
}

void a_vaxpy(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d t = cmul_pd(sr, si, _mm256_loadu_pd(px + 2 * i));
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), t));
    }
    if (i < n) {
        double cr = s.real() * px[2 * i] - s.imag() * px[2 * i + 1];
        double ci = s.real() * px[2 * i + 1] + s.imag() * px[2 * i];
        py[2 * i] = py[2 * i] + cr;
        py[2 * i + 1] = py[2 * i + 1] + ci;
    }
}

void a_vcombine(cplx s, const cplx* a, cplx t, const cplx* b, cplx* dst, std::size_t n) {
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const __m256d tr = _mm256_set1_pd(t.real());
    const __m256d ti = _mm256_set1_pd(t.imag());
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* pd = reinterpret_cast<double*>(dst);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d u = cmul_pd(sr, si, _mm256_loadu_pd(pa + 2 * i));
        __m256d v = cmul_pd(tr, ti, _mm256_loadu_pd(pb + 2 * i));
        _mm256_storeu_pd(pd + 2 * i, _mm256_add_pd(u, v));
    }
    if (i < n) {
        double ur = s.real() * pa[2 * i] - s.imag() * pa[2 * i + 1];
        double ui = s.real() * pa[2 * i + 1] + s.imag() * pa[2 * i];
        double vr = t.real() * pb[2 * i] - t.imag() * pb[2 * i + 1];
        double vi = t.real() * pb[2 * i + 1] + t.imag() * pb[2 * i];
        pd[2 * i] = ur + vr;
        pd[2 * i + 1] = ui + vi;
    }
}

void a_rot_pair(double c, cplx s, cplx* x, cplx* y, std::size_t n) {
    const __m256d cc = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        __m256d u = cmul_pd(sr, si, vy);    // s*y
        __m256d v = cmulc_pd(sr, si, vx);   // conj(s)*x
        _mm256_storeu_pd(px + 2 * i, _mm256_add_pd(_mm256_mul_pd(cc, vx), u));
        _mm256_storeu_pd(py + 2 * i, _mm256_sub_pd(_mm256_mul_pd(cc, vy), v));
    }
    for (; i < n; ++i) {
        const double xr = px[2 * i], xi = px[2 * i + 1];
        const double yr = py[2 * i], yi = py[2 * i + 1];
        const double ur = s.real() * yr - s.imag() * yi;
        const double ui = s.real() * yi + s.imag() * yr;
        const double vr = s.real() * xr + s.imag() * xi;
        const double vi = s.real() * xi - s.imag() * xr;
        px[2 * i] = c * xr + ur;
        px[2 * i + 1] = c * xi + ui;
        py[2 * i] = c * yr - vr;
        py[2 * i + 1] = c * yi - vi;
    }
}

constexpr Backend kAvx2 = {
    "avx2", a_vadd, a_vsub, a_vscale, a_vaxpy, a_vcombine, a_rot_pair,
};

#endif  // __AVX2__

}  // namespace

const Backend* avx2_backend() {
#if defined(__AVX2__)
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
    return nullptr;
}

}  // namespace numrad::kern

#endif  // x86
