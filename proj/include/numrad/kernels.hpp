#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;

namespace kern {

// Elementwise complex kernels over contiguous buffers. Every backend performs
// the identical per-element operation tree (mul, mul, add/sub; no FMA, no
// reductions), so results are bit-identical across scalar/AVX2/NEON. The
// equivalence tests assert bitwise equality, not a tolerance.
//
// rot_pair is the Givens/Jacobi workhorse:
//   x' = c*x + s*y,   y' = c*y - conj(s)*x     (c real)
struct Backend {
    const char* name;
    void (*vadd)(const cplx* a, const cplx* b, cplx* dst, std::size_t n);
    void (*vsub)(const cplx* a, const cplx* b, cplx* dst, std::size_t n);
    void (*vscale)(cplx s, const cplx* a, cplx* dst, std::size_t n);
    void (*vaxpy)(cplx s, const cplx* x, cplx* y, std::size_t n);       // y += s*x
    void (*vcombine)(cplx s, const cplx* a, cplx t, const cplx* b, cplx* dst,
                     std::size_t n);                                    // dst = s*a + t*b
    void (*rot_pair)(double c, cplx s, cplx* x, cplx* y, std::size_t n);
};

// Backend chosen at startup from CPU features; NUMRAD_KERNELS=scalar|avx2|neon
// overrides the choice (unknown or unavailable names fall back to scalar).
const Backend& active();

const Backend& scalar_backend();

// Every backend usable on this host (scalar first).
std::vector<const Backend*> available_backends();

}  // namespace kern
}  // namespace numrad
