#include "doctest.h"

#include <cstring>

#include "numrad/kernels.hpp"
#include "numrad/sampling.hpp"

using namespace numrad;

namespace {

std::vector<cplx> random_buf(Rng& rng, std::size_t n, double scale) {
    std::vector<cplx> v(n);
    for (cplx& z : v) z = scale * rng.gaussian_cplx();
    return v;
}

bool bits_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

}  // namespace

// Every backend must reproduce the scalar reference bit-for-bit: the kernels
// are elementwise with a fixed rounding tree, so equality is exact, not
// approximate.
TEST_CASE("simd backends match scalar reference exactly") {
    const auto& ref = kern::scalar_backend();
    const auto backends = kern::available_backends();
    REQUIRE(!backends.empty());

    Rng rng(0xfeedULL);
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(2), std::size_t(3),
                          std::size_t(4), std::size_t(7), std::size_t(16), std::size_t(33),
                          std::size_t(67)}) {
        for (double scale : {1.0, 1e-160, 1e150}) {
            const auto a = random_buf(rng, n, scale);
            const auto b = random_buf(rng, n, scale);
            const cplx s = rng.gaussian_cplx();
            const cplx t = rng.gaussian_cplx();
            const double c = rng.gaussian();

            std::vector<cplx> r_add(n), r_sub(n), r_scale(n), r_comb(n);
            auto r_axpy = b;
            auto r_rx = a, r_ry = b;
            ref.vadd(a.data(), b.data(), r_add.data(), n);
            ref.vsub(a.data(), b.data(), r_sub.data(), n);
            ref.vscale(s, a.data(), r_scale.data(), n);
            ref.vaxpy(s, a.data(), r_axpy.data(), n);
            ref.vcombine(s, a.data(), t, b.data(), r_comb.data(), n);
            ref.rot_pair(c, s, r_rx.data(), r_ry.data(), n);

            for (const kern::Backend* bk : backends) {
                CAPTURE(bk->name);
                CAPTURE(n);
                std::vector<cplx> o_add(n), o_sub(n), o_scale(n), o_comb(n);
                auto o_axpy = b;
                auto o_rx = a, o_ry = b;
                bk->vadd(a.data(), b.data(), o_add.data(), n);
                bk->vsub(a.data(), b.data(), o_sub.data(), n);
                bk->vscale(s, a.data(), o_scale.data(), n);
                bk->vaxpy(s, a.data(), o_axpy.data(), n);
                bk->vcombine(s, a.data(), t, b.data(), o_comb.data(), n);
                bk->rot_pair(c, s, o_rx.data(), o_ry.data(), n);
                CHECK(bits_equal(o_add, r_add));
                CHECK(bits_equal(o_sub, r_sub));
                CHECK(bits_equal(o_scale, r_scale));
                CHECK(bits_equal(o_axpy, r_axpy));
                CHECK(bits_equal(o_comb, r_comb));
                CHECK(bits_equal(o_rx, r_rx));
                CHECK(bits_equal(o_ry, r_ry));
            }
        }
    }
}

TEST_CASE("active backend is one of the available ones") {
    const auto backends = kern::available_backends();
    bool found = false;
    for (const kern::Backend* b : backends)
        if (b == &kern::active()) found = true;
    CHECK(found);
}
