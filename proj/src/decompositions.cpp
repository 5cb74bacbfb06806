#include "numrad/decompositions.hpp"

#include <cmath>
#include <limits>

#include "numrad/linalg.hpp"

namespace numrad {

AluthgeParams::AluthgeParams(double s_, double t_) : s(s_), t(t_) {
    if (s < 0.0 || t < 0.0 || std::abs(s + t - 1.0) > 1e-12)
        throw ParamOutOfRange("AluthgeParams: need s,t >= 0 with s + t = 1");
}

ComplexMatrix absolute_value(const ComplexMatrix& T) {
    if (!T.square()) throw DimensionMismatch("absolute_value: square matrix required");
    return psd_power(T.adjoint() * T, 0.5);
}

namespace {

// diag projector of retained singular directions: sigma_i > n*eps*sigma_1
std::vector<double> rank_mask(const std::vector<double>& sig, int n) {
    const double tol = sig.empty() ? 0.0
                                   : static_cast<double>(n) *
                                         std::numeric_limits<double>::epsilon() * sig.front();
    std::vector<double> mask(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i) mask[i] = (sig[i] > tol) ? 1.0 : 0.0;
    return mask;
}

}  // namespace

PolarParts polar(const ComplexMatrix& T) {
    if (!T.square()) throw DimensionMismatch("polar: square matrix required");
    const int n = T.rows();
    SvdParts sv = svd(T);
    const std::vector<double> mask = rank_mask(sv.singulars, n);

    // U = W Pi V*,  P = V Sigma V*
    std::vector<cplx> wpi(static_cast<std::size_t>(n) * n);
    std::vector<cplx> vsig(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            wpi[static_cast<std::size_t>(i) * n + k] = sv.left(i, k) * mask[k];
            vsig[static_cast<std::size_t>(i) * n + k] = sv.right(i, k) * sv.singulars[k];
        }
    ComplexMatrix vadj = sv.right.adjoint();
    PolarParts out;
    out.isometryPart = ComplexMatrix(n, n, std::move(wpi)) * vadj;
    out.modulus = ComplexMatrix(n, n, std::move(vsig)) * vadj;
    return out;
}

CartesianParts cartesian(const ComplexMatrix& T) {
    if (!T.square()) throw DimensionMismatch("cartesian: square matrix required");
    const int n = T.rows();
    ComplexMatrix adj = T.adjoint();
    std::vector<cplx> x(static_cast<std::size_t>(n) * n), y(x.size());
    auto td = T.data();
    auto ad = adj.data();
    for (std::size_t i = 0; i < x.size(); ++i) {
        // exact hermitian halves: X = (T+T*)/2, Y = (T-T*)/(2i)
        x[i] = 0.5 * (td[i] + ad[i]);
        const cplx d = td[i] - ad[i];
        y[i] = cplx(0.5 * d.imag(), -0.5 * d.real());
    }
    CartesianParts out;
    out.realPart = ComplexMatrix(n, n, std::move(x));
    out.imagPart = ComplexMatrix(n, n, std::move(y));
    return out;
}

ComplexMatrix aluthge(const ComplexMatrix& T, const AluthgeParams& p) {
    if (!T.square()) throw DimensionMismatch("aluthge: square matrix required");
    AluthgeParams check(p.s, p.t);  // validate
    const int n = T.rows();
    SvdParts sv = svd(T);
    const std::vector<double> mask = rank_mask(sv.singulars, n);

    // |T|^a = V Sigma^a V* from the same SVD; U = W Pi V*
    auto psd_pow_from_svd = [&](double a) {
        if (a == 0.0) return ComplexMatrix::identity(n);
        std::vector<cplx> m(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                m[static_cast<std::size_t>(i) * n + k] = sv.right(i, k) * std::pow(sv.singulars[k], a);
        return ComplexMatrix(n, n, std::move(m)) * sv.right.adjoint();
    };
    std::vector<cplx> wpi(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            wpi[static_cast<std::size_t>(i) * n + k] = sv.left(i, k) * mask[k];
    ComplexMatrix U = ComplexMatrix(n, n, std::move(wpi)) * sv.right.adjoint();
    return psd_pow_from_svd(p.s) * U * psd_pow_from_svd(p.t);
}

}  // namespace numrad
