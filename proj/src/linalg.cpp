#include "numrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "numrad/kernels.hpp"

namespace numrad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// Cyclic complex Jacobi for hermitian h (row-major, clobbered). When vt is
// non-null it must hold the n x n identity on entry; rows of vt accumulate the
// eigenvectors (vt = V^T, i.e. vt row i is eigenvector i).
// On exit diag(h) holds the eigenvalues, unsorted.
void jacobi_hermitian(cplx* h, int n, cplx* vt) {
    if (n <= 1) return;
    const auto& K = kern::active();
    const int max_sweeps = 60;
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale += std::norm(h[i * n + j]);
    scale = std::sqrt(scale);
    if (scale == 0.0) return;
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h[p * n + q]);
        if (std::sqrt(2.0 * off) <= stop) return;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = h[p * n + q];
                const double aab = std::abs(apq);
                const double app = h[p * n + p].real();
                const double aqq = h[q * n + q].real();
                if (aab == 0.0) continue;
                if (aab <= 0.5 * kEps * (std::abs(app) + std::abs(aqq))) {
                    // negligible against the diagonal; annihilate outright
                    h[p * n + q] = 0.0;
                    h[q * n + p] = 0.0;
                    continue;
                }
                const cplx phase = apq / aab;
                const double tau = (aqq - app) / (2.0 * aab);
                const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
                const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sigma = s * phase;

                // rows: h <- J* h  (contiguous, SIMD kernel)
                K.rot_pair(c, -sigma, h + p * n, h + q * n, n);
                // cols: h <- h J   (strided)
                const cplx sc = -std::conj(sigma);
                for (int i = 0; i < n; ++i) {
                    const cplx x = h[i * n + p];
                    const cplx y = h[i * n + q];
                    h[i * n + p] = c * x + sc * y;
                    h[i * n + q] = c * y - std::conj(sc) * x;
                }
                h[p * n + q] = 0.0;  // rotation zeroes it by construction
                h[q * n + p] = 0.0;
                h[p * n + p] = cplx(h[p * n + p].real(), 0.0);
                h[q * n + q] = cplx(h[q * n + q].real(), 0.0);
                if (vt) K.rot_pair(c, sc, vt + p * n, vt + q * n, n);
            }
        }
    }
    throw NoConvergence("jacobi_hermitian: sweep limit reached");
}

// ---------------------------------------------------------------------------
// Householder reduction of hermitian h (clobbered) to real tridiagonal (d, e)
// for the eigenvalues-only path. Subdiagonal phases fold into |e| (diagonal
// unitary similarity), so only magnitudes are kept.
void tridiag_values(cplx* h, int n, double* d, double* e) {
    std::vector<cplx> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(h[static_cast<std::size_t>(i) * n + k]);
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) {
            e[k] = 0.0;
            continue;
        }
        const cplx alpha = h[static_cast<std::size_t>(k + 1) * n + k];
        const double aa = std::abs(alpha);
        const cplx phase = (aa == 0.0) ? cplx(1.0) : alpha / aa;
        const cplx beta = -phase * xnorm;
        double vn2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = h[static_cast<std::size_t>(i) * n + k];
            if (i == k + 1) v[i] -= beta;
            vn2 += std::norm(v[i]);
        }
        e[k] = xnorm;
        if (vn2 == 0.0) continue;
        const double tau = 2.0 / vn2;
        // left: rows k+1.., cols k..
        for (int j = k; j < n; ++j) {
            cplx w = 0.0;
            for (int i = k + 1; i < n; ++i) w += std::conj(v[i]) * h[static_cast<std::size_t>(i) * n + j];
            w *= tau;
            for (int i = k + 1; i < n; ++i) h[static_cast<std::size_t>(i) * n + j] -= w * v[i];
        }
        // right: cols k+1.., rows k..
        for (int i = k; i < n; ++i) {
            cplx w = 0.0;
            for (int j = k + 1; j < n; ++j) w += h[static_cast<std::size_t>(i) * n + j] * v[j];
            w *= tau;
            for (int j = k + 1; j < n; ++j) h[static_cast<std::size_t>(i) * n + j] -= w * std::conj(v[j]);
        }
    }
    for (int i = 0; i < n; ++i) d[i] = h[static_cast<std::size_t>(i) * n + i].real();
    if (n >= 2) e[n - 2] = std::abs(h[static_cast<std::size_t>(n - 1) * n + (n - 2)]);
}

// Implicit-shift QL on a real symmetric tridiagonal; eigenvalues land in d.
void tql_values(double* d, double* e, int n) {
    if (n <= 1) return;
    std::vector<double> ee(e, e + (n - 1));
    ee.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(ee[m]) <= kEps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NoConvergence("tql_values: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * ee[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + ee[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * ee[i];
                    const double b = c * ee[i];
                    r = std::hypot(f, g);
                    ee[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        ee[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                ee[l] = g;
                ee[m] = 0.0;
            }
        } while (m != l);
    }
}

void check_hermitian_pre(const ComplexMatrix& H, const char* who) {
    if (!H.square()) throw DimensionMismatch(std::string(who) + ": square matrix required");
    double diff = 0.0, fro = 0.0;
    for (int i = 0; i < H.rows(); ++i)
        for (int j = 0; j < H.cols(); ++j) {
            diff += std::norm(H(i, j) - std::conj(H(j, i)));
            fro += std::norm(H(i, j));
        }
    if (std::sqrt(diff) > 1e-10 * (1.0 + std::sqrt(fro)))
        throw NotHermitian(std::string(who) + ": input is not hermitian");
}

// exact (H + H*)/2 into a raw buffer
std::vector<cplx> symmetrized(const ComplexMatrix& H) {
    const int n = H.rows();
    std::vector<cplx> h(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        h[static_cast<std::size_t>(i) * n + i] = cplx(H(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (H(i, j) + std::conj(H(j, i)));
            h[static_cast<std::size_t>(i) * n + j] = v;
            h[static_cast<std::size_t>(j) * n + i] = std::conj(v);
        }
    }
    return h;
}

}  // namespace

HermitianEig eig_hermitian(const ComplexMatrix& H) {
    check_hermitian_pre(H, "eig_hermitian");
    const int n = H.rows();
    std::vector<cplx> h = symmetrized(H);
    std::vector<cplx> vt(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) vt[static_cast<std::size_t>(i) * n + i] = 1.0;
    jacobi_hermitian(h.data(), n, vt.data());

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return h[static_cast<std::size_t>(a) * n + a].real() < h[static_cast<std::size_t>(b) * n + b].real();
    });

    HermitianEig out;
    out.eigenvalues.resize(n);
    std::vector<cplx> vecs(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        out.eigenvalues[k] = h[static_cast<std::size_t>(src) * n + src].real();
        for (int i = 0; i < n; ++i)
            vecs[static_cast<std::size_t>(i) * n + k] = vt[static_cast<std::size_t>(src) * n + i];
    }
    out.eigenvectors = ComplexMatrix(n, n, std::move(vecs));
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H) {
    check_hermitian_pre(H, "hermitian_eigenvalues");
    const int n = H.rows();
    std::vector<cplx> h = symmetrized(H);
    std::vector<double> d(n), e(std::max(n - 1, 1));
    tridiag_values(h.data(), n, d.data(), e.data());
    tql_values(d.data(), e.data(), n);
    std::sort(d.begin(), d.end());
    return d;
}

// ---------------------------------------------------------------------------
// HermitianExtremes: closed forms for n <= 2, Jacobi (values only) above.

HermitianExtremes::HermitianExtremes(int n) : n_(n), d_(n), e_(std::max(n - 1, 1)) {}

double HermitianExtremes::lambda_max(cplx* h) {
    if (n_ == 1) return h[0].real();
    if (n_ == 2) {
        const double a = h[0].real(), d = h[3].real();
        return 0.5 * (a + d) + std::hypot(0.5 * (a - d), std::abs(h[1]));
    }
    tridiag_values(h, n_, d_.data(), e_.data());
    tql_values(d_.data(), e_.data(), n_);
    double m = d_[0];
    for (int i = 1; i < n_; ++i) m = std::max(m, d_[i]);
    return m;
}

double HermitianExtremes::lambda_min(cplx* h) {
    if (n_ == 1) return h[0].real();
    if (n_ == 2) {
        const double a = h[0].real(), d = h[3].real();
        return 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(h[1]));
    }
    tridiag_values(h, n_, d_.data(), e_.data());
    tql_values(d_.data(), e_.data(), n_);
    double m = d_[0];
    for (int i = 1; i < n_; ++i) m = std::min(m, d_[i]);
    return m;
}

// ---------------------------------------------------------------------------
// One-sided Jacobi SVD. ct holds A^T (rows of ct = columns of A), vt holds
// V^T; both updated by contiguous row rotations.

SvdParts svd(const ComplexMatrix& T) {
    if (!T.square()) throw DimensionMismatch("svd: square matrix required");
    const int n = T.rows();
    const auto& K = kern::active();

    std::vector<cplx> ct(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ct[static_cast<std::size_t>(j) * n + i] = T(i, j);
    std::vector<cplx> vt(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) vt[static_cast<std::size_t>(i) * n + i] = 1.0;

    const int max_sweeps = 60;
    bool converged = (n == 1);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx* rp = ct.data() + static_cast<std::size_t>(p) * n;
                cplx* rq = ct.data() + static_cast<std::size_t>(q) * n;
                double alpha = 0.0, beta = 0.0;
                cplx gamma = 0.0;
                for (int j = 0; j < n; ++j) {
                    alpha += std::norm(rp[j]);
                    beta += std::norm(rq[j]);
                    gamma += std::conj(rp[j]) * rq[j];
                }
                const double g = std::abs(gamma);
                if (g <= 1e-15 * std::sqrt(alpha * beta) || g == 0.0) continue;
                converged = false;
                const cplx phase = gamma / g;
                const double tau = (beta - alpha) / (2.0 * g);
                const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
                const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sc = -std::conj(s * phase);
                K.rot_pair(c, sc, rp, rq, n);
                K.rot_pair(c, sc, vt.data() + static_cast<std::size_t>(p) * n,
                           vt.data() + static_cast<std::size_t>(q) * n, n);
            }
        }
    }
    if (!converged) throw NoConvergence("svd: jacobi sweep limit reached");

    std::vector<double> sig(n);
    for (int p = 0; p < n; ++p) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += std::norm(ct[static_cast<std::size_t>(p) * n + j]);
        sig[p] = std::sqrt(acc);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] > sig[b]; });

    const double smax = sig[order[0]];
    const double drop = static_cast<double>(n) * kEps * smax;

    // ut rows = columns of U
    std::vector<cplx> ut(static_cast<std::size_t>(n) * n, cplx(0.0));
    std::vector<double> sorted_sig(n);
    std::vector<bool> filled(n, false);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        sorted_sig[k] = sig[src];
        if (sig[src] > drop && sig[src] > 0.0) {
            const double inv = 1.0 / sig[src];
            for (int j = 0; j < n; ++j)
                ut[static_cast<std::size_t>(k) * n + j] = inv * ct[static_cast<std::size_t>(src) * n + j];
            filled[k] = true;
        }
    }
    // complete the null-space columns of U: take the identity vector with the
    // largest residual against the filled columns, orthogonalized twice
    auto project_out = [&](std::vector<cplx>& w) {
        for (int m = 0; m < n; ++m) {
            if (!filled[m]) continue;
            const cplx* um = ut.data() + static_cast<std::size_t>(m) * n;
            cplx ov = 0.0;
            for (int j = 0; j < n; ++j) ov += w[j] * std::conj(um[j]);
            for (int j = 0; j < n; ++j) w[j] -= ov * um[j];
        }
    };
    for (int k = 0; k < n; ++k) {
        if (filled[k]) continue;
        std::vector<cplx> best;
        double best_norm = -1.0;
        for (int cand = 0; cand < n; ++cand) {
            std::vector<cplx> w(n, cplx(0.0));
            w[cand] = 1.0;
            project_out(w);
            const double wn = vec_norm(w);
            if (wn > best_norm) {
                best_norm = wn;
                best = std::move(w);
            }
        }
        if (best_norm <= 1e-8) throw NoConvergence("svd: failed to complete orthonormal basis");
        for (cplx& z : best) z /= best_norm;
        project_out(best);
        const double bn = vec_norm(best);
        for (int j = 0; j < n; ++j) ut[static_cast<std::size_t>(k) * n + j] = best[j] / bn;
        filled[k] = true;
    }

    std::vector<cplx> left(static_cast<std::size_t>(n) * n), right(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            left[static_cast<std::size_t>(i) * n + k] = ut[static_cast<std::size_t>(k) * n + i];
            right[static_cast<std::size_t>(i) * n + k] =
                vt[static_cast<std::size_t>(order[k]) * n + i];
        }
    SvdParts out;
    out.left = ComplexMatrix(n, n, std::move(left));
    out.singulars = std::move(sorted_sig);
    out.right = ComplexMatrix(n, n, std::move(right));
    return out;
}

// ---------------------------------------------------------------------------
// General eigenvalues: Householder Hessenberg + single-shift QR.

namespace {

struct Givens {
    double c;
    cplx s;
    cplx r;
};

Givens make_givens(cplx f, cplx g) {
    const double af = std::abs(f), ag = std::abs(g);
    if (ag == 0.0) return {1.0, cplx(0.0), f};
    if (af == 0.0) return {0.0, std::conj(g) / ag, cplx(ag)};
    const double r = std::hypot(af, ag);
    const cplx fphase = f / af;
    return {af / r, fphase * std::conj(g) / r, fphase * r};
}

void hessenberg(std::vector<cplx>& m, int n) {
    auto at = [&](int i, int j) -> cplx& { return m[static_cast<std::size_t>(i) * n + j]; };
    std::vector<cplx> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(at(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const cplx alpha = at(k + 1, k);
        const double aa = std::abs(alpha);
        const cplx phase = (aa == 0.0) ? cplx(1.0) : alpha / aa;
        const cplx beta = -phase * xnorm;
        double vn2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = at(i, k);
            if (i == k + 1) v[i] -= beta;
            vn2 += std::norm(v[i]);
        }
        if (vn2 == 0.0) continue;
        const double taur = 2.0 / vn2;
        // left: rows k+1..n-1
        for (int j = k; j < n; ++j) {
            cplx w = 0.0;
            for (int i = k + 1; i < n; ++i) w += std::conj(v[i]) * at(i, j);
            w *= taur;
            for (int i = k + 1; i < n; ++i) at(i, j) -= w * v[i];
        }
        // right: cols k+1..n-1
        for (int i = 0; i < n; ++i) {
            cplx w = 0.0;
            for (int j = k + 1; j < n; ++j) w += at(i, j) * v[j];
            w *= taur;
            for (int j = k + 1; j < n; ++j) at(i, j) -= w * std::conj(v[j]);
        }
        at(k + 1, k) = beta;
        for (int i = k + 2; i < n; ++i) at(i, k) = 0.0;
    }
}

std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
    const cplx tr2 = 0.5 * (a + d);
    const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    return {tr2 + disc, tr2 - disc};
}

}  // namespace

std::vector<cplx> eig_general(const ComplexMatrix& T) {
    if (!T.square()) throw DimensionMismatch("eig_general: square matrix required");
    const int n = T.rows();
    std::vector<cplx> m(T.data().begin(), T.data().end());
    auto at = [&](int i, int j) -> cplx& { return m[static_cast<std::size_t>(i) * n + j]; };

    hessenberg(m, n);
    std::vector<cplx> ev;
    ev.reserve(n);

    int hi = n - 1;
    int iters_this_window = 0;
    int total_iters = 0;
    const int max_total = 60 * std::max(n, 4);

    while (hi >= 0) {
        // deflation scan
        int lo = 0;
        for (int l = hi; l >= 1; --l) {
            const double sub = std::abs(at(l, l - 1));
            const double diag = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
            if (sub <= kEps * diag || sub < 1e-300) {
                at(l, l - 1) = 0.0;
                lo = l;
                break;
            }
        }
        if (lo == hi) {
            ev.push_back(at(hi, hi));
            --hi;
            iters_this_window = 0;
            continue;
        }
        if (lo == hi - 1) {
            auto [l1, l2] = eig2x2(at(lo, lo), at(lo, hi), at(hi, lo), at(hi, hi));
            ev.push_back(l1);
            ev.push_back(l2);
            hi -= 2;
            iters_this_window = 0;
            continue;
        }
        if (++total_iters > max_total) throw NoConvergence("eig_general: QR iteration stalled");
        ++iters_this_window;

        cplx mu;
        if (iters_this_window % 12 == 0) {
            mu = at(hi, hi) + 1.25 * std::abs(at(hi, hi - 1));  // exceptional shift
        } else {
            auto [l1, l2] = eig2x2(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi));
            mu = (std::abs(l1 - at(hi, hi)) < std::abs(l2 - at(hi, hi))) ? l1 : l2;
        }

        // implicit single-shift sweep over [lo, hi]
        for (int k = lo; k < hi; ++k) {
            cplx f, g;
            if (k == lo) {
                f = at(lo, lo) - mu;
                g = at(lo + 1, lo);
            } else {
                f = at(k, k - 1);
                g = at(k + 1, k - 1);
            }
            const Givens gv = make_givens(f, g);
            if (k > lo) {
                at(k, k - 1) = gv.r;
                at(k + 1, k - 1) = 0.0;
            }
            // rows k, k+1 over columns k..hi
            for (int j = k; j <= hi; ++j) {
                const cplx x = at(k, j), y = at(k + 1, j);
                at(k, j) = gv.c * x + gv.s * y;
                at(k + 1, j) = gv.c * y - std::conj(gv.s) * x;
            }
            // cols k, k+1 over rows lo..min(hi, k+2)
            const int rmax = std::min(hi, k + 2);
            for (int i = lo; i <= rmax; ++i) {
                const cplx x = at(i, k + 1), y = at(i, k);
                at(i, k + 1) = gv.c * x - gv.s * y;
                at(i, k) = gv.c * y + std::conj(gv.s) * x;
            }
        }
    }

    std::sort(ev.begin(), ev.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

// ---------------------------------------------------------------------------

ComplexMatrix apply_spectral_function(const ComplexMatrix& P,
                                      const std::function<double(double)>& f) {
    HermitianEig eg = eig_hermitian(P);
    const int n = P.rows();
    const double lmax = std::max(std::abs(eg.eigenvalues.front()), std::abs(eg.eigenvalues.back()));
    const double floor = -1e-10 * (1.0 + lmax);
    if (eg.eigenvalues.front() < floor)
        throw NotPsd("apply_spectral_function: eigenvalue below psd tolerance");
    std::vector<double> fv(n);
    for (int i = 0; i < n; ++i) {
        fv[i] = f(std::max(eg.eigenvalues[i], 0.0));
        if (!std::isfinite(fv[i]))
            throw DomainError("apply_spectral_function: f produced a non-finite value");
    }
    // V diag(fv) V*, then exact re-hermitization
    const ComplexMatrix& V = eg.eigenvectors;
    std::vector<cplx> w(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            w[static_cast<std::size_t>(i) * n + k] = V(i, k) * fv[k];
    ComplexMatrix R = ComplexMatrix(n, n, std::move(w)) * V.adjoint();
    std::vector<cplx> sym(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        sym[static_cast<std::size_t>(i) * n + i] = cplx(R(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (R(i, j) + std::conj(R(j, i)));
            sym[static_cast<std::size_t>(i) * n + j] = v;
            sym[static_cast<std::size_t>(j) * n + i] = std::conj(v);
        }
    }
    return ComplexMatrix(n, n, std::move(sym));
}

ComplexMatrix psd_power(const ComplexMatrix& P, double p) {
    if (p < 0.0) throw DomainError("psd_power: negative exponent");
    if (p == 0.0) return ComplexMatrix::identity(P.rows());
    return apply_spectral_function(P, [p](double t) { return std::pow(t, p); });
}

ComplexMatrix qr_unitary(const ComplexMatrix& G) {
    if (!G.square()) throw DimensionMismatch("qr_unitary: square matrix required");
    const int n = G.rows();
    std::vector<cplx> r(G.data().begin(), G.data().end());
    auto at = [&](std::vector<cplx>& m, int i, int j) -> cplx& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    struct Reflector {
        int k;
        std::vector<cplx> v;
        double tau;
    };
    std::vector<Reflector> refs;

    for (int k = 0; k < n - 1; ++k) {
        double xnorm2 = 0.0;
        for (int i = k; i < n; ++i) xnorm2 += std::norm(at(r, i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const cplx alpha = at(r, k, k);
        const double aa = std::abs(alpha);
        const cplx phase = (aa == 0.0) ? cplx(1.0) : alpha / aa;
        const cplx beta = -phase * xnorm;
        std::vector<cplx> v(n, cplx(0.0));
        double vn2 = 0.0;
        for (int i = k; i < n; ++i) {
            v[i] = at(r, i, k);
            if (i == k) v[i] -= beta;
            vn2 += std::norm(v[i]);
        }
        if (vn2 == 0.0) continue;
        const double tau = 2.0 / vn2;
        for (int j = k; j < n; ++j) {
            cplx w = 0.0;
            for (int i = k; i < n; ++i) w += std::conj(v[i]) * at(r, i, j);
            w *= tau;
            for (int i = k; i < n; ++i) at(r, i, j) -= w * v[i];
        }
        at(r, k, k) = beta;
        for (int i = k + 1; i < n; ++i) at(r, i, k) = 0.0;
        refs.push_back({k, std::move(v), tau});
    }

    std::vector<cplx> q(static_cast<std::size_t>(n) * n, cplx(0.0));
    for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + i] = 1.0;
    for (auto it = refs.rbegin(); it != refs.rend(); ++it) {
        for (int j = 0; j < n; ++j) {
            cplx w = 0.0;
            for (int i = it->k; i < n; ++i) w += std::conj(it->v[i]) * q[static_cast<std::size_t>(i) * n + j];
            w *= it->tau;
            for (int i = it->k; i < n; ++i) q[static_cast<std::size_t>(i) * n + j] -= w * it->v[i];
        }
    }
    // Haar phase fix: columns scaled by conj(phase(R_jj))
    for (int j = 0; j < n; ++j) {
        const cplx d = at(r, j, j);
        const double ad = std::abs(d);
        const cplx ph = (ad == 0.0) ? cplx(1.0) : std::conj(d / ad);
        for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + j] *= ph;
    }
    return ComplexMatrix(n, n, std::move(q));
}

cplx determinant(const ComplexMatrix& A) {
    if (!A.square()) throw DimensionMismatch("determinant: square matrix required");
    const int n = A.rows();
    std::vector<cplx> m(A.data().begin(), A.data().end());
    auto at = [&](int i, int j) -> cplx& { return m[static_cast<std::size_t>(i) * n + j]; };
    cplx det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(at(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(at(i, k)) > best) {
                best = std::abs(at(i, k));
                piv = i;
            }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            det = -det;
        }
        det *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

}  // namespace numrad
