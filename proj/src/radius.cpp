#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "numrad/kernels.hpp"
#include "numrad/linalg.hpp"

namespace numrad {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// g(theta) = lambda_max(Re(e^{i theta} T)), workspace reused across the grid.
// The combine s*T + conj(s)*T^* is exactly hermitian entrywise (conjugate
// multiply trees mirror), so the extreme-eigenvalue solver needs no checks.
class AngleEval {
public:
    explicit AngleEval(const ComplexMatrix& T)
        : n_(T.rows()),
          ext_(T.rows()),
          t_(T.data().begin(), T.data().end()),
          ts_(static_cast<std::size_t>(n_) * n_),
          m_(static_cast<std::size_t>(n_) * n_) {
        ComplexMatrix adj = T.adjoint();
        std::copy(adj.data().begin(), adj.data().end(), ts_.begin());
    }

    double g(double theta) {
        const cplx s = 0.5 * cplx(std::cos(theta), std::sin(theta));
        kern::active().vcombine(s, t_.data(), std::conj(s), ts_.data(), m_.data(), m_.size());
        return ext_.lambda_max(m_.data());
    }

    ComplexMatrix real_part(double theta) const {
        const cplx s = 0.5 * cplx(std::cos(theta), std::sin(theta));
        std::vector<cplx> m(t_.size());
        kern::active().vcombine(s, t_.data(), std::conj(s), ts_.data(), m.data(), m.size());
        return ComplexMatrix(n_, n_, std::move(m));
    }

    int dim() const { return n_; }

private:
    int n_;
    HermitianExtremes ext_;
    std::vector<cplx> t_, ts_, m_;
};

struct Extremum {
    double theta = 0.0;
    double value = 0.0;
};

// Golden-section refinement of f on [a,b]; tracks the best point seen.
template <typename F>
Extremum golden_max(F&& f, double a, double b, double tol, Extremum best) {
    const double gr = 0.61803398874989484820458683436564;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    auto consider = [&](double th, double v) {
        if (v > best.value) best = {th, v};
    };
    consider(c, fc);
    consider(d, fd);
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
            consider(d, fd);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
            consider(c, fc);
        }
    }
    return best;
}

// Grid scan + multi-start golden refinement; returns the best (theta, value).
template <typename F>
Extremum maximize_periodic(F&& f, const RadiusOptions& opt) {
    const int K = std::max(opt.gridK, 8);
    const double h = kTwoPi / K;
    std::vector<double> grid(K);
    Extremum best{0.0, -std::numeric_limits<double>::infinity()};
    for (int k = 0; k < K; ++k) {
        grid[k] = f(k * h);
        if (grid[k] > best.value) best = {k * h, grid[k]};
    }
    // local maxima on the cyclic grid
    std::vector<int> locals;
    for (int k = 0; k < K; ++k) {
        const double prev = grid[(k + K - 1) % K];
        const double next = grid[(k + 1) % K];
        if (grid[k] >= prev && grid[k] >= next) locals.push_back(k);
    }
    std::stable_sort(locals.begin(), locals.end(),
                     [&](int a, int b) { return grid[a] > grid[b]; });
    const int nb = std::min<int>(opt.refineBrackets, static_cast<int>(locals.size()));
    for (int i = 0; i < nb; ++i) {
        const double center = locals[i] * h;
        best = golden_max(f, center - h, center + h, opt.bracketTol, best);
    }
    return best;
}

double norm_from_gram(const ComplexMatrix& T) {
    ComplexMatrix g = T.adjoint() * T;
    std::vector<cplx> buf(g.data().begin(), g.data().end());
    HermitianExtremes ext(g.rows());
    return std::sqrt(std::max(0.0, ext.lambda_max(buf.data())));
}

}  // namespace

double op_norm(const ComplexMatrix& T) { return norm_from_gram(T); }

double real_part_extreme(const ComplexMatrix& T, double theta) {
    if (!T.square()) throw DimensionMismatch("real_part_extreme: square matrix required");
    AngleEval ev(T);
    return ev.g(theta);
}

RadiusResult numerical_radius(const ComplexMatrix& T, const RadiusOptions& opt) {
    if (!T.square()) throw DimensionMismatch("numerical_radius: square matrix required");
    const int n = T.rows();
    const double normT = norm_from_gram(T);

    RadiusResult out;
    if (normT == 0.0) {
        out.witness.assign(n, cplx(0.0));
        out.witness[0] = 1.0;
        return out;
    }

    AngleEval ev(T);
    Extremum best = maximize_periodic([&](double th) { return ev.g(th); }, opt);

    out.value = best.value;
    out.lower = best.value;
    out.upper = best.value + normT * opt.bracketTol;
    out.thetaStar = best.theta - kTwoPi * std::floor(best.theta / kTwoPi);
    const double encl_tol = opt.enclTolRel * (1.0 + normT);
    if (out.upper - out.lower > encl_tol)
        throw EnclosureTooWide("numerical_radius: enclosure wider than the configured tolerance");

    HermitianEig eg = eig_hermitian(ev.real_part(out.thetaStar));
    out.witness.resize(n);
    for (int i = 0; i < n; ++i) out.witness[i] = eg.eigenvectors(i, n - 1);
    return out;
}

FovBoundary fov_boundary(const ComplexMatrix& T, int K) {
    if (!T.square()) throw DimensionMismatch("fov_boundary: square matrix required");
    if (K < 3) throw ConfigError("fov_boundary: K must be >= 3");
    const int n = T.rows();
    AngleEval ev(T);
    FovBoundary out;
    out.points.reserve(K);
    out.angles.reserve(K);
    std::vector<cplx> x(n);
    for (int k = 0; k < K; ++k) {
        const double theta = kTwoPi * k / K;
        HermitianEig eg = eig_hermitian(ev.real_part(-theta));
        for (int i = 0; i < n; ++i) x[i] = eg.eigenvectors(i, n - 1);
        const std::vector<cplx> tx = T.apply(x);
        out.points.push_back(inner(tx, x));
        out.angles.push_back(theta);
    }
    return out;
}

namespace {

double cross(const cplx& o, const cplx& a, const cplx& b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

// Andrew monotone chain; returns ccw hull (no repeated endpoint).
std::vector<cplx> convex_hull(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const cplx& a, const cplx& b) { return a == b; }),
              pts.end());
    const int m = static_cast<int>(pts.size());
    if (m < 3) return pts;
    std::vector<cplx> h(2 * m);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = m - 2; i >= 0; --i) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool origin_in_hull(const std::vector<cplx>& hull, double tol) {
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const cplx& a = hull[i];
        const cplx& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, cplx(0.0)) < -tol) return false;
    }
    return true;
}

}  // namespace

double crawford(const ComplexMatrix& T, const RadiusOptions& opt) {
    if (!T.square()) throw DimensionMismatch("crawford: square matrix required");
    const double normT = norm_from_gram(T);
    if (normT == 0.0) return 0.0;

    FovBoundary fb = fov_boundary(T, opt.fovK);
    const std::vector<cplx> hull = convex_hull(fb.points);
    if (origin_in_hull(hull, 1e-12 * (1.0 + normT))) return 0.0;

    // support-function minimum with the same grid + golden policy
    AngleEval ev(T);
    Extremum best = maximize_periodic([&](double th) { return -ev.g(th); }, opt);
    return std::max(0.0, best.value);
}

double spectral_radius(const ComplexMatrix& T) {
    if (!T.square()) throw DimensionMismatch("spectral_radius: square matrix required");
    double r = 0.0;
    for (const cplx& l : eig_general(T)) r = std::max(r, std::abs(l));
    return r;
}

double w_nonneg_entries(const ComplexMatrix& B) {
    if (B.rows() != 2 || B.cols() != 2)
        throw DimensionMismatch("w_nonneg_entries: 2x2 matrix required");
    double e[4];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const cplx& z = B(i, j);
            if (z.imag() != 0.0 || z.real() < 0.0)
                throw NegativeEntry("w_nonneg_entries: entries must be nonnegative reals");
            e[2 * i + j] = z.real();
        }
    const double m = 0.5 * (e[1] + e[2]);
    return 0.5 * (e[0] + e[3]) + std::hypot(0.5 * (e[0] - e[3]), m);
}

}  // namespace numrad
