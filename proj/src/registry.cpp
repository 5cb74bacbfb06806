#include "numrad/registry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numrad/blockops.hpp"
#include "numrad/decompositions.hpp"
#include "numrad/linalg.hpp"

namespace numrad {

const char* check_kind_name(CheckKind k) {
    return k == CheckKind::OperatorLevel ? "operator-level" : "vector-level";
}

const char* expected_name(Expected e) { return e == Expected::Pass ? "pass" : "known-typo"; }

double ParamSet::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw ParamOutOfRange("missing parameter: " + name);
    return it->second;
}

double ParamSet::get_or(const std::string& name, double fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
}

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

const std::vector<double> kRGrid{1.0, 1.5, 2.0, 3.0};
const std::vector<double> kAluthgeGrid{0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kNuGrid{0.25, 0.5, 0.75};
const std::vector<double> kThetaGrid{0.0, kPi / 3.0, kPi};

std::vector<OpClass> all_classes() {
    return {OpClass::General,  OpClass::Normal,  OpClass::SelfAdjoint,
            OpClass::Positive, OpClass::Unitary, OpClass::SquareZero};
}

SlotSpec slot(const std::string& name) { return {name, all_classes()}; }
SlotSpec slot(const std::string& name, OpClass only) { return {name, {only}}; }

ParamSpec param_r(const std::string& name) { return {name, kRGrid, 1.0, 100.0, false}; }
ParamSpec param_aluthge(const std::string& name) { return {name, kAluthgeGrid, 0.0, 1.0, false}; }
ParamSpec param_nu(const std::string& name) { return {name, kNuGrid, 1e-6, 1.0 - 1e-6, false}; }
ParamSpec param_theta() { return {"theta", kThetaGrid, 0.0, 2.0 * kPi, false}; }
ParamSpec param_npow(std::vector<double> grid) { return {"n", std::move(grid), 1.0, 8.0, true}; }

// ---- functional helpers -----------------------------------------------------

double lam_max(const ComplexMatrix& h) { return hermitian_eigenvalues(h).back(); }

// w of a structurally hermitian operand: max |eigenvalue|
double w_herm(const ComplexMatrix& h) {
    auto ev = hermitian_eigenvalues(h);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

double w_of(const CheckContext& c, const ComplexMatrix& m) {
    return numerical_radius(m, c.options.radius).value;
}

ComplexMatrix r_abs(const ComplexMatrix& m) { return absolute_value(m); }

// closed-form spectral radius of [[x, m],[m, y]] with nonneg entries
double r_sym2(double x, double m, double y) {
    return 0.5 * (x + y) + std::hypot(0.5 * (x - y), m);
}

ComplexMatrix mat2r(double a, double b, double c, double d) {
    return ComplexMatrix(2, 2, {cplx(a), cplx(b), cplx(c), cplx(d)});
}

// maximize f over [0, 2pi) with the same grid + golden policy as the radius
double maximize_angle(const std::function<double(double)>& f, int K, double tol) {
    const double h = 2.0 * kPi / K;
    std::vector<double> grid(K);
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < K; ++k) {
        grid[k] = f(k * h);
        best = std::max(best, grid[k]);
    }
    std::vector<int> locals;
    for (int k = 0; k < K; ++k)
        if (grid[k] >= grid[(k + K - 1) % K] && grid[k] >= grid[(k + 1) % K]) locals.push_back(k);
    std::stable_sort(locals.begin(), locals.end(), [&](int a, int b) { return grid[a] > grid[b]; });
    const double gr = 0.61803398874989484820458683436564;
    for (int i = 0; i < std::min<int>(3, static_cast<int>(locals.size())); ++i) {
        double a = locals[i] * h - h, b = locals[i] * h + h;
        double cc = b - gr * (b - a), d = a + gr * (b - a);
        double fc = f(cc), fd = f(d);
        best = std::max({best, fc, fd});
        while (b - a > tol) {
            if (fc < fd) {
                a = cc;
                cc = d;
                fc = fd;
                d = a + gr * (b - a);
                fd = f(d);
                best = std::max(best, fd);
            } else {
                b = d;
                d = cc;
                fd = fc;
                cc = b - gr * (b - a);
                fc = f(cc);
                best = std::max(best, fc);
            }
        }
    }
    return best;
}

// X = a diag(I_k, -I_{n-k}), Y off-diagonal selfadjoint: X Y + Y X = 0 exactly
struct AnticommutingPair {
    ComplexMatrix X, Y, B;  // B = X + iY
};
AnticommutingPair anticommuting_cartesian(const ComplexMatrix& G) {
    const int n = G.rows();
    const int k = (n + 1) / 2;
    const double a = G.frobenius() / n;
    std::vector<cplx> x(static_cast<std::size_t>(n) * n, cplx(0.0));
    std::vector<cplx> y(x.size(), cplx(0.0));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i) * n + i] = (i < k) ? a : -a;
    for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j) {
            y[static_cast<std::size_t>(i) * n + j] = G(i, j);
            y[static_cast<std::size_t>(j) * n + i] = std::conj(G(i, j));
        }
    AnticommutingPair out{ComplexMatrix(n, n, std::move(x)), ComplexMatrix(n, n, std::move(y)),
                          ComplexMatrix::zero(1, 1)};
    out.B = out.X + cplx(0, 1) * out.Y;
    return out;
}

PartEval leq(std::string part, double lhs, double rhs) {
    return {std::move(part), Relation::LeqRhs, lhs, rhs};
}
PartEval ident(std::string part, double lhs, double rhs) {
    return {std::move(part), Relation::Identity, lhs, rhs};
}

// ---- the check table --------------------------------------------------------

std::vector<CheckDef> build_table() {
    std::vector<CheckDef> t;

    // 1. N1
    t.push_back(CheckDef{
        "N1",
        "||A||/2 <= w(A) <= ||A||",
        "",
        {slot("A")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Eq. (1)", "||A||/2 <= w(A) <= ||A||"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const double w = w_of(c, A);
            const double nm = op_norm(A);
            return std::vector<PartEval>{leq("lower", 0.5 * nm, w), leq("upper", w, nm)};
        },
        {}});

    // 2. REF1
    t.push_back(CheckDef{
        "REF1",
        "w(T^n) <= w(T)^n",
        "",
        {slot("T")},
        {param_npow({2.0, 3.0})},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Eq. (2)", "w(T^n) <= w(T)^n"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const int n = static_cast<int>(std::lround(c.params.get("n")));
            const double w = w_of(c, T);
            return std::vector<PartEval>{
                leq("power", w_of(c, matrix_power(T, n)), std::pow(w, n))};
        },
        {}});

    // 3. N2
    t.push_back(CheckDef{
        "N2",
        "w(A) <= ||(|A|+|A*|)||/2 <= (||A|| + ||A^2||^{1/2})/2",
        "",
        {slot("A")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Eq. (3)", "w(A) <= ||(|A|+|A*|)||/2 <= (||A|| + ||A^2||^{1/2})/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const double mid = 0.5 * lam_max(r_abs(A) + r_abs(A.adjoint()));
            const double w = w_of(c, A);
            const double outer = 0.5 * (op_norm(A) + std::sqrt(op_norm(A * A)));
            return std::vector<PartEval>{leq("first", w, mid), leq("second", mid, outer)};
        },
        {}});

    // 4. N3
    t.push_back(CheckDef{
        "N3",
        "||A*A + AA*||/4 <= w(A)^2 <= ||A*A + AA*||/2",
        "",
        {slot("A")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Eq. (4)", "||A*A+AA*||/4 <= w(A)^2 <= ||A*A+AA*||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const double nrm = lam_max(A.adjoint() * A + A * A.adjoint());
            const double w2 = std::pow(w_of(c, A), 2);
            return std::vector<PartEval>{leq("lower", 0.25 * nrm, w2), leq("upper", w2, 0.5 * nrm)};
        },
        {}});

    // 5. T2.5 (vector-level)
    t.push_back(CheckDef{
        "T2.5",
        "|<Xx,x>|^r + |<Yx,x>|^s <= ||f^{2r}(|X|)+g^{2r}(|X*|)+f^{2s}(|Y|)+g^{2s}(|Y*|)||/2, "
        "f(t)=t^alpha, g(t)=t^{1-alpha}",
        "",
        {slot("X"), slot("Y")},
        {param_r("r"), param_r("s"), param_nu("alpha")},
        CheckKind::VectorLevel,
        Expected::Pass,
        {"Theorem 2.5",
         "|<Xx,x>|^r + |<Yx,x>|^s <= ||f^{2r}(|X|)+g^{2r}(|X*|)+f^{2s}(|Y|)+g^{2s}(|Y*|)||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& X = c.op(0);
            const ComplexMatrix& Y = c.op(1);
            const double r = c.params.get("r"), s = c.params.get("s");
            const double al = c.params.get("alpha");
            const ComplexMatrix sum = psd_power(r_abs(X), 2 * r * al) +
                                      psd_power(r_abs(X.adjoint()), 2 * r * (1 - al)) +
                                      psd_power(r_abs(Y), 2 * s * al) +
                                      psd_power(r_abs(Y.adjoint()), 2 * s * (1 - al));
            const double rhs = 0.5 * lam_max(sum);
            double lhs = 0.0;
            for (const VectorTriple& v : *c.vectors) {
                const double qx = std::abs(inner(X.apply(v.a), v.a));
                const double qy = std::abs(inner(Y.apply(v.a), v.a));
                lhs = std::max(lhs, std::pow(qx, r) + std::pow(qy, s));
            }
            return std::vector<PartEval>{leq("sampled-x", lhs, rhs)};
        },
        {}});

    // 6. C2.6
    t.push_back(CheckDef{
        "C2.6",
        "w(A^2) <= ||(|A^2| + |(A^2)*|)||/2",
        "",
        {slot("A")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 2.6", "w(A^2) <= ||(|A^2|+|(A^2)*|)||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix A2 = c.op(0) * c.op(0);
            return std::vector<PartEval>{
                leq("main", w_of(c, A2), 0.5 * lam_max(r_abs(A2) + r_abs(A2.adjoint())))};
        },
        {}});

    // 7. C2.7
    t.push_back(CheckDef{
        "C2.7",
        "w(B*A)^r <= ||(|B*A|^r + |A*B|^r)||/2",
        "",
        {slot("A"), slot("B")},
        {param_r("r")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 2.7", "w^r(B*A) <= ||(|B*A|^r + |A*B|^r)||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix BA = c.op(1).adjoint() * c.op(0);
            const ComplexMatrix AB = c.op(0).adjoint() * c.op(1);
            const double r = c.params.get("r");
            return std::vector<PartEval>{
                leq("main", std::pow(w_of(c, BA), r),
                    0.5 * lam_max(psd_power(r_abs(BA), r) + psd_power(r_abs(AB), r)))};
        },
        {}});

    // 8. T2.8 (vector-level)
    t.push_back(CheckDef{
        "T2.8",
        "|<Ax,x>|^r |<Bx,x>|^s <= ||alpha f^{2r/alpha}(|A|) + alpha g^{2r/alpha}(|A*|) + "
        "(1-alpha) f^{2s/(1-alpha)}(|B|) + (1-alpha) g^{2s/(1-alpha)}(|B*|)||/2, f(t)=t^alpha, "
        "g(t)=t^{1-alpha}",
        "",
        {slot("A"), slot("B")},
        {param_r("r"), param_r("s"), param_nu("alpha")},
        CheckKind::VectorLevel,
        Expected::Pass,
        {"Theorem 2.8",
         "|<Ax,x>|^r |<Bx,x>|^s <= ||a f^{2r/a}(|A|)+a g^{2r/a}(|A*|)+(1-a) f^{2s/(1-a)}(|B|)"
         "+(1-a) g^{2s/(1-a)}(|B*|)||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const double r = c.params.get("r"), s = c.params.get("s");
            const double al = c.params.get("alpha");
            const ComplexMatrix sum =
                psd_power(r_abs(A), 2 * r).scaled(al) +
                psd_power(r_abs(A.adjoint()), 2 * r * (1 - al) / al).scaled(al) +
                psd_power(r_abs(B), 2 * s * al / (1 - al)).scaled(1 - al) +
                psd_power(r_abs(B.adjoint()), 2 * s).scaled(1 - al);
            const double rhs = 0.5 * lam_max(sum);
            double lhs = 0.0;
            for (const VectorTriple& v : *c.vectors) {
                const double qa = std::abs(inner(A.apply(v.a), v.a));
                const double qb = std::abs(inner(B.apply(v.a), v.a));
                lhs = std::max(lhs, std::pow(qa, r) * std::pow(qb, s));
            }
            return std::vector<PartEval>{leq("sampled-x", lhs, rhs)};
        },
        {}});

    // 9. F1
    t.push_back(CheckDef{
        "F1",
        "w(A)^{2r} <= ||(|A|^{2r} + |A*|^{2r})||/2",
        "",
        {slot("A")},
        {param_r("r")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Remark 2.9", "w^{2r}(A) <= ||(|A|^{2r}+|A*|^{2r})||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const double r = c.params.get("r");
            return std::vector<PartEval>{
                leq("main", std::pow(w_of(c, A), 2 * r),
                    0.5 * lam_max(psd_power(r_abs(A), 2 * r) +
                                  psd_power(r_abs(A.adjoint()), 2 * r)))};
        },
        {}});

    // 10. L2.11 (vector-level, no operator slots)
    t.push_back(CheckDef{
        "L2.11",
        "|<a,b>| <= sqrt(||a||^2 - <a,e>^2) sqrt(||b||^2 - <b,e>^2) + |<a,e><e,b>| for unit "
        "a,b,e with <a,e>, <b,e> phase-normalized to nonnegative reals",
        "",
        {},
        {},
        CheckKind::VectorLevel,
        Expected::Pass,
        {"Lemma 2.11",
         "|<a,b>| <= sqrt(||a||^2-<a,e>^2) sqrt(||b||^2-<b,e>^2) + |<a,e><e,b>|"},
        false,
        [](const CheckContext& c) {
            double worst_lhs = 0.0, worst_rhs = 0.0;
            double worst = std::numeric_limits<double>::infinity();
            for (const VectorTriple& v : *c.vectors) {
                const double lhs = std::abs(inner(v.a, v.b));
                const double al = std::abs(inner(v.a, v.e));
                const double be = std::abs(inner(v.b, v.e));
                const double rhs = std::sqrt(std::max(0.0, 1.0 - al * al)) *
                                       std::sqrt(std::max(0.0, 1.0 - be * be)) +
                                   al * be;
                if (rhs - lhs < worst) {
                    worst = rhs - lhs;
                    worst_lhs = lhs;
                    worst_rhs = rhs;
                }
            }
            return std::vector<PartEval>{leq("sampled-abe", worst_lhs, worst_rhs)};
        },
        {}});

    // 11. T2.12
    t.push_back(CheckDef{
        "T2.12",
        "w(B*A) <= sqrt(||A||^2 + c(A)^2) sqrt(||B||^2 + c(B)^2) + w(A) w(B); min-form with the "
        "cross pairing min{||A|| sqrt(||B||^2+c(B)^2), ||B|| sqrt(||A||^2+c(A)^2)}; particular "
        "A=B: w(A^2) <= ||A||^2 + c(A)^2 + w(A)^2",
        "the printed min-form pairs each norm with its own sqrt factor, which A=[[0,1],[0,0]], "
        "B=2A falsifies; encoded with the cross pairing the Cauchy-Schwarz derivation yields",
        {slot("A"), slot("B")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 2.12",
         "w(B*A) <= sqrt(||A||^2+c^2(A)) sqrt(||B||^2+c^2(B)) + w(A)w(B)"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const double lhs = w_of(c, B.adjoint() * A);
            const double nA = op_norm(A), nB = op_norm(B);
            const double cA = crawford(A, c.options.radius);
            const double cB = crawford(B, c.options.radius);
            const double wA = w_of(c, A), wB = w_of(c, B);
            const double fA = std::sqrt(nA * nA + cA * cA);
            const double fB = std::sqrt(nB * nB + cB * cB);
            return std::vector<PartEval>{
                leq("product", lhs, fA * fB + wA * wB),
                leq("min", lhs, std::min(nA * fB, nB * fA) + wA * wB),
                leq("selfprod", w_of(c, A * A), nA * nA + cA * cA + wA * wA)};
        },
        {}});

    // 12. T2.13
    t.push_back(CheckDef{
        "T2.13",
        "w(AB +/- BA*)^2 <= 2||A||^2 ( w(X^2)+w(Y^2) + sqrt((w(X^2)-w(Y^2))^2 + w(XY+YX)^2) ), "
        "B = X + iY cartesian",
        "",
        {slot("A"), slot("B")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 2.13",
         "w^2(AB+-BA*) <= 2||A||^2 (w(X^2)+w(Y^2)+sqrt((w(X^2)-w(Y^2))^2+w^2(XY+YX)))"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            CartesianParts cp = cartesian(B);
            const double wx2 = w_herm(cp.realPart * cp.realPart);
            const double wy2 = w_herm(cp.imagPart * cp.imagPart);
            const double wxy = w_herm(cp.realPart * cp.imagPart + cp.imagPart * cp.realPart);
            const double nA = op_norm(A);
            const double rhs =
                2.0 * nA * nA * (wx2 + wy2 + std::sqrt((wx2 - wy2) * (wx2 - wy2) + wxy * wxy));
            const ComplexMatrix AB = A * B, BAs = B * A.adjoint();
            return std::vector<PartEval>{
                leq("plus", std::pow(w_of(c, AB + BAs), 2), rhs),
                leq("minus", std::pow(w_of(c, AB - BAs), 2), rhs)};
        },
        {}});

    // 13. C2.14
    t.push_back(CheckDef{
        "C2.14",
        "(i) XY+YX=0: w(AB +/- BA*) <= 2||A|| max{w(X^2)^{1/2}, w(Y^2)^{1/2}} (B = X+iY built "
        "anticommuting from G); (ii) B self-adjoint: w(AB +/- BA*) <= 2||A|| w(B^2)^{1/2}; "
        "(iii) B self-adjoint: w(AB) <= ||A|| w(B^2)^{1/2}",
        "",
        {slot("A"), slot("B", OpClass::SelfAdjoint), slot("G", OpClass::General)},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 2.14",
         "XY+YX=0 => w(AB+-BA*) <= 2||A|| max{w^{1/2}(X^2), w^{1/2}(Y^2)}"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix& G = c.op(2);
            const double nA = op_norm(A);
            std::vector<PartEval> parts;

            AnticommutingPair ac = anticommuting_cartesian(G);
            const double mx = std::max(std::sqrt(w_herm(ac.X * ac.X)),
                                       std::sqrt(w_herm(ac.Y * ac.Y)));
            const ComplexMatrix AB1 = A * ac.B, B1As = ac.B * A.adjoint();
            parts.push_back(leq("anticommute-plus", w_of(c, AB1 + B1As), 2.0 * nA * mx));
            parts.push_back(leq("anticommute-minus", w_of(c, AB1 - B1As), 2.0 * nA * mx));

            const double wb2 = std::sqrt(w_herm(B * B));
            const ComplexMatrix AB = A * B, BAs = B * A.adjoint();
            parts.push_back(leq("selfadjoint-plus", w_of(c, AB + BAs), 2.0 * nA * wb2));
            parts.push_back(leq("selfadjoint-minus", w_of(c, AB - BAs), 2.0 * nA * wb2));
            parts.push_back(leq("product", w_of(c, AB), nA * wb2));
            return parts;
        },
        {}});

    // 14. T2.15
    t.push_back(CheckDef{
        "T2.15",
        "w(AB +/- BA) <= w(A*A+AA*)^{1/2} w(B*B+BB*)^{1/2} and "
        "w(AB +/- BA) <= w(A*A+B*B)^{1/2} w(AA*+BB*)^{1/2}",
        "",
        {slot("A"), slot("B")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 2.15", "w(AB+-BA) <= w^{1/2}(A*A+AA*) w^{1/2}(B*B+BB*)"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix AB = A * B, BA = B * A;
            const double plus = w_of(c, AB + BA), minus = w_of(c, AB - BA);
            const double ra = std::sqrt(w_herm(A.adjoint() * A + A * A.adjoint()));
            const double rb = std::sqrt(w_herm(B.adjoint() * B + B * B.adjoint()));
            const double rc = std::sqrt(w_herm(A.adjoint() * A + B.adjoint() * B));
            const double rd = std::sqrt(w_herm(A * A.adjoint() + B * B.adjoint()));
            return std::vector<PartEval>{
                leq("i-plus", plus, ra * rb), leq("i-minus", minus, ra * rb),
                leq("ii-plus", plus, rc * rd), leq("ii-minus", minus, rc * rd)};
        },
        {}});

    // 15. C2.16
    t.push_back(CheckDef{
        "C2.16",
        "w(B)^2 <= w(B*B+BB*)/2 and w(B)^2 <= w(I+B*B) w(I+BB*)/4",
        "",
        {slot("B")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 2.16", "w^2(B) <= w(B*B+BB*)/2; w^2(B) <= w(I+B*B)w(I+BB*)/4"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& B = c.op(0);
            const ComplexMatrix I = ComplexMatrix::identity(B.rows());
            const double w2 = std::pow(w_of(c, B), 2);
            return std::vector<PartEval>{
                leq("sum", w2, 0.5 * w_herm(B.adjoint() * B + B * B.adjoint())),
                leq("shifted", w2,
                    0.25 * w_herm(I + B.adjoint() * B) * w_herm(I + B * B.adjoint()))};
        },
        {}});

    // 16. T3.1
    t.push_back(CheckDef{
        "T3.1",
        "h(w(T)) <= ( h(w(Delta_{s,t}(T))) + ||h(|T|)|| )/2 with h(x)=x^p",
        "",
        {slot("T")},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 3.1", "h(w(T)) <= (h(w(Delta_{s,t}(T))) + ||h(|T|)||)/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const double p = c.params.get("p"), s = c.params.get("s");
            const ComplexMatrix delta = aluthge(T, {s, 1.0 - s});
            return std::vector<PartEval>{
                leq("main", std::pow(w_of(c, T), p),
                    0.5 * (std::pow(w_of(c, delta), p) + std::pow(op_norm(T), p)))};
        },
        {}});

    // 17. L3.2
    t.push_back(CheckDef{
        "L3.2",
        "r(AB + CD) <= (w(BA)+w(DC))/2 + sqrt((w(BA)-w(DC))^2 + 4||BC|| ||DA||)/2",
        "",
        {slot("A"), slot("B"), slot("C"), slot("D")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Lemma 3.2", "r(AB+CD) <= (w(BA)+w(DC))/2 + sqrt((w(BA)-w(DC))^2+4||BC||||DA||)/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix& C = c.op(2);
            const ComplexMatrix& D = c.op(3);
            const double lhs = spectral_radius(A * B + C * D);
            const double wba = w_of(c, B * A), wdc = w_of(c, D * C);
            const double rhs = 0.5 * (wba + wdc) +
                               0.5 * std::sqrt((wba - wdc) * (wba - wdc) +
                                               4.0 * op_norm(B * C) * op_norm(D * A));
            return std::vector<PartEval>{leq("main", lhs, rhs)};
        },
        {}});

    // 18. L3.3 (identities)
    t.push_back(CheckDef{
        "L3.3",
        "w(T) = max_theta ||Re(e^{i theta} T)|| and w([[0,T],[0,0]]) = ||T||/2",
        "",
        {slot("T")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Lemma 3.3", "w(T) = max_theta ||Re(e^{i theta}T)||; w([[0,T],[0,0]]) = ||T||/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const double w = w_of(c, T);
            auto norm_re = [&](double th) {
                return std::max(real_part_extreme(T, th), real_part_extreme(T, th + kPi));
            };
            const double viaNorm = maximize_angle(norm_re, c.options.radius.gridK,
                                                  c.options.radius.bracketTol);
            const ComplexMatrix z = ComplexMatrix::zero(T.rows(), T.cols());
            const double half = w_of(c, block2(z, T, z, z).assembled);
            return std::vector<PartEval>{ident("max-re", w, viaNorm),
                                         ident("corner", half, 0.5 * op_norm(T))};
        },
        {}});

    // 19. C3.4
    t.push_back(CheckDef{
        "C3.4",
        "h(w(T)) <= ||h(|T|^{2t}) + h(|T|^{2s})||/4 + h(w(Delta_{s,t}(T)))/2 with h(x)=x^p",
        "",
        {slot("T")},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 3.4", "h(w(T)) <= ||h(|T|^{2t})+h(|T|^{2s})||/4 + h(w(Delta_{s,t}(T)))/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const ComplexMatrix aT = r_abs(T);
            const double rhs =
                0.25 * lam_max(psd_power(aT, 2 * tt * p) + psd_power(aT, 2 * s * p)) +
                0.5 * std::pow(w_of(c, aluthge(T, {s, tt})), p);
            return std::vector<PartEval>{leq("main", std::pow(w_of(c, T), p), rhs)};
        },
        {}});

    // 20. T3.5
    t.push_back(CheckDef{
        "T3.5",
        "h(w([[0,T],[S,0]])) <= max{||h(|T|^{2s})+h(|T|^{2t})||, ||h(|S|^{2t})+h(|S|^{2s})||}/4 "
        "+ ( h(|| |S|^s |T*|^t ||) + h(|| |T|^s |S*|^t ||) )/4 with h(x)=x^p",
        "",
        {slot("T"), slot("S")},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 3.5",
         "h(w(off(T,S))) <= max{||h(|T|^{2s})+h(|T|^{2t})||,||h(|S|^{2t})+h(|S|^{2s})||}/4 "
         "+ (h(|||S|^s|T*|^t||)+h(|||T|^s|S*|^t||))/4"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const ComplexMatrix aT = r_abs(T), aS = r_abs(S);
            const ComplexMatrix aTs = r_abs(T.adjoint()), aSs = r_abs(S.adjoint());
            const double mx =
                std::max(lam_max(psd_power(aT, 2 * s * p) + psd_power(aT, 2 * tt * p)),
                         lam_max(psd_power(aS, 2 * tt * p) + psd_power(aS, 2 * s * p)));
            const double prods =
                std::pow(op_norm(psd_power(aS, s) * psd_power(aTs, tt)), p) +
                std::pow(op_norm(psd_power(aT, s) * psd_power(aSs, tt)), p);
            const double lhs = std::pow(w_of(c, off_diag(T, S).assembled), p);
            return std::vector<PartEval>{leq("main", lhs, 0.25 * mx + 0.25 * prods)};
        },
        {}});

    // 21. C3.6
    t.push_back(CheckDef{
        "C3.6",
        "w([[0,T],[S,0]])^p <= max{||T||^p, ||S||^p}/2 + (|| |S|^s |T*|^t ||^p + "
        "|| |T|^s |S*|^t ||^p)/4",
        "the printed second product carries exponent s on |S*|; encoded with t as the proof "
        "yields",
        {slot("T"), slot("S")},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 3.6",
         "w^p(off(T,S)) <= max{||T||^p,||S||^p}/2 + (|||S|^s|T*|^t||^p+|||T|^s|S*|^t||^p)/4"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const ComplexMatrix aT = r_abs(T), aS = r_abs(S);
            const ComplexMatrix aTs = r_abs(T.adjoint()), aSs = r_abs(S.adjoint());
            const double rhs =
                0.5 * std::pow(std::max(op_norm(T), op_norm(S)), p) +
                0.25 * (std::pow(op_norm(psd_power(aS, s) * psd_power(aTs, tt)), p) +
                        std::pow(op_norm(psd_power(aT, s) * psd_power(aSs, tt)), p));
            const double lhs = std::pow(w_of(c, off_diag(T, S).assembled), p);
            return std::vector<PartEval>{leq("main", lhs, rhs)};
        },
        {}});

    // 22. C3.7
    t.push_back(CheckDef{
        "C3.7",
        "w(TS)^{p/2} <= max{|| |T|^{2sp} + |T|^{2tp} ||, || |S|^{2sp} + |S|^{2tp} ||}/4 + "
        "(|| |T|^s |S*|^t ||^p + || |S|^s |T*|^t ||^p)/4",
        "",
        {slot("T"), slot("S")},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 3.7",
         "w^{p/2}(TS) <= max{|||T|^{2sp}+|T|^{2tp}||,|||S|^{2sp}+|S|^{2tp}||}/4 "
         "+ (|||T|^s|S*|^t||^p+|||S|^s|T*|^t||^p)/4"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const ComplexMatrix aT = r_abs(T), aS = r_abs(S);
            const ComplexMatrix aTs = r_abs(T.adjoint()), aSs = r_abs(S.adjoint());
            const double mx =
                std::max(lam_max(psd_power(aT, 2 * s * p) + psd_power(aT, 2 * tt * p)),
                         lam_max(psd_power(aS, 2 * s * p) + psd_power(aS, 2 * tt * p)));
            const double prods =
                std::pow(op_norm(psd_power(aT, s) * psd_power(aSs, tt)), p) +
                std::pow(op_norm(psd_power(aS, s) * psd_power(aTs, tt)), p);
            return std::vector<PartEval>{
                leq("main", std::pow(w_of(c, T * S), 0.5 * p), 0.25 * mx + 0.25 * prods)};
        },
        {}});

    // 23. C3.8 (positive operands)
    t.push_back(CheckDef{
        "C3.8",
        "||T^{1/2} S^{1/2}||^p <= max{||T^{2sp}+T^{2tp}||, ||S^{2sp}+S^{2tp}||}/4 + "
        "(||T^s S^t||^p + ||S^s T^t||^p)/4 for positive T, S",
        "the printed max-term exponents sp, tp are falsifiable (T=S=2I, s=t=1/2, p=2); encoded "
        "as 2sp, 2tp, which the proof derives; literal=1 runs the printed exponents",
        {slot("T", OpClass::Positive), slot("S", OpClass::Positive)},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 3.8",
         "||T^{1/2}S^{1/2}||^p <= max{||T^{sp}+T^{tp}||,||S^{sp}+S^{tp}||}/4 "
         "+ (||T^sS^t||^p+||S^sT^t||^p)/4"},
        true,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const double ex = c.literal() ? 1.0 : 2.0;  // printed vs proof exponent factor
            const double mx =
                std::max(lam_max(psd_power(T, ex * s * p) + psd_power(T, ex * tt * p)),
                         lam_max(psd_power(S, ex * s * p) + psd_power(S, ex * tt * p)));
            const double prods = std::pow(op_norm(psd_power(T, s) * psd_power(S, tt)), p) +
                                 std::pow(op_norm(psd_power(S, s) * psd_power(T, tt)), p);
            const double lhs = std::pow(op_norm(psd_power(T, 0.5) * psd_power(S, 0.5)), p);
            return std::vector<PartEval>{leq("main", lhs, 0.25 * mx + 0.25 * prods)};
        },
        {}});

    // 24. C3.9
    t.push_back(CheckDef{
        "C3.9",
        "h(||T+S||) <= max{||h(2|T|^{2s})+h(2|T|^{2t})||, ||h(2|S*|^{2s})+h(2|S*|^{2t})||}/4 + "
        "( h(2|| |T|^s |S|^t ||) + h(2|| |S*|^s |T*|^t ||) )/4 with h(x)=x^p",
        "the printed form repeats exponent 2s in the |S*| term (encoded 2s, 2t) and stars the "
        "first product's T (encoded |T|^s|S|^t per the S -> S* substitution in the proof, "
        "consistent with Corollary 3.10)",
        {slot("T"), slot("S")},
        {param_r("p"), param_aluthge("s")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 3.9",
         "h(||T+S||) <= max{||h(2|T|^{2s})+h(2|T|^{2t})||,||h(2|S*|^{2s})+h(2|S*|^{2t})||}/4 "
         "+ (h(2|||T|^s|S|^t||)+h(2|||S*|^s|T*|^t||))/4"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const ComplexMatrix aT = r_abs(T), aS = r_abs(S);
            const ComplexMatrix aTs = r_abs(T.adjoint()), aSs = r_abs(S.adjoint());
            const double two_p = std::pow(2.0, p);
            const double mx =
                two_p *
                std::max(lam_max(psd_power(aT, 2 * s * p) + psd_power(aT, 2 * tt * p)),
                         lam_max(psd_power(aSs, 2 * s * p) + psd_power(aSs, 2 * tt * p)));
            const double prods =
                std::pow(2.0 * op_norm(psd_power(aT, s) * psd_power(aS, tt)), p) +
                std::pow(2.0 * op_norm(psd_power(aSs, s) * psd_power(aTs, tt)), p);
            return std::vector<PartEval>{
                leq("main", std::pow(op_norm(T + S), p), 0.25 * mx + 0.25 * prods)};
        },
        {}});

    // 25. KT-C3.9p (known typo)
    t.push_back(CheckDef{
        "KT-C3.9p",
        "printed normal-case line: h(||T+S||) <= max{h(2||T||), h(2||S||)}/4 + "
        "h(2||TS||^{1/2})/4 with h(x)=x^p, T and S normal",
        "falsified by T = S = I with h = id: lhs 2, rhs 1; kept as a documented misprint",
        {slot("T", OpClass::Normal), slot("S", OpClass::Normal)},
        {param_r("p")},
        CheckKind::OperatorLevel,
        Expected::KnownTypo,
        {"Corollary 3.9 (particular)",
         "h(||T+S||) <= max{h(2||T||),h(2||S||)}/4 + h(2||TS||^{1/2})/4"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p");
            const double rhs =
                0.25 * std::max(std::pow(2.0 * op_norm(T), p), std::pow(2.0 * op_norm(S), p)) +
                0.25 * std::pow(2.0 * std::sqrt(op_norm(T * S)), p);
            return std::vector<PartEval>{leq("main", std::pow(op_norm(T + S), p), rhs)};
        },
        {TypoWitness{"T = S = I, h = id",
                     [](int dim) {
                         return std::vector<ComplexMatrix>{ComplexMatrix::identity(dim),
                                                           ComplexMatrix::identity(dim)};
                     },
                     ParamSet{{{"p", 1.0}}}}}});

    // 26. C3.10
    t.push_back(CheckDef{
        "C3.10",
        "||T+S||^p <= 2^{p-2} max{|| |T|^{2tp} + |T|^{2sp} ||, || |S*|^{2tp} + |S*|^{2sp} ||} + "
        "2^{p-2} (|| |T|^t |S|^s ||^p + || |S*|^t |T*|^s ||^p)",
        "the printed constant 1/2^{2-r} leaves r unbound; encoded with r := p per the h(x)=x^p "
        "substitution; literal=1 uses 2^{r-2} with the sampled r, which fails for r < p",
        {slot("T"), slot("S")},
        {param_r("p"), param_aluthge("s"), param_r("r")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 3.10",
         "||T+S||^p <= (1/2^{2-r}) max{|||T|^{2tp}+|T|^{2sp}||,|||S*|^{2tp}+|S*|^{2sp}||} "
         "+ (1/2^{2-r})(|||T|^t|S|^s||^p+|||S*|^t|T*|^s||^p)"},
        true,
        [](const CheckContext& c) {
            const ComplexMatrix& T = c.op(0);
            const ComplexMatrix& S = c.op(1);
            const double p = c.params.get("p"), s = c.params.get("s");
            const double tt = 1.0 - s;
            const double cexp = c.literal() ? c.params.get("r") : p;
            const double coef = std::pow(2.0, cexp - 2.0);
            const ComplexMatrix aT = r_abs(T), aS = r_abs(S);
            const ComplexMatrix aTs = r_abs(T.adjoint()), aSs = r_abs(S.adjoint());
            const double mx =
                std::max(lam_max(psd_power(aT, 2 * tt * p) + psd_power(aT, 2 * s * p)),
                         lam_max(psd_power(aSs, 2 * tt * p) + psd_power(aSs, 2 * s * p)));
            const double prods =
                std::pow(op_norm(psd_power(aT, tt) * psd_power(aS, s)), p) +
                std::pow(op_norm(psd_power(aSs, tt) * psd_power(aTs, s)), p);
            return std::vector<PartEval>{
                leq("main", std::pow(op_norm(T + S), p), coef * mx + coef * prods)};
        },
        {}});

    // 27. T3.11
    t.push_back(CheckDef{
        "T3.11",
        "w(B*A)^{2r} <= || nu |A|^{2r/nu} + (1-nu) |B|^{2r/(1-nu)} ||",
        "",
        {slot("A"), slot("B")},
        {param_r("r"), param_nu("nu")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 3.11", "w^{2r}(B*A) <= ||nu |A|^{2r/nu} + (1-nu)|B|^{2r/(1-nu)}||"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const double r = c.params.get("r"), nu = c.params.get("nu");
            const ComplexMatrix sum = psd_power(r_abs(A), 2 * r / nu).scaled(nu) +
                                      psd_power(r_abs(B), 2 * r / (1 - nu)).scaled(1 - nu);
            return std::vector<PartEval>{
                leq("main", std::pow(w_of(c, B.adjoint() * A), 2 * r), lam_max(sum))};
        },
        {}});

    // 28. T4.2/C4.3
    t.push_back(CheckDef{
        "T4.2/C4.3",
        "w([[A,B],[C,D]])^r <= 4^{r-1} w([[w(A)^r, ||B||^r],[||C||^r, w(D)^r]]) and the "
        "all-norm variant",
        "",
        {slot("A"), slot("B"), slot("C"), slot("D")},
        {param_r("r")},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 4.2",
         "w^r([[A,B],[C,D]]) <= 4^{r-1} w([[w^r(A),||B||^r],[||C||^r,w^r(D)]])"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix& C = c.op(2);
            const ComplexMatrix& D = c.op(3);
            const double r = c.params.get("r");
            const double lhs = std::pow(w_of(c, block2(A, B, C, D).assembled), r);
            const double coef = std::pow(4.0, r - 1.0);
            const double nB = std::pow(op_norm(B), r), nC = std::pow(op_norm(C), r);
            const double rhs1 = coef * w_nonneg_entries(mat2r(std::pow(w_of(c, A), r), nB, nC,
                                                              std::pow(w_of(c, D), r)));
            const double rhs2 = coef * w_nonneg_entries(mat2r(std::pow(op_norm(A), r), nB, nC,
                                                              std::pow(op_norm(D), r)));
            return std::vector<PartEval>{leq("T4.2", lhs, rhs1), leq("C4.3", lhs, rhs2)};
        },
        {}});

    // 29. C4.5/C4.6
    t.push_back(CheckDef{
        "C4.5/C4.6",
        "w([[A,B],[C,D]]) <= r([c_ij]) <= (w(A)+w(D)+sqrt((w(A)-w(D))^2+(||B||+||C||)^2))/2 "
        "with c11=w(A), c12=c21=(||B||+||C||)/2, c22=w(D); and the all-norm variant",
        "",
        {slot("A"), slot("B"), slot("C"), slot("D")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Corollary 4.5",
         "w(block) <= r([c_ij]) <= (w(A)+w(D)+sqrt((w(A)-w(D))^2+(||B||+||C||)^2))/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix& C = c.op(2);
            const ComplexMatrix& D = c.op(3);
            const double wM = w_of(c, block2(A, B, C, D).assembled);
            const double m = 0.5 * (op_norm(B) + op_norm(C));
            const double wA = w_of(c, A), wD = w_of(c, D);
            const double nA = op_norm(A), nD = op_norm(D);
            const double rw = r_sym2(wA, m, wD);
            const double rn = r_sym2(nA, m, nD);
            return std::vector<PartEval>{
                leq("C4.5-first", wM, rw),
                leq("C4.5-second", rw,
                    0.5 * (wA + wD + std::sqrt((wA - wD) * (wA - wD) + 4 * m * m))),
                leq("C4.6-first", wM, rn),
                leq("C4.6-second", rn,
                    0.5 * (nA + nD + std::sqrt((nA - nD) * (nA - nD) + 4 * m * m)))};
        },
        {}});

    // 30. T4.7
    t.push_back(CheckDef{
        "T4.7",
        "w([[0,A],[B,0]]) >= ( max{w((AB)^n), w((BA)^n)} )^{1/(2n)}",
        "the printed statement takes a scalar root of an operator max; encoded with w applied "
        "first, per the proof line; literal=1 scalarizes the printed form with norms, "
        "max{||(AB)^n||, ||(BA)^n||}^{1/(2n)}, which seeded search falsifies",
        {slot("A"), slot("B")},
        {param_npow({1.0, 2.0, 3.0})},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 4.7", "w(off(A,B)) >= (max{w((AB)^n), w((BA)^n)})^{1/(2n)}"},
        true,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const int n = static_cast<int>(std::lround(c.params.get("n")));
            const ComplexMatrix P1 = matrix_power(A * B, n);
            const ComplexMatrix P2 = matrix_power(B * A, n);
            const double root = c.literal() ? std::max(op_norm(P1), op_norm(P2))
                                            : std::max(w_of(c, P1), w_of(c, P2));
            const double lhs = std::pow(root, 1.0 / (2.0 * n));
            return std::vector<PartEval>{
                leq("main", lhs, w_of(c, off_diag(A, B).assembled))};
        },
        {}});

    // 31. T4.8/C4.9
    t.push_back(CheckDef{
        "T4.8/C4.9",
        "max{w(A-B), w(A+B)}/2 <= w([[0,A],[B,0]]) <= (w(A-B)+w(A+B))/2; and for T = X+iY "
        "cartesian (T := slot A): w(T)/2 <= w([[0,X],[e^{i theta} Y,0]]) <= w(T)",
        "",
        {slot("A"), slot("B")},
        {param_theta()},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 4.8",
         "max{w(A-B),w(A+B)}/2 <= w(off(A,B)) <= (w(A-B)+w(A+B))/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const double th = c.params.get("theta");
            const double woff = w_of(c, off_diag(A, B).assembled);
            const double wm = w_of(c, A - B), wp = w_of(c, A + B);
            std::vector<PartEval> parts{
                leq("T4.8-lower", 0.5 * std::max(wm, wp), woff),
                leq("T4.8-upper", woff, 0.5 * (wm + wp))};
            CartesianParts cp = cartesian(A);
            const ComplexMatrix rotY = cplx(std::cos(th), std::sin(th)) * cp.imagPart;
            const double wofft = w_of(c, off_diag(cp.realPart, rotY).assembled);
            const double wT = w_of(c, A);
            parts.push_back(leq("C4.9-lower", 0.5 * wT, wofft));
            parts.push_back(leq("C4.9-upper", wofft, wT));
            return parts;
        },
        {}});

    // 32. L4.10/T4.11/C4.12/T4.13/T4.14
    t.push_back(CheckDef{
        "L4.10/T4.11/C4.12/T4.13/T4.14",
        "w(block) >= w(diag part), w(block) >= w(offdiag part); max{w(A),w(B)} <= "
        "w([[A,B],[-B,-A]]) <= w(A)+w(B); w(A) <= w([[A,A],[-A,-A]]) <= 2w(A); "
        "max{w(A),w(D),w(B+C)/2,w(B-C)/2} <= w(block) <= max{w(A),w(D)} + (w(B+C)+w(B-C))/2; "
        "w([[0,A],[B,0]]) + |w(A+B)-w(A-B)|/2 <= w(A)+w(B)",
        "",
        {slot("A"), slot("B"), slot("C"), slot("D")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Lemma 4.10",
         "w([[A,B],[C,D]]) >= w([[A,0],[0,D]]) and w([[A,B],[C,D]]) >= w([[0,B],[C,0]])"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix& C = c.op(2);
            const ComplexMatrix& D = c.op(3);
            const double wM = w_of(c, block2(A, B, C, D).assembled);
            const double wA = w_of(c, A), wB = w_of(c, B), wD = w_of(c, D);
            const double wBpC = w_of(c, B + C), wBmC = w_of(c, B - C);
            const double wApB = w_of(c, A + B), wAmB = w_of(c, A - B);
            const ComplexMatrix negA = cplx(-1.0) * A, negB = cplx(-1.0) * B;
            const double wSkew = w_of(c, block2(A, B, negB, negA).assembled);
            const double wSkewAA = w_of(c, block2(A, A, negA, negA).assembled);
            std::vector<PartEval> parts;
            parts.push_back(leq("L4.10-diag", w_of(c, direct_sum(A, D).assembled), wM));
            parts.push_back(leq("L4.10-off", w_of(c, off_diag(B, C).assembled), wM));
            parts.push_back(leq("T4.11-lower", std::max(wA, wB), wSkew));
            parts.push_back(leq("T4.11-upper", wSkew, wA + wB));
            parts.push_back(leq("C4.12-lower", wA, wSkewAA));
            parts.push_back(leq("C4.12-upper", wSkewAA, 2.0 * wA));
            parts.push_back(
                leq("T4.13-lower", std::max({wA, wD, 0.5 * wBpC, 0.5 * wBmC}), wM));
            parts.push_back(
                leq("T4.13-upper", wM, std::max(wA, wD) + 0.5 * (wBpC + wBmC)));
            parts.push_back(leq("T4.14",
                                w_of(c, off_diag(A, B).assembled) + 0.5 * std::abs(wApB - wAmB),
                                wA + wB));
            return parts;
        },
        {}});

    // 33. T4.15
    t.push_back(CheckDef{
        "T4.15",
        "w(X*AY + Y*BX) <= 2||X|| ||Y|| w([[0,A],[B,0]]); particular B=A: w(X*AY + Y*AX) <= "
        "2||X|| ||Y|| w(A)",
        "",
        {slot("A"), slot("B"), slot("X"), slot("Y")},
        {},
        CheckKind::OperatorLevel,
        Expected::Pass,
        {"Theorem 4.15", "w(X*AY+Y*BX) <= 2||X||||Y|| w(off(A,B))"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& A = c.op(0);
            const ComplexMatrix& B = c.op(1);
            const ComplexMatrix& X = c.op(2);
            const ComplexMatrix& Y = c.op(3);
            const double nXY = op_norm(X) * op_norm(Y);
            const ComplexMatrix XAY = X.adjoint() * A * Y;
            const double lhs1 = w_of(c, XAY + Y.adjoint() * B * X);
            const double lhs2 = w_of(c, XAY + Y.adjoint() * A * X);
            return std::vector<PartEval>{
                leq("main", lhs1, 2.0 * nXY * w_of(c, off_diag(A, B).assembled)),
                leq("particular", lhs2, 2.0 * nXY * w_of(c, A))};
        },
        {}});

    // 34. L4.16/L4.17/T4.18/T4.19/R4.20
    t.push_back(CheckDef{
        "L4.16/L4.17/T4.18/T4.19/R4.20",
        "Buzano: |<a,e><e,b>| <= (||a||||b|| + |<a,b>|)/2 and its r-power form; "
        "w(off(B,C))^{2r} <= max{|| |C|^{2r}+|B*|^{2r} ||, || |B|^{2r}+|C*|^{2r} ||}/4 + "
        "max{w(|B*||C|)^r, w(|C*||B|)^r}/2; the nu-weighted variant "
        "w(off(B,C))^{4r} <= max{|| nu|C|^{2r/nu}+(1-nu)|B*|^{2r/(1-nu)} ||, "
        "|| nu|B|^{2r/nu}+(1-nu)|C*|^{2r/(1-nu)} ||}/2 + max{w(|B*||C|)^{2r}, "
        "w(|C*||B|)^{2r}}/2; and the B=C chain "
        "w(B)^{4r} <= || nu|B|^{2r/nu}+(1-nu)|B*|^{2r/(1-nu)} ||/2 + w(|B*||B|)^{2r}/2 <= "
        "|| nu|B|^{2r/nu}+(1-nu)|B*|^{2r/(1-nu)} ||",
        "the headline matrices are written with A,B while the bodies use B,C (encoded over "
        "off(B,C)); the r-power Buzano's truncated range reads r >= 1; the printed left-hand "
        "exponents w^r, w^{2r}, w^{2r} are falsifiable (B=C=J/2 resp. B=J/2 with J the 2x2 "
        "shift) because the Buzano step bounds |<Tx,x>|^2 -- encoded as w^{2r}, w^{4r}, "
        "w^{4r}, which the proofs derive and which are tight at those instances",
        {slot("B"), slot("C")},
        {param_r("r"), param_nu("nu")},
        CheckKind::VectorLevel,
        Expected::Pass,
        {"Theorem 4.18",
         "w^{2r}(off(B,C)) <= max{|||C|^{2r}+|B*|^{2r}||,|||B|^{2r}+|C*|^{2r}||}/4 "
         "+ max{w^r(|B*||C|),w^r(|C*||B|)}/2"},
        false,
        [](const CheckContext& c) {
            const ComplexMatrix& B = c.op(0);
            const ComplexMatrix& C = c.op(1);
            const double r = c.params.get("r"), nu = c.params.get("nu");
            std::vector<PartEval> parts;

            double worst16 = std::numeric_limits<double>::infinity(), l16 = 0, r16 = 0;
            double worst17 = std::numeric_limits<double>::infinity(), l17 = 0, r17 = 0;
            for (const VectorTriple& v : *c.vectors) {
                const double pe = std::abs(inner(v.a, v.e)) * std::abs(inner(v.e, v.b));
                const double ab = std::abs(inner(v.a, v.b));
                const double rhs16 = 0.5 * (1.0 + ab);
                if (rhs16 - pe < worst16) {
                    worst16 = rhs16 - pe;
                    l16 = pe;
                    r16 = rhs16;
                }
                const double lhs17 = std::pow(pe, r);
                const double rhs17 = 0.5 * (1.0 + std::pow(ab, r));
                if (rhs17 - lhs17 < worst17) {
                    worst17 = rhs17 - lhs17;
                    l17 = lhs17;
                    r17 = rhs17;
                }
            }
            parts.push_back(leq("L4.16", l16, r16));
            parts.push_back(leq("L4.17", l17, r17));

            const ComplexMatrix aB = r_abs(B), aC = r_abs(C);
            const ComplexMatrix aBs = r_abs(B.adjoint()), aCs = r_abs(C.adjoint());
            const double woff = w_of(c, off_diag(B, C).assembled);
            const double wbc = w_of(c, aBs * aC), wcb = w_of(c, aCs * aB);

            const double mx18 =
                std::max(lam_max(psd_power(aC, 2 * r) + psd_power(aBs, 2 * r)),
                         lam_max(psd_power(aB, 2 * r) + psd_power(aCs, 2 * r)));
            parts.push_back(leq("T4.18", std::pow(woff, 2 * r),
                                0.25 * mx18 +
                                    0.5 * std::max(std::pow(wbc, r), std::pow(wcb, r))));

            const double mx19 = std::max(
                lam_max(psd_power(aC, 2 * r / nu).scaled(nu) +
                        psd_power(aBs, 2 * r / (1 - nu)).scaled(1 - nu)),
                lam_max(psd_power(aB, 2 * r / nu).scaled(nu) +
                        psd_power(aCs, 2 * r / (1 - nu)).scaled(1 - nu)));
            parts.push_back(leq("T4.19", std::pow(woff, 4 * r),
                                0.5 * mx19 +
                                    0.5 * std::max(std::pow(wbc, 2 * r), std::pow(wcb, 2 * r))));

            const double mxB = lam_max(psd_power(aB, 2 * r / nu).scaled(nu) +
                                       psd_power(aBs, 2 * r / (1 - nu)).scaled(1 - nu));
            const double wB4r = std::pow(w_of(c, B), 4 * r);
            parts.push_back(leq("R4.20-chain", wB4r,
                                0.5 * mxB + 0.5 * std::pow(w_of(c, aBs * aB), 2 * r)));
            parts.push_back(leq("R4.20-full", wB4r, mxB));
            return parts;
        },
        {}});

    return t;
}

}  // namespace

const std::vector<CheckDef>& list_checks() {
    static const std::vector<CheckDef> table = build_table();
    return table;
}

const CheckDef& find_check(const std::string& id) {
    for (const CheckDef& c : list_checks())
        if (c.id == id) return c;
    throw UnknownCheck("unknown check id: " + id);
}

CheckRef resolve_check(const std::string& token) {
    for (const CheckDef& c : list_checks()) {
        if (c.id == token) return {&c, ""};
        if (token.size() > c.id.size() + 1 && token.compare(0, c.id.size(), c.id) == 0 &&
            token[c.id.size()] == '-') {
            return {&c, token.substr(c.id.size() + 1)};
        }
    }
    throw UnknownCheck("unknown check or part: " + token);
}

ParamSet default_params(const CheckDef& check) {
    ParamSet out;
    for (const ParamSpec& p : check.params) out.values[p.name] = p.grid[p.grid.size() / 2];
    return out;
}

void validate_params(const CheckDef& check, const ParamSet& params) {
    for (const auto& [name, value] : params.values) {
        if (name == "literal") {
            if (value != 0.0 && value != 1.0) throw ParamOutOfRange("literal must be 0 or 1");
            if (value == 1.0 && !check.supportsLiteral)
                throw ParamOutOfRange("check " + check.id + " has no literal variant");
            continue;
        }
        const ParamSpec* spec = nullptr;
        for (const ParamSpec& p : check.params)
            if (p.name == name) spec = &p;
        if (!spec) throw ParamOutOfRange("check " + check.id + " has no parameter " + name);
        if (!(value >= spec->lo && value <= spec->hi))
            throw ParamOutOfRange("parameter " + name + " out of range");
        if (spec->integer && value != std::floor(value))
            throw ParamOutOfRange("parameter " + name + " must be an integer");
    }
    for (const ParamSpec& p : check.params)
        if (!params.has(p.name)) throw ParamOutOfRange("missing parameter: " + p.name);
}

namespace {

bool satisfies_class(const ComplexMatrix& m, OpClass c) {
    const double tol = 1e-8;
    const int n = m.rows();
    switch (c) {
        case OpClass::General:
            return true;
        case OpClass::SelfAdjoint:
            return (m - m.adjoint()).frobenius() <= tol * (1.0 + m.frobenius());
        case OpClass::Positive: {
            if ((m - m.adjoint()).frobenius() > tol * (1.0 + m.frobenius())) return false;
            auto ev = hermitian_eigenvalues(m);
            return ev.front() >= -tol * (1.0 + std::abs(ev.back()));
        }
        case OpClass::Normal: {
            const double f = m.frobenius();
            return (m * m.adjoint() - m.adjoint() * m).frobenius() <= tol * (1.0 + f * f);
        }
        case OpClass::Unitary:
            return (m.adjoint() * m - ComplexMatrix::identity(n)).frobenius() <= tol * n;
        case OpClass::SquareZero: {
            const double f = m.frobenius();
            return (m * m).frobenius() <= tol * (1.0 + f * f);
        }
    }
    return false;
}

}  // namespace

void validate_assumptions(const CheckDef& check, const std::vector<ComplexMatrix>& ops) {
    for (std::size_t i = 0; i < check.slots.size() && i < ops.size(); ++i) {
        const SlotSpec& s = check.slots[i];
        if (s.classes.size() >= all_classes().size()) continue;  // unrestricted
        bool ok = false;
        for (OpClass c : s.classes)
            if (satisfies_class(ops[i], c)) ok = true;
        if (!ok)
            throw AssumptionViolated("operator for slot '" + s.name + "' of " + check.id +
                                     " does not satisfy its class assumption");
    }
}

double part_margin(const PartEval& p) {
    if (p.relation == Relation::Identity)
        return -std::abs(p.rhs - p.lhs) / (1.0 + std::abs(p.rhs));
    return (p.rhs - p.lhs) / std::max(1.0, std::abs(p.rhs));
}

Evaluation evaluate(const CheckDef& check, const std::vector<ComplexMatrix>& ops,
                    const ParamSet& params, const std::vector<VectorTriple>& vectors,
                    const EvalOptions& options, const std::string& partFilter) {
    if (ops.size() != check.slots.size())
        throw DimensionMismatch("check " + check.id + " expects " +
                                std::to_string(check.slots.size()) + " operator(s), got " +
                                std::to_string(ops.size()));
    int dim = 0;
    for (const ComplexMatrix& m : ops) {
        if (!m.square()) throw DimensionMismatch("check operands must be square");
        if (dim == 0) dim = m.rows();
        if (m.rows() != dim) throw DimensionMismatch("check operands must share one dimension");
    }
    validate_params(check, params);
    validate_assumptions(check, ops);
    if (check.kind == CheckKind::VectorLevel && vectors.empty())
        throw ConfigError("vector-level check " + check.id + " needs sampled unit vectors");

    CheckContext ctx;
    ctx.ops = &ops;
    ctx.vectors = &vectors;
    ctx.params = params;
    ctx.options = options;

    std::vector<PartEval> parts = check.eval(ctx);
    if (!partFilter.empty()) {
        std::vector<PartEval> kept;
        for (PartEval& p : parts)
            if (p.part == partFilter) kept.push_back(std::move(p));
        if (kept.empty())
            throw UnknownCheck("check " + check.id + " has no part named '" + partFilter + "'");
        parts = std::move(kept);
    }

    Evaluation out;
    out.parts = parts;
    out.paramsUsed = params;
    double worst = std::numeric_limits<double>::infinity();
    for (const PartEval& p : parts) {
        const double m = part_margin(p);
        if (m < worst) {
            worst = m;
            out.lhsVal = p.lhs;
            out.rhsVal = p.rhs;
            out.slack = p.rhs - p.lhs;
            out.margin = m;
            out.bindingPart = p.part;
            out.relation = p.relation;
        }
    }
    if (!parts.empty() && !std::isfinite(out.slack))
        throw DomainError("check " + check.id + " produced a non-finite slack");
    return out;
}

}  // namespace numrad
