#include "numrad/complex_matrix.hpp"

#include <cmath>
#include <cstring>

#include "numrad/kernels.hpp"

namespace numrad {

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows_ <= 0 || cols_ <= 0)
        throw DimensionMismatch("matrix dimensions must be positive");
    if (a_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) {
    return ComplexMatrix(rows, cols, std::vector<cplx>(static_cast<std::size_t>(rows) * cols));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1.0;
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    const int n = static_cast<int>(d.size());
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = d[i];
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
    const int n = static_cast<int>(d.size());
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = d[i];
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    std::vector<cplx> e(a_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            e[static_cast<std::size_t>(j) * rows_ + i] = std::conj((*this)(i, j));
    return ComplexMatrix(cols_, rows_, std::move(e));
}

ComplexMatrix ComplexMatrix::scaled(cplx s) const {
    std::vector<cplx> e(a_.size());
    kern::active().vscale(s, a_.data(), e.data(), a_.size());
    return ComplexMatrix(rows_, cols_, std::move(e));
}

double ComplexMatrix::frobenius() const {
    double acc = 0.0;
    for (const cplx& z : a_) acc += std::norm(z);
    return std::sqrt(acc);
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DimensionMismatch("vector length does not match matrix columns");
    std::vector<cplx> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        cplx acc = 0.0;
        const cplx* row = a_.data() + static_cast<std::size_t>(i) * cols_;
        for (int j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("matrix add: shape mismatch");
    std::vector<cplx> e(a.a_.size());
    kern::active().vadd(a.a_.data(), b.a_.data(), e.data(), e.size());
    return ComplexMatrix(a.rows_, a.cols_, std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("matrix sub: shape mismatch");
    std::vector<cplx> e(a.a_.size());
    kern::active().vsub(a.a_.data(), b.a_.data(), e.data(), e.size());
    return ComplexMatrix(a.rows_, a.cols_, std::move(e));
}

// Accumulates strictly in ascending k for every output entry (vaxpy is
// elementwise over j), so products of block matrices with zero blocks match
// the products of the blocks bit-for-bit.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix mul: inner dimensions differ");
    std::vector<cplx> e(static_cast<std::size_t>(a.rows_) * b.cols_);
    const auto& k = kern::active();
    for (int i = 0; i < a.rows_; ++i) {
        cplx* crow = e.data() + static_cast<std::size_t>(i) * b.cols_;
        for (int kk = 0; kk < a.cols_; ++kk) {
            const cplx aik = a(i, kk);
            const cplx* brow = b.a_.data() + static_cast<std::size_t>(kk) * b.cols_;
            k.vaxpy(aik, brow, crow, b.cols_);
        }
    }
    return ComplexMatrix(a.rows_, b.cols_, std::move(e));
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) { return a.scaled(s); }

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) return false;
    return std::memcmp(a.a_.data(), b.a_.data(), a.a_.size() * sizeof(cplx)) == 0;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) throw DimensionMismatch("inner: length mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
    return acc;
}

double vec_norm(std::span<const cplx> x) {
    double acc = 0.0;
    for (const cplx& z : x) acc += std::norm(z);
    return std::sqrt(acc);
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int n) {
    if (!a.square()) throw DimensionMismatch("matrix_power: square matrix required");
    if (n < 0) throw DomainError("matrix_power: negative exponent");
    ComplexMatrix acc = ComplexMatrix::identity(a.rows());
    for (int i = 0; i < n; ++i) acc = acc * a;
    return acc;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("max_abs_diff: shape mismatch");
    double m = 0.0;
    auto da = a.data(), db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
    return m;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (!m.square()) return false;
    double acc = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) acc += std::norm(m(i, j) - std::conj(m(j, i)));
    return std::sqrt(acc) <= tol;
}

}  // namespace numrad
