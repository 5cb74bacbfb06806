#pragma once

#include <complex>
#include <span>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {

using cplx = std::complex<double>;

// Dense row-major complex matrix, immutable after construction. Entries are
// validated finite. Arithmetic returns new values.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);

    static ComplexMatrix zero(int rows, int cols);
    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(std::span<const double> d);
    static ComplexMatrix diagonal(std::span<const cplx> d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::span<const cplx> data() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix scaled(cplx s) const;
    double frobenius() const;

    // y = A x
    std::vector<cplx> apply(std::span<const cplx> x) const;

    bool same_shape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);  // exact bits

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

// <x,y> = sum_i x_i * conj(y_i); linear in the first argument.
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double vec_norm(std::span<const cplx> x);

ComplexMatrix matrix_power(const ComplexMatrix& a, int n);  // n >= 0

// Largest |entry| difference; shape mismatch throws.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol);

}  // namespace numrad
