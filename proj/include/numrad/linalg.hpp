#pragma once

#include <functional>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, V diag(l) V* = H
};

struct SvdParts {
    ComplexMatrix left;               // unitary U
    std::vector<double> singulars;    // descending, nonnegative
    ComplexMatrix right;              // unitary V, T = U diag(s) V*
};

// Complex Jacobi eigensolver. Pre: ||H - H*||_F <= 1e-10*(1+||H||_F).
HermitianEig eig_hermitian(const ComplexMatrix& H);

// Eigenvalues only (ascending), same precondition.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H);

// One-sided Jacobi SVD; works for any square T.
SvdParts svd(const ComplexMatrix& T);

// Eigenvalues of a general square matrix via Hessenberg reduction + shifted
// QR, sorted by (real, imag) for deterministic output.
std::vector<cplx> eig_general(const ComplexMatrix& T);

// f applied on the spectrum of a positive semidefinite P; eigenvalues are
// clamped to 0 before f so roundoff-negative values never reach f.
// Throws NotPsd when an eigenvalue < -1e-10*(1+||P||), DomainError when f
// returns a non-finite value.
ComplexMatrix apply_spectral_function(const ComplexMatrix& P,
                                      const std::function<double(double)>& f);

// P^p by spectral calculus with the 0^0 = 1 convention; p == 0 returns the
// exact identity (so |T|^0 acts as I in the Aluthge endpoints).
ComplexMatrix psd_power(const ComplexMatrix& P, double p);

// Q factor of a Householder QR with the diagonal-phase fix that makes
// Gaussian input Haar-distributed.
ComplexMatrix qr_unitary(const ComplexMatrix& G);

cplx determinant(const ComplexMatrix& A);

// Workspace-reusing extreme-eigenvalue solver for the radius hot loop.
// compute() clobbers the supplied buffer (row-major n x n, exactly hermitian).
class HermitianExtremes {
public:
    explicit HermitianExtremes(int n);
    double lambda_max(cplx* h);
    double lambda_min(cplx* h);
    int dim() const { return n_; }

private:
    int n_;
    std::vector<double> d_, e_;
};

}  // namespace numrad
