#include "numrad/blockops.hpp"

namespace numrad {

Block2 block2(const ComplexMatrix& A, const ComplexMatrix& B, const ComplexMatrix& C,
              const ComplexMatrix& D) {
    if (!A.square()) throw DimensionMismatch("block2: blocks must be square");
    const int n = A.rows();
    for (const ComplexMatrix* m : {&B, &C, &D})
        if (m->rows() != n || m->cols() != n)
            throw DimensionMismatch("block2: all blocks must be n x n with equal n");
    const int N = 2 * n;
    std::vector<cplx> e(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            e[static_cast<std::size_t>(i) * N + j] = A(i, j);
            e[static_cast<std::size_t>(i) * N + n + j] = B(i, j);
            e[static_cast<std::size_t>(n + i) * N + j] = C(i, j);
            e[static_cast<std::size_t>(n + i) * N + n + j] = D(i, j);
        }
    Block2 out{A, B, C, D, ComplexMatrix(N, N, std::move(e))};
    return out;
}

Block2 off_diag(const ComplexMatrix& A, const ComplexMatrix& B) {
    const ComplexMatrix z = ComplexMatrix::zero(A.rows(), A.cols());
    return block2(z, A, B, z);
}

Block2 direct_sum(const ComplexMatrix& A, const ComplexMatrix& B) {
    const ComplexMatrix z = ComplexMatrix::zero(A.rows(), A.cols());
    return block2(A, z, z, B);
}

ComplexMatrix extract_block(const ComplexMatrix& assembled, int bi, int bj) {
    if (!assembled.square() || assembled.rows() % 2 != 0)
        throw DimensionMismatch("extract_block: even-dimensional square matrix required");
    if (bi < 0 || bi > 1 || bj < 0 || bj > 1)
        throw DimensionMismatch("extract_block: block index must be 0 or 1");
    const int n = assembled.rows() / 2;
    std::vector<cplx> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] = assembled(bi * n + i, bj * n + j);
    return ComplexMatrix(n, n, std::move(e));
}

}  // namespace numrad
