#pragma once

#include "numrad/complex_matrix.hpp"

namespace numrad {

// 2x2 operator matrix on H (+) H. Stores the blocks and the assembly so
// identity checks run on exactly the same entries.
struct Block2 {
    ComplexMatrix a, b, c, d;
    ComplexMatrix assembled;  // 2n x 2n
};

Block2 block2(const ComplexMatrix& A, const ComplexMatrix& B, const ComplexMatrix& C,
              const ComplexMatrix& D);

Block2 off_diag(const ComplexMatrix& A, const ComplexMatrix& B);  // [[0,A],[B,0]]

Block2 direct_sum(const ComplexMatrix& A, const ComplexMatrix& B);  // [[A,0],[0,B]]

// Block extraction (exact inverse of assembly).
ComplexMatrix extract_block(const ComplexMatrix& assembled, int bi, int bj);

}  // namespace numrad
