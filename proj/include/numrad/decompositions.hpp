#pragma once

#include "numrad/complex_matrix.hpp"

namespace numrad {

struct PolarParts {
    ComplexMatrix isometryPart;  // partial isometry U with ker U = ker |T|
    ComplexMatrix modulus;       // |T|, positive semidefinite
};

struct CartesianParts {
    ComplexMatrix realPart;  // X = (T + T*)/2
    ComplexMatrix imagPart;  // Y = (T - T*)/(2i)
};

struct AluthgeParams {
    double s = 0.5;
    double t = 0.5;
    AluthgeParams() = default;
    AluthgeParams(double s_, double t_);  // validates s,t >= 0, s+t = 1
};

// |T| = (T*T)^{1/2} by spectral calculus.
ComplexMatrix absolute_value(const ComplexMatrix& T);

// T = U P with P = |T| and U = W Pi V* from the SVD, where Pi zeroes
// directions with sigma_i <= n*eps*sigma_1 (numerical kernel condition).
PolarParts polar(const ComplexMatrix& T);

CartesianParts cartesian(const ComplexMatrix& T);

// Delta_{s,t}(T) = |T|^s U |T|^t; |T|^0 is the exact identity so the (1,0)
// and (0,1) endpoints reduce to |T|U and U|T|.
ComplexMatrix aluthge(const ComplexMatrix& T, const AluthgeParams& p);

}  // namespace numrad
