#pragma once

#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

struct RadiusOptions {
    int gridK = 720;              // uniform angle grid
    int refineBrackets = 3;       // golden-section multi-start on best brackets
    double bracketTol = 1e-12;    // final bracket width (radians)
    double enclTolRel = 1e-9;     // enclosure target: 1e-9 * (1 + ||T||)
    int fovK = 1440;              // boundary resolution for crawford
};

struct RadiusResult {
    double value = 0.0;           // w(T)
    double thetaStar = 0.0;       // maximizing angle in [0, 2pi)
    std::vector<cplx> witness;    // unit vector with |<T w, w>| >= lower - 1e-12
    double lower = 0.0;
    double upper = 0.0;
};

struct FovBoundary {
    std::vector<cplx> points;     // <T x_k, x_k>, inside W(T) by construction
    std::vector<double> angles;
};

// Largest singular value.
double op_norm(const ComplexMatrix& T);

// lambda_max(Re(e^{i theta} T)).
double real_part_extreme(const ComplexMatrix& T, double theta);

// w(T) = max_theta lambda_max(Re(e^{i theta} T)): K-point grid, then golden
// refinement of the best brackets; the enclosure uses the Lipschitz bound
// ||T|| * (final bracket width).
RadiusResult numerical_radius(const ComplexMatrix& T, const RadiusOptions& opt = {});

// Boundary sampling of the numerical range: for each angle, the top
// eigenvector x of Re(e^{-i theta} T) contributes <T x, x>.
FovBoundary fov_boundary(const ComplexMatrix& T, int K);

// c(T) = min |<T x, x>| over unit x: 0 when the origin lies in the convex
// hull of the sampled boundary, otherwise the refined support-function
// minimum (same grid+golden policy as numerical_radius).
double crawford(const ComplexMatrix& T, const RadiusOptions& opt = {});

double spectral_radius(const ComplexMatrix& T);

// w of an entrywise-nonnegative real 2x2 matrix: spectral radius of its
// symmetrization, in closed form.
double w_nonneg_entries(const ComplexMatrix& B);

}  // namespace numrad
