#pragma once

#include <iosfwd>
#include <string>

#include "numrad/complex_matrix.hpp"

namespace numrad {

// Text format: first line "n", then n lines of n whitespace-separated "re,im"
// pairs.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
std::string format_matrix(const ComplexMatrix& m);

}  // namespace numrad
