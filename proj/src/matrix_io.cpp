#include "numrad/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace numrad {

ComplexMatrix read_matrix(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n <= 0) throw IoError("matrix file: expected positive dimension on first line");
    if (n > 4096) throw IoError("matrix file: dimension too large");
    std::vector<cplx> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
        std::string tok;
        if (!(in >> tok)) throw IoError("matrix file: not enough entries");
        double re = 0.0, im = 0.0;
        if (std::sscanf(tok.c_str(), "%lf,%lf", &re, &im) != 2)
            throw IoError("matrix file: entry '" + tok + "' is not a re,im pair");
        entries.emplace_back(re, im);
    }
    try {
        return ComplexMatrix(n, n, std::move(entries));
    } catch (const Error& e) {
        throw IoError(std::string("matrix file: ") + e.what());
    }
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open matrix file: " + path);
    return read_matrix(f);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.rows() << "\n";
    char buf[96];
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const cplx& z = m(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
            out << buf << (j + 1 < m.cols() ? " " : "");
        }
        out << "\n";
    }
}

std::string format_matrix(const ComplexMatrix& m) {
    std::ostringstream ss;
    write_matrix(ss, m);
    return ss.str();
}

}  // namespace numrad
