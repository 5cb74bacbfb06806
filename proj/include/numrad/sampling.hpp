#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

enum class OpClass { General, Normal, SelfAdjoint, Positive, Unitary, SquareZero };

const char* op_class_name(OpClass c);
OpClass op_class_from_name(const std::string& name);

struct SampleSpec {
    OpClass opClass = OpClass::General;
    int dim = 2;
    std::uint64_t seed = 0;
};

// Deterministic: same spec -> bit-identical matrix. All classes are norm-
// normalized to ||.|| <= 2; class properties hold exactly or within 1e-12.
// SquareZero requires an even dim (BadDim otherwise) and satisfies A*A = 0
// exactly by block construction.
ComplexMatrix sample_operator(const SampleSpec& spec);

// Deterministic RNG with a pinned gaussian (Box-Muller over mt19937_64), so
// samples are reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    double uniform();          // [0, 1)
    double gaussian();
    cplx gaussian_cplx();      // independent N(0,1) re/im
    int pick(int n);           // uniform in [0, n)

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// 64-bit mix used to derive stream seeds (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

std::vector<cplx> sample_unit_vector(Rng& rng, int dim);

}  // namespace numrad
