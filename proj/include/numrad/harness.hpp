#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numrad/registry.hpp"

namespace numrad {

struct SuiteConfig {
    std::vector<std::string> checkIds;  // empty = all
    std::vector<int> dims{2, 3, 4};
    int samples = 100;
    std::uint64_t masterSeed = 0;
    double tolRel = 1e-8;
    int threads = 0;  // 0 = hardware concurrency
    int vectorsPerSample = 200;
    EvalOptions eval;
    bool timings = false;  // real wallTimeMs in reports (off keeps output byte-stable)
};

struct ViolationRecord {
    std::uint64_t seed = 0;
    double slack = 0.0;
    std::string part;
    ParamSet params;
};

struct CheckReport {
    std::string checkId;
    int dim = 0;
    int nSamples = 0;
    double minSlack = 0.0;
    std::uint64_t minSlackSeed = 0;
    std::string minSlackPart;
    std::vector<ViolationRecord> violations;
    std::vector<std::string> errors;
    std::string verdict;  // pass | fail | known-typo-confirmed
    double wallTimeMs = 0.0;
};

// Record seeds pack everything replay needs:
//   [ mix:39 | literal:1 | sampleIdx:16 | dim:8 ]
// sampleIdx 0xFFFF marks a shipped typo witness; its index sits in the mix bits.
std::uint64_t pack_record_seed(std::uint64_t mix, bool literal, int sampleIdx, int dim);
int record_seed_dim(std::uint64_t seed);
int record_seed_sample(std::uint64_t seed);
bool record_seed_literal(std::uint64_t seed);

// Re-evaluates one sampled instance purely from its record seed: parameters,
// operator classes (cycled by sample index), operators and unit vectors are
// all derived from the seed stream.
Evaluation evaluate_sample(const CheckDef& check, std::uint64_t recordSeed,
                           const EvalOptions& eval, int vectorsPerSample);

std::vector<CheckReport> run_suite(const SuiteConfig& config);

bool any_failure(const std::vector<CheckReport>& reports);

struct TightenConfig {
    int restarts = 200;
    std::vector<int> dims{2, 3, 4};
    std::uint64_t seed = 0;
    ParamSet forcedParams;  // e.g. literal=1
    std::string onlyClass;  // force every unrestricted slot to this class
    EvalOptions eval;
    int vectorsPerSample = 200;
    int descentEpochs = 3;
};

// Multi-start random search plus coordinate perturbation descent on slack;
// accepts "ID" or "ID-part" tokens. Returns the minimum-slack evaluation.
Evaluation tightness_search(const std::string& checkToken, const TightenConfig& config);

// --- report and catalog serialization (stable key order) ---
std::string reports_to_json(const std::vector<CheckReport>& reports, bool timings);
std::string reports_to_csv(const std::vector<CheckReport>& reports, bool timings);
std::string catalog_to_json();
std::string catalog_to_text();

}  // namespace numrad
