#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "numrad/complex_matrix.hpp"
#include "numrad/radius.hpp"
#include "numrad/sampling.hpp"

namespace numrad {

enum class CheckKind { OperatorLevel, VectorLevel };
enum class Expected { Pass, KnownTypo };
enum class Relation { LeqRhs, Identity };

const char* check_kind_name(CheckKind k);
const char* expected_name(Expected e);

struct SlotSpec {
    std::string name;
    std::vector<OpClass> classes;  // admissible classes; the harness cycles them
};

struct ParamSpec {
    std::string name;
    std::vector<double> grid;  // values the harness samples from
    double lo = 0.0;           // validity range for explicit params
    double hi = 0.0;
    bool integer = false;
};

struct ParamSet {
    std::map<std::string, double> values;  // ordered: deterministic serialization
    double get(const std::string& name) const;
    double get_or(const std::string& name, double fallback) const;
    bool has(const std::string& name) const { return values.count(name) != 0; }
};

struct VectorTriple {
    std::vector<cplx> a, b, e;  // unit vectors
};

struct EvalOptions {
    RadiusOptions radius;
    double tolRel = 1e-8;  // slack tolerance: slack >= -tolRel*max(1,|rhs|)
};

struct CheckContext {
    const std::vector<ComplexMatrix>* ops = nullptr;
    const std::vector<VectorTriple>* vectors = nullptr;
    ParamSet params;
    EvalOptions options;

    const ComplexMatrix& op(std::size_t i) const { return (*ops)[i]; }
    bool literal() const { return params.get_or("literal", 0.0) != 0.0; }
};

struct PartEval {
    std::string part;
    Relation relation = Relation::LeqRhs;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct Evaluation {
    double lhsVal = 0.0;
    double rhsVal = 0.0;
    double slack = 0.0;    // rhsVal - lhsVal of the binding part
    double margin = 0.0;   // normalized; violation iff margin < -tolRel
    std::string bindingPart;
    Relation relation = Relation::LeqRhs;
    ParamSet paramsUsed;
    std::uint64_t sampleSeed = 0;
    std::vector<PartEval> parts;
};

// Explicit falsifying instance shipped with a known-typo check.
struct TypoWitness {
    std::string description;
    std::function<std::vector<ComplexMatrix>(int dim)> build;
    ParamSet params;
};

struct SourceRef {
    std::string anchor;     // e.g. "Theorem 3.1"
    std::string statement;  // the claim as a formula
};

struct CheckDef {
    std::string id;
    std::string statement;
    std::string notes;  // misprint resolutions etc.
    std::vector<SlotSpec> slots;
    std::vector<ParamSpec> params;
    CheckKind kind = CheckKind::OperatorLevel;
    Expected expected = Expected::Pass;
    SourceRef source;
    bool supportsLiteral = false;
    std::function<std::vector<PartEval>(const CheckContext&)> eval;
    std::vector<TypoWitness> witnesses;
};

// The full check table, stable order.
const std::vector<CheckDef>& list_checks();

const CheckDef& find_check(const std::string& id);  // UnknownCheck

// "N1-upper" -> (N1, "upper"); a bare id yields an empty part filter.
struct CheckRef {
    const CheckDef* check;
    std::string part;  // empty = all parts
};
CheckRef resolve_check(const std::string& token);

ParamSet default_params(const CheckDef& check);
void validate_params(const CheckDef& check, const ParamSet& params);       // ParamOutOfRange
void validate_assumptions(const CheckDef& check,
                          const std::vector<ComplexMatrix>& ops);          // AssumptionViolated

// Normalized margin of one part: violation iff margin < -tolRel.
double part_margin(const PartEval& p);

Evaluation evaluate(const CheckDef& check, const std::vector<ComplexMatrix>& ops,
                    const ParamSet& params, const std::vector<VectorTriple>& vectors,
                    const EvalOptions& options, const std::string& partFilter = {});

}  // namespace numrad
