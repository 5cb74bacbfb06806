#include "numrad/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace numrad {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kWitnessSample = 0xFFFF;

std::vector<const CheckDef*> resolve_suite(const std::vector<std::string>& ids) {
    std::vector<const CheckDef*> out;
    if (ids.empty()) {
        for (const CheckDef& c : list_checks()) out.push_back(&c);
        return out;
    }
    for (const std::string& id : ids) out.push_back(&find_check(id));
    return out;
}

std::vector<OpClass> admissible_classes(const SlotSpec& s, int dim) {
    std::vector<OpClass> out;
    for (OpClass c : s.classes)
        if (!(c == OpClass::SquareZero && dim % 2 != 0)) out.push_back(c);
    if (out.empty()) out.push_back(OpClass::General);
    return out;
}

}  // namespace

std::uint64_t pack_record_seed(std::uint64_t mix, bool literal, int sampleIdx, int dim) {
    return ((mix & ((1ULL << 39) - 1)) << 25) | (static_cast<std::uint64_t>(literal) << 24) |
           ((static_cast<std::uint64_t>(sampleIdx) & 0xFFFF) << 8) |
           (static_cast<std::uint64_t>(dim) & 0xFF);
}

int record_seed_dim(std::uint64_t seed) { return static_cast<int>(seed & 0xFF); }
int record_seed_sample(std::uint64_t seed) { return static_cast<int>((seed >> 8) & 0xFFFF); }
bool record_seed_literal(std::uint64_t seed) { return ((seed >> 24) & 1) != 0; }

Evaluation evaluate_sample(const CheckDef& check, std::uint64_t recordSeed,
                           const EvalOptions& eval, int vectorsPerSample) {
    const int dim = record_seed_dim(recordSeed);
    const int sampleIdx = record_seed_sample(recordSeed);
    if (dim < 1) throw ConfigError("record seed carries an invalid dimension");
    Rng rng(recordSeed);

    ParamSet params;
    std::vector<ComplexMatrix> ops;

    if (sampleIdx == kWitnessSample) {
        const int widx = static_cast<int>((recordSeed >> 25) & 0xFF);
        if (widx >= static_cast<int>(check.witnesses.size()))
            throw ConfigError("record seed names a witness the check does not ship");
        const TypoWitness& w = check.witnesses[widx];
        ops = w.build(dim);
        params = default_params(check);
        for (const auto& [k, v] : w.params.values) params.values[k] = v;
    } else {
        // draw order is part of the record-seed contract: params, operators,
        // then vectors
        for (const ParamSpec& p : check.params)
            params.values[p.name] = p.grid[rng.pick(static_cast<int>(p.grid.size()))];
        if (record_seed_literal(recordSeed)) params.values["literal"] = 1.0;
        for (std::size_t j = 0; j < check.slots.size(); ++j) {
            const auto classes = admissible_classes(check.slots[j], dim);
            const OpClass cls = classes[(sampleIdx + j) % classes.size()];
            ops.push_back(sample_operator({cls, dim, rng.next_u64()}));
        }
    }

    std::vector<VectorTriple> vectors;
    if (check.kind == CheckKind::VectorLevel) {
        vectors.reserve(vectorsPerSample);
        for (int v = 0; v < vectorsPerSample; ++v) {
            VectorTriple t;
            t.a = sample_unit_vector(rng, dim);
            t.b = sample_unit_vector(rng, dim);
            t.e = sample_unit_vector(rng, dim);
            vectors.push_back(std::move(t));
        }
    }

    Evaluation out = evaluate(check, ops, params, vectors, eval);
    out.sampleSeed = recordSeed;
    return out;
}

namespace {

struct SampleOutcome {
    bool ok = false;
    Evaluation eval;
    std::string error;
    double ms = 0.0;
};

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
    if (config.samples < 1) throw ConfigError("samples must be >= 1");
    if (config.dims.empty()) throw ConfigError("at least one dimension is required");
    for (int d : config.dims)
        if (d < 2 || d > 16) throw ConfigError("suite dims must lie in [2, 16]");
    const auto checks = resolve_suite(config.checkIds);

    struct Task {
        const CheckDef* check;
        int dim;
        int sampleIdx;   // kWitnessSample for witnesses
        int witnessIdx;  // valid when sampleIdx == kWitnessSample
        std::size_t outSlot;
    };
    std::vector<Task> tasks;
    std::vector<std::vector<std::size_t>> slots_per_report;  // indices into outcomes
    std::size_t slotCounter = 0;
    std::vector<std::pair<const CheckDef*, int>> reportKeys;

    for (const CheckDef* c : checks) {
        for (int dim : config.dims) {
            std::vector<std::size_t> slots;
            for (int w = 0; w < static_cast<int>(c->witnesses.size()); ++w) {
                tasks.push_back({c, dim, kWitnessSample, w, slotCounter});
                slots.push_back(slotCounter++);
            }
            for (int s = 0; s < config.samples; ++s) {
                tasks.push_back({c, dim, s, 0, slotCounter});
                slots.push_back(slotCounter++);
            }
            reportKeys.emplace_back(c, dim);
            slots_per_report.push_back(std::move(slots));
        }
    }

    std::vector<SampleOutcome> outcomes(slotCounter);
    std::atomic<std::size_t> next{0};
    const int nthreads =
        config.threads > 0 ? config.threads
                           : std::max(1u, std::thread::hardware_concurrency());

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            std::uint64_t seed;
            if (t.sampleIdx == kWitnessSample) {
                seed = pack_record_seed(static_cast<std::uint64_t>(t.witnessIdx), false,
                                        kWitnessSample, t.dim);
            } else {
                const std::uint64_t mix = mix_seed(
                    config.masterSeed,
                    (static_cast<std::uint64_t>(t.sampleIdx) << 24) ^
                        (static_cast<std::uint64_t>(t.dim) << 16) ^
                        mix_seed(0x5eed, std::hash<std::string>{}(t.check->id)));
                seed = pack_record_seed(mix, false, t.sampleIdx, t.dim);
            }
            SampleOutcome& o = outcomes[t.outSlot];
            const auto t0 = Clock::now();
            try {
                o.eval = evaluate_sample(*t.check, seed, config.eval, config.vectorsPerSample);
                o.ok = true;
            } catch (const Error& e) {
                o.error = e.what();
            }
            o.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // deterministic indexed merge
    std::vector<CheckReport> reports;
    for (std::size_t r = 0; r < reportKeys.size(); ++r) {
        const CheckDef* c = reportKeys[r].first;
        CheckReport rep;
        rep.checkId = c->id;
        rep.dim = reportKeys[r].second;
        rep.nSamples = config.samples;
        double minSlack = std::numeric_limits<double>::infinity();
        double minMargin = std::numeric_limits<double>::infinity();
        for (std::size_t slot : slots_per_report[r]) {
            const SampleOutcome& o = outcomes[slot];
            rep.wallTimeMs += o.ms;
            if (!o.ok) {
                rep.errors.push_back(o.error);
                continue;
            }
            if (o.eval.margin < minMargin) {
                minMargin = o.eval.margin;
                minSlack = o.eval.slack;
                rep.minSlackSeed = o.eval.sampleSeed;
                rep.minSlackPart = o.eval.bindingPart;
            }
            const bool violated = o.eval.margin < -config.tolRel;
            if (violated)
                rep.violations.push_back(
                    {o.eval.sampleSeed, o.eval.slack, o.eval.bindingPart, o.eval.paramsUsed});
        }
        rep.minSlack = std::isfinite(minSlack) ? minSlack : 0.0;
        if (c->expected == Expected::Pass)
            rep.verdict = rep.violations.empty() ? "pass" : "fail";
        else
            rep.verdict = rep.violations.empty() ? "pass" : "known-typo-confirmed";
        reports.push_back(std::move(rep));
    }
    return reports;
}

bool any_failure(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (r.verdict == "fail") return true;
    return false;
}

// ---------------------------------------------------------------------------

Evaluation tightness_search(const std::string& checkToken, const TightenConfig& config) {
    const CheckRef ref = resolve_check(checkToken);
    const CheckDef& check = *ref.check;
    const bool literal = config.forcedParams.get_or("literal", 0.0) != 0.0;

    struct Best {
        double margin = std::numeric_limits<double>::infinity();
        Evaluation eval;
        std::vector<ComplexMatrix> ops;
        std::vector<VectorTriple> vectors;
    } best;

    auto run_instance = [&](const std::vector<ComplexMatrix>& ops, const ParamSet& params,
                            const std::vector<VectorTriple>& vectors,
                            std::uint64_t seed) -> double {
        Evaluation ev = evaluate(check, ops, params, vectors, config.eval, ref.part);
        ev.sampleSeed = seed;
        if (ev.margin < best.margin) {
            best.margin = ev.margin;
            best.eval = ev;
            best.ops = ops;
            best.vectors = vectors;
        }
        return ev.margin;
    };

    auto apply_forced = [&](ParamSet& p) {
        for (const auto& [k, v] : config.forcedParams.values) p.values[k] = v;
    };

    // multi-start over seeded instances, cycling dims and classes
    for (int restart = 0; restart < config.restarts; ++restart) {
        const int dim = config.dims[restart % config.dims.size()];
        const int sampleIdx = restart % kWitnessSample;
        const std::uint64_t seed =
            pack_record_seed(mix_seed(config.seed, restart), literal, sampleIdx, dim);
        Rng rng(seed);
        ParamSet params;
        for (const ParamSpec& p : check.params)
            params.values[p.name] = p.grid[rng.pick(static_cast<int>(p.grid.size()))];
        if (literal) params.values["literal"] = 1.0;
        apply_forced(params);

        std::vector<ComplexMatrix> ops;
        for (std::size_t j = 0; j < check.slots.size(); ++j) {
            auto classes = admissible_classes(check.slots[j], dim);
            if (!config.onlyClass.empty() && classes.size() > 1) {
                const OpClass forced = op_class_from_name(config.onlyClass);
                if (!(forced == OpClass::SquareZero && dim % 2 != 0)) classes = {forced};
            }
            const OpClass cls = classes[(sampleIdx + j) % classes.size()];
            ops.push_back(sample_operator({cls, dim, rng.next_u64()}));
        }
        std::vector<VectorTriple> vectors;
        if (check.kind == CheckKind::VectorLevel) {
            for (int v = 0; v < config.vectorsPerSample; ++v)
                vectors.push_back(
                    {sample_unit_vector(rng, dim), sample_unit_vector(rng, dim),
                     sample_unit_vector(rng, dim)});
        }
        try {
            run_instance(ops, params, vectors, seed);
        } catch (const Error&) {
            // a degenerate draw must not abort the search
        }
    }
    if (!std::isfinite(best.margin))
        throw ConfigError("tightness_search: no evaluable instance found");

    // coordinate perturbation descent: convex-mix a slot toward a fresh draw
    // (classes closed under mixing), or resample it outright (normal/unitary)
    Rng drng(mix_seed(config.seed, 0xD5CE57ULL));
    const std::uint64_t baseSeed = best.eval.sampleSeed;
    const int dim = best.ops.empty() ? config.dims.front() : best.ops.front().rows();
    for (int epoch = 0; epoch < config.descentEpochs; ++epoch) {
        const double eps = 0.5 / (1 << epoch);
        for (std::size_t j = 0; j < check.slots.size(); ++j) {
            for (int attempt = 0; attempt < 6; ++attempt) {
                const auto classes = admissible_classes(check.slots[j], dim);
                const OpClass cls = classes[drng.pick(static_cast<int>(classes.size()))];
                ComplexMatrix fresh = sample_operator({cls, dim, drng.next_u64()});
                std::vector<ComplexMatrix> trial = best.ops;
                // mixing is only admissible where any operator class is: a
                // restricted slot gets a fresh in-class draw instead
                const bool mixable = check.slots[j].classes.size() >= 6;
                if (mixable)
                    trial[j] = trial[j].scaled(1.0 - eps) + fresh.scaled(eps);
                else
                    trial[j] = fresh;
                try {
                    run_instance(trial, best.eval.paramsUsed, best.vectors, baseSeed);
                } catch (const Error&) {
                }
            }
        }
        // parameter grid sweep at the current operators
        std::vector<ParamSet> combos{ParamSet{}};
        for (const ParamSpec& p : check.params) {
            std::vector<ParamSet> grown;
            for (const ParamSet& base : combos)
                for (double v : p.grid) {
                    ParamSet q = base;
                    q.values[p.name] = v;
                    grown.push_back(std::move(q));
                }
            combos = std::move(grown);
        }
        for (ParamSet& p : combos) {
            if (literal) p.values["literal"] = 1.0;
            apply_forced(p);
            try {
                run_instance(best.ops, p, best.vectors, baseSeed);
            } catch (const Error&) {
            }
        }
    }
    return best.eval;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json params_json(const ParamSet& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : p.values) j[k] = v;
    return j;
}

ordered_json report_json(const CheckReport& r, bool timings) {
    ordered_json j = ordered_json::object();
    j["check"] = r.checkId;
    j["dim"] = r.dim;
    j["samples"] = r.nSamples;
    j["minSlack"] = r.minSlack;
    j["minSlackSeed"] = std::to_string(r.minSlackSeed);
    j["minSlackPart"] = r.minSlackPart;
    ordered_json viols = ordered_json::array();
    for (const ViolationRecord& v : r.violations) {
        ordered_json vj = ordered_json::object();
        vj["seed"] = std::to_string(v.seed);
        vj["slack"] = v.slack;
        vj["part"] = v.part;
        vj["params"] = params_json(v.params);
        viols.push_back(std::move(vj));
    }
    j["violations"] = std::move(viols);
    j["verdict"] = r.verdict;
    j["errors"] = r.errors;
    j["wallTimeMs"] = timings ? r.wallTimeMs : 0.0;
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<CheckReport>& reports, bool timings) {
    ordered_json arr = ordered_json::array();
    for (const CheckReport& r : reports) arr.push_back(report_json(r, timings));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<CheckReport>& reports, bool timings) {
    std::ostringstream out;
    out << "check,dim,samples,minSlack,minSlackSeed,minSlackPart,violations,verdict,wallTimeMs\n";
    for (const CheckReport& r : reports) {
        out << r.checkId << ',' << r.dim << ',' << r.nSamples << ',' << format_double(r.minSlack)
            << ',' << r.minSlackSeed << ',' << r.minSlackPart << ',' << r.violations.size() << ','
            << r.verdict << ',' << format_double(timings ? r.wallTimeMs : 0.0) << "\n";
    }
    return out.str();
}

std::string catalog_to_json() {
    ordered_json arr = ordered_json::array();
    for (const CheckDef& c : list_checks()) {
        ordered_json j = ordered_json::object();
        j["id"] = c.id;
        j["statement"] = c.statement;
        if (!c.notes.empty()) j["notes"] = c.notes;
        j["kind"] = check_kind_name(c.kind);
        j["expected"] = expected_name(c.expected);
        ordered_json slots = ordered_json::array();
        for (const SlotSpec& s : c.slots) {
            ordered_json sj = ordered_json::object();
            sj["name"] = s.name;
            ordered_json cls = ordered_json::array();
            for (OpClass oc : s.classes) cls.push_back(op_class_name(oc));
            sj["classes"] = std::move(cls);
            slots.push_back(std::move(sj));
        }
        j["slots"] = std::move(slots);
        ordered_json params = ordered_json::array();
        for (const ParamSpec& p : c.params) {
            ordered_json pj = ordered_json::object();
            pj["name"] = p.name;
            pj["grid"] = p.grid;
            params.push_back(std::move(pj));
        }
        j["params"] = std::move(params);
        ordered_json src = ordered_json::object();
        src["anchor"] = c.source.anchor;
        src["statement"] = c.source.statement;
        j["source"] = std::move(src);
        j["literal_variant"] = c.supportsLiteral;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string catalog_to_text() {
    std::ostringstream out;
    for (const CheckDef& c : list_checks()) {
        out << c.id << "  [" << expected_name(c.expected) << ", " << check_kind_name(c.kind)
            << "]\n";
        out << "    " << c.statement << "\n";
        if (!c.notes.empty()) out << "    note: " << c.notes << "\n";
        out << "    source: " << c.source.anchor << "\n";
        if (!c.slots.empty()) {
            out << "    slots:";
            for (const SlotSpec& s : c.slots) {
                out << " " << s.name << "(";
                if (s.classes.size() == 6) {
                    out << "any";
                } else {
                    for (std::size_t i = 0; i < s.classes.size(); ++i)
                        out << (i ? "|" : "") << op_class_name(s.classes[i]);
                }
                out << ")";
            }
            out << "\n";
        }
        if (!c.params.empty()) {
            out << "    params:";
            for (const ParamSpec& p : c.params) {
                out << " " << p.name << "{";
                for (std::size_t i = 0; i < p.grid.size(); ++i)
                    out << (i ? "," : "") << p.grid[i];
                out << "}";
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace numrad
