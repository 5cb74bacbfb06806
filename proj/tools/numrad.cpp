// numrad: numerical-radius toolkit and inequality verification harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "numrad/harness.hpp"
#include "numrad/matrix_io.hpp"

using namespace numrad;

namespace {

ParamSet parse_params(const std::string& text) {
    ParamSet out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--params expects k=v pairs, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        double v;
        if (val == "true")
            v = 1.0;
        else if (val == "false")
            v = 0.0;
        else {
            try {
                std::size_t used = 0;
                v = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw ConfigError("--params value for " + key + " is not a number");
            }
        }
        out.values[key] = v;
    }
    return out;
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> out;
    for (const std::string& s : split_ids(text)) out.push_back(std::stoi(s));
    return out;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + path);
    f << content;
}

void print_evaluation(const Evaluation& ev) {
    std::printf("seed %llu  params{", static_cast<unsigned long long>(ev.sampleSeed));
    bool first = true;
    for (const auto& [k, v] : ev.paramsUsed.values) {
        std::printf("%s%s=%g", first ? "" : ",", k.c_str(), v);
        first = false;
    }
    std::printf("}\n");
    for (const PartEval& p : ev.parts) {
        const double margin = part_margin(p);
        std::printf("  %-20s %s  lhs=%.12g  rhs=%.12g  slack=%.3e  %s\n", p.part.c_str(),
                    p.relation == Relation::Identity ? "==" : "<=", p.lhs, p.rhs, p.rhs - p.lhs,
                    margin < -1e-8 ? "VIOLATED" : "ok");
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"numerical radius inequality harness"};
    app.require_subcommand(1);

    // ---- list
    auto* list = app.add_subcommand("list", "print the check catalog");
    std::string listFormat = "text";
    list->add_option("--format", listFormat, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- run
    auto* run = app.add_subcommand("run", "run the verification suite");
    std::string suite = "all";
    std::string dimsText = "2,3,4";
    int samples = 100;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    std::string runFormat = "json";
    std::string outPath;
    int threads = 0;
    bool timings = false;
    run->add_option("--suite", suite, "all or comma-separated check ids");
    run->add_option("--dims", dimsText, "comma-separated dimensions (default 2,3,4)");
    run->add_option("--samples", samples, "samples per (check, dim)");
    run->add_option("--seed", seed, "master seed");
    run->add_option("--tol", tol, "relative slack tolerance");
    run->add_option("--format", runFormat, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--out", outPath, "output path (default stdout)");
    run->add_option("--threads", threads, "worker threads (0 = hardware)");
    run->add_flag("--timings", timings, "emit real wallTimeMs (breaks byte-reproducibility)");

    // ---- check
    auto* check = app.add_subcommand("check", "evaluate one check on explicit matrices");
    std::string checkId;
    std::vector<std::string> matrixFiles;
    std::string paramsText;
    check->add_option("id", checkId, "check id, optionally ID-part")->required();
    check->add_option("--matrix", matrixFiles, "matrix file (repeat per operator slot)");
    check->add_option("--params", paramsText, "comma-separated k=v parameter overrides");

    // ---- fov
    auto* fov = app.add_subcommand("fov", "emit numerical-range boundary points as CSV");
    std::string fovMatrix;
    int fovPoints = 360;
    std::string fovOut;
    fov->add_option("--matrix", fovMatrix, "matrix file")->required();
    fov->add_option("--points", fovPoints, "number of boundary angles");
    fov->add_option("--out", fovOut, "output CSV path (default stdout)");

    // ---- tighten
    auto* tighten = app.add_subcommand("tighten", "search for the minimum slack of a check");
    std::string tightenId;
    int restarts = 200;
    std::string tightenDims = "2,3,4";
    std::uint64_t tightenSeed = 0;
    std::string tightenParams;
    std::string tightenClass;
    tighten->add_option("id", tightenId, "check id, optionally ID-part")->required();
    tighten->add_option("--restarts", restarts, "number of random restarts");
    tighten->add_option("--dims", tightenDims, "dimensions to cycle");
    tighten->add_option("--seed", tightenSeed, "search seed");
    tighten->add_option("--params", tightenParams, "forced params, e.g. literal=true");
    tighten->add_option("--class", tightenClass, "force unrestricted slots to this class");

    // ---- replay
    auto* replay = app.add_subcommand("replay", "re-evaluate a recorded sample seed");
    std::string replayId;
    std::string replaySeed;
    replay->add_option("id", replayId, "check id")->required();
    replay->add_option("seed", replaySeed, "record seed from a report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (*list) {
        emit("", listFormat == "json" ? catalog_to_json() : catalog_to_text());
        return 0;
    }

    if (*run) {
        SuiteConfig cfg;
        if (suite != "all") cfg.checkIds = split_ids(suite);
        cfg.dims = parse_dims(dimsText);
        cfg.samples = samples;
        cfg.masterSeed = seed;
        cfg.tolRel = tol;
        cfg.eval.tolRel = tol;
        cfg.threads = threads;
        cfg.timings = timings;
        const auto reports = run_suite(cfg);
        emit(outPath,
             runFormat == "csv" ? reports_to_csv(reports, timings)
                                : reports_to_json(reports, timings));
        int fails = 0, typos = 0;
        for (const auto& r : reports) {
            if (r.verdict == "fail") ++fails;
            if (r.verdict == "known-typo-confirmed") ++typos;
        }
        std::fprintf(stderr, "checks: %zu reports, %d fail, %d known-typo-confirmed\n",
                     reports.size(), fails, typos);
        return any_failure(reports) ? 2 : 0;
    }

    if (*check) {
        const CheckRef ref = resolve_check(checkId);
        std::vector<ComplexMatrix> ops;
        for (const std::string& f : matrixFiles) ops.push_back(read_matrix_file(f));
        ParamSet params = default_params(*ref.check);
        for (const auto& [k, v] : parse_params(paramsText).values) params.values[k] = v;
        std::vector<VectorTriple> vectors;
        if (ref.check->kind == CheckKind::VectorLevel) {
            const int dim = ops.empty() ? 2 : ops[0].rows();
            Rng rng(0x5eedULL);
            for (int i = 0; i < 200; ++i)
                vectors.push_back({sample_unit_vector(rng, dim), sample_unit_vector(rng, dim),
                                   sample_unit_vector(rng, dim)});
        }
        EvalOptions opts;
        Evaluation ev = evaluate(*ref.check, ops, params, vectors, opts, ref.part);
        std::printf("%s  (%s)\n", ref.check->id.c_str(), ref.check->statement.c_str());
        print_evaluation(ev);
        return ev.margin < -opts.tolRel ? 2 : 0;
    }

    if (*fov) {
        ComplexMatrix m = read_matrix_file(fovMatrix);
        FovBoundary fb = fov_boundary(m, fovPoints);
        std::ostringstream csv;
        csv << "theta,re,im\n";
        char buf[120];
        for (std::size_t i = 0; i < fb.points.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", fb.angles[i],
                          fb.points[i].real(), fb.points[i].imag());
            csv << buf;
        }
        emit(fovOut, csv.str());
        return 0;
    }

    if (*tighten) {
        TightenConfig cfg;
        cfg.restarts = restarts;
        cfg.dims = parse_dims(tightenDims);
        cfg.seed = tightenSeed;
        cfg.forcedParams = parse_params(tightenParams);
        cfg.onlyClass = tightenClass;
        Evaluation ev = tightness_search(tightenId, cfg);
        std::printf("minimum slack for %s: %.12g (margin %.3e)\n", tightenId.c_str(), ev.slack,
                    ev.margin);
        print_evaluation(ev);
        return 0;
    }

    if (*replay) {
        const CheckDef& c = find_check(replayId);
        const std::uint64_t s = std::stoull(replaySeed);
        Evaluation ev = evaluate_sample(c, s, EvalOptions{}, 200);
        std::printf("%s replay\n", c.id.c_str());
        print_evaluation(ev);
        return 0;
    }

    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const UnknownCheck& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const ParamOutOfRange& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const AssumptionViolated& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const IoError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
