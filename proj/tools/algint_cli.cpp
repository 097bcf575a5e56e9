// Copyright 2026 the algint authors. Apache-2.0 (see LICENSE).
//
// Command-line front end: maps a verb plus flags onto an ExperimentConfig,
// runs it, and emits the report. With --out the CSV and JSON tables land in
// files; otherwise the selected format goes to stdout and the human summary
// to stderr so pipelines stay clean.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <utility>

#include "algint/harness.hpp"

using namespace algint;

namespace {

const char* kUsage =
    "usage: algint <verb> [flags]\n"
    "\n"
    "verbs:\n"
    "  count-rect     points in a rectangle window (or the whole plane)\n"
    "  count-curve    points in a shrinking strip around a curve\n"
    "  special-check  level census of a square against its band thresholds\n"
    "  construct      build an Eisenstein polynomial with roots near two targets\n"
    "  sweep          curve counts over a height ladder plus a log-log fit\n"
    "  audit-t1       exact rectangle counts against the volume bound\n"
    "\n"
    "flags:\n"
    "  --n K              degree (2-5; construct needs 3-5)\n"
    "  --q LIST           comma-separated heights, e.g. 40,80,160\n"
    "  --gamma G[,G2]     shrink exponent(s) in (0,1]\n"
    "  --curve NAME       parabola | cubic | identity | poly:<c0,c1,...>\n"
    "  --interval A,B     curve abscissa interval\n"
    "  --c1 C             strip/window width scale\n"
    "  --midpoint D1,D2   window midpoints, or construction targets\n"
    "  --delta D          construction body shrink factor\n"
    "  --weights V1,V2    special-check value weights (sum to 1)\n"
    "  --shards K         parallel shards for the special census\n"
    "  --seed S           recorded in the config echo\n"
    "  --out PATH         write PATH.csv and PATH.json (see ALGINT_OUT_DIR)\n"
    "  --format csv|json  stdout table format when --out is absent\n"
    "  --budget B         class-size cap for naive scans (0 = library default)\n"
    "  --algo NAME        auto | naive | fast | tiling\n"
    "  --timings          fill the seconds column (breaks byte-for-byte reruns)\n"
    "\n"
    "exit codes: 0 ok, 2 invalid config, 3 budget exceeded, 4 construction\n"
    "failed, 5 undecidable at the boundary refinement floor.\n";

std::pair<Rat, Rat> parse_rat_pair(const std::string& v, const char* flag) {
    std::size_t c = v.find(',');
    if (c == std::string::npos || c == 0 || c + 1 == v.size())
        throw error(errc::invalid_input, std::string(flag) + " wants two comma-separated values");
    return {parse_rat(v.substr(0, c)), parse_rat(v.substr(c + 1))};
}

std::string output_stem(const std::string& out) {
    std::string stem = out;
    for (const char* ext : {".csv", ".json"}) {
        std::size_t n = std::strlen(ext);
        if (stem.size() > n && stem.compare(stem.size() - n, n, ext) == 0) stem.resize(stem.size() - n);
    }
    const char* dir = std::getenv("ALGINT_OUT_DIR");
    if (dir && *dir && stem.front() != '/') stem = std::string(dir) + "/" + stem;
    return stem;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    f << body;
    if (!f) throw error(errc::invalid_input, "cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc < 2) {
            std::fputs(kUsage, stderr);
            return 2;
        }
        std::string verb = argv[1];
        if (verb == "--help" || verb == "-h" || verb == "help") {
            std::fputs(kUsage, stdout);
            return 0;
        }

        ExperimentConfig cfg;
        if (verb == "count-rect") cfg.mode = "rect-count";
        else if (verb == "count-curve") cfg.mode = "curve-count";
        else if (verb == "special-check") cfg.mode = "special-check";
        else if (verb == "sweep") cfg.mode = "sweep";
        else if (verb == "audit-t1") cfg.mode = "audit-t1";
        else if (verb == "construct") {
            cfg.mode = "construct";
            cfg.n = 3;
        } else {
            throw error(errc::invalid_input, "unknown verb: " + verb);
        }

        for (int i = 2; i < argc; ++i) {
            std::string flag = argv[i];
            auto next = [&]() -> std::string {
                if (i + 1 >= argc) throw error(errc::invalid_input, flag + " needs a value");
                return argv[++i];
            };
            if (flag == "--n") cfg.n = std::stoi(next());
            else if (flag == "--q") {
                cfg.qs.clear();
                std::string v = next();
                std::size_t p = 0;
                while (p < v.size()) {
                    std::size_t c = v.find(',', p);
                    if (c == std::string::npos) c = v.size();
                    cfg.qs.emplace_back(v.substr(p, c - p));
                    p = c + 1;
                }
                if (cfg.qs.empty()) throw error(errc::invalid_input, "--q wants at least one height");
            } else if (flag == "--gamma") {
                std::string v = next();
                if (v.find(',') != std::string::npos) {
                    auto [a, b] = parse_rat_pair(v, "--gamma");
                    cfg.gamma1 = a;
                    cfg.gamma2 = b;
                } else {
                    cfg.gamma1 = cfg.gamma2 = parse_rat(v);
                }
            } else if (flag == "--curve") cfg.curve = next();
            else if (flag == "--interval") {
                auto [a, b] = parse_rat_pair(next(), "--interval");
                cfg.jlo = a;
                cfg.jhi = b;
            } else if (flag == "--c1") cfg.c1 = parse_rat(next());
            else if (flag == "--midpoint") {
                auto [a, b] = parse_rat_pair(next(), "--midpoint");
                cfg.d1 = a;
                cfg.d2 = b;
            } else if (flag == "--delta") cfg.delta = parse_rat(next());
            else if (flag == "--weights") {
                auto [a, b] = parse_rat_pair(next(), "--weights");
                cfg.v1 = a;
                cfg.v2 = b;
            } else if (flag == "--shards") cfg.shards = std::stoi(next());
            else if (flag == "--seed") cfg.seed = std::stoull(next());
            else if (flag == "--out") cfg.out = next();
            else if (flag == "--format") cfg.format = next();
            else if (flag == "--budget") cfg.budget = Int(next());
            else if (flag == "--algo") cfg.algo = next();
            else if (flag == "--timings") cfg.timings = true;
            else throw error(errc::invalid_input, "unknown flag: " + flag + " (try --help)");
        }

        RunOutput out = run(cfg);
        if (cfg.out.empty()) {
            std::fputs((cfg.format == "json" ? out.json : out.csv).c_str(), stdout);
            std::fputs(out.text.c_str(), stderr);
        } else {
            std::string stem = output_stem(cfg.out);
            write_file(stem + ".csv", out.csv);
            write_file(stem + ".json", out.json);
            std::fputs(out.text.c_str(), stdout);
            std::printf("wrote %s.csv and %s.json\n", stem.c_str(), stem.c_str());
        }
        return 0;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s [%s]\n", e.what(), errc_name(e.code()));
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
