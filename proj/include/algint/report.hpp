// Copyright 2026 the algint authors. Apache-2.0 (see LICENSE).
//
// Fixed-format CSV and JSON emission for census runs and level scans.
// Everything here is a pure function of the row values (no timestamps, no
// locale), so identical inputs always serialize to identical bytes; that is
// what makes sharded reruns diffable.

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "algint/integers.hpp"
#include "algint/special.hpp"

namespace algint {

/** One census line: a (degree, height) cell plus the window it was counted
 *  in. d1 == d2 == 0 marks a whole-plane count; curve runs reuse the d slots
 *  for the interval endpoints and leave gamma2 at zero. */
struct CensusRecord {
    int n = 0;
    Int Q = Int(1);
    Rat gamma1, gamma2;
    Rat d1, d2;
    long long count = 0;
    long long polys = 0;
    std::string algo;
    double seconds = 0;  // stays 0.000 unless timing collection is on
};

/** Exact rational field: plain integer when the denominator is 1. */
inline std::string rat_field(const Rat& x) {
    std::string s = num(x).str();
    if (den(x) != 1) {
        s += '/';
        s += den(x).str();
    }
    return s;
}

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string fmt_seconds(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

inline const char* kCensusHeader = "n,Q,gamma1,gamma2,d1,d2,count,polys,algo,seconds";
inline const char* kLevelsHeader = "l,lambda_l,lambda_l1,count,threshold,satisfied";

inline std::string census_csv(const std::vector<CensusRecord>& rows) {
    std::string out = kCensusHeader;
    out += '\n';
    for (const CensusRecord& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += r.Q.str();
        out += ',';
        out += rat_field(r.gamma1);
        out += ',';
        out += rat_field(r.gamma2);
        out += ',';
        out += rat_field(r.d1);
        out += ',';
        out += rat_field(r.d2);
        out += ',';
        out += std::to_string(r.count);
        out += ',';
        out += std::to_string(r.polys);
        out += ',';
        out += r.algo;
        out += ',';
        out += fmt_seconds(r.seconds);
        out += '\n';
    }
    return out;
}

/** JSON mirror of census_csv; `extra` splices prepared members (for example a
 *  fit object) between the mode tag and the row list. */
inline std::string census_json(const std::string& mode, const std::vector<CensusRecord>& rows,
                               const std::string& extra = "") {
    std::string out = "{\"mode\":\"" + json_escape(mode) + "\"," + extra + "\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CensusRecord& r = rows[i];
        out += i ? ",\n" : "\n";
        out += "{\"n\":" + std::to_string(r.n) + ",\"Q\":\"" + r.Q.str() + "\"";
        out += ",\"gamma1\":\"" + rat_field(r.gamma1) + "\",\"gamma2\":\"" + rat_field(r.gamma2) + "\"";
        out += ",\"d1\":\"" + rat_field(r.d1) + "\",\"d2\":\"" + rat_field(r.d2) + "\"";
        out += ",\"count\":" + std::to_string(r.count) + ",\"polys\":" + std::to_string(r.polys);
        out += ",\"algo\":\"" + json_escape(r.algo) + "\",\"seconds\":" + fmt_seconds(r.seconds) + "}";
    }
    out += "\n]}\n";
    return out;
}

inline std::string levels_csv(const std::vector<CensusRow>& rows) {
    std::string out = kLevelsHeader;
    out += '\n';
    for (const CensusRow& r : rows) {
        out += std::to_string(r.l);
        out += ',';
        out += rat_field(r.lambda_l);
        out += ',';
        out += rat_field(r.lambda_l1);
        out += ',';
        out += std::to_string(r.count);
        out += ',';
        out += fmt_double(r.threshold);
        out += ',';
        out += r.satisfied ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline std::string levels_json(bool special, const std::vector<CensusRow>& rows) {
    std::string out = "{\"mode\":\"special-check\",\"special\":";
    out += special ? "true" : "false";
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CensusRow& r = rows[i];
        out += i ? ",\n" : "\n";
        out += "{\"l\":" + std::to_string(r.l);
        out += ",\"lambda_l\":\"" + rat_field(r.lambda_l) + "\"";
        out += ",\"lambda_l1\":\"" + rat_field(r.lambda_l1) + "\"";
        out += ",\"count\":" + std::to_string(r.count);
        out += ",\"threshold\":" + fmt_double(r.threshold);
        out += std::string(",\"satisfied\":") + (r.satisfied ? "true" : "false") + "}";
    }
    out += "\n]}\n";
    return out;
}

}  // namespace algint
