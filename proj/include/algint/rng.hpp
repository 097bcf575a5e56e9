// Copyright 2026 the algint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "algint/integers.hpp"

namespace algint {

/** SplitMix64: tiny deterministic generator. The standard distributions are
 *  implementation-defined, so reproducible sweeps roll their own. */
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /** Uniform in [0, m); m >= 1. Modulo bias is irrelevant at our sizes. */
    std::uint64_t below(std::uint64_t m) { return next() % m; }

    long rand_long(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /** lo + (hi-lo) * k/2^bits with k uniform in [0, 2^bits]. */
    Rat rand_dyadic(const Rat& lo, const Rat& hi, unsigned bits) {
        std::uint64_t k = below((std::uint64_t(1) << bits) + 1);
        return lo + Rat(hi - lo) * Rat(Int(k), Int(1) << bits);
    }

    double rand_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace algint
