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

#include "algint/integers.hpp"

namespace algint {

/** Rectangle: axis-aligned box, half-open [lo, hi) on each axis. */
struct Rectangle {
    Rat lo1, hi1, lo2, hi2;

    Rectangle(Rat l1, Rat h1, Rat l2, Rat h2)
        : lo1(std::move(l1)), hi1(std::move(h1)), lo2(std::move(l2)), hi2(std::move(h2)) {
        if (!(lo1 < hi1) || !(lo2 < hi2))
            throw error(errc::invalid_region, "rectangle needs positive widths");
    }

    static Rectangle from_midpoint(const Rat& d1, const Rat& d2, const Rat& w1, const Rat& w2) {
        if (w1 <= 0 || w2 <= 0) throw error(errc::invalid_region, "widths must be positive");
        return Rectangle(d1 - w1 / 2, d1 + w1 / 2, d2 - w2 / 2, d2 + w2 / 2);
    }

    Rat mid1() const { return (lo1 + hi1) / 2; }
    Rat mid2() const { return (lo2 + hi2) / 2; }
    Rat width1() const { return hi1 - lo1; }
    Rat width2() const { return hi2 - lo2; }
    Rat area() const { return width1() * width2(); }
};

} // namespace algint
