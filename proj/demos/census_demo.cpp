// Copyright 2026 the algint authors. Apache-2.0 (see LICENSE).
//
// Walks the smallest interesting census by hand: lists every irreducible
// monic quadratic of height <= 2 with its isolated real roots, then checks
// the windowed rectangle counter against the naive scan on a sample window.

#include <cstdio>
#include <string>

#include "algint/enumerate.hpp"
#include "algint/realroots.hpp"

using namespace algint;

int main() {
    const Int Q(2);
    std::printf("monic quadratics with height <= %s, irreducible, two real roots:\n", Q.str().c_str());
    long long polys = 0, points = 0;
    enumerate_monic(2, Q, [&](const IntPolynomial& p) {
        if (!is_irreducible(p)) return;
        auto roots = isolate_real_roots(p);
        if (roots.size() != 2) return;
        ++polys;
        points += static_cast<long long>(roots.size() * roots.size());
        std::string line = p.to_string();
        for (auto& r : roots) {
            RootInterval tight = refine(p, r, Rat(Int(1), Int(1) << 20));
            line += "  root in (" + rat_to_decimal(tight.lo, 6) + ", " + rat_to_decimal(tight.hi, 6) + ")";
        }
        std::printf("  %s\n", line.c_str());
    });
    std::printf("=> %lld polynomials, %lld ordered root pairs\n\n", polys, points);

    Rectangle window = Rectangle::from_midpoint(Rat(1), Rat(2), Rat(3, 2), Rat(3, 2));
    for (int n = 2; n <= 3; ++n) {
        CountResult fast = count_points_rect_fast(n, Int(8), window);
        CountResult naive = count_points_naive(n, Int(8), window);
        std::printf("degree %d, height <= 8, window (1, 2) +/- 3/4: fast=%lld naive=%lld polys=%lld %s\n", n,
                    fast.points, naive.points, fast.polys, fast.points == naive.points ? "(agree)" : "(MISMATCH)");
    }
    return 0;
}
