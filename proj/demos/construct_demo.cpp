// Copyright 2026 the algint authors. Apache-2.0 (see LICENSE).
//
// Builds an Eisenstein-certified cubic whose two nearest real roots sit next
// to the targets 11/10 and 23/10, then prints the certificate the library
// verified: coefficient divisibilities, value and derivative sandwiches,
// height ceiling, and the certified root enclosures.

#include <cstdio>

#include "algint/constructor.hpp"

using namespace algint;

int main() {
    Rat x1(11, 10), x2(23, 10);
    ConstructionResult res = construct_point(x1, x2, 3, Int(1000), Rat(1, 20), 4);
    res.root1 = refine(res.poly, res.root1, Rat(Int(1), Int(1) << 24));
    res.root2 = refine(res.poly, res.root2, Rat(Int(1), Int(1) << 24));

    std::printf("P(t) = %s\n", res.poly.to_string().c_str());
    std::printf("Eisenstein prime: %s (p | a_k for k < 3, p^2 does not divide a_0)\n", res.p.str().c_str());
    std::printf("lattice multipliers s: ");
    for (const Int& s : res.s) std::printf("%s ", s.str().c_str());
    std::printf("\nattempts: %d, final shrink factor: %s\n", res.attempts, rat_to_decimal(res.delta_used, 6).c_str());
    std::printf("|P(x1)| = %s, |P(x2)| = %s\n", rat_to_decimal(res.px1, 6).c_str(), rat_to_decimal(res.px2, 6).c_str());
    std::printf("|P'(x1)| = %s, |P'(x2)| = %s\n", rat_to_decimal(res.dpx1, 2).c_str(),
                rat_to_decimal(res.dpx2, 2).c_str());
    std::printf("height %s below ceiling %.6g\n", res.height.str().c_str(), res.q1);
    std::printf("root near x1 in (%s, %s)\n", rat_to_decimal(res.root1.lo, 10).c_str(),
                rat_to_decimal(res.root1.hi, 10).c_str());
    std::printf("root near x2 in (%s, %s)\n", rat_to_decimal(res.root2.lo, 10).c_str(),
                rat_to_decimal(res.root2.hi, 10).c_str());
    std::printf("distance factor c12 = %.6g (times Q^(-3/2))\n", res.c12);
    return 0;
}
