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

#include <catch2/catch_amalgamated.hpp>

#include "algint/constructor.hpp"
#include "algint/rng.hpp"

using namespace algint;

TEST_CASE("prime selection frozen values") {
    REQUIRE(select_prime(2, Int(1)) == 3);
    REQUIRE(select_prime(3, Int(6)) == 7);
    REQUIRE(select_prime(3, Int(-6)) == 7);
    REQUIRE(select_prime(4, Int(1)) == 29);
    REQUIRE(select_prime(5, Int(-1)) == 127);
    // the selected prime exceeds n!, so it can never divide the determinant
    for (long d = -6; d <= 6; ++d) {
        if (d == 0) continue;
        REQUIRE(Int(d) % select_prime(3, Int(d)) != 0);
    }
    try {
        select_prime(3, Int(0));
        FAIL("expected refusal");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::invalid_input);
    }
    try {
        select_prime(3, Int(7));  // exceeds 3!
        FAIL("expected refusal");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::invalid_input);
    }
}

TEST_CASE("body spec validation") {
    Rat x1(11, 10), x2(23, 10);
    Rat hs = two_point_height_scale_sq(2, x1, x2);
    auto expect = [&](auto fn, errc code) {
        try {
            fn();
            FAIL("expected refusal");
        } catch (const error& e) {
            REQUIRE(e.code() == code);
        }
    };
    expect([&] { ConvexBodySpec(x1, x1, 3, Int(10), Rat(1, 2), Rat(1, 2), hs); }, errc::degenerate_target);
    expect([&] { ConvexBodySpec(x1, x2, 3, Int(10), Rat(1, 2), Rat(1, 4), hs); }, errc::invalid_input);
    expect([&] { ConvexBodySpec(x1, x2, 3, Int(10), Rat(3, 2), Rat(-1, 2), hs); }, errc::invalid_input);
    expect([&] { ConvexBodySpec(x1, x2, 2, Int(10), Rat(0), Rat(0), hs); }, errc::unsupported_degree);
    expect([&] { ConvexBodySpec(x1, x2, 6, Int(10), Rat(2), Rat(2), hs); }, errc::unsupported_degree);
    expect([&] { ConvexBodySpec(x1, x2, 3, Int(0), Rat(1, 2), Rat(1, 2), hs); }, errc::invalid_input);
    expect([&] { ConvexBodySpec(x1, x2, 3, Int(10), Rat(1, 2), Rat(1, 2), Rat(0)); }, errc::invalid_input);
}

// independent re-check of the dilated-body system for one basis polynomial:
// squared value comparison against slack^2 h^2 Q^(-2u_i), plain rational
// comparisons for the derivative and coefficient caps
static void require_in_dilated_body(const IntPolynomial& pj, const ConvexBodySpec& body, const Rat& slack) {
    const Rat xs[2] = {body.x1, body.x2};
    const Rat us[2] = {body.u1, body.u2};
    for (int i = 0; i < 2; ++i) {
        Rat v = abs(pj.evaluate(xs[i]));
        REQUIRE(compare_to_scaled_power(Rat(v * v), Rat(Rat(slack * slack) * body.h_sq), body.Q,
                                        -2 * num(us[i]).convert_to<long>(), den(us[i]).convert_to<long>()) <= 0);
        Rat dv = abs(pj.derivative().evaluate(xs[i]));
        REQUIRE(dv <= Rat(slack * Rat(body.Q)));
    }
    for (int k = 2; k < body.n; ++k) REQUIRE(Rat(abs(pj.coeff((size_t)k))) <= Rat(slack * Rat(body.Q)));
}

TEST_CASE("small basis satisfies the dilated body system") {
    Rat x1(11, 10), x2(23, 10);
    ConvexBodySpec body(x1, x2, 3, Int(1000), Rat(1, 2), Rat(1, 2), two_point_height_scale_sq(2, x1, x2));
    // delta = 1/20 is refused here: 15t^2-51t+38 evaluates to 1/20 at both
    // targets, inside the shrunk body; 1/80 pushes it out
    try {
        find_small_basis(body, Rat(1, 20));
        FAIL("expected refusal");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::target_in_exceptional_set);
    }
    SmallBasis basis = find_small_basis(body, Rat(1, 80));
    REQUIRE(basis.polys.size() == 3);
    REQUIRE(basis.det != 0);
    REQUIRE(Int(abs(basis.det)) <= 6);
    REQUIRE(basis.slack == rat_pow(Rat(1, 80), -2));
    for (const auto& pj : basis.polys) {
        REQUIRE(pj.degree() <= 2);
        require_in_dilated_body(pj, body, basis.slack);
    }
    // coefficient rows mirror the polynomials
    for (size_t j = 0; j < 3; ++j)
        for (size_t k = 0; k < 3; ++k) REQUIRE(basis.coeffs[j][k] == basis.polys[j].coeff(k));
}

TEST_CASE("exhaustive basis search agrees with the reduction path on validity") {
    Rat x1(11, 10), x2(23, 10);
    ConvexBodySpec body(x1, x2, 3, Int(1000), Rat(1, 2), Rat(1, 2), two_point_height_scale_sq(2, x1, x2));
    SmallBasis a = find_small_basis(body, Rat(1, 80));
    SmallBasis b = detail::exhaustive_small_basis(body, Rat(1, 80));
    for (const auto& pj : a.polys) require_in_dilated_body(pj, body, a.slack);
    for (const auto& pj : b.polys) require_in_dilated_body(pj, body, b.slack);
    REQUIRE(b.det != 0);
    REQUIRE(Int(abs(b.det)) <= 6);
}

TEST_CASE("degenerate tiny body never yields a silent invalid basis") {
    Rat x1(11, 10), x2(23, 10);
    ConvexBodySpec body(x1, x2, 3, Int(1), Rat(1, 2), Rat(1, 2), two_point_height_scale_sq(2, x1, x2));
    try {
        SmallBasis basis = find_small_basis(body, Rat(1, 20));
        for (const auto& pj : basis.polys) require_in_dilated_body(pj, body, basis.slack);
        REQUIRE(basis.det != 0);
    } catch (const error& e) {
        bool expected = e.code() == errc::target_in_exceptional_set || e.code() == errc::slack_exhausted;
        REQUIRE(expected);
    }
}

// unimodular integer matrix built by random row operations
static IntMat random_unimodular(SplitMix64& rng, size_t n) {
    IntMat m(n, IntVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = rng.below(2) ? 1 : -1;
    for (int ops = 0; ops < 14; ++ops) {
        size_t a = rng.below((unsigned)n), b = rng.below((unsigned)n);
        if (a == b) continue;
        long c = rng.rand_long(-3, 3);
        for (size_t col = 0; col < n; ++col) m[a][col] += Int(c) * m[b][col];
    }
    return m;
}

static SmallBasis fake_basis(const IntMat& coeffs, const Rat& delta) {
    SmallBasis b;
    b.coeffs = coeffs;
    for (const auto& row : coeffs) b.polys.push_back(IntPolynomial(row));
    b.det = det_int(coeffs);
    b.delta = delta;
    b.slack = rat_pow(delta, -(long)(coeffs.size() - 1));
    return b;
}

TEST_CASE("theta system assembly, exact solve, determinant identity") {
    SplitMix64 rng(8201);
    int done4 = 0, done5 = 0;
    while (done4 < 50 || done5 < 10) {
        int n = (done4 < 50) ? 4 : 5;
        Rat x1 = Rat(Int(rng.rand_long(-8, 8)), Int(rng.rand_long(1, 5)));
        Rat x2 = Rat(Int(rng.rand_long(-8, 8)), Int(rng.rand_long(1, 5)));
        if (x1 == x2 || (x1 == 0 && x2 == 0)) continue;
        ConvexBodySpec body(x1, x2, n, Int(50), Rat(n - 2, 2), Rat(n - 2, 2),
                            two_point_height_scale_sq(n - 1, x1, x2));
        SmallBasis basis = fake_basis(random_unimodular(rng, (size_t)n), Rat(1, 20));
        Int p = select_prime(n, basis.det);
        ThetaSolution ts = solve_theta(basis, body, p);
        REQUIRE(ts.theta.size() == (size_t)n);

        // rebuild the rows independently: value and derivative rows at x1 then
        // x2, then coefficient-zeroing rows for indices 4..n-1
        RatMat a((size_t)n, RatVec((size_t)n, Rat(0)));
        for (int j = 0; j < n; ++j) {
            a[0][(size_t)j] = Rat(p) * basis.polys[(size_t)j].evaluate(x1);
            a[1][(size_t)j] = Rat(p) * basis.polys[(size_t)j].derivative().evaluate(x1);
            a[2][(size_t)j] = Rat(p) * basis.polys[(size_t)j].evaluate(x2);
            a[3][(size_t)j] = Rat(p) * basis.polys[(size_t)j].derivative().evaluate(x2);
            for (int k = 4; k < n; ++k) a[(size_t)k][(size_t)j] = Rat(basis.coeffs[(size_t)j][(size_t)k]);
        }
        REQUIRE(ts.matrix == a);
        for (size_t r = 0; r < (size_t)n; ++r) {
            Rat acc = 0;
            for (size_t j = 0; j < (size_t)n; ++j) acc += a[r][j] * ts.theta[j];
            REQUIRE(acc == ts.rhs[r]);
        }

        REQUIRE(det_rat(a) == Rat(rat_pow(Rat(p), 4) * rat_pow(Rat(x2 - x1), 4)) * Rat(basis.det));

        // derivative right-hand sides are fully rational and recomputable
        Rat sum1 = 0, sum2 = 0;
        for (int j = 0; j < n; ++j) {
            sum1 += abs(basis.polys[(size_t)j].derivative().evaluate(x1));
            sum2 += abs(basis.polys[(size_t)j].derivative().evaluate(x2));
        }
        REQUIRE(ts.rhs[1] == Rat(Rat(p) * Rat(body.Q)) + Rat(p) * sum1 - Rat(n) * rat_pow(x1, n - 1));
        REQUIRE(ts.rhs[3] == Rat(Rat(p) * Rat(body.Q)) + Rat(p) * sum2 - Rat(n) * rat_pow(x2, n - 1));
        // zero rows stay zero
        for (int k = 4; k < n; ++k) REQUIRE(ts.rhs[(size_t)k] == 0);
        // value right-hand sides sit just below p(n+1) slack h Q^(-u_i)
        for (int i = 0; i < 2; ++i) {
            Rat x = i == 0 ? x1 : x2;
            Rat w = ts.rhs[(size_t)(2 * i)] + rat_pow(x, n);
            REQUIRE(w > 0);
            Rat cap = Rat(rat_pow(Rat(Rat(p) * Rat(n + 1) * basis.slack), 2)) * body.h_sq;
            REQUIRE(compare_to_scaled_power(Rat(w * w), cap, body.Q, -(n - 2), 1) <= 0);
        }

        if (n == 4) ++done4;
        else ++done5;
    }
}

TEST_CASE("reduced three-variable system identity") {
    SplitMix64 rng(8202);
    for (int trial = 0; trial < 30; ++trial) {
        Rat x1 = Rat(Int(rng.rand_long(-6, 6)), Int(rng.rand_long(1, 4)));
        Rat x2 = Rat(Int(rng.rand_long(-6, 6)), Int(rng.rand_long(1, 4)));
        if (x1 == x2 || (x1 == 0 && x2 == 0)) continue;
        ConvexBodySpec body(x1, x2, 3, Int(50), Rat(1, 2), Rat(1, 2), two_point_height_scale_sq(2, x1, x2));
        SmallBasis basis = fake_basis(random_unimodular(rng, 3), Rat(1, 20));
        Int p = select_prime(3, basis.det);
        ThetaSolution ts = solve_theta(basis, body, p);
        REQUIRE(ts.matrix.size() == 3);
        // rows: value at x1, derivative at x1, value at x2
        for (int j = 0; j < 3; ++j) {
            REQUIRE(ts.matrix[0][(size_t)j] == Rat(p) * basis.polys[(size_t)j].evaluate(x1));
            REQUIRE(ts.matrix[1][(size_t)j] == Rat(p) * basis.polys[(size_t)j].derivative().evaluate(x1));
            REQUIRE(ts.matrix[2][(size_t)j] == Rat(p) * basis.polys[(size_t)j].evaluate(x2));
        }
        REQUIRE(det_rat(ts.matrix) == Rat(rat_pow(Rat(p), 3) * rat_pow(Rat(x2 - x1), 2)) * Rat(basis.det));
        for (size_t r = 0; r < 3; ++r) {
            Rat acc = 0;
            for (size_t j = 0; j < 3; ++j) acc += ts.matrix[r][j] * ts.theta[j];
            REQUIRE(acc == ts.rhs[r]);
        }
    }
}

TEST_CASE("coincident targets collapse the system determinant") {
    SplitMix64 rng(8203);
    IntMat coeffs = random_unimodular(rng, 4);
    SmallBasis basis = fake_basis(coeffs, Rat(1, 20));
    Rat x(3, 2);
    Int p(29);
    RatMat a(4, RatVec(4));
    for (int j = 0; j < 4; ++j) {
        a[0][(size_t)j] = Rat(p) * basis.polys[(size_t)j].evaluate(x);
        a[1][(size_t)j] = Rat(p) * basis.polys[(size_t)j].derivative().evaluate(x);
        a[2][(size_t)j] = a[0][(size_t)j];
        a[3][(size_t)j] = a[1][(size_t)j];
    }
    REQUIRE(det_rat(a) == 0);
}

TEST_CASE("rounding to Eisenstein admissibility") {
    // no adjustment needed: the rounded constant term is already coprime to p
    {
        IntMat coeffs = {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}};
        SmallBasis basis = fake_basis(coeffs, Rat(1, 20));
        std::vector<Rat> theta = {Rat(2), Rat(3), Rat(4)};
        auto s = round_to_eisenstein(theta, basis, Int(7));
        REQUIRE(s == std::vector<Int>{Int(2), Int(3), Int(4)});
    }
    // the constant term lands on a multiple of p and one coordinate is bumped
    {
        IntMat coeffs = {{Int(1), Int(1), Int(0)}, {Int(7), Int(0), Int(1)}, {Int(7), Int(1), Int(1)}};
        SmallBasis basis = fake_basis(coeffs, Rat(1, 20));
        REQUIRE(basis.det % 7 != 0);
        std::vector<Rat> theta = {Rat(7), Rat(0), Rat(0)};
        auto s = round_to_eisenstein(theta, basis, Int(7));
        Int a0 = s[0] * 1 + s[1] * 7 + s[2] * 7;
        REQUIRE(a0 % 7 != 0);
        int bumped = 0;
        for (size_t j = 0; j < 3; ++j) {
            Int fl = floor_rat(theta[j]);
            REQUIRE((s[j] == fl || s[j] == fl + 1));
            if (s[j] == fl + 1) ++bumped;
        }
        REQUIRE(bumped == 1);
    }
    // randomized distance and divisibility contracts
    SplitMix64 rng(8204);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = 3 + (size_t)rng.below(3);
        IntMat coeffs = random_unimodular(rng, n);
        SmallBasis basis = fake_basis(coeffs, Rat(1, 20));
        Int p = select_prime((int)n, basis.det);
        std::vector<Rat> theta(n);
        for (auto& t : theta) t = rng.rand_dyadic(Rat(-10), Rat(10), 8);
        auto s = round_to_eisenstein(theta, basis, p);
        Int a0 = 0;
        int bumped = 0;
        for (size_t j = 0; j < n; ++j) {
            REQUIRE(Rat(abs(Rat(theta[j] - Rat(s[j])))) <= 1);
            Int fl = floor_rat(theta[j]);
            REQUIRE((s[j] == fl || s[j] == fl + 1));
            if (s[j] == fl + 1) ++bumped;
            a0 += s[j] * coeffs[j][0];
        }
        REQUIRE(bumped <= 1);
        REQUIRE(a0 % p != 0);
    }
}

// full a-posteriori audit of one construction, using only primitives tested
// elsewhere: Eisenstein divisibilities, both sandwiches, the height ceiling,
// and certified nearest-root distances
static void audit_construction(const ConstructionResult& res, const Rat& x1, const Rat& x2, int n, const Int& Q) {
    const IntPolynomial& P = res.poly;
    REQUIRE(P.degree() == n);
    REQUIRE(P.coeff((size_t)n) == 1);
    REQUIRE(eisenstein_check(P, res.p));
    for (int k = 0; k < n; ++k) REQUIRE(P.coeff((size_t)k) % res.p == 0);
    REQUIRE(P.coeff(0) % Int(res.p * res.p) != 0);

    Rat slack = rat_pow(res.delta_used, -(n - 1));
    Rat h_sq = two_point_height_scale_sq(n - 1, x1, x2);
    const Rat xs[2] = {x1, x2};
    for (int i = 0; i < 2; ++i) {
        Rat v = abs(P.evaluate(xs[i]));
        Rat lo_c = Rat(rat_pow(Rat(Rat(res.p) * slack), 2)) * h_sq;
        Rat hi_c = Rat(rat_pow(Rat(Rat(res.p) * Rat(2 * n + 1) * slack), 2)) * h_sq;
        REQUIRE(compare_to_scaled_power(Rat(v * v), lo_c, Q, -(n - 2), 1) >= 0);
        REQUIRE(compare_to_scaled_power(Rat(v * v), hi_c, Q, -(n - 2), 1) <= 0);
        Rat dv = abs(P.derivative().evaluate(xs[i]));
        REQUIRE(dv >= Rat(Rat(res.p) * Rat(Q)));
        REQUIRE(dv <= Rat(Rat(Rat(res.p) + Rat(2 * n) * Rat(res.p) * slack) * Rat(Q)));
    }

    REQUIRE(res.height == P.height());
    // height ceiling: either the plain coefficient budget n slack Q holds, or
    // the coefficient-recovery bound through the two-target interpolation
    // system does (rebuilt here from independently tested pieces)
    bool plain = Rat(res.height) < Rat(Rat(n) * slack * Rat(Q));
    bool recovered = false;
    {
        RatMat v(4, RatVec(4, Rat(0)));
        const Rat xx[2] = {x1, x2};
        for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 4; ++k) v[(size_t)i][(size_t)k] = rat_pow(xx[i], k);
            for (int k = 1; k < 4; ++k) v[(size_t)(2 + i)][(size_t)k] = Rat(Rat(k) * rat_pow(xx[i], k - 1));
        }
        RatMat vinv = invert(v);
        RatVec ca(4, Rat(0)), cb(4, Rat(0));  // each cap reads ca + cb*sqrt(h_sq)
        if (n == 3) {
            cb[0] = cb[1] = 1;
            ca[2] = ca[3] = Rat(res.p);
            cb[2] = cb[3] = Rat(Rat(Rat(2 * n) * Rat(res.p)) * slack);
        } else {
            for (int i = 0; i < 2; ++i) {
                Rat m = rat_pow(Rat(abs(xx[i]) + 1), n);
                cb[(size_t)i] = Rat(Rat(2 * n) * Rat(slack * m));
                cb[(size_t)(2 + i)] = Rat(Rat(4 * n * n) * Rat(Rat(res.p) * Rat(slack * m)));
            }
        }
        for (int k = 0; k < 4 && !recovered; ++k) {
            Rat at = 0, bt = 0;
            for (int m = 0; m < 4; ++m) {
                Rat w = abs(vinv[(size_t)k][(size_t)m]);
                at += Rat(w * ca[(size_t)m]);
                bt += Rat(w * cb[(size_t)m]);
            }
            if (compare_to_sqrt(Rat(Rat(Rat(res.height) / Rat(Q)) - at), bt, h_sq) < 0) recovered = true;
        }
    }
    REQUIRE((plain || recovered));

    // nearest real roots within n(2n+1) slack h Q^(-u-1), u = (n-2)/2;
    // squared comparison at exponent -n
    Rat c12_sq = Rat(rat_pow(Rat(Rat(n) * Rat(2 * n + 1) * slack), 2)) * h_sq;
    auto roots = isolate_real_roots(P);
    REQUIRE_FALSE(roots.empty());
    for (int i = 0; i < 2; ++i) {
        bool found = false;
        for (auto iv : roots) {
            iv = refine(P, iv, Rat(Int(1), Int(Int(1) << 40)));
            Rat dhi = std::max(Rat(abs(Rat(iv.lo - xs[i]))), Rat(abs(Rat(iv.hi - xs[i]))));
            if (compare_to_scaled_power(Rat(dhi * dhi), c12_sq, Q, -n, 1) < 0) {
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }

    // the recorded intervals really contain roots and sit inside the bound
    const RootInterval* recs[2] = {&res.root1, &res.root2};
    for (int i = 0; i < 2; ++i) {
        Rat dhi = std::max(Rat(abs(Rat(recs[i]->lo - xs[i]))), Rat(abs(Rat(recs[i]->hi - xs[i]))));
        REQUIRE(compare_to_scaled_power(Rat(dhi * dhi), c12_sq, Q, -n, 1) < 0);
        REQUIRE(P.evaluate(recs[i]->lo) * P.evaluate(recs[i]->hi) <= 0);
    }
}

TEST_CASE("end-to-end construction at the reference target") {
    Rat x1(11, 10), x2(23, 10);
    auto res = construct_point(x1, x2, 3, Int(1000), Rat(1, 20), 4);
    REQUIRE((res.p == 7 || res.p == 11));
    REQUIRE(res.attempts >= 1);
    REQUIRE(res.delta_used <= Rat(1, 20));
    audit_construction(res, x1, x2, 3, Int(1000));
}

TEST_CASE("construction input validation") {
    auto expect = [&](auto fn, errc code) {
        try {
            fn();
            FAIL("expected refusal");
        } catch (const error& e) {
            REQUIRE(e.code() == code);
        }
    };
    expect([&] { construct_point(Rat(3, 2), Rat(3, 2), 3, Int(100), Rat(1, 20), 2); }, errc::degenerate_target);
    expect([&] { construct_point(Rat(1), Rat(2), 2, Int(100), Rat(1, 20), 2); }, errc::unsupported_degree);
    expect([&] { construct_point(Rat(1), Rat(2), 6, Int(100), Rat(1, 20), 2); }, errc::unsupported_degree);
    expect([&] { construct_point(Rat(1), Rat(2), 3, Int(100), Rat(0), 2); }, errc::invalid_input);
    expect([&] { construct_point(Rat(1), Rat(2), 3, Int(100), Rat(1), 2); }, errc::invalid_input);
    expect([&] { construct_point(Rat(1), Rat(2), 3, Int(0), Rat(1, 20), 2); }, errc::invalid_input);
}

TEST_CASE("small construction campaign") {
    SplitMix64 rng(8205);
    int attempts = 0, successes = 0;
    while (attempts < 8) {
        Rat x1 = Rat(1) + rng.rand_dyadic(Rat(0), Rat(1), 10);
        Rat x2 = Rat(2) + rng.rand_dyadic(Rat(0), Rat(1), 10);
        if (Rat(abs(Rat(x1 - x2))) < Rat(1, 2)) continue;
        int n = (attempts % 2 == 0) ? 3 : 4;
        ++attempts;
        try {
            auto res = construct_point(x1, x2, n, Int(1000), Rat(1, 20), 4);
            audit_construction(res, x1, x2, n, Int(1000));
            ++successes;
        } catch (const error& e) {
            bool expected = e.code() == errc::construction_failed || e.code() == errc::target_in_exceptional_set ||
                            e.code() == errc::slack_exhausted;
            REQUIRE(expected);
        }
    }
    REQUIRE(successes >= 6);
}
