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

#include "algint/curves.hpp"

using namespace algint;

TEST_CASE("curve registry") {
    REQUIRE(curve_by_name("parabola").phi.to_string() == "0 0 1");
    REQUIRE(curve_by_name("cubic").phi.to_string() == "0 1 0 1");
    REQUIRE(curve_by_name("identity").phi.to_string() == "0 1");
    REQUIRE(curve_by_name("poly:1 -2 0 1").phi.to_string() == "1 -2 0 1");
    try {
        curve_by_name("circle");
        FAIL("expected unknown-curve refusal");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::invalid_curve);
    }
    try {
        curve_by_name("poly:7");
        FAIL("expected constant-curve refusal");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::invalid_curve);
    }
}

TEST_CASE("curve derivative bounds") {
    // sup|2x| over [1,2] is 4 and the coefficient bound is tight there
    REQUIRE(curve_by_name("parabola").deriv_sup(Rat(1), Rat(2)) == 4);
    // |1 + 3x^2| <= 1 + 3*4 on [-2,1]
    REQUIRE(curve_by_name("cubic").deriv_sup(Rat(-2), Rat(1)) == 13);
    REQUIRE(curve_by_name("identity").deriv_sup(Rat(-5), Rat(7)) == 1);
}

TEST_CASE("scaled root bounds") {
    REQUIRE(kth_root_floor(Int(26), 3) == 2);
    REQUIRE(kth_root_floor(Int(27), 3) == 3);
    REQUIRE(kth_root_floor(Int(28), 3) == 3);
    REQUIRE(kth_root_floor(Int(1) << 40, 2) == Int(1) << 20);

    Rat lo = scaled_root_lower(Rat(2), 1, 2, 30);
    Rat hi = scaled_root_upper(Rat(2), 1, 2, 30);
    REQUIRE(lo * lo <= 2);
    REQUIRE(hi * hi >= 2);
    REQUIRE(Rat(hi - lo) <= Rat(1, Int(1) << 28));

    // exponent -1/2 brackets 1/sqrt(Q)
    Rat l2 = scaled_root_lower(Rat(5), -1, 2, 30);
    Rat h2 = scaled_root_upper(Rat(5), -1, 2, 30);
    REQUIRE(Rat(l2 * l2) <= Rat(1, 5));
    REQUIRE(Rat(h2 * h2) >= Rat(1, 5));
}

static CurveStripQuery base_query(int n, long q, const char* curve, Rat jlo, Rat jhi, Rat c1, Rat gamma) {
    CurveStripQuery query;
    query.n = n;
    query.Q = Int(q);
    query.curve = curve_by_name(curve);
    query.jlo = jlo;
    query.jhi = jhi;
    query.c1 = c1;
    query.gamma = gamma;
    return query;
}

TEST_CASE("identity strip catches exactly the diagonal at height two") {
    // theta = 2^{-1/2}: every diagonal pair is inside, and the closest
    // off-diagonal distance among the seven real quadratics is sqrt(5)
    auto q = base_query(2, 2, "identity", Rat(-3), Rat(3), Rat(1), Rat(1, 2));
    auto naive = count_curve_strip(q, CurveStrategy::naive);
    REQUIRE(naive.points == 14);
    REQUIRE(naive.polys == 7);
    auto tiled = count_curve_strip(q, CurveStrategy::tiling);
    REQUIRE(tiled.points == 14);
    REQUIRE(tiled.polys == 7);
}

TEST_CASE("distinct pairs exclude the diagonal") {
    // every point of the height-two identity strip is a diagonal pair
    auto q = base_query(2, 2, "identity", Rat(-3), Rat(3), Rat(1), Rat(1, 2));
    q.distinct = true;
    for (auto strategy : {CurveStrategy::naive, CurveStrategy::tiling}) {
        auto res = count_curve_strip(q, strategy);
        REQUIRE(res.points == 0);
        REQUIRE(res.polys == 0);
    }

    // theta = 7/(2 sqrt 2) admits exactly the two conjugate gaps sqrt(5),
    // two ordered pairs each; the wider gaps sqrt(8) and sqrt(12) stay out
    auto w = base_query(2, 2, "identity", Rat(-3), Rat(3), Rat(7, 2), Rat(1, 2));
    auto full = count_curve_strip(w, CurveStrategy::naive);
    REQUIRE(full.points == 18);
    REQUIRE(full.polys == 7);
    w.distinct = true;
    for (auto strategy : {CurveStrategy::naive, CurveStrategy::tiling}) {
        auto res = count_curve_strip(w, strategy);
        REQUIRE(res.points == 4);
        REQUIRE(res.polys == 2);
    }
}

TEST_CASE("parabola strip at height two") {
    // alpha1 in (1,2) leaves sqrt(2) and the golden ratio; only
    // (sqrt2, sqrt2) lands within 2^{-1/2} of the parabola
    auto q = base_query(2, 2, "parabola", Rat(1), Rat(2), Rat(1), Rat(1, 2));
    auto naive = count_curve_strip(q, CurveStrategy::naive);
    REQUIRE(naive.points == 1);
    REQUIRE(naive.polys == 1);
    auto tiled = count_curve_strip(q, CurveStrategy::tiling);
    REQUIRE(tiled.points == 1);
    REQUIRE(tiled.polys == 1);
}

TEST_CASE("tiling matches plain filtering") {
    struct Case { int n; long q; const char* curve; Rat jlo, jhi, c1, gamma; };
    std::vector<Case> cases = {
        {2, 3, "parabola", Rat(11, 10), Rat(19, 10), Rat(1), Rat(1, 2)},
        {2, 3, "parabola", Rat(11, 10), Rat(19, 10), Rat(3, 2), Rat(7, 10)},
        {2, 2, "cubic", Rat(-3, 2), Rat(1, 2), Rat(1), Rat(3, 5)},
        {3, 2, "parabola", Rat(11, 10), Rat(19, 10), Rat(1), Rat(1, 2)},
        {3, 2, "identity", Rat(-2), Rat(2), Rat(1), Rat(3, 5)},
        {2, 4, "identity", Rat(-1), Rat(5, 2), Rat(1, 2), Rat(1, 2)},
    };
    for (const auto& c : cases) {
        auto q = base_query(c.n, c.q, c.curve, c.jlo, c.jhi, c.c1, c.gamma);
        auto naive = count_curve_strip(q, CurveStrategy::naive);
        auto tiled = count_curve_strip(q, CurveStrategy::tiling);
        CAPTURE(c.curve, c.n, c.q);
        REQUIRE(naive.points == tiled.points);
        REQUIRE(naive.polys == tiled.polys);
    }
}

TEST_CASE("tile size override leaves counts unchanged") {
    auto q = base_query(2, 3, "parabola", Rat(11, 10), Rat(19, 10), Rat(1), Rat(1, 2));
    auto def = count_curve_strip(q, CurveStrategy::tiling);
    q.c6 = Rat(1, 10);
    auto small = count_curve_strip(q, CurveStrategy::tiling);
    REQUIRE(def.points == small.points);
    REQUIRE(def.polys == small.polys);
}

TEST_CASE("tile visitor splits degenerate boxes") {
    std::vector<Rectangle> rects = {
        Rectangle(Rat(1), Rat(2), Rat(1), Rat(2)),
        Rectangle(Rat(-1), Rat(1), Rat(0), Rat(3)),
        Rectangle(Rat(1), Rat(2), Rat(-2), Rat(2)),
        Rectangle(Rat(-1), Rat(1), Rat(-1), Rat(1)),
    };
    for (const auto& rect : rects) {
        long long points = 0;
        std::set<unsigned __int128> keys;
        detail::visit_tile_points(2, Int(3), rect, [&](const IntPolynomial& p, AlgebraicPointSet& set) {
            points += static_cast<long long>(set.pairs.size());
            keys.insert(poly_key(p, Int(3)));
        });
        auto plain = count_points_naive(2, Int(3), rect);
        REQUIRE(points == plain.points);
        REQUIRE(static_cast<long long>(keys.size()) == plain.polys);
    }
}

TEST_CASE("curve query validation") {
    auto q = base_query(2, 2, "parabola", Rat(1), Rat(2), Rat(1), Rat(1, 2));
    auto expect = [&](CurveStripQuery bad, errc code) {
        try {
            count_curve_strip(bad, CurveStrategy::naive);
            FAIL("expected refusal");
        } catch (const error& e) {
            REQUIRE(e.code() == code);
        }
    };
    auto g0 = q; g0.gamma = Rat(0);
    expect(g0, errc::invalid_gamma);
    auto g2 = q; g2.gamma = Rat(2);
    expect(g2, errc::invalid_gamma);
    auto c0 = q; c0.c1 = Rat(0);
    expect(c0, errc::invalid_input);
    auto jr = q; jr.jlo = Rat(2); jr.jhi = Rat(1);
    expect(jr, errc::invalid_region);
    auto big = q; big.Q = Int(100000);
    try {
        count_curve_strip(big, CurveStrategy::naive);
        FAIL("expected budget refusal");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::budget_exceeded);
    }
}
