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

#include <vector>

#include "algint/realroots.hpp"

using namespace algint;

namespace {

IntPolynomial P(std::vector<long long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

// independent check that an interval (lo, hi] brackets a sign change or
// pins an exact rational root
void check_brackets(const IntPolynomial& p, const RootInterval& iv) {
    REQUIRE(iv.lo < iv.hi);
    REQUIRE(p.evaluate(iv.lo) != 0);
    int slo = sign(p.evaluate(iv.lo));
    int shi = sign(p.evaluate(iv.hi));
    REQUIRE(slo * shi <= 0); // shi == 0 means the root is exactly hi
}

} // namespace

TEST_CASE("isolation counts real roots") {
    CHECK(isolate_real_roots(P({-2, 0, 1})).size() == 2);
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());       // t^2 + 1
    CHECK(isolate_real_roots(P({-1, -1, 0, 1})).size() == 1);
    CHECK(isolate_real_roots(P({2, 2, 0, 1})).size() == 1);
    CHECK(isolate_real_roots(P({5})).empty());             // constant
    CHECK(isolate_real_roots(P({0, 1})).size() == 1);      // t
    CHECK(isolate_real_roots(P({-6, 11, -6, 1})).size() == 3); // (t-1)(t-2)(t-3)
    CHECK(isolate_real_roots(P({0, -1, 0, 1})).size() == 3);   // t(t-1)(t+1)
    CHECK_THROWS_AS(isolate_real_roots(IntPolynomial()), error);
    CHECK_THROWS_AS(isolate_real_roots(P({1, -2, 1})), error); // (t-1)^2
    CHECK_THROWS_AS(isolate_real_roots(P({0, 0, 1})), error);  // t^2
}

TEST_CASE("isolated intervals are disjoint, ordered and bracketing") {
    auto p = P({-6, 11, -6, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    for (const auto& iv : roots) check_brackets(p, iv);
    CHECK(roots[0].hi <= roots[1].lo + Rat(0)); // ordered, non-overlapping
    CHECK(roots[1].hi <= roots[2].lo + Rat(0));
    // the rational roots 1, 2, 3 are inside
    CHECK((roots[0].lo < 1 && Rat(1) <= roots[0].hi));
    CHECK((roots[1].lo < 2 && Rat(2) <= roots[1].hi));
    CHECK((roots[2].lo < 3 && Rat(3) <= roots[2].hi));
}

TEST_CASE("refinement shrinks to any requested width") {
    auto p = P({-2, 0, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    Rat eps(1, Int(1) << 40);
    auto iv = refine(p, roots[1], eps);
    check_brackets(p, iv);
    CHECK(iv.hi - iv.lo <= eps);
    // sqrt(2) = 1.41421356237309504880...
    CHECK(iv.lo < Rat(parse_rat("1.4142135624")));
    CHECK(iv.hi > Rat(parse_rat("1.4142135623")));

    // refinement across an exact rational root keeps the bracket
    auto q = P({-6, 11, -6, 1});
    for (const auto& r : isolate_real_roots(q)) {
        auto fine = refine(q, r, eps);
        check_brackets(q, fine);
        CHECK(fine.hi - fine.lo <= eps);
    }
}

TEST_CASE("root comparisons against rationals decide exactly") {
    auto p = P({-2, 0, 1});
    auto roots = isolate_real_roots(p);
    auto neg = roots[0], pos = roots[1];
    CHECK(compare_root(p, pos, Rat(1)) > 0);
    CHECK(compare_root(p, pos, Rat(2)) < 0);
    CHECK(compare_root(p, pos, parse_rat("1.4142135623")) > 0);
    CHECK(compare_root(p, pos, parse_rat("1.4142135624")) < 0);
    CHECK(compare_root(p, neg, Rat(0)) < 0);

    auto lin = P({-3, 2}); // root 3/2 exactly
    auto lr = isolate_real_roots(lin);
    REQUIRE(lr.size() == 1);
    CHECK(compare_root(lin, lr[0], Rat(3, 2)) == 0);
    CHECK(compare_root(lin, lr[0], Rat(1)) > 0);

    auto cub = P({-6, 11, -6, 1});
    auto cr = isolate_real_roots(cub);
    CHECK(compare_root(cub, cr[1], Rat(2)) == 0);
    CHECK(compare_root(cub, cr[1], Rat(19, 10)) > 0);
}

TEST_CASE("point extraction splits ordered pairs by half-open rectangles") {
    // golden ratio pair: roots 1.618..., -0.618...
    auto p = P({-1, -1, 1});
    auto all = extract_points(p, std::nullopt);
    CHECK(all.pairs.size() == 4);

    Rectangle box{Rat(1), Rat(2), Rat(-1), Rat(0)};
    auto one = extract_points(p, box);
    REQUIRE(one.pairs.size() == 1);
    CHECK(one.pairs[0].first == 1);  // larger root on the first axis
    CHECK(one.pairs[0].second == 0);

    auto both = extract_points(P({-2, 0, 1}), std::nullopt);
    CHECK(both.pairs.size() == 4);

    // half-open: the left edge belongs to the box, the right edge does not
    auto at1 = extract_points(P({-1, 1}), Rectangle{Rat(1), Rat(2), Rat(1), Rat(2)});
    CHECK(at1.pairs.size() == 1);
    auto at2 = extract_points(P({-2, 1}), Rectangle{Rat(1), Rat(2), Rat(1), Rat(2)});
    CHECK(at2.pairs.empty());

    // no real roots: nothing to pair
    CHECK(extract_points(P({1, 0, 1}), std::nullopt).pairs.empty());

    CHECK_THROWS_AS((Rectangle{Rat(2), Rat(1), Rat(0), Rat(1)}), error);
}

TEST_CASE("points serialize with certified decimal enclosures") {
    auto p = P({-2, 0, 1});
    auto set = extract_points(p, Rectangle{Rat(1), Rat(2), Rat(-2), Rat(0)});
    REQUIRE(set.pairs.size() == 1);
    auto text = describe_point(set, 0, 8);
    CHECK(text.find("-2 0 1") != std::string::npos);
    CHECK(text.find("1.414213") != std::string::npos);
    CHECK(text.find("-1.414213") != std::string::npos);
}
