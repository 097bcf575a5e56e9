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

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algint/intpoly.hpp"
#include "algint/rectangle.hpp"

namespace algint {

/** RootInterval: certified enclosure of one simple real root.
 *  Invariant: lo < hi, P(lo) != 0, and the unique root lies in (lo, hi].
 *  Endpoints stay dyadic multiples of the initial bound's denominator. */
struct RootInterval {
    Rat lo, hi;
};

// decisions refusing to refine past this width report boundary-ambiguous
inline const Rat kDecisionWidthFloor = Rat(1, Int(1) << 60);

namespace detail {

inline IntPolynomial primitive_signed(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    std::vector<Int> c = p.coeffs();
    for (Int& x : c) x /= g;
    return IntPolynomial(std::move(c));
}

// positive-scalar multiple of (a mod b): each reduction multiplies by
// |lead(b)|, so the sign of the true remainder is preserved
inline IntPolynomial sturm_rem(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    int db = b.degree();
    Int lb = b.leading();
    Int albs = abs(lb);
    bool flip = lb < 0;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int lr = r.leading();
        std::vector<Int> c(r.coeffs().size(), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeffs()[i] * albs;
        for (int i = 0; i <= db; ++i) {
            if (flip) c[k + i] += lr * b.coeff(i);
            else c[k + i] -= lr * b.coeff(i);
        }
        r = IntPolynomial(std::move(c));
    }
    return r;
}

inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<IntPolynomial> s;
    s.push_back(primitive_signed(p));
    s.push_back(primitive_signed(p.derivative()));
    while (!s.back().is_zero() && s.back().degree() >= 1) {
        IntPolynomial r = sturm_rem(s[s.size() - 2], s.back());
        if (r.is_zero()) break;
        r = primitive_signed(r);
        std::vector<Int> c = r.coeffs();
        for (Int& x : c) x = -x;
        s.emplace_back(std::move(c));
    }
    return s;
}

inline int variations(const std::vector<IntPolynomial>& chain, const Rat& x) {
    const Int a = num(x), b = den(x);
    int v = 0, last = 0;
    for (const auto& s : chain) {
        int sg = s.sign_at(a, b);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

} // namespace detail

/** Sturm-sequence isolation of all real roots. Returns pairwise disjoint
 *  bracketing intervals in ascending root order; the number of intervals is
 *  the sign-variation difference across the Cauchy bound 1 + H(P)/|lead|. */
inline std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw error(errc::invalid_input, "cannot isolate roots of zero");
    if (p.degree() == 0) return {};
    auto chain = detail::sturm_chain(p);
    if (chain.back().is_zero() || chain.back().degree() >= 1)
        throw error(errc::not_squarefree, "polynomial has a repeated factor");

    Rat bound = Rat(1) + Rat(p.height()) / Rat(abs(p.leading()));
    std::vector<RootInterval> out;
    struct Seg { Rat lo, hi; int vlo, vhi; };
    std::vector<Seg> work;
    work.push_back({-bound, bound, detail::variations(chain, -bound), detail::variations(chain, bound)});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        int count = s.vlo - s.vhi;
        if (count <= 0) continue;
        if (count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat m = (s.lo + s.hi) / 2;
        if (p.sign_at(num(m), den(m)) == 0) {
            // exact rational root at the midpoint: fence it off with an
            // interval certified (by variations) to hold only that root
            Rat eta = (s.hi - s.lo) / 4;
            while (true) {
                Rat a = m - eta, b = m + eta;
                if (p.sign_at(num(a), den(a)) != 0 && p.sign_at(num(b), den(b)) != 0) {
                    int va = detail::variations(chain, a), vb = detail::variations(chain, b);
                    if (va - vb == 1) {
                        out.push_back({a, b});
                        work.push_back({s.lo, a, s.vlo, va});
                        work.push_back({b, s.hi, vb, s.vhi});
                        break;
                    }
                }
                eta /= 2;
            }
        } else {
            int vm = detail::variations(chain, m);
            work.push_back({s.lo, m, s.vlo, vm});
            work.push_back({m, s.hi, vm, s.vhi});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

/** Bisection refinement of a bracketing interval down to width <= eps. */
inline RootInterval refine(const IntPolynomial& p, RootInterval iv, const Rat& eps) {
    if (eps <= 0) throw error(errc::invalid_input, "eps must be positive");
    int slo = p.sign_at(num(iv.lo), den(iv.lo));
    while (iv.hi - iv.lo > eps) {
        Rat m = (iv.lo + iv.hi) / 2;
        int sm = p.sign_at(num(m), den(m));
        if (sm == 0) {
            // the root is exactly m; any point left of it inside iv is rootless
            Rat d = std::min(eps, Rat(m - iv.lo)) / 2;
            return {m - d, m};
        }
        if (sm == slo) iv.lo = m; else iv.hi = m;
    }
    return iv;
}

/** Exact order of the bracketed root against a rational. Refines the
 *  interval in place; detects exact equality before narrowing, so only a
 *  genuinely undecidable (sub 2^-60) straddle reports boundary-ambiguous. */
inline int compare_root(const IntPolynomial& p, RootInterval& iv, const Rat& b) {
    if (b <= iv.lo) return 1;
    if (b > iv.hi) return -1;
    if (p.sign_at(num(b), den(b)) == 0) return 0; // the unique root in iv
    int slo = p.sign_at(num(iv.lo), den(iv.lo));
    while (true) {
        if (iv.hi - iv.lo < kDecisionWidthFloor)
            throw error(errc::boundary_ambiguous, "root within 2^-60 of a decision boundary");
        Rat m = (iv.lo + iv.hi) / 2;
        int sm = p.sign_at(num(m), den(m));
        if (sm == 0) {
            Rat d = (m - iv.lo) / 2;
            iv = {m - d, m};
        } else if (sm == slo) {
            iv.lo = m;
        } else {
            iv.hi = m;
        }
        if (b <= iv.lo) return 1;
        if (b > iv.hi) return -1;
    }
}

/** AlgebraicPointSet: one polynomial's real roots plus the index pairs
 *  (i, j) whose ordered root pair lies in the queried region. */
struct AlgebraicPointSet {
    IntPolynomial poly;
    std::vector<RootInterval> roots;
    std::vector<std::pair<int, int>> pairs;
};

/** Ordered pairs of real roots of P inside a half-open rectangle (all of
 *  the plane when no region is given). Callers guarantee P is monic and
 *  irreducible, so distinct indices name distinct conjugate roots. */
inline AlgebraicPointSet extract_points(const IntPolynomial& p, const std::optional<Rectangle>& region) {
    AlgebraicPointSet set{p, isolate_real_roots(p), {}};
    int r = static_cast<int>(set.roots.size());
    if (!region) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) set.pairs.emplace_back(i, j);
        return set;
    }
    std::vector<bool> in1(r), in2(r);
    for (int i = 0; i < r; ++i) {
        in1[i] = compare_root(p, set.roots[i], region->lo1) >= 0 &&
                 compare_root(p, set.roots[i], region->hi1) < 0;
        in2[i] = compare_root(p, set.roots[i], region->lo2) >= 0 &&
                 compare_root(p, set.roots[i], region->hi2) < 0;
    }
    for (int i = 0; i < r; ++i) {
        if (!in1[i]) continue;
        for (int j = 0; j < r; ++j)
            if (in2[j]) set.pairs.emplace_back(i, j);
    }
    return set;
}

/** Human-readable point: coefficients, index pair, decimal enclosures. */
inline std::string describe_point(const AlgebraicPointSet& set, std::size_t k, unsigned digits) {
    if (k >= set.pairs.size()) throw error(errc::invalid_input, "point index out of range");
    Rat eps(1, int_pow(10, digits));
    auto [i, j] = set.pairs[k];
    RootInterval a = refine(set.poly, set.roots[i], eps);
    RootInterval b = refine(set.poly, set.roots[j], eps);
    std::string s = "poly: " + set.poly.to_string();
    s += "; pair: (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    s += "; x: [" + rat_to_decimal(a.lo, digits) + ", " + rat_to_decimal(a.hi, digits) + "]";
    s += "; y: [" + rat_to_decimal(b.lo, digits) + ", " + rat_to_decimal(b.hi, digits) + "]";
    return s;
}

} // namespace algint
