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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algint/enumerate.hpp"

namespace algint {

/** Polynomial plane curve y = phi(x) with integer coefficients. */
struct Curve {
    std::string name;
    IntPolynomial phi;

    Rat eval(const Rat& x) const { return phi.evaluate(x); }

    /** Upper bound for sup |phi'| over [lo, hi] from coefficient sizes. */
    Rat deriv_sup(const Rat& lo, const Rat& hi) const {
        IntPolynomial d = phi.derivative();
        Rat B = std::max(abs(lo), abs(hi));
        Rat s(0);
        for (int k = 0; k <= d.degree(); ++k) s += Rat(abs(d.coeff(k))) * rat_pow(B, k);
        return s;
    }
};

/** Built-in curves plus "poly:<coeffs lowest first>" for ad hoc ones. */
inline Curve curve_by_name(const std::string& name) {
    if (name == "parabola") return {"parabola", IntPolynomial({0, 0, 1})};
    if (name == "cubic") return {"cubic", IntPolynomial({0, 1, 0, 1})};
    if (name == "identity") return {"identity", IntPolynomial({0, 1})};
    if (name.rfind("poly:", 0) == 0) {
        IntPolynomial p;
        try {
            p = IntPolynomial::from_string(name.substr(5));
        } catch (const error&) {
            throw error(errc::invalid_curve, "unparsable curve coefficients");
        }
        if (p.is_zero() || p.degree() < 1) throw error(errc::invalid_curve, "curve must be nonconstant");
        return {name, p};
    }
    throw error(errc::invalid_curve, "unknown curve: " + name);
}

enum class CurveStrategy { naive, tiling };

/** Count points with alpha1 in the open interval (jlo, jhi) and
 *  |phi(alpha1) - alpha2| < c1 * Q^-gamma. A positive c6 overrides the
 *  default tile scale c1 / (1/2 + sup|phi'|). With distinct set, only
 *  pairs of distinct conjugates count; the diagonal pairs (alpha, alpha)
 *  live where the curve meets y = x, a transient family at small Q that
 *  the strip sheds once c1 * Q^-gamma drops below inf |phi(x) - x|. */
struct CurveStripQuery {
    int n = 2;
    Int Q = 1;
    Curve curve;
    Rat jlo, jhi;
    Rat c1 = 1;
    Rat gamma = Rat(1, 2);
    Rat c6 = 0;
    bool distinct = false;
};

namespace detail {

inline std::pair<long, long> gamma_parts(const Rat& gamma) {
    if (!(gamma > 0) || gamma > 1) throw error(errc::invalid_gamma, "gamma must lie in (0, 1]");
    if (den(gamma) > 1000000) throw error(errc::invalid_gamma, "gamma denominator too large");
    return {num(gamma).convert_to<long>(), den(gamma).convert_to<long>()};
}

inline bool root_in_open(const IntPolynomial& p, RootInterval& iv, const Rat& lo, const Rat& hi) {
    return compare_root(p, iv, lo) > 0 && compare_root(p, iv, hi) < 0;
}

/** Exact test of |phi(alpha1) - alpha2| < c1 * Q^(-p/q), refining the two
 *  enclosures until the interval bound decides. Aliased arguments (the
 *  diagonal pair) are fine: the enclosure just stays conservative. */
inline bool in_strip(const IntPolynomial& P, RootInterval& a1, RootInterval& a2, const Curve& curve,
                     const Rat& c1, const Int& Q, long p, long q) {
    while (true) {
        Rat m = Rat(a1.lo + a1.hi) / 2;
        Rat r = Rat(a1.hi - a1.lo) / 2;
        Rat pm = curve.eval(m);
        Rat M = curve.deriv_sup(a1.lo, a1.hi);
        Rat vlo = Rat(pm - M * r) - a2.hi;
        Rat vhi = Rat(pm + M * r) - a2.lo;
        Rat alo = vlo > 0 ? vlo : (vhi < 0 ? Rat(-vhi) : Rat(0));
        Rat ahi = std::max(abs(vlo), abs(vhi));
        if (compare_to_scaled_power(ahi, c1, Q, -p, q) < 0) return true;
        if (compare_to_scaled_power(alo, c1, Q, -p, q) >= 0) return false;
        if (Rat(a1.hi - a1.lo) < kDecisionWidthFloor && Rat(a2.hi - a2.lo) < kDecisionWidthFloor)
            throw error(errc::boundary_ambiguous, "strip membership within refinement floor");
        Rat floor4 = kDecisionWidthFloor / 4;
        a1 = refine(P, a1, std::max(Rat(Rat(a1.hi - a1.lo) / 256), floor4));
        a2 = refine(P, a2, std::max(Rat(Rat(a2.hi - a2.lo) / 256), floor4));
    }
}

/** Windowed point visitor that tolerates boxes the direct routine refuses
 *  (midpoint at zero or equal midpoints) by splitting them. */
template <typename F>
void visit_tile_points(int n, const Int& Q, const Rectangle& rect, F&& visit, int depth = 0) {
    if (depth > 60) throw error(errc::internal, "tile splitting recursed too deep");
    Rat m1 = rect.mid1(), m2 = rect.mid2();
    if (m1 == 0) {
        visit_tile_points(n, Q, Rectangle(rect.lo1, Rat(0), rect.lo2, rect.hi2), visit, depth + 1);
        visit_tile_points(n, Q, Rectangle(Rat(0), rect.hi1, rect.lo2, rect.hi2), visit, depth + 1);
        return;
    }
    if (m2 == 0) {
        visit_tile_points(n, Q, Rectangle(rect.lo1, rect.hi1, rect.lo2, Rat(0)), visit, depth + 1);
        visit_tile_points(n, Q, Rectangle(rect.lo1, rect.hi1, Rat(0), rect.hi2), visit, depth + 1);
        return;
    }
    if (m1 == m2) {
        visit_tile_points(n, Q, Rectangle(rect.lo1, rect.hi1, rect.lo2, m2), visit, depth + 1);
        visit_tile_points(n, Q, Rectangle(rect.lo1, rect.hi1, m2, rect.hi2), visit, depth + 1);
        return;
    }
    visit_points_rect_fast(n, Q, rect, visit);
}

} // namespace detail

/** Packed coefficient key (constant through second-highest coefficient). */
inline unsigned __int128 poly_key(const IntPolynomial& p, const Int& Q) {
    unsigned __int128 base = Int(2 * Q + 1).convert_to<std::uint64_t>();
    unsigned __int128 key = 0;
    for (int i = p.degree() - 1; i >= 0; --i)
        key = key * base + Int(p.coeff(i) + Q).convert_to<std::uint64_t>();
    return key;
}

inline CountResult count_curve_strip(const CurveStripQuery& q, CurveStrategy strategy) {
    if (q.n < 2 || q.n > 5) throw error(errc::unsupported_degree, "strip counting handles degrees 2 through 5");
    if (q.Q < 1) throw error(errc::invalid_input, "height bound must be at least 1");
    if (q.c1 <= 0) throw error(errc::invalid_input, "strip width scale must be positive");
    if (!(q.jlo < q.jhi)) throw error(errc::invalid_region, "curve interval must have positive length");
    if (q.curve.phi.is_zero() || q.curve.phi.degree() < 1) throw error(errc::invalid_curve, "curve must be nonconstant");
    auto [gp, gq] = detail::gamma_parts(q.gamma);

    CountResult res;
    if (strategy == CurveStrategy::naive) {
        if (class_size(q.n, q.Q) > kNaiveBudget)
            throw error(errc::budget_exceeded, "class too large to enumerate; use the tiling strategy");
        enumerate_monic(q.n, q.Q, [&](const IntPolynomial& p) {
            if (!is_irreducible(p)) return;
            auto roots = isolate_real_roots(p);
            long long hits = 0;
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (!detail::root_in_open(p, roots[i], q.jlo, q.jhi)) continue;
                for (std::size_t j = 0; j < roots.size(); ++j) {
                    if (q.distinct && j == i) continue;
                    if (detail::in_strip(p, roots[i], roots[j], q.curve, q.c1, q.Q, gp, gq)) ++hits;
                }
            }
            if (hits > 0) {
                ++res.polys;
                res.points += hits;
            }
        });
        return res;
    }

    // tile cover: columns across (jlo, jhi), rows spanning the curve band
    Rat c4 = q.curve.deriv_sup(Rat(q.jlo - 1), Rat(q.jhi + 1));
    Rat c6 = q.c6 > 0 ? q.c6 : Rat(q.c1 / Rat(Rat(1, 2) + c4));
    Rat theta_up = q.c1 * scaled_root_upper(Rat(q.Q), -gp, gq, 32);
    Rat side = dyadic_floor(Rat(c6 * scaled_root_lower(Rat(q.Q), -gp, gq, 32)), 24);
    if (side <= 0) throw error(errc::invalid_input, "tile side underflows the dyadic grid");
    if (side > 1) side = 1;

    std::set<unsigned __int128> keys;
    Int cols = ceil_rat(Rat(Rat(q.jhi - q.jlo) / side));
    for (Int k = 0; k < cols; ++k) {
        Rat xlo = q.jlo + Rat(k) * side;
        Rat xhi = xlo + side;
        Rat center = q.curve.eval(xlo);
        Rat ylo = center - Rat(c4 * side) - theta_up;
        Rat yhi = center + Rat(c4 * side) + theta_up;
        Int rows = ceil_rat(Rat(Rat(yhi - ylo) / side));
        for (Int m = 0; m < rows; ++m) {
            Rat tlo = ylo + Rat(m) * side;
            Rectangle tile(xlo, xhi, tlo, Rat(tlo + side));
            detail::visit_tile_points(q.n, q.Q, tile, [&](const IntPolynomial& p, AlgebraicPointSet& set) {
                long long hits = 0;
                for (auto [i, j] : set.pairs) {
                    if (q.distinct && i == j) continue;
                    std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
                    if (!detail::root_in_open(p, set.roots[si], q.jlo, q.jhi)) continue;
                    if (detail::in_strip(p, set.roots[si], set.roots[sj], q.curve, q.c1, q.Q, gp, gq)) ++hits;
                }
                if (hits > 0) {
                    res.points += hits;
                    keys.insert(poly_key(p, q.Q));
                }
            });
        }
    }
    res.polys = static_cast<long long>(keys.size());
    return res;
}

} // namespace algint
