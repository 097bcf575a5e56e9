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
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "algint/intpoly.hpp"
#include "algint/realroots.hpp"
#include "algint/rectangle.hpp"

namespace algint {

struct CountResult {
    long long points = 0;
    long long polys = 0;
};

inline Int class_size(int n, const Int& Q) { return int_pow(2 * Q + 1, static_cast<unsigned long>(n)); }

// plain enumeration refuses classes above this size
inline const Int kNaiveBudget = Int(1000000000);

/** Visits every monic degree-n polynomial with coefficient height <= Q,
 *  constant coefficient varying fastest. */
template <typename F>
void enumerate_monic(int n, const Int& Q, F&& visit) {
    if (n < 1) throw error(errc::invalid_input, "degree must be at least 1");
    if (Q < 1) throw error(errc::invalid_input, "height bound must be at least 1");
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[n] = 1;
    for (int i = 0; i < n; ++i) c[i] = -Q;
    while (true) {
        visit(IntPolynomial(c));
        int i = 0;
        while (i < n && c[i] == Q) c[i++] = -Q;
        if (i == n) break;
        ++c[i];
    }
}

/** Coefficient vector at a given enumeration position; positions split into
 *  contiguous blocks for sharded runs. */
inline IntPolynomial monic_from_index(int n, const Int& Q, Int idx) {
    if (idx < 0 || idx >= class_size(n, Q)) throw error(errc::invalid_input, "index out of range");
    Int base = 2 * Q + 1;
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[n] = 1;
    for (int i = 0; i < n; ++i) {
        c[i] = Int(idx % base) - Q;
        idx /= base;
    }
    return IntPolynomial(std::move(c));
}

/** Reference point counter: full enumeration, exact root extraction. */
inline CountResult count_points_naive(int n, const Int& Q, const std::optional<Rectangle>& region,
                                      bool ignore_budget = false) {
    if (!ignore_budget && class_size(n, Q) > kNaiveBudget)
        throw error(errc::budget_exceeded, "class too large to enumerate; pass the override to insist");
    CountResult res;
    enumerate_monic(n, Q, [&](const IntPolynomial& p) {
        if (!is_irreducible(p)) return;
        auto set = extract_points(p, region);
        if (!set.pairs.empty()) {
            ++res.polys;
            res.points += static_cast<long long>(set.pairs.size());
        }
    });
    return res;
}

struct StripCount {
    long long count = 0;
    Rat bound;
};

/** Integer pairs (a1, a0) caught by both lines: |a1 d_i + a0 + off_i| <= K_i.
 *  The reported bound (4 K1 / |d1-d2| + 1)(4 K2 + 1) dominates the count
 *  once both half-widths reach max(|d1-d2|, 1). */
inline StripCount strip_lattice_count(const Rat& d1, const Rat& d2, const Rat& K1, const Rat& K2,
                                      const Rat& off1, const Rat& off2) {
    if (K1 < 0 || K2 < 0) throw error(errc::invalid_input, "strip half-widths must be nonnegative");
    if (d1 == d2) throw error(errc::degenerate_strips, "strip anchors coincide");
    Rat dd = d1 - d2;
    Rat add = abs(dd);
    Rat center = Rat(off2 - off1) / dd;
    Rat radius = Rat(K1 + K2) / add;
    Int a1lo = ceil_rat(Rat(center - radius));
    Int a1hi = floor_rat(Rat(center + radius));
    StripCount out;
    for (Int a1 = a1lo; a1 <= a1hi; ++a1) {
        Rat c1 = -Rat(a1) * d1 - off1;
        Rat c2 = -Rat(a1) * d2 - off2;
        Rat lo = std::max(Rat(c1 - K1), Rat(c2 - K2));
        Rat hi = std::min(Rat(c1 + K1), Rat(c2 + K2));
        if (lo > hi) continue;
        Int il = ceil_rat(lo), ih = floor_rat(hi);
        if (il <= ih) out.count += Int(ih - il + 1).convert_to<long long>();
    }
    out.bound = Rat(4 * K1 / add + 1) * Rat(4 * K2 + 1);
    return out;
}

namespace detail {

struct IntRange {
    Int lo, hi;
    bool empty() const { return lo > hi; }
};

inline IntRange clamp_range(const Rat& lo, const Rat& hi, const Int& Q) {
    if (lo > hi) return {Int(1), Int(0)};
    Int a = ceil_rat(lo), b = floor_rat(hi);
    if (a < -Q) a = -Q;
    if (b > Q) b = Q;
    return {a, b};
}

// T(x) = x^n + sum_{k>=2} a_k x^k for the tail (a_2, ..., a_{n-1})
inline Rat tail_eval(const std::vector<Int>& tail, int n, const Rat& x) {
    Rat v(1);
    for (int k = n - 1; k >= 2; --k) v = v * x + Rat(tail[static_cast<std::size_t>(k) - 2]);
    for (int k = 2; k > 0; --k) v = v * x;
    return v;
}

// sup over |x| <= B of |T'(x)|: n B^{n-1} + sum k |a_k| B^{k-1}
inline Rat tail_deriv_bound(const std::vector<Int>& tail, int n, const Rat& B) {
    Rat b = rat_pow(B, n - 1) * n;
    for (int k = 2; k <= n - 1; ++k)
        b += Rat(k * abs(tail[static_cast<std::size_t>(k) - 2])) * rat_pow(B, k - 1);
    return b;
}

// T'(x) = n x^{n-1} + sum_{k>=2} k a_k x^{k-1}, so P'(x) = T'(x) + a1
inline Rat tail_deriv_mid(const std::vector<Int>& tail, int n, const Rat& x) {
    Rat v = rat_pow(x, n - 1) * n;
    for (int k = 2; k <= n - 1; ++k)
        v += Rat(Rat(k * tail[static_cast<std::size_t>(k) - 2]) * rat_pow(x, k - 1));
    return v;
}

// sup over |x| <= B of |P''(x)|: n(n-1) B^{n-2} + sum k(k-1) |a_k| B^{k-2};
// a1 and a0 do not appear in the second derivative
inline Rat tail_curv_bound(const std::vector<Int>& tail, int n, const Rat& B) {
    Rat b = rat_pow(B, n - 2) * (n * (n - 1));
    for (int k = 2; k <= n - 1; ++k)
        b += Rat(k * (k - 1) * abs(tail[static_cast<std::size_t>(k) - 2])) * rat_pow(B, k - 2);
    return b;
}

} // namespace detail

/** Point finder driven by coefficient windows. For each choice of the
 *  upper coefficients, a polynomial with one root per axis interval pins
 *  (a1, a0) into a short lattice segment: the midpoint strips
 *  |a1 d_i + a0 + T(d_i)| <= K_i with K_i the Taylor window, plus interval
 *  containment windows from endpoint values of T with a Lipschitz slack.
 *  Survivors are verified exactly, so the yield matches plain enumeration.
 *  The visitor is called once per polynomial with pairs inside the box. */
template <typename F>
void visit_points_rect_fast(int n, const Int& Q, const Rectangle& rect, F&& visit) {
    if (n < 2 || n > 5) throw error(errc::unsupported_degree, "windowed counting handles degrees 2 through 5");
    if (Q < 1) throw error(errc::invalid_input, "height bound must be at least 1");
    Rat d1 = rect.mid1(), d2 = rect.mid2();
    if (d1 == d2) throw error(errc::invalid_region, "axis midpoints coincide");
    if (d1 == 0 || d2 == 0) throw error(errc::invalid_region, "axis midpoint at zero");
    Rat w1 = rect.width1(), w2 = rect.width2();
    Rat K1 = taylor_midpoint_bound(n, d1, Q, w1);
    Rat K2 = taylor_midpoint_bound(n, d2, Q, w2);
    Rat B1 = std::max(abs(rect.lo1), abs(rect.hi1));
    Rat B2 = std::max(abs(rect.lo2), abs(rect.hi2));
    Rat dd = d1 - d2;
    Rat add = abs(dd);
    Rat QR(Q);

    std::vector<Int> tail(static_cast<std::size_t>(n - 2), -Q);
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[n] = 1;
    while (true) {
        Rat t1 = detail::tail_eval(tail, n, d1);
        Rat t2 = detail::tail_eval(tail, n, d2);
        Rat e1lo = detail::tail_eval(tail, n, rect.lo1);
        Rat e1hi = detail::tail_eval(tail, n, rect.hi1);
        Rat e2lo = detail::tail_eval(tail, n, rect.lo2);
        Rat e2hi = detail::tail_eval(tail, n, rect.hi2);
        Rat gb1 = detail::tail_deriv_bound(tail, n, B1);
        Rat gb2 = detail::tail_deriv_bound(tail, n, B2);
        Rat dt1 = detail::tail_deriv_mid(tail, n, d1);
        Rat dt2 = detail::tail_deriv_mid(tail, n, d2);
        Rat cb1 = detail::tail_curv_bound(tail, n, B1);
        Rat cb2 = detail::tail_curv_bound(tail, n, B2);

        // one root in each closed axis interval forces
        // |a1 (d1 - d2) + T(d1) - T(d2)| <= S
        Rat S = Rat(w1 / 2) * Rat(gb1 + QR) + Rat(w2 / 2) * Rat(gb2 + QR);
        Rat center = Rat(t2 - t1) / dd;
        Rat radius = S / add;
        auto a1r = detail::clamp_range(Rat(center - radius), Rat(center + radius), Q);

        for (Int a1 = a1r.lo; a1 <= a1r.hi; ++a1) {
            Rat a1r_(a1);
            // a0 = -T(x) - a1 x for a root x in the axis interval
            Rat g1a = e1lo + a1r_ * rect.lo1, g1b = e1hi + a1r_ * rect.hi1;
            Rat g2a = e2lo + a1r_ * rect.lo2, g2b = e2hi + a1r_ * rect.hi2;
            Rat s1 = w1 * Rat(gb1 + abs(a1r_));
            Rat s2 = w2 * Rat(gb2 + abs(a1r_));
            Rat lo = std::max(Rat(-std::max(g1a, g1b) - s1), Rat(-std::max(g2a, g2b) - s2));
            Rat hi = std::min(Rat(-std::min(g1a, g1b) + s1), Rat(-std::min(g2a, g2b) + s2));
            // midpoint strips
            lo = std::max(lo, Rat(-a1r_ * d1 - t1 - K1));
            hi = std::min(hi, Rat(-a1r_ * d1 - t1 + K1));
            lo = std::max(lo, Rat(-a1r_ * d2 - t2 - K2));
            hi = std::min(hi, Rat(-a1r_ * d2 - t2 + K2));
            // same strips with the candidate's own derivative at the
            // midpoint: |P(d_i)| <= (w_i/2) (|P'(d_i)| + (w_i/2) sup|P''|)
            Rat r1 = Rat(w1 / 2) * Rat(abs(Rat(dt1 + a1r_)) + Rat(w1 / 2) * cb1);
            Rat r2 = Rat(w2 / 2) * Rat(abs(Rat(dt2 + a1r_)) + Rat(w2 / 2) * cb2);
            lo = std::max(lo, Rat(-a1r_ * d1 - t1 - r1));
            hi = std::min(hi, Rat(-a1r_ * d1 - t1 + r1));
            lo = std::max(lo, Rat(-a1r_ * d2 - t2 - r2));
            hi = std::min(hi, Rat(-a1r_ * d2 - t2 + r2));
            auto a0r = detail::clamp_range(lo, hi, Q);
            for (Int a0 = a0r.lo; a0 <= a0r.hi; ++a0) {
                c[0] = a0;
                c[1] = a1;
                for (int k = 2; k < n; ++k) c[k] = tail[static_cast<std::size_t>(k) - 2];
                IntPolynomial p(c);
                if (!is_irreducible(p)) continue;
                auto set = extract_points(p, rect);
                if (!set.pairs.empty()) visit(p, set);
            }
        }

        std::size_t i = 0;
        while (i < tail.size() && tail[i] == Q) tail[i++] = -Q;
        if (i == tail.size()) break;
        ++tail[i];
    }
}

inline CountResult count_points_rect_fast(int n, const Int& Q, const Rectangle& rect) {
    CountResult res;
    visit_points_rect_fast(n, Q, rect, [&](const IntPolynomial&, const AlgebraicPointSet& set) {
        ++res.polys;
        res.points += static_cast<long long>(set.pairs.size());
    });
    return res;
}

/** Precomputed root table for one coefficient class. Builds once (isolation
 *  plus refinement per root), then answers rectangle queries by binary
 *  search over fixed-point enclosures, falling back to exact comparison
 *  only when an enclosure straddles a boundary. */
class RootCensus {
public:
    RootCensus(int n, const Int& Q, bool ignore_budget = false) : n_(n) {
        if (!ignore_budget && class_size(n, Q) > kNaiveBudget)
            throw error(errc::budget_exceeded, "class too large to enumerate; pass the override to insist");
        const Rat eps(1, Int(1) << 22);
        root_begin_.push_back(0);
        enumerate_monic(n, Q, [&](const IntPolynomial& p) {
            if (!is_irreducible(p)) return;
            auto roots = isolate_real_roots(p);
            if (roots.empty()) return;
            std::array<std::int64_t, 6> cs{};
            for (int i = 0; i <= n; ++i) cs[static_cast<std::size_t>(i)] = p.coeff(i).convert_to<std::int64_t>();
            coeffs_.push_back(cs);
            for (auto& iv : roots) {
                if (n == 1) {
                    // the root is the integer -a0; store it exactly
                    std::int64_t v = -cs[0] * kScale;
                    root_lo_.push_back(v);
                    root_hi_.push_back(v);
                } else {
                    RootInterval r = refine(p, iv, eps);
                    root_lo_.push_back(fp_floor(r.lo));
                    root_hi_.push_back(fp_ceil(r.hi));
                }
                root_poly_.push_back(static_cast<std::int32_t>(coeffs_.size() - 1));
            }
            root_begin_.push_back(static_cast<std::int32_t>(root_lo_.size()));
        });
        order_.resize(root_lo_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(),
                  [&](std::int32_t a, std::int32_t b) { return root_lo_[static_cast<std::size_t>(a)] < root_lo_[static_cast<std::size_t>(b)]; });
        width_ = 0;
        for (std::size_t i = 0; i < root_lo_.size(); ++i) width_ = std::max(width_, root_hi_[i] - root_lo_[i]);
        mark_.assign(coeffs_.size(), -1);
    }

    CountResult count(const std::optional<Rectangle>& region) const {
        CountResult res;
        if (!region) {
            for (std::size_t i = 0; i < coeffs_.size(); ++i) {
                long long k = root_begin_[i + 1] - root_begin_[i];
                ++res.polys;
                res.points += k * k;
            }
            return res;
        }
        ++epoch_;
        std::int64_t from = fp_floor(region->lo1) - width_ - 2;
        std::int64_t to = fp_ceil(region->hi1) + 1;
        auto first = std::lower_bound(order_.begin(), order_.end(), from, [&](std::int32_t id, std::int64_t v) {
            return root_lo_[static_cast<std::size_t>(id)] < v;
        });
        for (auto it = first; it != order_.end(); ++it) {
            std::size_t id = static_cast<std::size_t>(*it);
            if (root_lo_[id] > to) break;
            if (!member(id, region->lo1, region->hi1)) continue;
            std::size_t poly = static_cast<std::size_t>(root_poly_[id]);
            long long hits = 0;
            for (std::int32_t j = root_begin_[poly]; j < root_begin_[poly + 1]; ++j)
                if (member(static_cast<std::size_t>(j), region->lo2, region->hi2)) ++hits;
            if (hits > 0 && mark_[poly] != epoch_) {
                mark_[poly] = epoch_;
                ++res.polys;
            }
            res.points += hits;
        }
        return res;
    }

    long long stored_polys() const { return static_cast<long long>(coeffs_.size()); }

private:
    static constexpr std::int64_t kScale = std::int64_t(1) << 30;

    static std::int64_t fp_floor(const Rat& x) { return floor_rat(Rat(x * kScale)).convert_to<std::int64_t>(); }
    static std::int64_t fp_ceil(const Rat& x) { return ceil_rat(Rat(x * kScale)).convert_to<std::int64_t>(); }

    IntPolynomial poly_at(std::size_t i) const {
        std::vector<Int> c(static_cast<std::size_t>(n_) + 1);
        for (int k = 0; k <= n_; ++k) c[static_cast<std::size_t>(k)] = coeffs_[i][static_cast<std::size_t>(k)];
        return IntPolynomial(std::move(c));
    }

    // is the root with this id inside [L, H)?
    bool member(std::size_t id, const Rat& L, const Rat& H) const {
        std::int64_t lo = root_lo_[id], hi = root_hi_[id];
        if (lo == hi) {
            // exact rational root at lo / kScale
            Rat r = Rat(Int(lo), Int(kScale));
            return L <= r && r < H;
        }
        // root is irrational here: (lo, hi] decides unless it straddles L or H
        Rat flo = Rat(Int(lo), Int(kScale));
        Rat fhi = Rat(Int(hi), Int(kScale));
        if (flo >= L && fhi <= H) return true;
        if (fhi <= L || flo >= H) return false;
        IntPolynomial p = poly_at(static_cast<std::size_t>(root_poly_[id]));
        auto roots = isolate_real_roots(p);
        std::size_t k = id - static_cast<std::size_t>(root_begin_[static_cast<std::size_t>(root_poly_[id])]);
        return compare_root(p, roots[k], L) >= 0 && compare_root(p, roots[k], H) < 0;
    }

    int n_;
    std::vector<std::array<std::int64_t, 6>> coeffs_;
    std::vector<std::int32_t> root_begin_;
    std::vector<std::int64_t> root_lo_, root_hi_;
    std::vector<std::int32_t> root_poly_;
    std::vector<std::int32_t> order_;
    std::int64_t width_ = 0;
    mutable std::vector<std::int64_t> mark_;
    mutable std::int64_t epoch_ = 0;
};

} // namespace algint
