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
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algint/constants.hpp"
#include "algint/error.hpp"
#include "algint/integers.hpp"
#include "algint/intpoly.hpp"
#include "algint/linalg.hpp"
#include "algint/realroots.hpp"

namespace algint {

/** Two-target convex body of monic-degree-n candidates, described through
 *  the non-monic part: values at x1, x2 live on the h Q^(-u_i) scale, the
 *  derivatives there and the middle coefficients live on the Q scale.
 *  The value scale is carried squared so membership stays decidable. */
struct ConvexBodySpec {
    Rat x1, x2;
    int n = 0;
    Int Q;
    Rat u1, u2;
    Rat h_sq;

    ConvexBodySpec(Rat x1_, Rat x2_, int n_, Int Q_, Rat u1_, Rat u2_, Rat h_sq_)
        : x1(std::move(x1_)), x2(std::move(x2_)), n(n_), Q(std::move(Q_)),
          u1(std::move(u1_)), u2(std::move(u2_)), h_sq(std::move(h_sq_)) {
        if (n < 3 || n > 5) throw error(errc::unsupported_degree, "degree must be 3, 4, or 5");
        if (x1 == x2) throw error(errc::degenerate_target, "target coordinates coincide");
        if (Q < 1) throw error(errc::invalid_input, "Q must be at least 1");
        if (u1 <= 0 || u2 <= 0) throw error(errc::invalid_input, "value exponents must be positive");
        if (Rat(u1 + u2) != n - 2) throw error(errc::invalid_input, "value exponents must sum to n-2");
        if (h_sq <= 0) throw error(errc::invalid_input, "value scale must be positive");
    }
};

/** Integer basis of the degree-below-n polynomial lattice whose members all
 *  fit inside the slack-dilated body. slack = delta^(-n+1). */
struct SmallBasis {
    std::vector<IntPolynomial> polys;
    IntMat coeffs;  // row j holds the n coefficients of polys[j]
    Int det;        // nonzero, |det| <= n!
    Rat slack;
    Rat delta;
};

namespace detail {

// Q^(-2u) as an exact rational when 2u is an integer, otherwise a positive
// rational stand-in accurate to ~96 bits (only weights quality, never proofs)
inline Rat q_pow_minus_2u(const Int& Q, const Rat& u) {
    Rat two_u = Rat(u * 2);
    if (den(two_u) == 1) return rat_pow(Rat(Q), -num(two_u).convert_to<long>());
    long a = num(u).convert_to<long>();
    long b = den(u).convert_to<long>();
    Rat lo = scaled_root_lower(rat_pow(Rat(Q), -2 * a), 1, b, 96);
    if (lo > 0) return lo;
    return scaled_root_upper(rat_pow(Rat(Q), -2 * a), 1, b, 96);
}

/** Membership in the c-dilated body, decided exactly. */
inline bool in_scaled_body(const IntPolynomial& pj, const ConvexBodySpec& body, const Rat& c) {
    const Rat xs[2] = {body.x1, body.x2};
    const Rat us[2] = {body.u1, body.u2};
    Rat cap = Rat(c * Rat(body.Q));
    Rat cc = Rat(Rat(c * c) * body.h_sq);
    for (int i = 0; i < 2; ++i) {
        Rat v = abs(pj.evaluate(xs[i]));
        if (compare_to_scaled_power(Rat(v * v), cc, body.Q, -2 * num(us[i]).convert_to<long>(),
                                    den(us[i]).convert_to<long>()) > 0)
            return false;
        if (Rat(abs(pj.derivative().evaluate(xs[i]))) > cap) return false;
    }
    for (int k = 2; k < body.n; ++k)
        if (Rat(Rat(abs(pj.coeff((std::size_t)k)))) > cap) return false;
    return true;
}

/** Shell-by-shell search for a spanning family inside the dilated body.
 *  Candidates are ranked by their exact body gauge when the value scales
 *  are rational powers of Q, by sup-norm shell otherwise. */
inline SmallBasis exhaustive_small_basis(const ConvexBodySpec& body, const Rat& delta) {
    const int n = body.n;
    const Rat slack = rat_pow(delta, -(n - 1));
    const bool exact_gauge = den(Rat(body.u1 * 2)) == 1 && den(Rat(body.u2 * 2)) == 1;
    Rat qu[2], q2;
    if (exact_gauge) {
        qu[0] = rat_pow(Rat(body.Q), -num(Rat(body.u1 * 2)).convert_to<long>());
        qu[1] = rat_pow(Rat(body.Q), -num(Rat(body.u2 * 2)).convert_to<long>());
        q2 = Rat(Rat(body.Q) * Rat(body.Q));
    }
    const Rat xs[2] = {body.x1, body.x2};
    auto gauge_sq = [&](const IntPolynomial& pj) {
        Rat g = 0;
        for (int i = 0; i < 2; ++i) {
            Rat v = pj.evaluate(xs[i]);
            g = std::max(g, Rat(Rat(v * v) / Rat(body.h_sq * qu[i])));
            Rat d = pj.derivative().evaluate(xs[i]);
            g = std::max(g, Rat(Rat(d * d) / q2));
        }
        for (int k = 2; k < n; ++k) {
            Rat a = Rat(pj.coeff((std::size_t)k));
            g = std::max(g, Rat(Rat(a * a) / q2));
        }
        return g;
    };

    std::vector<std::pair<Rat, IntVec>> pool;
    RationalRowSpan probe;
    long examined = 0;
    const long examine_cap = 2000000;
    int stop_radius = 7;
    bool capped = false;
    for (int radius = 1; radius <= 6 && radius <= stop_radius && !capped; ++radius) {
        std::vector<long> a((std::size_t)n, -(long)radius);
        while (true) {
            long m = 0;
            for (long x : a) m = std::max(m, x < 0 ? -x : x);
            if (m == radius) {
                if (++examined > examine_cap) {
                    capped = true;
                    break;
                }
                IntVec v((std::size_t)n);
                for (std::size_t i = 0; i < (std::size_t)n; ++i) v[i] = Int(a[i]);
                IntPolynomial pj(v);
                if (in_scaled_body(pj, body, delta))
                    throw error(errc::target_in_exceptional_set,
                                "a nonzero lattice vector lies in the shrunk body");
                if (in_scaled_body(pj, body, slack)) {
                    pool.emplace_back(exact_gauge ? gauge_sq(pj) : Rat(radius), v);
                    if (probe.add(to_rat_vec(v)) && probe.rank() == (std::size_t)n && stop_radius == 7)
                        stop_radius = radius + 1;
                }
            }
            std::size_t pos = 0;
            while (pos < a.size() && a[pos] == radius) {
                a[pos] = -(long)radius;
                ++pos;
            }
            if (pos == a.size()) break;
            ++a[pos];
        }
    }

    if (exact_gauge)
        std::stable_sort(pool.begin(), pool.end(),
                         [](const std::pair<Rat, IntVec>& a, const std::pair<Rat, IntVec>& b) {
                             return a.first < b.first;
                         });
    RationalRowSpan span;
    IntMat picked;
    for (const auto& [g, v] : pool) {
        (void)g;
        if (!span.add(to_rat_vec(v))) continue;
        picked.push_back(v);
        if ((int)picked.size() == n) break;
    }
    if ((int)picked.size() < n)
        throw error(errc::slack_exhausted, "no spanning family inside the dilated body");
    Int dd = det_int(picked);
    if (dd == 0) throw error(errc::internal, "independent family with zero determinant");
    if (Int(abs(dd)) > int_factorial(n))
        throw error(errc::slack_exhausted, "spanning family determinant too large");
    SmallBasis out;
    out.coeffs = picked;
    for (const auto& row : picked) out.polys.push_back(IntPolynomial(row));
    out.det = dd;
    out.slack = slack;
    out.delta = delta;
    return out;
}

} // namespace detail

/** Finds n short lattice vectors spanning the dilated body: reduce the
 *  standard basis under a quadratic form shaped like the body, fall back to
 *  the shell search when reduction leaves a vector outside. A short vector
 *  inside the delta-shrunk body means the targets are too well approximable
 *  and the whole construction is refused. */
inline SmallBasis find_small_basis(const ConvexBodySpec& body, const Rat& delta) {
    if (delta <= 0 || delta >= 1) throw error(errc::invalid_input, "shrink factor must lie in (0,1)");
    const int n = body.n;
    const Rat slack = rat_pow(delta, -(n - 1));

    RatMat g((std::size_t)n, RatVec((std::size_t)n, Rat(0)));
    auto add_form = [&](const RatVec& f, const Rat& w) {
        for (std::size_t a = 0; a < (std::size_t)n; ++a) {
            if (f[a] == 0) continue;
            for (std::size_t b = 0; b < (std::size_t)n; ++b) g[a][b] += Rat(w * Rat(f[a] * f[b]));
        }
    };
    const Rat xs[2] = {body.x1, body.x2};
    const Rat us[2] = {body.u1, body.u2};
    const Rat wd = Rat(Rat(1) / rat_pow(Rat(slack * Rat(body.Q)), 2));
    for (int i = 0; i < 2; ++i) {
        RatVec f((std::size_t)n), df((std::size_t)n, Rat(0));
        for (int k = 0; k < n; ++k) f[(std::size_t)k] = rat_pow(xs[i], k);
        for (int k = 1; k < n; ++k) df[(std::size_t)k] = Rat(Rat(k) * rat_pow(xs[i], k - 1));
        Rat qpow = detail::q_pow_minus_2u(body.Q, us[i]);
        add_form(f, Rat(Rat(1) / Rat(Rat(slack * slack) * Rat(body.h_sq * qpow))));
        add_form(df, wd);
    }
    for (int k = 2; k < n; ++k) {
        RatVec e((std::size_t)n, Rat(0));
        e[(std::size_t)k] = 1;
        add_form(e, wd);
    }

    IntMat id((std::size_t)n, IntVec((std::size_t)n, Int(0)));
    for (std::size_t i = 0; i < (std::size_t)n; ++i) id[i][i] = 1;
    IntMat red = lll_reduce(id, g);
    Int dd = det_int(red);
    if (Int(abs(dd)) != 1) throw error(errc::internal, "reduction broke unimodularity");

    std::vector<IntPolynomial> polys;
    bool all_inside = true;
    for (const auto& row : red) {
        IntPolynomial pj(row);
        if (detail::in_scaled_body(pj, body, delta))
            throw error(errc::target_in_exceptional_set,
                        "a nonzero lattice vector lies in the shrunk body");
        if (!detail::in_scaled_body(pj, body, slack)) all_inside = false;
        polys.push_back(std::move(pj));
    }
    if (!all_inside) return detail::exhaustive_small_basis(body, delta);

    SmallBasis out;
    out.polys = std::move(polys);
    out.coeffs = std::move(red);
    out.det = dd;
    out.slack = slack;
    out.delta = delta;
    return out;
}

/** Smallest prime above n!. It can never divide a determinant of magnitude
 *  at most n!, and it stays below 2 n! by Bertrand's postulate. */
inline Int select_prime(int n, const Int& det) {
    if (n < 2) throw error(errc::invalid_input, "degree must be at least 2");
    if (det == 0) throw error(errc::invalid_input, "determinant must be nonzero");
    Int f = int_factorial(n);
    if (Int(abs(det)) > f) throw error(errc::invalid_input, "determinant exceeds the factorial cap");
    Int p = f + 1;
    while (!is_prime(p)) ++p;
    return p;
}

struct ThetaSolution {
    RatVec theta;
    RatMat matrix;  // the assembled system, kept for auditing
    RatVec rhs;
};

namespace detail {

// lower rational stand-in for h Q^(-u) with h = sqrt(h_sq); erring low keeps
// the verified value ceiling safe, and the floor is re-checked exactly later
inline Rat value_bound_low(const Rat& h_sq, const Int& Q, const Rat& u) {
    Rat two_u = Rat(u * 2);
    if (den(two_u) == 1)
        return sqrt_lower(Rat(h_sq * rat_pow(Rat(Q), -num(two_u).convert_to<long>())), 96);
    long a = num(u).convert_to<long>();
    long b = den(u).convert_to<long>();
    return scaled_root_lower(Rat(rat_pow(h_sq, b) * rat_pow(Rat(Q), -2 * a)), 1, 2 * b, 96);
}

} // namespace detail

/** Assembles and solves the placement system: the candidate's values at the
 *  targets are pushed to the middle of the admissible band and the
 *  derivatives just above the floor. Rows are value, derivative at x1, then
 *  value, derivative at x2, then one row per pinned coefficient 4..n-1; for
 *  n = 3 the derivative row at x2 is dropped. The assembled determinant is
 *  checked against its closed form before solving. */
inline ThetaSolution solve_theta(const SmallBasis& basis, const ConvexBodySpec& body, const Int& p) {
    const int n = body.n;
    if ((int)basis.polys.size() != n || (int)basis.coeffs.size() != n)
        throw error(errc::invalid_input, "basis size does not match the degree");
    if (basis.det == 0) throw error(errc::invalid_input, "basis determinant must be nonzero");
    if (body.x1 == body.x2) throw error(errc::degenerate_target, "target coordinates coincide");
    if (p < 2) throw error(errc::invalid_input, "multiplier must be a prime");

    RatMat a((std::size_t)n, RatVec((std::size_t)n, Rat(0)));
    RatVec rhs((std::size_t)n, Rat(0));
    const Rat xs[2] = {body.x1, body.x2};
    const Rat us[2] = {body.u1, body.u2};
    std::size_t r = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < n; ++j)
            a[r][(std::size_t)j] = Rat(Rat(p) * basis.polys[(std::size_t)j].evaluate(xs[i]));
        Rat vb = detail::value_bound_low(body.h_sq, body.Q, us[i]);
        rhs[r] = Rat(Rat(Rat(Rat(p) * Rat(n + 1)) * basis.slack) * vb) - rat_pow(xs[i], n);
        ++r;
        if (i == 1 && n == 3) break;
        Rat sum = 0;
        for (int j = 0; j < n; ++j) {
            Rat dv = basis.polys[(std::size_t)j].derivative().evaluate(xs[i]);
            a[r][(std::size_t)j] = Rat(Rat(p) * dv);
            sum += abs(dv);
        }
        rhs[r] = Rat(Rat(Rat(p) * Rat(body.Q)) + Rat(Rat(p) * sum)) - Rat(Rat(n) * rat_pow(xs[i], n - 1));
        ++r;
    }
    for (int k = 4; k < n; ++k) {
        for (int j = 0; j < n; ++j) a[r][(std::size_t)j] = Rat(basis.coeffs[(std::size_t)j][(std::size_t)k]);
        rhs[r] = 0;
        ++r;
    }
    if (r != (std::size_t)n) throw error(errc::internal, "row count mismatch");

    // the system matrix factors through a confluent interpolation block, so
    // its determinant has a closed form; any mismatch means assembly drift
    Rat expect = n >= 4 ? Rat(Rat(rat_pow(Rat(p), 4) * rat_pow(Rat(body.x2 - body.x1), 4)) * Rat(basis.det))
                        : Rat(Rat(rat_pow(Rat(p), 3) * rat_pow(Rat(body.x2 - body.x1), 2)) * Rat(basis.det));
    if (det_rat(a) != expect) throw error(errc::internal, "system determinant identity violated");

    ThetaSolution ts;
    ts.matrix = a;
    ts.rhs = rhs;
    ts.theta = solve_linear(std::move(a), std::move(rhs));
    return ts;
}

/** Rounds the real solution down to integers, then bumps one coordinate if
 *  the constant term landed on a multiple of p. Requires p coprime to the
 *  basis determinant so a bumpable coordinate always exists. */
inline std::vector<Int> round_to_eisenstein(const RatVec& theta, const SmallBasis& basis, const Int& p) {
    const std::size_t n = theta.size();
    if (basis.coeffs.size() != n) throw error(errc::invalid_input, "basis size mismatch");
    if (basis.det % p == 0) throw error(errc::invalid_input, "prime divides the basis determinant");
    std::vector<Int> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = floor_rat(theta[j]);
    Int a0 = 0;
    for (std::size_t j = 0; j < n; ++j) a0 += Int(s[j] * basis.coeffs[j][0]);
    if (a0 % p == 0) {
        std::size_t j = 0;
        while (j < n && basis.coeffs[j][0] % p == 0) ++j;
        if (j == n) throw error(errc::internal, "constant column vanishes mod p");
        s[j] += 1;
    }
    return s;
}

struct ConstructionResult {
    IntPolynomial poly;
    Int p = 0;
    std::vector<Int> s;
    RatVec theta;
    SmallBasis basis;
    RootInterval root1, root2;  // certified: each contains a real root close to its target
    Rat px1, px2;               // |poly| at the targets
    Rat dpx1, dpx2;             // |poly'| at the targets
    Int height = 0;
    Rat delta_used;
    int attempts = 0;
    double q1 = 0;   // height ceiling that was enforced, display scale
    double c12 = 0;  // root distance factor (multiplies Q^(-u-1)), display scale
};

namespace detail {

// finds a bracketed root with certified distance below sqrt(c12_sq) Q^(-u-1)
// of x, refining until every interval passes or is ruled out
inline bool locate_close_root(const IntPolynomial& poly, const std::vector<RootInterval>& roots,
                              const Rat& x, const Rat& c12_sq, const Int& Q, const Rat& u,
                              RootInterval& out) {
    const long pe = -2 * (num(u) + den(u)).convert_to<long>();
    const long qe = den(u).convert_to<long>();
    std::vector<RootInterval> live = roots;
    for (int round = 0; round < 60 && !live.empty(); ++round) {
        std::vector<RootInterval> next;
        for (const auto& iv : live) {
            Rat dhi = std::max(Rat(abs(Rat(iv.lo - x))), Rat(abs(Rat(iv.hi - x))));
            if (compare_to_scaled_power(Rat(dhi * dhi), c12_sq, Q, pe, qe) < 0) {
                out = iv;
                return true;
            }
            Rat dlo = x <= iv.lo ? Rat(iv.lo - x) : (x > iv.hi ? Rat(x - iv.hi) : Rat(0));
            if (dlo > 0 && compare_to_scaled_power(Rat(dlo * dlo), c12_sq, Q, pe, qe) >= 0) continue;
            next.push_back(refine(poly, iv, Rat(Rat(iv.hi - iv.lo) / 4)));
        }
        live = std::move(next);
    }
    return false;
}

} // namespace detail

/** End-to-end construction of a monic irreducible degree-n polynomial with
 *  real roots certified close to both targets, prime-certified irreducible,
 *  with exact a-posteriori verification of every claimed bound. Failed
 *  verification halves delta and retries. */
inline ConstructionResult construct_point(const Rat& x1, const Rat& x2, int n, const Int& Q,
                                          const Rat& delta0, int retries = 4) {
    if (n < 3 || n > 5) throw error(errc::unsupported_degree, "degree must be 3, 4, or 5");
    if (x1 == x2) throw error(errc::degenerate_target, "target coordinates coincide");
    if (Q < 1) throw error(errc::invalid_input, "Q must be at least 1");
    if (delta0 <= 0 || delta0 >= 1) throw error(errc::invalid_input, "shrink factor must lie in (0,1)");
    if (retries < 0) throw error(errc::invalid_input, "retries must be nonnegative");

    const Rat u = Rat(n - 2, 2);
    const Rat h_sq = two_point_height_scale_sq(n - 1, x1, x2);
    const ConvexBodySpec body(x1, x2, n, Q, u, u, h_sq);
    const long up = -2 * num(u).convert_to<long>();
    const long uq = den(u).convert_to<long>();
    const Rat xs[2] = {x1, x2};

    Rat delta = delta0;
    for (int attempt = 1; attempt <= retries + 1; ++attempt, delta /= 2) {
        const bool last = attempt == retries + 1;
        SmallBasis basis;
        try {
            basis = find_small_basis(body, delta);
        } catch (const error& e) {
            if (!last && (e.code() == errc::target_in_exceptional_set || e.code() == errc::slack_exhausted))
                continue;
            throw;
        }
        const Rat slack = basis.slack;
        Int p = select_prime(n, basis.det);
        ThetaSolution ts = solve_theta(basis, body, p);
        std::vector<Int> s = round_to_eisenstein(ts.theta, basis, p);

        std::vector<Int> c((std::size_t)n + 1, Int(0));
        for (int k = 0; k < n; ++k) {
            Int acc = 0;
            for (int j = 0; j < n; ++j) acc += Int(s[(std::size_t)j] * basis.coeffs[(std::size_t)j][(std::size_t)k]);
            c[(std::size_t)k] = Int(p * acc);
        }
        c[(std::size_t)n] = 1;
        IntPolynomial poly(c);

        const char* bad = nullptr;
        Rat pv[2], pd[2];
        RootInterval r1{}, r2{};
        Int height = poly.height();
        double q1d = 0;
        double c12d = 0;
        do {
            if (!eisenstein_check(poly, p)) {
                bad = "prime certification";
                break;
            }
            for (int i = 0; i < 2 && !bad; ++i) {
                pv[i] = abs(poly.evaluate(xs[i]));
                Rat lo_c = Rat(rat_pow(Rat(Rat(p) * slack), 2) * body.h_sq);
                Rat hi_c = Rat(rat_pow(Rat(Rat(Rat(p) * Rat(2 * n + 1)) * slack), 2) * body.h_sq);
                if (compare_to_scaled_power(Rat(pv[i] * pv[i]), lo_c, Q, up, uq) < 0) bad = "value floor";
                else if (compare_to_scaled_power(Rat(pv[i] * pv[i]), hi_c, Q, up, uq) > 0) bad = "value ceiling";
            }
            if (bad) break;
            for (int i = 0; i < 2 && !bad; ++i) {
                pd[i] = abs(poly.derivative().evaluate(xs[i]));
                if (pd[i] < Rat(Rat(p) * Rat(Q))) bad = "derivative floor";
                else if (pd[i] > Rat(Rat(Rat(p) + Rat(Rat(Rat(2 * n) * Rat(p)) * slack)) * Rat(Q)))
                    bad = "derivative ceiling";
            }
            if (bad) break;

            // height ceiling: plain coefficient budget, or coefficient
            // recovery through the two-target interpolation system
            const double hd = std::sqrt(detail::to_double(body.h_sq));
            bool plain = Rat(height) < Rat(Rat(n) * Rat(slack * Rat(Q)));
            bool recovered = false;
            double c11d = 0;
            {
                RatMat v(4, RatVec(4, Rat(0)));
                for (int i = 0; i < 2; ++i) {
                    for (int k = 0; k < 4; ++k) v[(std::size_t)i][(std::size_t)k] = rat_pow(xs[i], k);
                    for (int k = 1; k < 4; ++k)
                        v[(std::size_t)(2 + i)][(std::size_t)k] = Rat(Rat(k) * rat_pow(xs[i], k - 1));
                }
                RatMat vinv = invert(v);
                RatVec ca(4, Rat(0)), cb(4, Rat(0));  // each cap reads ca + cb*sqrt(h_sq)
                if (n == 3) {
                    cb[0] = cb[1] = 1;
                    ca[2] = ca[3] = Rat(p);
                    cb[2] = cb[3] = Rat(Rat(Rat(2 * n) * Rat(p)) * slack);
                } else {
                    for (int i = 0; i < 2; ++i) {
                        Rat m = rat_pow(Rat(abs(xs[i]) + 1), n);
                        cb[(std::size_t)i] = Rat(Rat(2 * n) * Rat(slack * m));
                        cb[(std::size_t)(2 + i)] = Rat(Rat(4 * n * n) * Rat(Rat(p) * Rat(slack * m)));
                    }
                }
                for (int k = 0; k < 4; ++k) {
                    Rat at = 0, bt = 0;
                    for (int m = 0; m < 4; ++m) {
                        Rat w = abs(vinv[(std::size_t)k][(std::size_t)m]);
                        at += Rat(w * ca[(std::size_t)m]);
                        bt += Rat(w * cb[(std::size_t)m]);
                    }
                    c11d = std::max(c11d, detail::to_double(at) + detail::to_double(bt) * hd);
                    if (!recovered && compare_to_sqrt(Rat(Rat(Rat(height) / Rat(Q)) - at), bt, body.h_sq) < 0)
                        recovered = true;
                }
            }
            if (!plain && !recovered) {
                bad = "height ceiling";
                break;
            }
            q1d = std::max(c11d, detail::to_double(Rat(Rat(n) * slack))) * detail::to_double(Rat(Q));

            Rat c12rat = Rat(Rat(Rat(n) * Rat(2 * n + 1)) * slack);
            Rat c12_sq = Rat(Rat(c12rat * c12rat) * body.h_sq);
            c12d = detail::to_double(c12rat) * hd;
            auto roots = isolate_real_roots(poly);
            if (!detail::locate_close_root(poly, roots, x1, c12_sq, Q, u, r1) ||
                !detail::locate_close_root(poly, roots, x2, c12_sq, Q, u, r2)) {
                bad = "root proximity";
                break;
            }
        } while (false);

        if (bad) {
            if (last)
                throw error(errc::construction_failed, std::string("verification failed: ") + bad);
            continue;
        }

        ConstructionResult res;
        res.poly = std::move(poly);
        res.p = p;
        res.s = std::move(s);
        res.theta = std::move(ts.theta);
        res.basis = std::move(basis);
        res.root1 = r1;
        res.root2 = r2;
        res.px1 = pv[0];
        res.px2 = pv[1];
        res.dpx1 = pd[0];
        res.dpx2 = pd[1];
        res.height = height;
        res.delta_used = delta;
        res.attempts = attempt;
        res.q1 = q1d;
        res.c12 = c12d;
        return res;
    }
    throw error(errc::internal, "unreachable retry exit");
}

} // namespace algint
