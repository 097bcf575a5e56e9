// Copyright 2026 the algint authors. Apache-2.0 (see LICENSE).
//
// Census of "special" squares: for a square centered on a pair of distinct
// abscissas, count integer quadratics from dyadic leading-coefficient bands
// whose values at both centers clear a slack-relaxed smallness test, and
// compare each band count against a shrinking volume threshold.  A square is
// special when every band stays under its threshold.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "algint/constants.hpp"
#include "algint/error.hpp"
#include "algint/integers.hpp"
#include "algint/rectangle.hpp"

namespace algint {

// exponent ladder 1 = lambda_1 >= ... >= lambda_{L+2} > lambda_{L+3} = 0
struct Ladder {
    int L = 0;
    std::vector<Rat> lambda;  // entries for l = 1 .. L+3

    // 1-based; levels past the ladder floor stay at zero
    Rat at(int l) const {
        if (l < 1) throw error(errc::invalid_level, "ladder levels start at 1");
        if (l > (int)lambda.size()) return Rat(0);
        return lambda[(size_t)l - 1];
    }
};

inline Ladder lambda_ladder(const Rat& gamma) {
    if (!(gamma > Rat(1, 2) && gamma < 1))
        throw error(errc::invalid_gamma, "gamma must lie strictly between 1/2 and 1");
    Ladder lad;
    lad.L = floor_rat(Rat((3 - 2 * gamma) / (1 - gamma))).convert_to<int>();
    lad.lambda.reserve((size_t)lad.L + 3);
    for (int l = 1; l <= lad.L + 1; ++l) lad.lambda.push_back(Rat(1) - Rat(l - 1) * Rat(1 - gamma) / 2);
    lad.lambda.push_back(Rat(gamma - Rat(1, 2)));  // L picked so this extends the decay
    lad.lambda.push_back(Rat(0));
    return lad;
}

struct SpecialSquareParams {
    Rat gamma;
    Rat d1, d2;  // square center, distinct coordinates
    Int Q;
    Rat h_sq;  // squared height scale in the smallness test
    int L = 0;
    Rat delta;  // band base width
    Ladder ladder;
};

// h_sq_override <= 0 selects the default two-point height scale at the center
inline SpecialSquareParams make_special_params(const Rat& gamma, const Rat& d1, const Rat& d2, const Int& Q,
                                               const Rat& h_sq_override = Rat(0)) {
    if (d1 == d2) throw error(errc::invalid_region, "center coordinates must be distinct");
    if (Q < 1) throw error(errc::invalid_input, "height cap must be >= 1");
    SpecialSquareParams pr;
    pr.gamma = gamma;
    pr.ladder = lambda_ladder(gamma);
    pr.L = pr.ladder.L;
    pr.d1 = d1;
    pr.d2 = d2;
    pr.Q = Q;
    pr.h_sq = h_sq_override > 0 ? h_sq_override : two_point_height_scale_sq(2, d1, d2);
    Rat gap = d1 - d2;
    pr.delta = Rat(gap * gap) / Rat(pr.h_sq * Rat(Int(1) << (unsigned)(pr.L + 17)));
    return pr;
}

struct CensusRow {
    int l = 0;
    Rat lambda_l;
    Rat lambda_l1;
    long long count = 0;
    double threshold = 0;  // display only; satisfied is decided exactly
    bool satisfied = true;
};

namespace detail {

// quadratics a2 t^2 + a1 t + a0 with |a2| in [alo, ahi], |a1|,|a0| <= Q whose
// absolute values at both centers beat h Q^{-v_i} once the derivative slack
// over the square is forgiven
inline long long band_block_count(long alo, long ahi, long Ql, const Rectangle& sq, const Rat& v1, const Rat& v2,
                                  const SpecialSquareParams& pr) {
    const Rat d1 = sq.mid1(), d2 = sq.mid2();
    const Rat d1s = Rat(d1 * d1), d2s = Rat(d2 * d2);
    const Rat half = Rat(sq.width1()) / 2;
    const long p1 = -2 * num(v1).convert_to<long>(), q1 = den(v1).convert_to<long>();
    const long p2 = -2 * num(v2).convert_to<long>(), q2 = den(v2).convert_to<long>();
    long long count = 0;
    for (long mag = alo; mag <= ahi; ++mag) {
        for (int s = 0; s < 2; ++s) {
            long a2 = s ? -mag : mag;
            for (long a1 = -Ql; a1 <= Ql; ++a1) {
                // |2 a2 t + a1| is linear, so its sup over the square sits at
                // an endpoint of one of the two edge intervals
                Rat sup = std::max(std::max(abs(Rat(Rat(2 * a2) * sq.lo1 + a1)), abs(Rat(Rat(2 * a2) * sq.hi1 + a1))),
                                   std::max(abs(Rat(Rat(2 * a2) * sq.lo2 + a1)), abs(Rat(Rat(2 * a2) * sq.hi2 + a1))));
                Rat slack = Rat(half * sup);
                Rat b1 = Rat(Rat(a2) * d1s + Rat(a1) * d1);
                Rat b2 = Rat(Rat(a2) * d2s + Rat(a1) * d2);
                for (long a0 = -Ql; a0 <= Ql; ++a0) {
                    Rat r1 = abs(Rat(b1 + a0)) - slack;
                    if (r1 > 0 && compare_to_scaled_power(Rat(r1 * r1), pr.h_sq, pr.Q, p1, q1) >= 0) continue;
                    Rat r2 = abs(Rat(b2 + a0)) - slack;
                    if (r2 > 0 && compare_to_scaled_power(Rat(r2 * r2), pr.h_sq, pr.Q, p2, q2) >= 0) continue;
                    ++count;
                }
            }
        }
    }
    return count;
}

}  // namespace detail

// one band of the census: |a2| confined to [delta Q^{lambda_{l+1}}, delta Q^{lambda_l}),
// count compared against delta^3 2^{l+3} Q^{1+2 lambda_{l+1}} times the square area.
// shards > 1 splits the band into contiguous blocks scanned in parallel; the
// merge is a plain sum, so the result never depends on the shard count.
inline CensusRow l_condition_census(const Rectangle& sq, int l, const Rat& v1, const Rat& v2,
                                    const SpecialSquareParams& pr, int shards = 1) {
    if (v1 < 0 || v2 < 0 || Rat(v1 + v2) != 1)
        throw error(errc::invalid_weights, "weights must be nonnegative and sum to 1");
    if (l < 1 || l > pr.L + 2) throw error(errc::invalid_level, "level must lie in 1..L+2");
    if (sq.width1() != sq.width2()) throw error(errc::invalid_region, "census region must be a square");
    if (sq.mid1() != pr.d1 || sq.mid2() != pr.d2)
        throw error(errc::invalid_region, "square must be centered on the parameter abscissas");
    if (shards < 1) throw error(errc::invalid_input, "shard count must be >= 1");

    CensusRow row;
    row.l = l;
    row.lambda_l = pr.ladder.at(l);
    row.lambda_l1 = pr.ladder.at(l + 1);

    // integer band [ceil(delta Q^{lambda_{l+1}}), ceil(delta Q^{lambda_l}) - 1],
    // capped by the height cube; zero leading coefficients sit below the band
    Int blo =
        ceil_scaled_power(pr.delta, pr.Q, num(row.lambda_l1).convert_to<long>(), den(row.lambda_l1).convert_to<long>());
    Int bhi =
        ceil_scaled_power(pr.delta, pr.Q, num(row.lambda_l).convert_to<long>(), den(row.lambda_l).convert_to<long>()) -
        1;
    if (blo < 1) blo = 1;
    if (bhi > pr.Q) bhi = Int(pr.Q);

    if (blo <= bhi) {
        long alo = blo.convert_to<long>(), ahi = bhi.convert_to<long>();
        long Ql = pr.Q.convert_to<long>();
        long width = ahi - alo + 1;
        int nsh = (int)std::min<long>(shards, width);
        if (nsh <= 1) {
            row.count = detail::band_block_count(alo, ahi, Ql, sq, v1, v2, pr);
        } else {
            std::vector<long long> part((size_t)nsh, 0);
            std::vector<std::thread> pool;
            pool.reserve((size_t)nsh);
            for (int k = 0; k < nsh; ++k) {
                long s = alo + width * k / nsh;
                long e = alo + width * (k + 1) / nsh - 1;
                pool.emplace_back(
                    [&part, &sq, &v1, &v2, &pr, k, s, e, Ql] { part[(size_t)k] = detail::band_block_count(s, e, Ql, sq, v1, v2, pr); });
            }
            for (auto& t : pool) t.join();
            for (long long c : part) row.count += c;
        }
    }

    Rat scale = Rat(Rat(rat_pow(pr.delta, 3) * Rat(Int(1) << (unsigned)(l + 3))) * Rat(sq.width1() * sq.width2()));
    Rat expo = Rat(1 + 2 * row.lambda_l1);
    row.satisfied = compare_to_scaled_power(Rat(row.count), scale, pr.Q, num(expo).convert_to<long>(),
                                            den(expo).convert_to<long>()) <= 0;
    row.threshold = scale.convert_to<double>() * std::pow(pr.Q.convert_to<double>(), expo.convert_to<double>());
    return row;
}

inline std::vector<CensusRow> special_census(const Rectangle& sq, const Rat& v1, const Rat& v2,
                                             const SpecialSquareParams& pr, int shards = 1) {
    std::vector<CensusRow> rows;
    rows.reserve((size_t)pr.L + 2);
    for (int l = 1; l <= pr.L + 2; ++l) rows.push_back(l_condition_census(sq, l, v1, v2, pr, shards));
    return rows;
}

inline bool is_special(const Rectangle& sq, const Rat& v1, const Rat& v2, const SpecialSquareParams& pr,
                       int shards = 1) {
    for (const auto& row : special_census(sq, v1, v2, pr, shards))
        if (!row.satisfied) return false;
    return true;
}

}  // namespace algint
