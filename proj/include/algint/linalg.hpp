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

#include <cstddef>
#include <utility>
#include <vector>

#include "algint/error.hpp"
#include "algint/integers.hpp"

namespace algint {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

namespace detail {

inline void require_square(const IntMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw error(errc::invalid_input, "matrix is not square");
}

inline void require_square(const RatMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw error(errc::invalid_input, "matrix is not square");
}

} // namespace detail

/** Determinant of an integer matrix by fraction-free elimination.
 *  Every division below is exact, so no rationals are ever needed. */
inline Int det_int(IntMat m) {
    detail::require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = Int(Int(m[k][k] * m[i][j]) - Int(m[i][k] * m[k][j])) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sgn < 0 ? Int(-d) : d;
}

inline Rat det_rat(RatMat m) {
    detail::require_square(m);
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= Rat(f * m[k][j]);
        }
    }
    return det;
}

/** Solves a x = b exactly by Gauss-Jordan elimination. */
inline RatVec solve_linear(RatMat a, RatVec b) {
    detail::require_square(a);
    const std::size_t n = a.size();
    if (b.size() != n) throw error(errc::invalid_input, "right-hand side has the wrong length");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw error(errc::invalid_input, "singular system");
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= Rat(f * a[k][j]);
            b[i] -= Rat(f * b[k]);
        }
    }
    for (std::size_t k = 0; k < n; ++k) b[k] /= a[k][k];
    return b;
}

inline RatMat invert(RatMat a) {
    detail::require_square(a);
    const std::size_t n = a.size();
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw error(errc::invalid_input, "singular matrix");
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(inv[piv], inv[k]);
        }
        Rat d = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= d;
            inv[k][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= Rat(f * a[k][j]);
                inv[i][j] -= Rat(f * inv[k][j]);
            }
        }
    }
    return inv;
}

/** Incremental row space over the rationals. add() keeps a row only when it
 *  is independent of everything stored so far. */
class RationalRowSpan {
public:
    bool add(RatVec v) {
        if (!rows_.empty() && v.size() != rows_.front().second.size())
            throw error(errc::invalid_input, "row length mismatch");
        for (const auto& [piv, row] : rows_) {
            if (v[piv] == 0) continue;
            Rat f = v[piv];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= Rat(f * row[j]);
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) return false;
        Rat d = v[piv];
        for (auto& x : v) x /= d;
        rows_.emplace_back(piv, std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, RatVec>> rows_;
};

namespace detail {

inline Rat gram_inner(const RatVec& u, const RatVec& v, const RatMat& g) {
    Rat acc = 0;
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (u[a] == 0) continue;
        Rat row = 0;
        for (std::size_t b = 0; b < v.size(); ++b) row += Rat(g[a][b] * v[b]);
        acc += Rat(u[a] * row);
    }
    return acc;
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

struct GramSchmidt {
    RatMat mu;  // lower triangular, mu[i][j] for j < i
    RatVec norms;  // squared lengths of the orthogonalized vectors
};

inline GramSchmidt orthogonalize(const IntMat& basis, const RatMat& gram) {
    const std::size_t n = basis.size();
    GramSchmidt gs{RatMat(n, RatVec(n, Rat(0))), RatVec(n, Rat(0))};
    std::vector<RatVec> star(n);
    for (std::size_t i = 0; i < n; ++i) {
        star[i] = to_rat_vec(basis[i]);
        for (std::size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = gram_inner(to_rat_vec(basis[i]), star[j], gram) / gs.norms[j];
            for (std::size_t c = 0; c < star[i].size(); ++c) star[i][c] -= Rat(gs.mu[i][j] * star[j][c]);
        }
        gs.norms[i] = gram_inner(star[i], star[i], gram);
        if (gs.norms[i] <= 0)
            throw error(errc::internal, "inner product degenerate on the basis");
    }
    return gs;
}

} // namespace detail

/** Lattice reduction of integer vectors under the quadratic form given by
 *  gram (symmetric positive definite on the span). Lovasz parameter 3/4.
 *  The Gram-Schmidt data is recomputed from scratch after every change;
 *  the dimensions used here are tiny, so clarity wins over speed. */
inline IntMat lll_reduce(IntMat basis, const RatMat& gram, long max_rounds = 200000) {
    const std::size_t n = basis.size();
    if (n == 0) throw error(errc::invalid_input, "empty basis");
    const std::size_t d = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != d) throw error(errc::invalid_input, "ragged basis");
    if (gram.size() != d) throw error(errc::invalid_input, "gram size mismatch");
    for (const auto& row : gram)
        if (row.size() != d) throw error(errc::invalid_input, "gram size mismatch");

    detail::GramSchmidt gs = detail::orthogonalize(basis, gram);
    std::size_t k = 1;
    long rounds = 0;
    while (k < n) {
        if (++rounds > max_rounds) throw error(errc::internal, "reduction did not converge");
        for (std::size_t j = k; j-- > 0;) {
            Rat mu = gs.mu[k][j];
            if (Rat(abs(mu) * 2) <= 1) continue;
            Int q = floor_rat(Rat(mu + Rat(1, 2)));
            for (std::size_t c = 0; c < d; ++c) basis[k][c] -= Int(q * basis[j][c]);
            gs = detail::orthogonalize(basis, gram);
        }
        Rat mu = gs.mu[k][k - 1];
        if (gs.norms[k] >= Rat(Rat(Rat(3, 4) - Rat(mu * mu)) * gs.norms[k - 1])) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            gs = detail::orthogonalize(basis, gram);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return basis;
}

} // namespace algint
