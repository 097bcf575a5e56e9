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

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "algint/error.hpp"

namespace algint {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int int_factorial(int n) {
    if (n < 0) throw error(errc::invalid_input, "factorial of a negative number");
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// x^e for integer e of either sign; x != 0 required when e < 0.
inline Rat rat_pow(const Rat& x, long e) {
    if (e >= 0) {
        Rat n(int_pow(num(x), static_cast<unsigned long>(e)),
              int_pow(den(x), static_cast<unsigned long>(e)));
        return n;
    }
    if (x == 0) throw error(errc::invalid_input, "0 has no negative power");
    Rat n(int_pow(den(x), static_cast<unsigned long>(-e)),
          int_pow(num(x), static_cast<unsigned long>(-e)));
    return n;
}

inline Int floor_rat(const Rat& x) {
    Int q = num(x) / den(x);
    if (x < 0 && q * den(x) != num(x)) --q;
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q = num(x) / den(x);
    if (x > 0 && q * den(x) != num(x)) ++q;
    return q;
}

// Largest multiple of 2^-bits that is <= x. Keeps interval endpoints dyadic.
inline Rat dyadic_floor(const Rat& x, unsigned bits) {
    Int scale = Int(1) << bits;
    return Rat(floor_rat(x * scale), scale);
}

/** Sign of r - c * Q^(p/q), computed exactly.
 *  Requires c > 0, Q >= 1, q >= 1. Both sides are positive after the
 *  trivial sign cases, so comparing q-th powers decides the order. */
inline int compare_to_scaled_power(const Rat& r, const Rat& c, const Int& Q, long p, long q) {
    if (c <= 0) throw error(errc::invalid_input, "scale must be positive");
    if (Q < 1) throw error(errc::invalid_input, "Q must be >= 1");
    if (q < 1) throw error(errc::invalid_input, "power denominator must be >= 1");
    if (r <= 0) return -1;
    Rat lhs = rat_pow(r, q);
    Rat rhs = rat_pow(c, q) * rat_pow(Rat(Q), p);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

/** Sign of r - s*sqrt(w) for rational r, s, w with w >= 0. */
inline int compare_to_sqrt(const Rat& r, const Rat& s, const Rat& w) {
    if (w < 0) throw error(errc::invalid_input, "sqrt of negative");
    Rat rhs_sq = s * s * w;
    int rs = sign(r);
    int ss = (s == 0 || w == 0) ? 0 : sign(s);
    if (ss == 0) return rs;
    if (rs <= 0 && ss > 0) return (rs < 0 || rhs_sq != 0) ? -1 : 0;
    if (rs >= 0 && ss < 0) return (rs > 0 || rhs_sq != 0) ? 1 : 0;
    // both sides share a strict sign
    Rat lhs_sq = r * r;
    int through = (rs > 0) ? 1 : -1;
    if (lhs_sq < rhs_sq) return -through;
    if (lhs_sq > rhs_sq) return through;
    return 0;
}

namespace detail {
inline double to_double(const Rat& x) { return static_cast<double>(x); }
}

/** Smallest integer m with m >= c * Q^(p/q). Double seed, exact fix-up. */
inline Int ceil_scaled_power(const Rat& c, const Int& Q, long p, long q) {
    double est = detail::to_double(c) * std::exp(static_cast<double>(p) / static_cast<double>(q) *
                                                 std::log(static_cast<double>(Q)));
    Int m(static_cast<long long>(std::ceil(est)));
    while (compare_to_scaled_power(Rat(m), c, Q, p, q) < 0) ++m;
    while (m > 0 && compare_to_scaled_power(Rat(m - 1), c, Q, p, q) >= 0) --m;
    return m;
}

/** Largest integer m with m <= c * Q^(p/q); c > 0 so the result is >= 0. */
inline Int floor_scaled_power(const Rat& c, const Int& Q, long p, long q) {
    Int m = ceil_scaled_power(c, Q, p, q);
    if (compare_to_scaled_power(Rat(m), c, Q, p, q) > 0) --m;
    return m;
}

/** Rational lower approximation of sqrt(x), relative error below 2^-bits. */
inline Rat sqrt_lower(const Rat& x, unsigned bits) {
    if (x < 0) throw error(errc::invalid_input, "sqrt of negative");
    if (x == 0) return Rat(0);
    Int scale = Int(1) << (2 * bits);
    Int n = floor_rat(Rat(num(x) * scale, den(x)));
    Int r = boost::multiprecision::sqrt(n); // floor sqrt
    return Rat(r, Int(1) << bits);
}

/** floor(x^(1/k)) for x >= 0, k >= 1, by Newton iteration on integers. */
inline Int kth_root_floor(const Int& x, unsigned k) {
    if (x < 0) throw error(errc::invalid_input, "root of negative");
    if (k == 0) throw error(errc::invalid_input, "zeroth root");
    if (k == 1 || x < 2) return x;
    unsigned bits = boost::multiprecision::msb(x) + 1;
    Int r = Int(1) << (bits / k + 1);
    while (true) {
        Int next = ((k - 1) * r + x / int_pow(r, k - 1)) / k;
        if (next >= r) break;
        r = next;
    }
    while (int_pow(r, k) > x) --r;
    while (int_pow(r + 1, k) <= x) ++r;
    return r;
}

/** Rational lower bound of x^(p/q) for x > 0, within 2^-bits. */
inline Rat scaled_root_lower(const Rat& x, long p, long q, unsigned bits) {
    if (x <= 0) throw error(errc::invalid_input, "power of nonpositive base");
    if (q < 1) throw error(errc::invalid_input, "power denominator must be >= 1");
    Rat y = rat_pow(x, p);
    Int scaled = floor_rat(y * rat_pow(Rat(Int(1) << bits), q));
    return Rat(kth_root_floor(scaled, static_cast<unsigned>(q)), Int(1) << bits);
}

/** Rational upper bound of x^(p/q) for x > 0, within 2^-bits. */
inline Rat scaled_root_upper(const Rat& x, long p, long q, unsigned bits) {
    if (x <= 0) throw error(errc::invalid_input, "power of nonpositive base");
    if (q < 1) throw error(errc::invalid_input, "power denominator must be >= 1");
    Rat y = rat_pow(x, p);
    Int scaled = ceil_rat(y * rat_pow(Rat(Int(1) << bits), q));
    return Rat(kth_root_floor(scaled, static_cast<unsigned>(q)) + 1, Int(1) << bits);
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/** Parses "-3", "7/5" or "1.25" into an exact rational. */
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw error(errc::invalid_input, "empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int n(text.substr(0, slash));
            Int d(text.substr(slash + 1));
            if (d == 0) throw error(errc::invalid_input, "zero denominator");
            return Rat(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rat(Int(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw error(errc::invalid_input, "bad rational literal: " + text);
        return Rat(Int(digits), int_pow(10, frac));
    } catch (const std::runtime_error&) {
        throw error(errc::invalid_input, "bad rational literal: " + text);
    }
}

/** Fixed-point decimal rendering, round half away from zero. */
inline std::string rat_to_decimal(const Rat& x, unsigned digits) {
    Int scale = int_pow(10, digits);
    Int twice = floor_rat(Rat(num(x) * scale * 2, den(x)));
    Int scaled = (twice >= 0) ? Int((twice + 1) / 2) : Int(-((-twice + 1) / 2));
    bool neg = scaled < 0;
    Int mag = neg ? Int(-scaled) : scaled;
    std::string s = mag.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

} // namespace algint
