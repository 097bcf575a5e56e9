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

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algint/integers.hpp"

namespace algint {

/** IntPolynomial: integer-coefficient polynomial, coefficients stored
 *  lowest power first. The empty coefficient list is the zero polynomial;
 *  a nonzero polynomial always has a nonzero top coefficient. */
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw error(errc::invalid_input, "degree of zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    const std::vector<Int>& coeffs() const { return c_; }

    Int leading() const {
        if (is_zero()) throw error(errc::invalid_input, "leading of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    Int height() const {
        if (is_zero()) throw error(errc::invalid_input, "height of zero polynomial");
        Int h = 0;
        for (const Int& a : c_)
            if (abs(a) > h) h = abs(a);
        return h;
    }

    Rat evaluate(const Rat& x) const {
        Rat v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    Int evaluate_int(const Int& x) const {
        Int v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    // sign of P(a/b) without forming the rational: sum a_i a^i b^(n-i), b >= 1
    int sign_at(const Int& a, const Int& b) const {
        if (is_zero()) return 0;
        Int v = 0, bp = 1;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            v = v * a + *it * bp;
            bp *= b;
        }
        return v.sign();
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return IntPolynomial();
        std::vector<Int> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Int(k);
        return IntPolynomial(std::move(d));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ' ';
            s += c_[i].str();
        }
        return s;
    }

    /** Strict parse of the canonical space-separated form; rejects a zero
     *  top coefficient so that parse/print round-trips bit-exactly. */
    static IntPolynomial from_string(const std::string& text) {
        std::istringstream in(text);
        std::vector<Int> c;
        std::string tok;
        while (in >> tok) {
            try {
                c.emplace_back(tok);
            } catch (const std::runtime_error&) {
                throw error(errc::invalid_input, "bad coefficient: " + tok);
            }
        }
        if (c.empty()) throw error(errc::invalid_input, "empty polynomial text");
        if (c.size() == 1 && c[0] == 0) return IntPolynomial();
        if (c.back() == 0) throw error(errc::invalid_input, "zero leading coefficient");
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

private:
    std::vector<Int> c_;
};

inline IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPolynomial(std::move(c));
}

inline IntPolynomial scale(const IntPolynomial& a, const Int& k) {
    std::vector<Int> c = a.coeffs();
    for (Int& x : c) x *= k;
    return IntPolynomial(std::move(c));
}

inline IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
}

inline Int content(const IntPolynomial& a) {
    Int g = 0;
    for (const Int& x : a.coeffs()) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline IntPolynomial primitive_part(const IntPolynomial& a) {
    if (a.is_zero()) return a;
    Int g = content(a);
    std::vector<Int> c = a.coeffs();
    for (Int& x : c) x /= g;
    if (c.back() < 0)
        for (Int& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

/** Exact quotient over the integers, or nullopt when b does not divide a. */
inline std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw error(errc::invalid_input, "division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    Rat lb(b.leading());
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat q = rem[k + db] / lb;
        quo[k] = q;
        if (q == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= q * Rat(b.coeff(i));
    }
    for (const Rat& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<Int> qi(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        if (den(quo[i]) != 1) return std::nullopt;
        qi[i] = num(quo[i]);
    }
    return IntPolynomial(std::move(qi));
}

// lc(b)^(da-db+1) * a mod b, the classical pseudo-remainder
inline IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw error(errc::invalid_input, "pseudo-remainder by zero");
    IntPolynomial r = a;
    int db = b.degree();
    Int lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int lr = r.leading();
        // r <- lb*r - lr * t^k * b
        std::vector<Int> c(r.coeffs().size(), Int(0));
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i] * lb;
        for (int i = 0; i <= db; ++i) c[k + i] -= lr * b.coeff(i);
        r = IntPolynomial(std::move(c));
    }
    return r;
}

/** Primitive-PRS gcd, sign-normalized to a positive leading coefficient. */
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_rem(a, b));
        a = b;
        b = r;
        if (!b.is_zero() && a.degree() < b.degree()) std::swap(a, b);
    }
    return a;
}

inline bool is_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) throw error(errc::invalid_input, "squarefree test of zero");
    if (p.degree() == 0) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

/** Prime certificate for irreducibility over the rationals: p does not
 *  divide the leading coefficient, p divides every other coefficient,
 *  p^2 does not divide the constant term. */
inline bool eisenstein_check(const IntPolynomial& poly, const Int& p) {
    if (poly.is_zero() || poly.degree() < 1)
        throw error(errc::invalid_input, "eisenstein needs degree >= 1");
    if (!is_prime(p)) throw error(errc::invalid_input, "eisenstein modulus must be prime");
    int n = poly.degree();
    if (poly.coeff(n) % p == 0) return false;
    for (int i = 0; i < n; ++i)
        if (poly.coeff(i) % p != 0) return false;
    if (poly.coeff(0) % (p * p) == 0) return false;
    return true;
}

namespace detail {

// positive divisors of |x|, x != 0
inline std::vector<Int> divisors(const Int& x) {
    Int a = abs(x);
    std::vector<Int> low, high;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        low.push_back(d);
        if (d * d != a) high.push_back(a / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline bool has_integer_root(const IntPolynomial& p) {
    // rational roots of a monic integer polynomial are integers dividing a0
    if (p.coeff(0) == 0) return true;
    for (const Int& d : divisors(p.coeff(0))) {
        if (p.evaluate_int(d) == 0 || p.evaluate_int(-d) == 0) return true;
    }
    return false;
}

// monic quadratic factor of a monic quartic: constants multiply to a0,
// linear parts solve z^2 - a3 z + (a2 - c - c2)
inline bool quartic_has_quadratic_factor(const IntPolynomial& p) {
    Int a0 = p.coeff(0), a1 = p.coeff(1), a2 = p.coeff(2), a3 = p.coeff(3);
    for (const Int& d : divisors(a0)) {
        for (int s = 0; s < 2; ++s) {
            Int c = s ? -d : d;
            Int c2 = a0 / c;
            Int disc = a3 * a3 - 4 * (a2 - c - c2);
            if (disc < 0) continue;
            Int r = boost::multiprecision::sqrt(disc);
            if (r * r != disc) continue;
            for (int t = 0; t < 2; ++t) {
                Int twice_b = t ? Int(a3 - r) : Int(a3 + r);
                if (twice_b % 2 != 0) continue;
                Int b = twice_b / 2, b2 = a3 - b;
                if (b * c2 + b2 * c == a1) return true;
            }
        }
    }
    return false;
}

// monic quadratic factor of a monic quintic: for each constant pair the
// quadratic's linear coefficient solves a cubic; its integer roots divide
// the cubic's constant term
inline bool quintic_has_quadratic_factor(const IntPolynomial& p) {
    Int a0 = p.coeff(0), a1 = p.coeff(1), a2 = p.coeff(2), a3 = p.coeff(3), a4 = p.coeff(4);
    auto check = [&](const Int& c, const Int& g, const Int& b) {
        Int e = a4 - b;
        Int f = a3 - c - b * e;
        return a2 == g + b * f + c * e && a1 == b * g + c * f;
    };
    for (const Int& d : divisors(a0)) {
        for (int s = 0; s < 2; ++s) {
            Int c = s ? -d : d;
            Int g = a0 / c;
            Int k = g + c * a4 - a2; // constant term of the cubic in b
            if (k == 0) {
                if (check(c, g, Int(0))) return true;
                continue;
            }
            for (const Int& bd : divisors(k)) {
                if (check(c, g, bd) || check(c, g, -bd)) return true;
            }
        }
    }
    return false;
}

} // namespace detail

/** Irreducibility over the rationals for monic polynomials of degree 1..5,
 *  by exact search for monic integer factors. Constant factor candidates
 *  necessarily divide the constant term and sit inside the root-product
 *  bound, so the divisor scan is exhaustive. */
inline bool is_irreducible(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1 || !p.is_monic())
        throw error(errc::invalid_input, "irreducibility test needs a monic polynomial of degree >= 1");
    int n = p.degree();
    if (n > 5) throw error(errc::unsupported_degree, "degree must be <= 5");
    if (n == 1) return true;
    if (p.coeff(0) == 0) return false; // t divides
    if (detail::has_integer_root(p)) return false;
    if (n == 4 && detail::quartic_has_quadratic_factor(p)) return false;
    if (n == 5 && detail::quintic_has_quadratic_factor(p)) return false;
    return true;
}

/** n|P(x)|/|P'(x)|: an upper bound on the distance from x to the nearest
 *  root of P whenever P has a real root. Exact zero at roots of P. */
inline Rat root_distance_bound(const IntPolynomial& p, const Rat& x) {
    if (p.is_zero() || p.degree() < 1)
        throw error(errc::invalid_input, "root distance bound needs degree >= 1");
    Rat v = p.evaluate(x);
    if (v == 0) return Rat(0);
    Rat d = p.derivative().evaluate(x);
    if (d == 0) throw error(errc::invalid_input, "derivative vanishes away from a root");
    return Rat(p.degree()) * abs(v) / abs(d);
}

/** (n+1) 2^n H(P) / |lead|: bounds |product of any set of distinct roots|. */
inline Rat root_product_bound(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw error(errc::invalid_input, "root product bound needs degree >= 1");
    int n = p.degree();
    return Rat(Int(n + 1) * int_pow(2, n) * p.height()) / Rat(abs(p.leading()));
}

/** rho_n(x) = ((|x|+1)^(n+1) - 1) / |x|, the local growth factor. */
inline Rat rho(int n, const Rat& x) {
    if (n < 1) throw error(errc::invalid_input, "rho needs n >= 1");
    if (x == 0) throw error(errc::invalid_input, "rho undefined at 0");
    Rat a = abs(x);
    return (rat_pow(a + 1, n + 1) - 1) / a;
}

/** 2^n rho_n(d) Q width: every monic P with degree n, height <= Q and a
 *  root in the interval of midpoint d and the given length satisfies
 *  |P(d)| below this value (necessary-condition filter). */
inline Rat taylor_midpoint_bound(int n, const Rat& d, const Int& Q, const Rat& width) {
    if (Q < 1) throw error(errc::invalid_input, "Q must be >= 1");
    if (width < 0) throw error(errc::invalid_input, "width must be >= 0");
    return Rat(int_pow(2, n)) * rho(n, d) * Rat(Q) * width;
}

} // namespace algint
