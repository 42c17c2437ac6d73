#pragma once

// Exact arithmetic in Q and in the golden field Q(tau), tau^2 = tau + 1.
// Every root coordinate in this library is a Golden value; floating point
// appears only at the projection boundary.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxfold {

using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Element a + b*tau of Q(tau). Canonical: mpq components are always reduced,
// so componentwise equality is value equality and to_string() is a stable key.
struct Golden {
    Rational a;
    Rational b;

    Golden() : a(0), b(0) {}
    Golden(long v) : a(v), b(0) {}  // NOLINT: implicit by design
    Golden(Rational ra) : a(std::move(ra)), b(0) {}
    Golden(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static Golden tau() { return Golden(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    Golden operator-() const { return Golden(-a, -b); }

    friend Golden operator+(const Golden& x, const Golden& y) {
        return Golden(x.a + y.a, x.b + y.b);
    }
    friend Golden operator-(const Golden& x, const Golden& y) {
        return Golden(x.a - y.a, x.b - y.b);
    }
    // (a1 + b1 t)(a2 + b2 t) with t^2 = t + 1.
    friend Golden operator*(const Golden& x, const Golden& y) {
        if (x.b == 0) {
            if (x.a == 0) return Golden();
            return Golden(x.a * y.a, x.a * y.b);
        }
        if (y.b == 0) {
            if (y.a == 0) return Golden();
            return Golden(x.a * y.a, x.b * y.a);
        }
        Rational bb = x.b * y.b;
        return Golden(x.a * y.a + bb, x.a * y.b + x.b * y.a + bb);
    }
    Golden& operator+=(const Golden& y) { a += y.a; b += y.b; return *this; }
    Golden& operator-=(const Golden& y) { a -= y.a; b -= y.b; return *this; }
    Golden& operator*=(const Golden& y) { *this = *this * y; return *this; }

    friend bool operator==(const Golden& x, const Golden& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Golden& x, const Golden& y) { return !(x == y); }
};

// Field norm x * conj(x) = a^2 + a b - b^2, rational.
inline Rational field_norm(const Golden& x) {
    return x.a * x.a + x.a * x.b - x.b * x.b;
}

// tau -> 1 - tau; the nontrivial automorphism of Q(tau), fixes Q.
inline Golden galois_conjugate(const Golden& x) {
    return Golden(x.a + x.b, -x.b);
}

inline Golden golden_inverse(const Golden& x) {
    if (x.is_zero()) throw std::domain_error("golden_inverse of zero");
    Rational n = field_norm(x);
    Golden c = galois_conjugate(x);
    return Golden(c.a / n, c.b / n);
}

inline Golden operator/(const Golden& x, const Golden& y) {
    return x * golden_inverse(y);
}

inline Golden golden_pow(Golden base, unsigned e) {
    Golden r(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// Real embedding with tau = (1+sqrt 5)/2, good to at least `digits`
// decimal digits (capped by the double return type at ~15).
double embed_real(const Golden& x, unsigned digits = 15);

// Serialization "a/b+c/d*t", e.g. "1/2+3/2*t", "-1/2-3/2*t".
// print/parse round-trip exactly; the printed form doubles as a hash key.
std::string to_string(const Golden& x);
Golden golden_from_string(const std::string& s);

}  // namespace coxfold
