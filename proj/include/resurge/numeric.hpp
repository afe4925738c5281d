#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "resurge/errors.hpp"

namespace resurge {

namespace mp = boost::multiprecision;

// Exact integers and rationals (GMP) and variable-precision floats (MPFR).
// Expression templates are off: plain value semantics everywhere.
using Int      = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using BigFloat = mp::number<mp::mpfr_float_backend<0, mp::allocate_dynamic>, mp::et_off>;

// ---------------------------------------------------------------------------
// Working precision. One global setting, fixed before any BigFloat is made;
// all values then share it, so arithmetic can never silently downgrade.

inline unsigned& detail_precision_bits() {
    static unsigned bits = 256;
    return bits;
}

inline void set_precision_bits(unsigned bits) {
    bits = std::max(64u, bits);
    detail_precision_bits() = bits;
    // boost speaks decimal digits; round up so the mantissa has >= bits bits
    unsigned digits10 = static_cast<unsigned>(bits * 0.30102999566398119521) + 2;
    BigFloat::default_precision(digits10);
}

inline unsigned precision_bits() { return detail_precision_bits(); }

// 2^(-bits + slack); the resolution floor of the current precision
inline BigFloat precision_eps(int slack = 0) {
    return ldexp(BigFloat(1), -static_cast<int>(precision_bits()) + slack);
}

inline BigFloat const_pi() {
    return 4 * atan(BigFloat(1));
}

// ---------------------------------------------------------------------------
// Small exact helpers

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? q : Rational(1) / q;
    long n = e > 0 ? e : -e;
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= base;
    return r;
}

// true and sets out when q is a perfect square of a rational (q >= 0)
inline bool exact_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    if (q == 0) { out = 0; return true; }
    Int num(numerator(q)), den(denominator(q));
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    out = Rational(sn, sd);
    return true;
}

inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
    }
}

// fixed significant-digit decimal form; deterministic for reports
inline std::string bigfloat_str(const BigFloat& x, unsigned digits = 30) {
    return x.str(digits);
}

inline long rational_to_long(const Rational& q) {
    if (denominator(q) != 1) fail(ErrorKind::Domain, "expected an integer, got " + q.str());
    return numerator(q).convert_to<long>();
}

} // namespace resurge
