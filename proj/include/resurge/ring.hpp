#pragma once

#include "resurge/complexnum.hpp"
#include "resurge/numeric.hpp"

namespace resurge {

// The algebra containers (Poly, Laurent, ThetaOp, PowerSeries) are generic
// over their coefficient ring. A ring type needs +, -, *, ==, and a
// scalar_ops specialization; fields additionally support /.

template <class R>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct scalar_ops<BigFloat> {
    static BigFloat zero() { return BigFloat(0); }
    static BigFloat one() { return BigFloat(1); }
    static bool is_zero(const BigFloat& a) { return a.is_zero(); }
    static BigFloat from_rational(const Rational& q) { return BigFloat(q); }
};

template <>
struct scalar_ops<Complex> {
    static Complex zero() { return Complex(0); }
    static Complex one() { return Complex(1); }
    static bool is_zero(const Complex& a) { return a.re.is_zero() && a.im.is_zero(); }
    static Complex from_rational(const Rational& q) { return Complex(q); }
};

template <class R>
R ring_zero() { return scalar_ops<R>::zero(); }

template <class R>
R ring_one() { return scalar_ops<R>::one(); }

template <class R>
bool ring_is_zero(const R& a) { return scalar_ops<R>::is_zero(a); }

template <class R>
R from_rational(const Rational& q) { return scalar_ops<R>::from_rational(q); }

template <class R>
R ring_pow(R base, long n) {
    R r = ring_one<R>();
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

} // namespace resurge
