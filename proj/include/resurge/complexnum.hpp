#pragma once

#include <string>

#include "resurge/numeric.hpp"

namespace resurge {

// Complex numbers over BigFloat. std::complex is only specified for the
// builtin floating types, so we carry our own small value type with the
// handful of transcendentals the Borel-plane numerics need.
struct Complex {
    BigFloat re, im;

    Complex() : re(0), im(0) {}
    Complex(const BigFloat& r) : re(r), im(0) {}
    Complex(const BigFloat& r, const BigFloat& i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    explicit Complex(const Rational& q) : re(q), im(0) {}

    bool is_real() const { return im.is_zero(); }

    Complex operator-() const { return Complex(-re, -im); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        BigFloat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        BigFloat d = o.re * o.re + o.im * o.im;
        BigFloat r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    std::string str(unsigned digits = 30) const {
        return "(" + re.str(digits) + ", " + im.str(digits) + ")";
    }
};

inline BigFloat abs(const Complex& z) { return hypot(z.re, z.im); }
inline BigFloat norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat arg(const Complex& z) { return atan2(z.im, z.re); }
inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

inline Complex polar(const BigFloat& r, const BigFloat& theta) {
    return Complex(r * cos(theta), r * sin(theta));
}

inline Complex exp(const Complex& z) {
    return polar(exp(z.re), z.im);
}

inline Complex log(const Complex& z) {
    return Complex(log(abs(z)), arg(z));
}

inline Complex sqrt(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
    return polar(sqrt(abs(z)), arg(z) / 2);
}

inline Complex pow(const Complex& z, long e) {
    if (e == 0) return Complex(1);
    Complex base = z;
    long n = e;
    if (e < 0) { base = Complex(1) / z; n = -e; }
    Complex r(1);
    Complex p = base;
    while (n > 0) {
        if (n & 1) r *= p;
        p *= p;
        n >>= 1;
    }
    return r;
}

// principal branch of z^(p/q)
inline Complex pow(const Complex& z, const Rational& e) {
    if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
    BigFloat t = BigFloat(e);
    return polar(pow(abs(z), t), arg(z) * t);
}

// principal n-th root times the k-th root of unity
inline Complex nth_root(const Complex& z, long n, long k = 0) {
    if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
    BigFloat r = pow(abs(z), BigFloat(1) / n);
    BigFloat theta = (arg(z) + 2 * k * const_pi()) / n;
    return polar(r, theta);
}

} // namespace resurge
