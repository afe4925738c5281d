#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "resurge/ring.hpp"

namespace resurge {

// Dense univariate polynomial over a ring R, trailing zeros trimmed.
// Houses polynomials in the twist symbol u, indicial polynomials in beta,
// Touchard polynomials, and Pade numerators/denominators over Complex.
template <class R>
struct Poly {
    std::vector<R> c; // c[i] * u^i

    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
    static Poly monomial(long deg, const R& a) {
        std::vector<R> v(static_cast<size_t>(deg) + 1, ring_zero<R>());
        v.back() = a;
        return Poly(std::move(v));
    }

    void trim() {
        while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero

    const R& operator[](size_t i) const { return c[i]; }
    R coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return ring_zero<R>();
        return c[static_cast<size_t>(i)];
    }

    // valuation in u: smallest index with nonzero coefficient (degree+1 trick
    // not needed; zero polynomial reports -1)
    long valuation() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (!ring_is_zero(c[i])) return static_cast<long>(i);
        return -1;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c.size(), b.c.size()), ring_zero<R>());
        for (size_t i = 0; i < a.c.size(); ++i) v[i] = v[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) v[i] = v[i] + b.c[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c.size(), b.c.size()), ring_zero<R>());
        for (size_t i = 0; i < a.c.size(); ++i) v[i] = v[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) v[i] = v[i] - b.c[i];
        return Poly(std::move(v));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = ring_zero<R>() - x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> v(a.c.size() + b.c.size() - 1, ring_zero<R>());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (ring_is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                v[i + j] = v[i + j] + a.c[i] * b.c[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const R& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = s * x;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    R eval(const R& x) const {
        R acc = ring_zero<R>();
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    // Horner with a coefficient converter, e.g. Rational -> Complex
    template <class T, class F>
    T eval_mapped(const T& x, F&& conv) const {
        T acc = ring_zero<T>();
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + conv(c[i]);
        return acc;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<R> v(c.size() - 1, ring_zero<R>());
        for (size_t i = 1; i < c.size(); ++i)
            v[i - 1] = from_rational<R>(Rational(static_cast<long>(i))) * c[i];
        return Poly(std::move(v));
    }

    // divide out u^k (caller guarantees valuation >= k)
    Poly shift_down(long k) const {
        if (k <= 0) return *this;
        if (static_cast<long>(c.size()) <= k) return Poly();
        return Poly(std::vector<R>(c.begin() + k, c.end()));
    }

    template <class T, class F>
    Poly<T> map(F&& conv) const {
        std::vector<T> v;
        v.reserve(c.size());
        for (const auto& x : c) v.push_back(conv(x));
        return Poly<T>(std::move(v));
    }
};

using PolyQ = Poly<Rational>;   // exact polynomials in one symbol over Q
using PolyC = Poly<Complex>;

template <class R>
struct scalar_ops<Poly<R>> {
    static Poly<R> zero() { return Poly<R>(); }
    static Poly<R> one() { return Poly<R>::constant(ring_one<R>()); }
    static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
    static Poly<R> from_rational(const Rational& q) {
        return Poly<R>::constant(resurge::from_rational<R>(q));
    }
};

// ---------------------------------------------------------------------------
// Exact routines over Q

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    auto make_monic = [](PolyQ& p) {
        if (!p.is_zero()) {
            Rational inv = Rational(1) / p.c.back();
            for (auto& x : p.c) x *= inv;
        }
    };
    make_monic(a);
    make_monic(b);
    while (!b.is_zero()) {
        // a mod b by long division
        PolyQ r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational f = r.c.back() / b.c.back();
            long shift = r.degree() - b.degree();
            for (long i = 0; i <= b.degree(); ++i)
                r.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
            r.trim();
        }
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

inline bool poly_squarefree(const PolyQ& p) {
    PolyQ g = poly_gcd(p, p.derivative());
    return g.degree() <= 0;
}

// All rational roots of an exact polynomial, found by the rational root
// theorem on the denominator-cleared form and verified by exact evaluation.
// Returns each root once (multiplicities stripped via synthetic division).
inline std::vector<Rational> rational_roots(PolyQ p) {
    std::vector<Rational> roots;
    if (p.is_zero()) return roots;
    // strip u = 0 roots
    long val = p.valuation();
    if (val > 0) {
        roots.push_back(Rational(0));
        p = p.shift_down(val);
    }
    if (p.degree() < 1) return roots;

    // clear denominators
    Int lcm = 1;
    for (const auto& q : p.c) {
        Int d(denominator(q));
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> ic;
    ic.reserve(p.c.size());
    for (const auto& q : p.c) ic.push_back(Int(numerator(q)) * (lcm / Int(denominator(q))));

    Int a0 = abs(ic.front()), an = abs(ic.back());
    // divisor enumeration is only sensible for moderate constants
    if (a0 > Int(1000000000000LL) || an > Int(1000000000000LL)) return roots;

    auto divisors = [](Int n) {
        std::vector<Int> d;
        for (Int i = 1; i * i <= n; ++i) {
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        }
        return d;
    };
    auto dn = divisors(a0), dd = divisors(an);
    for (const Int& num : dn) {
        for (const Int& den : dd) {
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (p.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Numeric roots over Complex: Durand-Kerner simultaneous iteration with a
// Newton polish. Deterministic (fixed starting configuration).

inline std::vector<Complex> poly_roots(const PolyC& p_in, int max_iter = 400) {
    PolyC p = p_in;
    long n = p.degree();
    if (n < 1) return {};
    // monic normalize
    Complex lead = p.c.back();
    for (auto& x : p.c) x /= lead;

    BigFloat radius = 0;
    for (long i = 0; i < n; ++i) radius = std::max(radius, abs(p.c[static_cast<size_t>(i)]));
    radius = 1 + radius;
    BigFloat two_pi = 2 * const_pi();

    std::vector<Complex> z(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = polar(radius, two_pi * i / n + BigFloat("0.37"));

    BigFloat tol = precision_eps(24) * radius;
    for (int it = 0; it < max_iter; ++it) {
        BigFloat worst = 0;
        for (long i = 0; i < n; ++i) {
            Complex num = p.eval(z[static_cast<size_t>(i)]);
            Complex den(1);
            for (long j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            Complex step = num / den;
            z[static_cast<size_t>(i)] -= step;
            worst = std::max(worst, abs(step));
        }
        if (worst < tol) break;
    }
    // polish
    PolyC dp = p.derivative();
    for (auto& r : z) {
        for (int k = 0; k < 4; ++k) {
            Complex d = dp.eval(r);
            if (scalar_ops<Complex>::is_zero(d)) break;
            r -= p.eval(r) / d;
        }
    }
    return z;
}

} // namespace resurge
