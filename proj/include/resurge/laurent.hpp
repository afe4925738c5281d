#pragma once

#include <map>

#include "resurge/ring.hpp"

namespace resurge {

// Laurent polynomial over a ring R: finitely many integer exponents, no
// stored zero coefficient. The ordered map keeps iteration deterministic.
template <class R>
struct Laurent {
    std::map<long, R> c; // exponent -> coefficient

    Laurent() = default;
    static Laurent monomial(long e, const R& a) {
        Laurent l;
        if (!ring_is_zero(a)) l.c.emplace(e, a);
        return l;
    }
    static Laurent constant(const R& a) { return monomial(0, a); }

    bool is_zero() const { return c.empty(); }

    void set(long e, const R& a) {
        if (ring_is_zero(a)) c.erase(e);
        else c[e] = a;
    }
    void add(long e, const R& a) {
        auto it = c.find(e);
        if (it == c.end()) {
            if (!ring_is_zero(a)) c.emplace(e, a);
        } else {
            it->second = it->second + a;
            if (ring_is_zero(it->second)) c.erase(it);
        }
    }
    R coeff(long e) const {
        auto it = c.find(e);
        return it == c.end() ? ring_zero<R>() : it->second;
    }

    long valuation() const {
        if (c.empty()) fail(ErrorKind::Domain, "valuation of the zero Laurent polynomial");
        return c.begin()->first;
    }
    long degree() const {
        if (c.empty()) fail(ErrorKind::Domain, "degree of the zero Laurent polynomial");
        return c.rbegin()->first;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, v] : b.c) r.add(e, v);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, v] : b.c) r.add(e, ring_zero<R>() - v);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, v] : c) r.c.emplace(e, ring_zero<R>() - v);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, va] : a.c)
            for (const auto& [eb, vb] : b.c)
                r.add(ea + eb, va * vb);
        return r;
    }
    friend Laurent operator*(const R& s, const Laurent& a) {
        Laurent r;
        for (const auto& [e, v] : a.c) r.add(e, s * v);
        return r;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }

    // multiply by x^k
    Laurent shifted(long k) const {
        Laurent r;
        for (const auto& [e, v] : c) r.c.emplace(e + k, v);
        return r;
    }
    // substitute x -> x^m (m >= 1)
    Laurent exponents_scaled(long m) const {
        Laurent r;
        for (const auto& [e, v] : c) r.c.emplace(e * m, v);
        return r;
    }
    // substitute x -> 1/x
    Laurent exponents_negated() const {
        Laurent r;
        for (const auto& [e, v] : c) r.c.emplace(-e, v);
        return r;
    }
    // theta acting on the polynomial itself: x d/dx (c x^e) = e c x^e
    Laurent theta_applied() const {
        Laurent r;
        for (const auto& [e, v] : c) r.add(e, from_rational<R>(Rational(e)) * v);
        return r;
    }

    template <class T, class F>
    Laurent<T> map(F&& conv) const {
        Laurent<T> r;
        for (const auto& [e, v] : c) r.add(e, conv(v));
        return r;
    }
};

using LaurentQ = Laurent<Rational>;

} // namespace resurge
