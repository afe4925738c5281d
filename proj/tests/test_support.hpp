#pragma once

// Shared helpers for the test suites: a tiny deterministic generator for
// random exact objects, and a few fixture operators used across files.

#include "resurge/laurent.hpp"
#include "resurge/op_parser.hpp"
#include "resurge/series.hpp"
#include "resurge/theta_op.hpp"

namespace testsupport {

using namespace resurge;

struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        // splitmix64
        unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rational(long max_abs = 9, long max_den = 7) {
        long num = range(-max_abs, max_abs);
        long den = range(1, max_den);
        return Rational(num, den);
    }
    Rational nonzero_rational(long max_abs = 9, long max_den = 7) {
        Rational q = rational(max_abs, max_den);
        while (q.is_zero()) q = rational(max_abs, max_den);
        return q;
    }
    LaurentQ laurent(long min_exp = -2, long max_exp = 2, int terms = 3) {
        LaurentQ l;
        for (int t = 0; t < terms; ++t) l.add(range(min_exp, max_exp), rational());
        return l;
    }
    ThetaOpQ theta_op(long max_order = 3) {
        ThetaOpQ h;
        h.c.assign(static_cast<size_t>(range(1, max_order)) + 1, LaurentQ{});
        for (auto& l : h.c) l = laurent();
        if (h.c.back().is_zero()) h.c.back() = LaurentQ::monomial(0, Rational(1));
        h.normalize();
        return h;
    }
    PowerSeries<Rational> series_unit_constant(long order) {
        std::vector<Rational> a(static_cast<size_t>(order) + 1);
        a[0] = 1;
        for (size_t i = 1; i < a.size(); ++i) a[i] = rational();
        return PowerSeries<Rational>(0, 1, std::move(a));
    }
};

inline ThetaOpQ euler_op() { return parse_theta_op("x*theta^2 + theta - 1"); }
inline ThetaOpQ h2_op() { return parse_theta_op("16*theta^2 + 16*theta + x^-1*theta + 3"); }

} // namespace testsupport
