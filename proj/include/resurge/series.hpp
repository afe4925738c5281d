#pragma once

#include <map>
#include <vector>

#include "resurge/ring.hpp"

namespace resurge {

// Truncated ramified formal series  x^beta * sum_{n=0}^{N} a_n x^(n/ram).
// A single ramification denominator per series keeps every recurrence
// integer-indexed. a[0] != 0 unless the series is identically zero.
template <class R>
struct PowerSeries {
    Rational beta = 0;
    long ram = 1;
    std::vector<R> a;

    PowerSeries() = default;
    PowerSeries(Rational beta_, long ram_, std::vector<R> coeffs)
        : beta(std::move(beta_)), ram(ram_), a(std::move(coeffs)) {}

    static PowerSeries one(long order) {
        std::vector<R> v(static_cast<size_t>(order) + 1, ring_zero<R>());
        v[0] = ring_one<R>();
        return PowerSeries(0, 1, std::move(v));
    }

    long order() const { return static_cast<long>(a.size()) - 1; }
    bool is_zero() const {
        for (const auto& x : a)
            if (!ring_is_zero(x)) return false;
        return true;
    }

    R coeff(long n) const {
        if (n < 0 || n > order()) return ring_zero<R>();
        return a[static_cast<size_t>(n)];
    }

    // exponent of slot n
    Rational exponent(long n) const { return beta + Rational(n, ram); }

    // Move leading zeros into beta so that a[0] != 0 (no-op on the zero series).
    void rebase() {
        size_t k = 0;
        while (k < a.size() && ring_is_zero(a[k])) ++k;
        if (k == a.size()) { beta = 0; a.assign(1, ring_zero<R>()); return; }
        if (k > 0) {
            beta += Rational(static_cast<long>(k), ram);
            a.erase(a.begin(), a.begin() + static_cast<long>(k));
        }
    }

    PowerSeries truncated(long N) const {
        PowerSeries r = *this;
        if (r.order() > N) r.a.resize(static_cast<size_t>(N) + 1);
        return r;
    }

    template <class T, class F>
    PowerSeries<T> map(F&& conv) const {
        std::vector<T> v;
        v.reserve(a.size());
        for (const auto& x : a) v.push_back(conv(x));
        return PowerSeries<T>(beta, ram, std::move(v));
    }

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) {
        return f.beta == g.beta && f.ram == g.ram && f.a == g.a;
    }
};

// Cauchy product to the shorter truncation order; same beta convention as a
// plain multiplication of the representatives.
template <class R>
PowerSeries<R> series_mul(const PowerSeries<R>& f, const PowerSeries<R>& g) {
    if (f.ram != g.ram) fail(ErrorKind::Domain, "series ramifications differ");
    long N = std::min(f.order(), g.order());
    std::vector<R> v(static_cast<size_t>(N) + 1, ring_zero<R>());
    for (long i = 0; i <= N; ++i) {
        if (ring_is_zero(f.coeff(i))) continue;
        for (long j = 0; i + j <= N; ++j)
            v[static_cast<size_t>(i + j)] = v[static_cast<size_t>(i + j)] + f.coeff(i) * g.coeff(j);
    }
    return PowerSeries<R>(f.beta + g.beta, f.ram, std::move(v));
}

// Formal logarithm of f = 1 + g. Requires beta = 0 and a0 = 1; exact over a
// field (division only by integers).
template <class R>
PowerSeries<R> series_log(const PowerSeries<R>& f) {
    if (!(f.beta == 0)) fail(ErrorKind::Domain, "series_log needs base exponent 0");
    if (!(f.coeff(0) == ring_one<R>()))
        fail(ErrorKind::Normalization, "series_log needs constant term 1");
    long N = f.order();
    std::vector<R> w(static_cast<size_t>(N) + 1, ring_zero<R>());
    // n w_n = n g_n - sum_{k=1}^{n-1} k w_k g_{n-k}
    for (long n = 1; n <= N; ++n) {
        R acc = from_rational<R>(Rational(n)) * f.coeff(n);
        for (long k = 1; k < n; ++k)
            acc = acc - from_rational<R>(Rational(k)) * w[static_cast<size_t>(k)] * f.coeff(n - k);
        w[static_cast<size_t>(n)] = acc / from_rational<R>(Rational(n));
    }
    return PowerSeries<R>(0, f.ram, std::move(w));
}

// Formal exponential of w with w_0 = 0.
template <class R>
PowerSeries<R> series_exp(const PowerSeries<R>& w) {
    if (!(w.beta == 0)) fail(ErrorKind::Domain, "series_exp needs base exponent 0");
    if (!ring_is_zero(w.coeff(0)))
        fail(ErrorKind::Normalization, "series_exp needs constant term 0");
    long N = w.order();
    std::vector<R> h(static_cast<size_t>(N) + 1, ring_zero<R>());
    h[0] = ring_one<R>();
    // n h_n = sum_{k=1}^{n} k w_k h_{n-k}
    for (long n = 1; n <= N; ++n) {
        R acc = ring_zero<R>();
        for (long k = 1; k <= n; ++k)
            acc = acc + from_rational<R>(Rational(k)) * w.coeff(k) * h[static_cast<size_t>(n - k)];
        h[static_cast<size_t>(n)] = acc / from_rational<R>(Rational(n));
    }
    return PowerSeries<R>(0, w.ram, std::move(h));
}

} // namespace resurge
