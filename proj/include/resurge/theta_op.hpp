#pragma once

#include <string>
#include <vector>

#include "resurge/laurent.hpp"
#include "resurge/poly.hpp"
#include "resurge/series.hpp"

namespace resurge {

// Linear differential operator in theta-form:
//
//     H = H_n(x) theta^n + ... + H_1(x) theta + H_0(x),   theta = x d/dx,
//
// with Laurent-polynomial coefficients over one ring. theta-form is the
// canonical representation everywhere; d/dx-form only appears inside the
// Borel transform and for printing.
template <class R>
struct ThetaOp {
    std::vector<Laurent<R>> c; // c[i] = H_i(x)
    std::string var = "x";

    ThetaOp() = default;
    explicit ThetaOp(std::vector<Laurent<R>> coeffs, std::string v = "x")
        : c(std::move(coeffs)), var(std::move(v)) {
        normalize();
    }

    void normalize() {
        while (c.size() > 1 && c.back().is_zero()) c.pop_back();
        if (c.empty()) c.emplace_back();
    }

    long order() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const {
        for (const auto& l : c)
            if (!l.is_zero()) return false;
        return true;
    }

    const Laurent<R>& coeff(long i) const {
        static const Laurent<R> zero{};
        if (i < 0 || i >= static_cast<long>(c.size())) return zero;
        return c[static_cast<size_t>(i)];
    }

    void add_term(long theta_pow, long x_pow, const R& a) {
        if (theta_pow >= static_cast<long>(c.size())) c.resize(static_cast<size_t>(theta_pow) + 1);
        c[static_cast<size_t>(theta_pow)].add(x_pow, a);
    }

    static ThetaOp identity(std::string v = "x") {
        ThetaOp h;
        h.var = std::move(v);
        h.c.assign(1, Laurent<R>::constant(ring_one<R>()));
        return h;
    }
    static ThetaOp theta(std::string v = "x") {
        ThetaOp h;
        h.var = std::move(v);
        h.c.assign(2, Laurent<R>{});
        h.c[1] = Laurent<R>::constant(ring_one<R>());
        return h;
    }

    friend ThetaOp operator+(const ThetaOp& a, const ThetaOp& b) {
        ThetaOp r;
        r.var = a.var;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
            if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
        }
        r.normalize();
        return r;
    }
    friend ThetaOp operator-(const ThetaOp& a, const ThetaOp& b) {
        ThetaOp r;
        r.var = a.var;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
            if (i < b.c.size()) r.c[i] = r.c[i] - b.c[i];
        }
        r.normalize();
        return r;
    }
    friend bool operator==(const ThetaOp& a, const ThetaOp& b) {
        ThetaOp x = a, y = b;
        x.normalize();
        y.normalize();
        return x.c == y.c;
    }

    template <class T, class F>
    ThetaOp<T> map_coeffs(F&& conv) const {
        std::vector<Laurent<T>> v;
        v.reserve(c.size());
        for (const auto& l : c) v.push_back(l.template map<T>(conv));
        return ThetaOp<T>(std::move(v), var);
    }

    // smallest Laurent exponent across all coefficients
    long min_exponent() const {
        bool seen = false;
        long m = 0;
        for (const auto& l : c) {
            if (l.is_zero()) continue;
            long v = l.valuation();
            m = seen ? std::min(m, v) : v;
            seen = true;
        }
        if (!seen) fail(ErrorKind::Domain, "zero operator");
        return m;
    }
    long max_exponent() const {
        bool seen = false;
        long m = 0;
        for (const auto& l : c) {
            if (l.is_zero()) continue;
            long v = l.degree();
            m = seen ? std::max(m, v) : v;
            seen = true;
        }
        if (!seen) fail(ErrorKind::Domain, "zero operator");
        return m;
    }
};

using ThetaOpQ = ThetaOp<Rational>;
using ThetaOpC = ThetaOp<Complex>;
using ThetaOpU = ThetaOp<Poly<Rational>>;

// ---------------------------------------------------------------------------
// Composition primitives. theta o (L .) = L theta + theta(L), so operators
// compose by pushing thetas through the Laurent coefficients.

// theta o A
template <class R>
ThetaOp<R> left_mul_theta(const ThetaOp<R>& a) {
    ThetaOp<R> r;
    r.var = a.var;
    r.c.assign(a.c.size() + 1, Laurent<R>{});
    for (size_t j = 0; j < a.c.size(); ++j) {
        r.c[j] = r.c[j] + a.c[j].theta_applied();
        r.c[j + 1] = r.c[j + 1] + a.c[j];
    }
    r.normalize();
    return r;
}

// L(x) o A  (multiplication operator on the left)
template <class R>
ThetaOp<R> left_mul_laurent(const Laurent<R>& l, const ThetaOp<R>& a) {
    ThetaOp<R> r;
    r.var = a.var;
    r.c.reserve(a.c.size());
    for (const auto& ci : a.c) r.c.push_back(l * ci);
    r.normalize();
    return r;
}

// A o B
template <class R>
ThetaOp<R> compose(const ThetaOp<R>& a, const ThetaOp<R>& b) {
    ThetaOp<R> acc;
    acc.var = b.var;
    ThetaOp<R> pow = b; // theta^i o B, built up iteratively
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i > 0) pow = i == 1 ? left_mul_theta(b) : left_mul_theta(pow);
        const ThetaOp<R>& rhs = (i == 0) ? b : pow;
        if (!a.c[i].is_zero()) acc = acc + left_mul_laurent(a.c[i], rhs);
    }
    acc.normalize();
    return acc;
}

// A o (x^e .): each H_i theta^i becomes H_i x^e (theta + e)^i
template <class R>
ThetaOp<R> compose_right_monomial(const ThetaOp<R>& a, long e) {
    ThetaOp<R> r;
    r.var = a.var;
    r.c.assign(a.c.size(), Laurent<R>{});
    R ee = from_rational<R>(Rational(e));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        Laurent<R> li = a.c[i].shifted(e);
        // (theta + e)^i expanded binomially; theta and the scalar e commute
        for (long j = 0; j <= static_cast<long>(i); ++j) {
            R w = from_rational<R>(Rational(binomial(static_cast<long>(i), j))) *
                  ring_pow(ee, static_cast<long>(i) - j);
            if (ring_is_zero(w)) continue;
            r.c[static_cast<size_t>(j)] = r.c[static_cast<size_t>(j)] + w * li;
        }
    }
    r.normalize();
    return r;
}

// ---------------------------------------------------------------------------
// x^{-beta} H x^{beta}: substitute theta -> theta + beta.
template <class R>
ThetaOp<R> conjugate_power(const ThetaOp<R>& h, const Rational& beta) {
    ThetaOp<R> r;
    r.var = h.var;
    r.c.assign(h.c.size(), Laurent<R>{});
    R b = from_rational<R>(beta);
    for (size_t i = 0; i < h.c.size(); ++i) {
        if (h.c[i].is_zero()) continue;
        for (long j = 0; j <= static_cast<long>(i); ++j) {
            R w = from_rational<R>(Rational(binomial(static_cast<long>(i), j))) *
                  ring_pow(b, static_cast<long>(i) - j);
            if (ring_is_zero(w)) continue;
            r.c[static_cast<size_t>(j)] = r.c[static_cast<size_t>(j)] + w * h.c[i];
        }
    }
    r.normalize();
    return r;
}

// ---------------------------------------------------------------------------
// Exponential twist  H_u = e^{-u/x^q} H e^{u/x^q}  with u a fresh symbol:
// substitute theta -> theta - q u x^{-q}. q must be a positive integer so
// exponents stay integral; ramify first when the slope is fractional.
template <class R>
ThetaOp<Poly<R>> twist_op(const ThetaOp<R>& h, long q) {
    if (q < 1)
        fail(ErrorKind::UnsupportedRamification, "twist slope must be a positive integer");
    using PR = Poly<R>;
    ThetaOp<PR> lifted = h.template map_coeffs<PR>([](const R& a) { return PR::constant(a); });

    // generator theta - q u x^{-q}
    ThetaOp<PR> gen;
    gen.var = h.var;
    gen.c.assign(2, Laurent<PR>{});
    gen.c[1] = Laurent<PR>::constant(PR::constant(ring_one<R>()));
    gen.c[0] = Laurent<PR>::monomial(-q, PR::monomial(1, from_rational<R>(Rational(-q))));

    ThetaOp<PR> acc;
    acc.var = h.var;
    ThetaOp<PR> pow = ThetaOp<PR>::identity(h.var); // gen^i
    for (size_t i = 0; i < lifted.c.size(); ++i) {
        if (i > 0) pow = compose(gen, pow);
        if (!lifted.c[i].is_zero()) acc = acc + left_mul_laurent(lifted.c[i], pow);
    }
    acc.normalize();
    return acc;
}

// Evaluate the twist symbol at a concrete value.
template <class R>
ThetaOp<R> specialize_twist(const ThetaOp<Poly<R>>& h, const R& u) {
    return h.template map_coeffs<R>([&](const Poly<R>& p) { return p.eval(u); });
}

// ---------------------------------------------------------------------------
// Ramification v = t^r: theta_v = (1/r) theta_t and coefficients pick up
// exponent scale r. Exact.
template <class R>
ThetaOp<R> ramify(const ThetaOp<R>& h, long r, std::string new_var = "") {
    if (r < 1) fail(ErrorKind::Domain, "ramification index must be >= 1");
    ThetaOp<R> out;
    out.var = new_var.empty() ? h.var : std::move(new_var);
    out.c.reserve(h.c.size());
    Rational inv_r(1, r);
    for (size_t i = 0; i < h.c.size(); ++i) {
        R w = from_rational<R>(rational_pow(inv_r, static_cast<long>(i)));
        out.c.push_back(w * h.c[i].exponents_scaled(r));
    }
    out.normalize();
    return out;
}

// H under x -> 1/x (theta_{1/x} = -theta_x); used for polygons at infinity.
template <class R>
ThetaOp<R> invert_variable(const ThetaOp<R>& h) {
    ThetaOp<R> out;
    out.var = h.var;
    out.c.reserve(h.c.size());
    for (size_t i = 0; i < h.c.size(); ++i) {
        R sign = from_rational<R>(i % 2 == 0 ? Rational(1) : Rational(-1));
        out.c.push_back(sign * h.c[i].exponents_negated());
    }
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// Apply H to a finite series (treated as an exact polynomial):
// theta(x^(beta+n/r)) = (beta+n/r) x^(beta+n/r). The result is rebased so its
// leading coefficient is nonzero.
template <class R>
PowerSeries<R> apply_op(const ThetaOp<R>& h, const PowerSeries<R>& f) {
    long r = f.ram;
    long N = f.order();
    std::map<long, R> slots; // offset from f.beta in units of 1/r

    for (long m = 0; m <= N; ++m) {
        if (ring_is_zero(f.coeff(m))) continue;
        // powers of the exponent beta + m/r
        R t = from_rational<R>(f.beta + Rational(m, r));
        std::vector<R> tp(h.c.size(), ring_one<R>());
        for (size_t i = 1; i < h.c.size(); ++i) tp[i] = tp[i - 1] * t;
        for (size_t i = 0; i < h.c.size(); ++i) {
            if (h.c[i].is_zero()) continue;
            R w = tp[i] * f.coeff(m);
            if (ring_is_zero(w)) continue;
            for (const auto& [e, v] : h.c[i].c) {
                long slot = m + e * r;
                auto it = slots.find(slot);
                if (it == slots.end()) slots.emplace(slot, v * w);
                else it->second = it->second + v * w;
            }
        }
    }
    // drop exact zeros
    for (auto it = slots.begin(); it != slots.end();) {
        if (ring_is_zero(it->second)) it = slots.erase(it);
        else ++it;
    }
    if (slots.empty()) return PowerSeries<R>(0, r, {ring_zero<R>()});

    long lo = slots.begin()->first, hi = slots.rbegin()->first;
    std::vector<R> out(static_cast<size_t>(hi - lo) + 1, ring_zero<R>());
    for (const auto& [s, v] : slots) out[static_cast<size_t>(s - lo)] = v;
    return PowerSeries<R>(f.beta + Rational(lo, r), r, std::move(out));
}

// Order through which apply_op(H, f) is the exact image of the infinite
// series f was truncated from: negative Laurent exponents pull unknown
// coefficients down by |e_min| * ram slots.
template <class R>
long image_trust_order(const ThetaOp<R>& h, const PowerSeries<R>& f) {
    long emin = std::min(h.min_exponent(), 0L);
    return f.order() + emin * f.ram;
}

} // namespace resurge
