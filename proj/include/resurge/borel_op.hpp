#pragma once

#include <map>
#include <vector>

#include "resurge/newton.hpp"
#include "resurge/poly.hpp"
#include "resurge/theta_op.hpp"

namespace resurge {

// Touchard (exponential) polynomials: T_0 = 1, T_n = (X + X d/dX) T_{n-1}.
// Coefficients are Stirling numbers of the second kind; they show up as the
// theta-powers of an exponential factor, e^{-u/x} [theta^n e^{u/x}] =
// (-1)^n T_n(u/x).
inline PolyQ touchard(long n) {
    PolyQ t = PolyQ::constant(Rational(1));
    for (long i = 1; i <= n; ++i) {
        PolyQ x_t = PolyQ::monomial(1, Rational(1)) * t;
        PolyQ x_dt = PolyQ::monomial(1, Rational(1)) * t.derivative();
        t = x_t + x_dt;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Borel transform of an operator, for the level-one case.
//
// With D = x^2 d/dx and S = multiplication by x^{-1} one has [D,S] = -1 and
// theta = S D. Acting on the minor (coefficients a_{n+1}/n! after dropping
// the constant term), D becomes multiplication by zeta and S becomes d/dzeta.
// Every monomial x^e theta^i with e <= 1 (e <= 0 when i = 0) is expressible
// in S and D; a minimal premultiplication by x^{-p} fixes the rest and is
// recorded in the result.

template <class R>
struct BorelOperator {
    ThetaOp<R> theta_form;        // operator in theta_zeta
    std::vector<Poly<R>> d_form;  // d_form[j](zeta) * (d/dzeta)^j
    long premultiplied = 0;       // the equation was multiplied by x^{-p}
};

namespace detail {

// theta^i = sum_j t[i][j] S^j D^j with t[i+1][j] = t[i][j-1] - j t[i][j]
inline const std::vector<std::vector<Rational>>& theta_sd_table(long order) {
    static std::vector<std::vector<Rational>> table = {{Rational(1)}};
    while (static_cast<long>(table.size()) <= order) {
        const auto& prev = table.back();
        std::vector<Rational> next(prev.size() + 1, Rational(0));
        for (size_t j = 0; j < next.size(); ++j) {
            if (j >= 1 && j - 1 < prev.size()) next[j] += prev[j - 1];
            if (j < prev.size()) next[j] -= Rational(static_cast<long>(j)) * prev[j];
        }
        table.push_back(std::move(next));
    }
    return table;
}

} // namespace detail

template <class R>
BorelOperator<R> borel_transform_op(const ThetaOp<R>& h) {
    // level check: the only positive slope allowed is 1
    NewtonPolygon np = newton_polygon(h, PolygonAt::Zero);
    for (const auto& s : np.slopes) {
        if (s.q > 0 && !(s.q == 1))
            fail(ErrorKind::UnsupportedLevel,
                 "Borel transform supports level one only; polygon has slope " + s.q.str() +
                     " (ramify to the critical variable first)");
    }

    const auto& table = detail::theta_sd_table(h.order());

    // minimal p with  e - p <= 1 for i >= 1 and e - p <= 0 for i = 0
    long p = 0;
    for (size_t i = 0; i < h.c.size(); ++i) {
        if (h.c[i].is_zero()) continue;
        long cap = (i >= 1) ? 1 : 0;
        p = std::max(p, h.c[i].degree() - cap);
    }

    // normal form  sum c_{a,b} S^a D^b  of x^{-p} H
    std::map<std::pair<long, long>, R> sd;
    for (size_t i = 0; i < h.c.size(); ++i) {
        for (const auto& [e, coef] : h.c[i].c) {
            for (size_t j = 0; j < table[i].size(); ++j) {
                if (table[i][j].is_zero()) continue;
                long a = static_cast<long>(j) - (e - p);
                long b = static_cast<long>(j);
                R w = coef * from_rational<R>(table[i][j]);
                auto key = std::make_pair(a, b);
                auto it = sd.find(key);
                if (it == sd.end()) sd.emplace(key, w);
                else it->second = it->second + w;
            }
        }
    }

    // Borel image of S^a D^b is (d/dzeta)^a zeta^b; normal-order the zeta to
    // the left:  d^a zeta^b = sum_t C(a,t) b!/(b-t)! zeta^{b-t} d^{a-t}
    std::vector<Laurent<R>> dform_laurent;
    auto ensure = [&](long j) {
        if (j >= static_cast<long>(dform_laurent.size()))
            dform_laurent.resize(static_cast<size_t>(j) + 1);
    };
    for (const auto& [key, coef] : sd) {
        if (ring_is_zero(coef)) continue;
        long a = key.first, b = key.second;
        Rational falling = 1;
        for (long t = 0; t <= std::min(a, b); ++t) {
            if (t > 0) falling *= Rational(b - t + 1);
            Rational w = Rational(binomial(a, t)) * falling;
            ensure(a - t);
            dform_laurent[static_cast<size_t>(a - t)].add(b - t, coef * from_rational<R>(w));
        }
    }

    BorelOperator<R> out;
    out.premultiplied = p;
    out.d_form.reserve(dform_laurent.size());
    for (const auto& l : dform_laurent) {
        // exponents here are always >= 0
        std::vector<R> v;
        if (!l.is_zero()) {
            v.assign(static_cast<size_t>(l.degree()) + 1, ring_zero<R>());
            for (const auto& [e, a] : l.c) v[static_cast<size_t>(e)] = a;
        }
        out.d_form.emplace_back(std::move(v));
    }

    // theta_zeta-form:  B_j(zeta) d^j = B_j(zeta) zeta^{-j} theta(theta-1)...(theta-j+1)
    ThetaOp<R> tf;
    tf.var = "zeta";
    for (long j = 0; j < static_cast<long>(dform_laurent.size()); ++j) {
        if (dform_laurent[static_cast<size_t>(j)].is_zero()) continue;
        // falling factorial in theta
        PolyQ ff = PolyQ::constant(Rational(1));
        for (long t = 0; t < j; ++t)
            ff = ff * PolyQ(std::vector<Rational>{Rational(-t), Rational(1)});
        Laurent<R> pref = dform_laurent[static_cast<size_t>(j)].shifted(-j);
        for (long t = 0; t <= ff.degree(); ++t) {
            if (ff.coeff(t).is_zero()) continue;
            R w = from_rational<R>(ff.coeff(t));
            if (static_cast<long>(tf.c.size()) <= t) tf.c.resize(static_cast<size_t>(t) + 1);
            tf.c[static_cast<size_t>(t)] = tf.c[static_cast<size_t>(t)] + w * pref;
        }
    }
    tf.normalize();
    out.theta_form = std::move(tf);
    return out;
}

} // namespace resurge
