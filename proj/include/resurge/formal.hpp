#pragma once

#include <optional>
#include <vector>

#include "resurge/newton.hpp"
#include "resurge/series.hpp"
#include "resurge/theta_op.hpp"

namespace resurge {

// ---------------------------------------------------------------------------
// Power-series solution of H(f) = 0 with f = x^beta sum a_n x^n, a_0 = 1.
//
// Writing e_min for the lowest Laurent exponent of H, the coefficient of
// x^{beta+m+e_min} in H(f) couples a_m (through the e_min column, i.e. the
// indicial polynomial Q evaluated at beta+m) to earlier coefficients. The
// recurrence is triangular; a vanishing pivot Q(beta+m) at m >= 1 is a
// resonance and aborts.

template <class R>
PowerSeries<R> series_solution(const ThetaOp<R>& h, const Rational& beta, long N) {
    if (h.is_zero()) fail(ErrorKind::Domain, "zero operator");
    long emin = h.min_exponent();

    auto column_value = [&](long m) {
        // Q(beta + m) = sum_i H_{i,emin} (beta+m)^i
        R t = from_rational<R>(beta + Rational(m));
        R acc = ring_zero<R>();
        R tp = ring_one<R>();
        for (size_t i = 0; i < h.c.size(); ++i) {
            acc = acc + h.c[i].coeff(emin) * tp;
            tp = tp * t;
        }
        return acc;
    };
    if (!ring_is_zero(column_value(0)))
        fail(ErrorKind::Domain, "beta is not a root of the indicial polynomial");

    std::vector<R> a(static_cast<size_t>(N) + 1, ring_zero<R>());
    a[0] = ring_one<R>();

    // power tables (beta+n)^i, filled on demand
    std::vector<std::vector<R>> pow_cache(static_cast<size_t>(N) + 1);
    auto powers_of = [&](long n) -> const std::vector<R>& {
        auto& row = pow_cache[static_cast<size_t>(n)];
        if (row.empty()) {
            row.resize(h.c.size());
            R t = from_rational<R>(beta + Rational(n));
            row[0] = ring_one<R>();
            for (size_t i = 1; i < row.size(); ++i) row[i] = row[i - 1] * t;
        }
        return row;
    };

    for (long m = 1; m <= N; ++m) {
        R pivot = column_value(m);
        if (ring_is_zero(pivot))
            fail(ErrorKind::Resonance,
                 "recurrence pivot vanishes at index " + std::to_string(m), m);
        R acc = ring_zero<R>();
        for (size_t i = 0; i < h.c.size(); ++i) {
            for (const auto& [e, coef] : h.c[i].c) {
                long n = m + emin - e;
                if (n < 0 || n >= m) continue; // n == m is the pivot column
                acc = acc + coef * powers_of(n)[i] * a[static_cast<size_t>(n)];
            }
        }
        a[static_cast<size_t>(m)] = (ring_zero<R>() - acc) / pivot;
    }
    return PowerSeries<R>(beta, 1, std::move(a));
}

// ---------------------------------------------------------------------------
// One element x^beta e^{u/x^q} Phi(x) of the formal solution basis.

struct BasisElement {
    std::optional<Rational> u_exact;                  // set when u is rational
    Complex u;                                        // always usable
    Rational q = 1;                                   // exponential slope
    Rational beta = 0;
    std::optional<PowerSeries<Rational>> series_exact;
    PowerSeries<Complex> series;
    long label = 0;
};

namespace detail {

// Specialize a twisted operator at a numeric root of the determining
// polynomial. Values that are only nonzero through rounding noise must be
// dropped, otherwise valuations come out wrong; the chop threshold is scaled
// by the evaluation magnitude.
template <class R, class Conv>
ThetaOpC specialize_twist_chopped(const ThetaOp<Poly<R>>& hu, const Complex& u, Conv&& to_complex) {
    BigFloat chop = precision_eps(static_cast<int>(precision_bits() / 4));
    BigFloat au = abs(u);
    return hu.template map_coeffs<Complex>([&](const Poly<R>& p) {
        Complex val(0);
        BigFloat scale(0);
        BigFloat up(1);
        for (long i = 0; i <= p.degree(); ++i) {
            Complex ci = to_complex(p.coeff(i));
            val += ci * pow(u, i);
            scale += abs(ci) * up;
            up *= au;
        }
        if (abs(val) <= chop * std::max(BigFloat(1), scale)) return Complex(0);
        return val;
    });
}

inline ThetaOpC specialize_twist_at(const ThetaOpU& hu, const Complex& u) {
    return specialize_twist_chopped(hu, u, [](const Rational& a) { return Complex(a); });
}

inline ThetaOpC specialize_twist_at_complex(const ThetaOp<PolyC>& hu, const Complex& u) {
    return specialize_twist_chopped(hu, u, [](const Complex& a) { return a; });
}

// degree-1 indicial root of a specialized twisted operator
template <class R>
R twisted_indicial_root(const ThetaOp<R>& h) {
    long d0 = h.min_exponent();
    R c0 = h.coeff(0).coeff(d0);
    R c1 = h.coeff(1).coeff(d0);
    bool higher = false;
    for (long i = 2; i <= h.order(); ++i)
        if (!ring_is_zero(h.coeff(i).coeff(d0))) higher = true;
    if (higher || ring_is_zero(c1))
        fail(ErrorKind::ShapeUnsupported, "twisted operator has a non-linear indicial equation");
    return (ring_zero<R>() - c0) / c1;
}

// small-denominator rational reconstruction via continued fractions
inline std::optional<Rational> snap_rational(const BigFloat& x, long max_den, const BigFloat& tol) {
    BigFloat v = x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 40; ++it) {
        BigFloat fl = floor(v);
        Int a = fl.convert_to<Int>();
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Rational cand(p1, q1);
        if (abs(x - BigFloat(cand)) <= tol) return cand;
        BigFloat frac = v - fl;
        if (frac < tol) break;
        v = 1 / frac;
    }
    return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Basis of formal solutions for the supported polygon shape: one horizontal
// slope of length one followed by a single positive integer slope q. One
// power-series solution at u = 0 plus one exponential element per nonzero
// root of the determining polynomial.

inline std::vector<BasisElement> formal_basis(const ThetaOpQ& h, long N) {
    NewtonPolygon np = newton_polygon(h, PolygonAt::Zero);
    if (np.slopes.size() != 2 || !(np.slopes[0].q == 0) || np.slopes[0].length != 1 ||
        !(np.slopes[1].q > 0))
        fail(ErrorKind::ShapeUnsupported,
             "polygon is not [horizontal slope of length one, one positive slope]");
    Rational q = np.slopes[1].q;
    if (denominator(q) != 1)
        fail(ErrorKind::UnsupportedRamification,
             "positive slope " + q.str() + " is fractional; ramify the operator first");
    long qi = numerator(q).convert_to<long>();

    std::vector<BasisElement> basis;

    // u = 0 element
    IndicialData<Rational> ind = indicial_polynomial(h);
    if (ind.Q.degree() != 1)
        fail(ErrorKind::ShapeUnsupported, "indicial polynomial is not linear");
    Rational beta0 = -ind.Q.coeff(0) / ind.Q.coeff(1);
    BasisElement e0;
    e0.u_exact = Rational(0);
    e0.u = Complex(0);
    e0.q = q;
    e0.beta = beta0;
    e0.series_exact = series_solution(h, beta0, N);
    e0.series = e0.series_exact->map<Complex>([](const Rational& a) { return Complex(a); });
    e0.label = 0;
    basis.push_back(std::move(e0));

    DeterminingData det = determining_polynomial(h, q);
    ThetaOpU hu = twist_op(h, qi);

    long label = 1;
    for (const auto& u : det.exact_roots) {
        ThetaOpQ hspec = specialize_twist(hu, u);
        IndicialData<Rational> ind_u = indicial_polynomial(hspec);
        if (ind_u.Q.degree() != 1)
            fail(ErrorKind::ShapeUnsupported, "twisted indicial polynomial is not linear");
        Rational beta_u = -ind_u.Q.coeff(0) / ind_u.Q.coeff(1);
        BasisElement e;
        e.u_exact = u;
        e.u = Complex(u);
        e.q = q;
        e.beta = beta_u;
        e.series_exact = series_solution(hspec, beta_u, N);
        e.series = e.series_exact->map<Complex>([](const Rational& a) { return Complex(a); });
        e.label = label++;
        basis.push_back(std::move(e));
    }
    for (const auto& u : det.numeric_roots) {
        ThetaOpC hspec = detail::specialize_twist_at(hu, u);
        Complex beta_c = detail::twisted_indicial_root(hspec);
        if (abs(beta_c.im) > precision_eps(static_cast<int>(precision_bits() / 2)))
            fail(ErrorKind::ShapeUnsupported, "non-real exponent in twisted indicial equation");
        auto snapped = detail::snap_rational(beta_c.re, 64,
                                             precision_eps(static_cast<int>(precision_bits() / 2)));
        if (!snapped)
            fail(ErrorKind::ShapeUnsupported, "twisted exponent is not a small rational");
        BasisElement e;
        e.u = u;
        e.q = q;
        e.beta = *snapped;
        e.series = series_solution(hspec, e.beta, N);
        e.label = label++;
        basis.push_back(std::move(e));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Gevrey growth fit: |a_n| ~ C A^n (n!)^s gives
// log|a_n| = s log n! + n log A + const, a three-parameter least squares over
// the tail window (the early coefficients bias the factorial fit).

struct GevreyEstimate {
    double s = 0;
    double A = 0;
    long window_lo = 0, window_hi = 0;
    double residual = 0;
};

template <class R>
GevreyEstimate gevrey_estimate(const PowerSeries<R>& f, double window_fraction = 0.6) {
    std::vector<std::pair<long, BigFloat>> samples; // (n, log|a_n|)
    for (long n = 0; n <= f.order(); ++n) {
        const R& an = f.coeff(n);
        if (ring_is_zero(an)) continue;
        BigFloat mag;
        if constexpr (std::is_same_v<R, Rational>) mag = abs(BigFloat(an));
        else if constexpr (std::is_same_v<R, Complex>) mag = abs(an);
        else mag = abs(BigFloat(an));
        samples.emplace_back(n, log(mag));
    }
    if (samples.size() < 20)
        fail(ErrorKind::InsufficientData, "Gevrey fit needs at least 20 nonzero coefficients");

    size_t lo = static_cast<size_t>(samples.size() * (1.0 - window_fraction));
    GevreyEstimate out;
    out.window_lo = samples[lo].first;
    out.window_hi = samples.back().first;

    // normal equations for [lgamma(n+1), n, 1]
    BigFloat M[3][3] = {}, rhs[3] = {};
    for (size_t i = lo; i < samples.size(); ++i) {
        BigFloat n(samples[i].first);
        BigFloat col[3] = {lgamma(n + 1), n, BigFloat(1)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) M[r][c] += col[r] * col[c];
            rhs[r] += col[r] * samples[i].second;
        }
    }
    // Cramer on the 3x3 system
    auto det3 = [](BigFloat m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    BigFloat d = det3(M);
    if (d.is_zero()) fail(ErrorKind::InsufficientData, "degenerate Gevrey fit system");
    BigFloat sol[3];
    for (int k = 0; k < 3; ++k) {
        BigFloat Mk[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) Mk[r][c] = (c == k) ? rhs[r] : M[r][c];
        sol[k] = det3(Mk) / d;
    }
    out.s = sol[0].convert_to<double>();
    out.A = exp(sol[1]).convert_to<double>();

    BigFloat rss = 0;
    for (size_t i = lo; i < samples.size(); ++i) {
        BigFloat n(samples[i].first);
        BigFloat fit = sol[0] * lgamma(n + 1) + sol[1] * n + sol[2];
        rss += (samples[i].second - fit) * (samples[i].second - fit);
    }
    out.residual = sqrt(rss / BigFloat(static_cast<long>(samples.size() - lo))).convert_to<double>();
    return out;
}

// ---------------------------------------------------------------------------
// Free energy W = log Z, truncated to order N.
template <class R>
PowerSeries<R> free_energy_series(const PowerSeries<R>& z, long N) {
    return series_log(z.truncated(N));
}

} // namespace resurge
