#pragma once

#include <array>
#include <optional>
#include <vector>

#include "resurge/poly.hpp"
#include "resurge/theta_op.hpp"

namespace resurge {

struct PolygonSlope {
    Rational q;  // reduced fraction
    long length; // horizontal extent
};

// Lower boundary of the Newton polygon: corner vertices left-to-right and the
// slope/length of each segment between them. At 0 the slopes increase; at
// infinity the mirrored boundary has them decreasing.
struct NewtonPolygon {
    std::vector<std::array<long, 2>> vertices;
    std::vector<PolygonSlope> slopes;

    bool has_horizontal() const {
        for (const auto& s : slopes)
            if (s.q == 0) return true;
        return false;
    }
    long horizontal_length() const {
        for (const auto& s : slopes)
            if (s.q == 0) return s.length;
        return 0;
    }
    std::vector<PolygonSlope> positive_slopes() const {
        std::vector<PolygonSlope> r;
        for (const auto& s : slopes)
            if (s.q > 0) r.push_back(s);
        return r;
    }
    // the unique positive slope, when there is exactly one
    std::optional<Rational> single_positive_slope() const {
        auto ps = positive_slopes();
        if (ps.size() != 1) return std::nullopt;
        return ps[0].q;
    }

    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        if (a.vertices != b.vertices || a.slopes.size() != b.slopes.size()) return false;
        for (size_t i = 0; i < a.slopes.size(); ++i)
            if (!(a.slopes[i].q == b.slopes[i].q) || a.slopes[i].length != b.slopes[i].length)
                return false;
        return true;
    }
};

enum class PolygonAt { Zero, Infinity };

namespace detail {

// column heights -> hull (lower = true keeps the convex-from-below boundary)
inline NewtonPolygon hull_from_columns(const std::vector<long>& height, bool lower) {
    std::vector<std::array<long, 2>> pts;
    for (long u = 0; u < static_cast<long>(height.size()); ++u)
        pts.push_back({u, height[static_cast<size_t>(u)]});

    auto cross = [](const std::array<long, 2>& o, const std::array<long, 2>& a,
                    const std::array<long, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };

    std::vector<std::array<long, 2>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            long c = cross(hull[hull.size() - 2], hull[hull.size() - 1], p);
            bool drop = lower ? (c <= 0) : (c >= 0);
            if (drop) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }

    // reinstate slope-change points on segment boundaries: the monotone chain
    // drops collinear points, which is what we want for corner vertices, but
    // the first/last columns are always kept by construction
    NewtonPolygon np;
    np.vertices = hull;
    for (size_t i = 1; i < hull.size(); ++i) {
        Rational q(hull[i][1] - hull[i - 1][1], hull[i][0] - hull[i - 1][0]);
        np.slopes.push_back({q, hull[i][0] - hull[i - 1][0]});
    }
    return np;
}

} // namespace detail

// Newton polygon of H at 0 or at infinity. At 0 the polygon is the convex
// hull of {(u,v) : exponent v >= val appears at theta-power i >= u}; only the
// per-column minimal valuation matters for the lower boundary. At infinity
// the per-column maximal degree and the upper boundary take over.
template <class R>
NewtonPolygon newton_polygon(const ThetaOp<R>& h, PolygonAt at) {
    if (h.is_zero()) fail(ErrorKind::Domain, "Newton polygon of the zero operator");
    long n = h.order();
    std::vector<long> col(static_cast<size_t>(n) + 1);
    if (at == PolygonAt::Zero) {
        long running = h.c[static_cast<size_t>(n)].valuation();
        for (long u = n; u >= 0; --u) {
            if (!h.c[static_cast<size_t>(u)].is_zero())
                running = std::min(running, h.c[static_cast<size_t>(u)].valuation());
            col[static_cast<size_t>(u)] = running;
        }
        return detail::hull_from_columns(col, /*lower=*/true);
    }
    long running = h.c[static_cast<size_t>(n)].degree();
    for (long u = n; u >= 0; --u) {
        if (!h.c[static_cast<size_t>(u)].is_zero())
            running = std::max(running, h.c[static_cast<size_t>(u)].degree());
        col[static_cast<size_t>(u)] = running;
    }
    return detail::hull_from_columns(col, /*lower=*/false);
}

// horizontal-axis reflection, for the mirror relation between the polygon at
// infinity and the polygon at 0 of the x -> 1/x transform
inline NewtonPolygon mirror_polygon(const NewtonPolygon& np) {
    NewtonPolygon r;
    for (auto v : np.vertices) r.vertices.push_back({v[0], -v[1]});
    for (const auto& s : np.slopes) r.slopes.push_back({-s.q, s.length});
    return r;
}

// ---------------------------------------------------------------------------
// Indicial polynomial: the coefficient of the lowest x-degree monomial in
// x^{-beta} H x^{beta}, as a polynomial Q(beta) = sum_i H_{i,d0} beta^i.

template <class R>
struct IndicialData {
    Poly<R> Q;
    long lowest_degree = 0;
    std::vector<Rational> rational_roots; // exact, when R = Rational
    std::vector<Complex> other_roots;
};

// Horner deflation: divide p by (u - r), assuming r is a root.
inline PolyQ deflate_root(const PolyQ& p, const Rational& r) {
    if (p.degree() < 1) return PolyQ();
    std::vector<Rational> q(static_cast<size_t>(p.degree()), Rational(0));
    Rational acc = 0;
    for (long i = p.degree(); i >= 1; --i) {
        acc = acc * r + p.coeff(i);
        q[static_cast<size_t>(i - 1)] = acc;
    }
    return PolyQ(std::move(q));
}

inline IndicialData<Rational> indicial_polynomial(const ThetaOpQ& h) {
    NewtonPolygon np = newton_polygon(h, PolygonAt::Zero);
    if (np.slopes.empty() || !(np.slopes.front().q == 0))
        fail(ErrorKind::NoFormalSolution,
             "no horizontal slope: the equation has no formal power-series solution");
    long d0 = h.min_exponent();
    std::vector<Rational> q(static_cast<size_t>(h.order()) + 1, Rational(0));
    for (long i = 0; i <= h.order(); ++i) q[static_cast<size_t>(i)] = h.coeff(i).coeff(d0);
    IndicialData<Rational> out;
    out.Q = PolyQ(std::move(q));
    out.lowest_degree = d0;
    if (out.Q.is_zero()) fail(ErrorKind::Domain, "indicial polynomial is identically zero");

    out.rational_roots = rational_roots(out.Q);
    PolyQ rest = out.Q;
    for (const auto& r : out.rational_roots)
        while (!rest.is_zero() && rest.eval(r).is_zero() && rest.degree() >= 1)
            rest = deflate_root(rest, r);
    if (rest.degree() >= 1) {
        PolyC pc = rest.map<Complex>([](const Rational& a) { return Complex(a); });
        out.other_roots = poly_roots(pc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Determining polynomial P(u): the coefficient of the lowest x-degree in the
// theta^0 coefficient of the twisted operator. Its nonzero roots are the
// exponential prefactor coefficients.

struct DeterminingData {
    PolyQ P;              // with P(0) = 0
    Rational q;           // the slope used for the twist
    long lowest_degree;   // x-exponent the coefficient was read from
    std::vector<Rational> exact_roots;   // nonzero rational roots
    std::vector<Complex> numeric_roots;  // nonzero irrational roots
    BigFloat max_residual = 0;           // max |P(root)| over numeric roots

    // all nonzero roots as complex values, exact ones first
    std::vector<Complex> all_roots() const {
        std::vector<Complex> r;
        for (const auto& e : exact_roots) r.emplace_back(e);
        for (const auto& z : numeric_roots) r.push_back(z);
        return r;
    }
};

inline DeterminingData determining_polynomial(const ThetaOpQ& h, const Rational& q) {
    NewtonPolygon np = newton_polygon(h, PolygonAt::Zero);
    auto sp = np.single_positive_slope();
    if (!sp || !(*sp == q))
        fail(ErrorKind::Domain, "q must be the unique positive slope of the polygon at 0");
    if (denominator(q) != 1)
        fail(ErrorKind::UnsupportedRamification,
             "slope " + q.str() + " is fractional; ramify to an integer slope first");
    long qi = numerator(q).convert_to<long>();

    ThetaOpU hu = twist_op(h, qi);
    const Laurent<PolyQ>& h0 = hu.coeff(0);
    if (h0.is_zero()) fail(ErrorKind::Domain, "twisted operator has zero theta^0 coefficient");
    long d = h0.valuation();

    DeterminingData out;
    out.P = h0.coeff(d);
    out.q = q;
    out.lowest_degree = d;
    if (!out.P.eval(Rational(0)).is_zero())
        fail(ErrorKind::Domain, "determining polynomial does not vanish at 0");

    long val = out.P.valuation();
    if (val != 1)
        fail(ErrorKind::MultipleRoot, "0 is a multiple root of the determining polynomial", val);
    PolyQ cof = out.P.shift_down(1);
    if (cof.degree() >= 1 && !poly_squarefree(cof))
        fail(ErrorKind::MultipleRoot, "determining polynomial has a repeated nonzero root");

    if (cof.degree() == 1) {
        out.exact_roots.push_back(-cof.coeff(0) / cof.coeff(1));
        return out;
    }
    if (cof.degree() < 1) return out;

    // binomial case u^d = a: principal root times the roots of unity
    bool binomial_form = true;
    for (long i = 1; i < cof.degree(); ++i)
        if (!cof.coeff(i).is_zero()) { binomial_form = false; break; }

    std::vector<Complex> roots;
    if (binomial_form) {
        // u^d = a: principal root times the roots of unity
        Rational a = -cof.coeff(0) / cof.coeff(cof.degree());
        long d2 = cof.degree();
        for (long k = 0; k < d2; ++k) roots.push_back(nth_root(Complex(a), d2, k));
    } else {
        PolyC pc = cof.map<Complex>([](const Rational& x) { return Complex(x); });
        roots = poly_roots(pc);
    }

    // recognise rational roots exactly where present
    std::vector<Rational> exact_candidates = rational_roots(cof);
    for (auto& z : roots) {
        bool matched = false;
        if (abs(z.im) < precision_eps(16)) {
            for (const auto& cand : exact_candidates) {
                if (abs(z.re - BigFloat(cand)) < precision_eps(16) * (1 + abs(z.re))) {
                    if (std::find(out.exact_roots.begin(), out.exact_roots.end(), cand) ==
                        out.exact_roots.end())
                        out.exact_roots.push_back(cand);
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) out.numeric_roots.push_back(z);
    }

    // pairwise separation and residual diagnostics
    auto all = out.all_roots();
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j)
            if (abs(all[i] - all[j]) < precision_eps(static_cast<int>(precision_bits() / 2)))
                fail(ErrorKind::MultipleRoot, "determining roots coincide numerically");
    }
    PolyC pc = out.P.map<Complex>([](const Rational& x) { return Complex(x); });
    for (const auto& z : out.numeric_roots)
        out.max_residual = std::max(out.max_residual, abs(pc.eval(z)));
    return out;
}

} // namespace resurge
