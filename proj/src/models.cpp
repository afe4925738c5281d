#include "resurge/models.hpp"

#include <algorithm>
#include <set>

namespace resurge {

// ---------------------------------------------------------------------------
// Potential

Potential::Potential(std::vector<Rational> coeffs) : v(std::move(coeffs)) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    if (v.size() < 3 || (v.size() - 1) % 2 != 0)
        fail(ErrorKind::Domain, "potential must have even degree >= 2");
    if (!(v.back() > 0)) fail(ErrorKind::Domain, "leading potential coefficient must be positive");
}

Potential Potential::monomial(long two_k) {
    if (two_k < 2 || two_k % 2 != 0) fail(ErrorKind::Domain, "potential degree must be even >= 2");
    std::vector<Rational> c(static_cast<size_t>(two_k) + 1, Rational(0));
    c.back() = 1;
    return Potential(std::move(c));
}

bool Potential::is_even() const {
    for (size_t i = 1; i < v.size(); i += 2)
        if (!v[i].is_zero()) return false;
    return true;
}

BigFloat Potential::eval(const BigFloat& phi) const {
    BigFloat acc = 0;
    for (size_t i = v.size(); i-- > 0;) acc = acc * phi + BigFloat(v[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// moments by double-exponential quadrature on the half line

namespace {

MomentValue moment_impl(const Potential& V, long phi_power, const Complex& lambda,
                        const BigFloat& tol, bool weight_minus_V) {
    if (lambda.re < 0)
        fail(ErrorKind::DivergentDomain,
             "moment integral diverges for Re lambda = " + lambda.re.str(6) + " < 0");

    BigFloat norm = sqrt(2 * const_pi());
    bool even_V = V.is_even();
    bool even_weight = (phi_power % 2 == 0);

    auto one_side = [&](const BigFloat& phi, int sign) {
        BigFloat p = sign > 0 ? phi : -phi;
        Complex expo = Complex(-p * p / 2) - lambda * Complex(V.eval(p));
        Complex val = exp(expo) * Complex(pow(p, phi_power));
        if (weight_minus_V) val *= Complex(-V.eval(p));
        return val;
    };

    ComplexIntegrand f;
    if (even_V) {
        if (!even_weight) {
            // odd weight against an even measure: identically zero
            return {phi_power / 2, lambda, Complex(0), BigFloat(0)};
        }
        f = [&](const BigFloat& phi) { return one_side(phi, +1) * Complex(2); };
    } else {
        f = [&](const BigFloat& phi) { return one_side(phi, +1) + one_side(phi, -1); };
    }

    QuadratureResult q = integrate_half_line(f, tol * norm / 2);
    MomentValue out;
    out.j = phi_power / 2;
    out.lambda = lambda;
    out.value = q.value / Complex(norm);
    out.error = q.error / norm;
    return out;
}

} // namespace

MomentValue quad_moment(const Potential& V, long j, const Complex& lambda, const BigFloat& tol) {
    return moment_impl(V, 2 * j, lambda, tol, false);
}

MomentValue quad_moment_any(const Potential& V, long j, const Complex& lambda, const BigFloat& tol) {
    return moment_impl(V, j, lambda, tol, false);
}

MomentValue quad_moment_derivative(const Potential& V, long j, const Complex& lambda,
                                   const BigFloat& tol) {
    return moment_impl(V, j, lambda, tol, true);
}

// ---------------------------------------------------------------------------
// exact asymptotics

Rational gaussian_moment(long m) {
    if (m % 2 != 0) return 0;
    return Rational(factorial(m), factorial(m / 2)) / rational_pow(Rational(2), m / 2);
}

std::vector<Rational> asymptotic_coeffs(const Potential& V, long j, long N) {
    PolyQ vpoly(std::vector<Rational>(V.v));
    PolyQ minus_v = -vpoly;
    PolyQ p = PolyQ::monomial(2 * j, Rational(1)); // phi^{2j} (-V)^n, built up

    std::vector<Rational> alpha;
    alpha.reserve(static_cast<size_t>(N) + 1);
    Rational inv_fact = 1;
    for (long n = 0; n <= N; ++n) {
        if (n > 0) {
            p = p * minus_v;
            inv_fact /= n;
        }
        Rational acc = 0;
        for (long mdeg = 0; mdeg <= p.degree(); mdeg += 2)
            acc += p.coeff(mdeg) * gaussian_moment(mdeg);
        alpha.push_back(acc * inv_fact);
    }
    return alpha;
}

Rational phi2k_alpha_closed(long k, long n) {
    Rational r(factorial(2 * k * n), factorial(n) * factorial(k * n));
    r /= rational_pow(Rational(2), k * n);
    if (n % 2 != 0) r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// the operator family E_k

EkModel build_Ek(long k, long order) {
    if (k < 1) fail(ErrorKind::Domain, "k must be >= 1");

    // product of the commuting factors (2k theta + 2j + 1), then + lambda^{-1} theta
    ThetaOpQ h = ThetaOpQ::identity("lambda");
    for (long j = 0; j < k; ++j) {
        ThetaOpQ factor;
        factor.var = "lambda";
        factor.c.assign(2, LaurentQ{});
        factor.c[1] = LaurentQ::constant(Rational(2 * k));
        factor.c[0] = LaurentQ::constant(Rational(2 * j + 1));
        h = compose(factor, h);
    }
    h.add_term(1, -1, Rational(1));
    h.normalize();

    EkModel out;
    out.k = k;
    out.op_lambda = h;
    if (k == 1) {
        out.m = 0;
        return out;
    }

    out.m = Rational(1, k - 1);
    out.op_x = ramify(h, k - 1, "x");
    out.determining = determining_polynomial(*out.op_x, Rational(1));
    out.basis = formal_basis(*out.op_x, order);
    out.exact_roots = out.determining->exact_roots;
    out.roots = out.determining->all_roots();
    return out;
}

// ---------------------------------------------------------------------------
// governing-relation residuals

GoverningReport verify_governing(const Potential& V, long j_max, const BigFloat& lambda,
                                 const BigFloat& tol) {
    if (lambda < 0) fail(ErrorKind::DivergentDomain, "lambda must be >= 0");
    long deg = V.degree();
    Complex lam(lambda);

    std::vector<Complex> Z(static_cast<size_t>(j_max + deg) + 1);
    for (long j = 0; j < static_cast<long>(Z.size()); ++j)
        Z[static_cast<size_t>(j)] = quad_moment_any(V, j, lam, tol).value;

    // central differences use a much tighter quadrature so the h^2 truncation
    // dominates; h = 1e-6 puts it near 1e-12 * |Z'''|
    BigFloat h("1e-6");
    BigFloat fd_tol = tol * BigFloat("1e-12");

    GoverningReport rep;
    rep.lambda = lam;
    rep.tol = tol;
    rep.max_residual = 0;

    for (long j = 0; j <= j_max; ++j) {
        GoverningRow row;
        row.j = j;

        Complex rhs1(0); // -sum v_i Z_{j+i}
        for (long i = 0; i <= deg; ++i)
            rhs1 -= Complex(V.coeff(i)) * Z[static_cast<size_t>(j + i)];

        Complex dz;
        if (lambda > h) {
            Complex zp = quad_moment_any(V, j, Complex(lambda + h), fd_tol).value;
            Complex zm = quad_moment_any(V, j, Complex(lambda - h), fd_tol).value;
            dz = (zp - zm) / Complex(2 * h);
        } else {
            BigFloat hf("1e-10");
            Complex zp = quad_moment_any(V, j, Complex(lambda + hf), tol * BigFloat("1e-16")).value;
            dz = (zp - Z[static_cast<size_t>(j)]) / Complex(hf);
        }
        row.rec1_fd = abs(dz - rhs1);
        row.rec1_wq = abs(quad_moment_derivative(V, j, lam, tol).value - rhs1);

        Complex rhs2 = Z[static_cast<size_t>(j + 2)];
        for (long i = 1; i <= deg; ++i)
            rhs2 += lam * Complex(Rational(i) * V.coeff(i)) * Z[static_cast<size_t>(j + i)];
        row.rec2 = abs(Complex(Rational(j + 1)) * Z[static_cast<size_t>(j)] - rhs2);

        rep.max_residual = std::max({rep.max_residual, row.rec1_fd, row.rec1_wq, row.rec2});
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// discreteness of the free-energy singularity group

LatticeVerdict singularity_discreteness(long k, long depth) {
    if (k <= 2) fail(ErrorKind::Domain, "discreteness verdict is defined for k > 2");

    LatticeVerdict out;
    out.k = k;
    out.rotation_order = k - 1;
    // crystallographic restriction: a planar lattice admits rotation orders
    // 1, 2, 3, 4, 6 only
    long n = k - 1;
    out.discrete = (n == 1 || n == 2 || n == 3 || n == 4 || n == 6);

    EkModel ek = build_Ek(k, 2);
    out.generators = ek.roots;
    out.witness_depth = depth;

    // bounded-word search in the additive group: any nonzero element strictly
    // inside the generator circle certifies a non-lattice (the four discrete
    // cases have shortest vector |u_1| exactly)
    BigFloat rho = abs(out.generators.front());
    BigFloat grid("1e-9");
    auto key = [&](const Complex& z) {
        auto r = static_cast<long long>((z.re / (rho * grid)).convert_to<double>());
        auto i = static_cast<long long>((z.im / (rho * grid)).convert_to<double>());
        return std::make_pair(r, i);
    };

    std::set<std::pair<long long, long long>> seen;
    std::vector<Complex> frontier{Complex(0)};
    seen.insert(key(Complex(0)));
    BigFloat min_mod = rho * 100;
    BigFloat cap = rho * 3;

    for (long level = 1; level <= depth && frontier.size() < 20000; ++level) {
        std::vector<Complex> next;
        for (const auto& base : frontier) {
            for (const auto& g : out.generators) {
                for (int sign : {+1, -1}) {
                    Complex cand = sign > 0 ? base + g : base - g;
                    BigFloat m = abs(cand);
                    if (m > cap) continue;
                    auto kk = key(cand);
                    if (!seen.insert(kk).second) continue;
                    if (m > rho * grid * 4) min_mod = std::min(min_mod, m);
                    next.push_back(cand);
                }
            }
        }
        frontier = std::move(next);
        if (min_mod < rho * (1 - BigFloat("1e-3"))) break;
    }
    out.witness_min_modulus = min_mod;
    bool found_interior = min_mod < rho * (1 - BigFloat("1e-3"));
    out.witness_agrees = out.discrete ? !found_interior : found_interior;
    return out;
}

// ---------------------------------------------------------------------------
// Airy

namespace {

template <class R>
ThetaOp<R> airy_lambda_op(const R& q_cubed) {
    // (3 theta + 2)(3 theta + 1) - q^3 lambda^{-1}
    ThetaOp<R> a, b;
    a.var = b.var = "lambda";
    a.c.assign(2, Laurent<R>{});
    a.c[1] = Laurent<R>::constant(from_rational<R>(Rational(3)));
    a.c[0] = Laurent<R>::constant(from_rational<R>(Rational(2)));
    b.c.assign(2, Laurent<R>{});
    b.c[1] = Laurent<R>::constant(from_rational<R>(Rational(3)));
    b.c[0] = Laurent<R>::constant(from_rational<R>(Rational(1)));
    ThetaOp<R> h = compose(a, b);
    h.add_term(0, -1, ring_zero<R>() - q_cubed);
    h.normalize();
    return h;
}

template <class R>
ThetaOp<R> scale_op(const ThetaOp<R>& h, const Rational& s) {
    return h.template map_coeffs<R>([&](const R& a) { return from_rational<R>(s) * a; });
}

} // namespace

AiryModel build_airy(const Complex& q, long order) {
    if (scalar_ops<Complex>::is_zero(q))
        fail(ErrorKind::Domain, "q = 0 degenerates the polygon; unsupported");

    AiryModel out;
    out.q = q;

    Complex q3 = q * q * q;
    out.op_lambda = airy_lambda_op<Complex>(q3);
    out.op_x = scale_op(ramify(out.op_lambda, 2, "x"), Rational(4));

    // exact twin when q is rational
    if (q.im.is_zero()) {
        auto qr = detail::snap_rational(q.re, 1L << 30, precision_eps(8) * (1 + abs(q.re)));
        if (qr && BigFloat(*qr) == q.re) {
            out.q_exact = qr;
            Rational q3r = rational_pow(*qr, 3);
            out.op_lambda_exact = airy_lambda_op<Rational>(q3r);
            out.op_x_exact = scale_op(ramify(*out.op_lambda_exact, 2, "x"), Rational(4));
        }
    }

    // principal branch throughout
    out.u_plus = Complex(Rational(2, 3)) * pow(q, Rational(3, 2));
    out.u_minus = -out.u_plus;
    if (out.q_exact && *out.q_exact > 0) {
        Rational root;
        if (exact_sqrt(*out.q_exact, root)) out.u_exact = Rational(2, 3) * *out.q_exact * root;
    }

    // twist, specialize at u_{+-}, check beta = -1/2, conjugate, solve
    auto element = [&](const Complex& u, std::optional<Rational> u_rat,
                       PowerSeries<Complex>& series, std::optional<PowerSeries<Rational>>& exact,
                       BorelOperator<Complex>& bop, std::vector<Complex>& zeros) {
        ThetaOpC spec;
        std::optional<ThetaOpQ> spec_exact;
        if (u_rat && out.op_x_exact) {
            ThetaOp<PolyQ> hu = twist_op(*out.op_x_exact, 1);
            spec_exact = specialize_twist(hu, *u_rat);
            spec = spec_exact->map_coeffs<Complex>([](const Rational& a) { return Complex(a); });
        } else {
            ThetaOp<PolyC> hu = twist_op(out.op_x, 1);
            spec = detail::specialize_twist_at_complex(hu, u);
        }

        // indicial exponent must be -1/2
        if (spec_exact) {
            IndicialData<Rational> ind = indicial_polynomial(*spec_exact);
            if (ind.Q.degree() != 1 || !(-ind.Q.coeff(0) / ind.Q.coeff(1) == Rational(-1, 2)))
                fail(ErrorKind::ShapeUnsupported, "twisted indicial exponent is not -1/2");
        } else {
            Complex beta = detail::twisted_indicial_root(spec);
            if (abs(beta - Complex(Rational(-1, 2))) > precision_eps(static_cast<int>(precision_bits() / 2)))
                fail(ErrorKind::ShapeUnsupported, "twisted indicial exponent is not -1/2");
        }

        if (spec_exact) {
            ThetaOpQ conj_exact = conjugate_power(*spec_exact, Rational(-1, 2));
            PowerSeries<Rational> s = series_solution(conj_exact, Rational(0), order);
            exact = s;
            series = s.map<Complex>([](const Rational& a) { return Complex(a); });
            BorelOperator<Rational> bq = borel_transform_op(conj_exact);
            bop.premultiplied = bq.premultiplied;
            bop.theta_form = bq.theta_form.map_coeffs<Complex>(
                [](const Rational& a) { return Complex(a); });
            bop.d_form.clear();
            for (const auto& p : bq.d_form)
                bop.d_form.push_back(p.map<Complex>([](const Rational& a) { return Complex(a); }));
        } else {
            ThetaOpC conj = conjugate_power(spec, Rational(-1, 2));
            series = series_solution(conj, Rational(0), order);
            bop = borel_transform_op(conj);
        }

        // leading Borel coefficient must be proportional to zeta(zeta - 2u)
        const PolyC& lead = bop.d_form.back();
        if (lead.degree() != 2)
            fail(ErrorKind::ShapeUnsupported, "Borel leading coefficient is not quadratic");
        BigFloat scale = std::max({abs(lead.coeff(0)), abs(lead.coeff(1)), abs(lead.coeff(2))});
        if (abs(lead.coeff(0)) > scale * precision_eps(static_cast<int>(precision_bits() / 2)))
            fail(ErrorKind::ShapeUnsupported, "Borel leading coefficient has nonzero constant term");
        zeros = {Complex(0), -lead.coeff(1) / lead.coeff(2)};
    };

    element(out.u_plus, out.u_exact, out.h_plus, out.h_plus_exact, out.borel_plus,
            out.borel_plus_zeros);
    std::optional<Rational> u_minus_rat;
    if (out.u_exact) u_minus_rat = -*out.u_exact;
    element(out.u_minus, u_minus_rat, out.h_minus, out.h_minus_exact, out.borel_minus,
            out.borel_minus_zeros);
    return out;
}

} // namespace resurge
