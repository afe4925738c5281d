#include "doctest.h"

#include "resurge/borel_op.hpp"
#include "resurge/formal.hpp"
#include "resurge/op_parser.hpp"
#include "resurge/theta_op.hpp"

#include "test_support.hpp"

using namespace resurge;
using testsupport::Rng;
using testsupport::euler_op;
using testsupport::h2_op;

namespace {

PowerSeries<Rational> euler_series(long N) {
    // sum (-1)^n n! x^{n+1}
    std::vector<Rational> a(static_cast<size_t>(N) + 1);
    Rational f = 1;
    for (long n = 0; n <= N; ++n) {
        if (n > 0) f *= n;
        a[static_cast<size_t>(n)] = (n % 2 == 0) ? f : -f;
    }
    return PowerSeries<Rational>(1, 1, std::move(a));
}

} // namespace

TEST_CASE("apply_op on monomials") {
    ThetaOpQ th = ThetaOpQ::theta();
    PowerSeries<Rational> x(1, 1, {Rational(1)});
    PowerSeries<Rational> img = apply_op(th, x);
    CHECK(img.beta == 1);
    CHECK(img.coeff(0) == 1);
    CHECK(img.order() == 0);
}

TEST_CASE("the Euler operator annihilates its factorial series up to truncation") {
    ThetaOpQ h = euler_op();
    for (long N : {5L, 12L, 25L}) {
        PowerSeries<Rational> img = apply_op(h, euler_series(N));
        // everything at exponent <= N vanishes; a single term survives at N+2
        CHECK(img.beta == Rational(N + 2));
        CHECK(img.order() == 0);
        Rational expect = Rational(factorial(N)) * Rational((N + 1) * (N + 1));
        if (N % 2 == 1) expect = -expect;
        CHECK(img.coeff(0) == expect);
    }
}

TEST_CASE("the quartic operator applied to its series head leaves only the top remainder") {
    ThetaOpQ h = h2_op();
    PowerSeries<Rational> head(0, 1, {Rational(1), Rational(-3), Rational(105, 2)});
    PowerSeries<Rational> img = apply_op(h, head);
    // hand expansion: slots 0 and 1 cancel, slot 2 = (16*4 + 16*2 + 3) * 105/2
    CHECK(img.beta == 2);
    CHECK(img.order() == 0);
    CHECK(img.coeff(0) == Rational(99) * Rational(105, 2));
}

TEST_CASE("twist fixtures") {
    // theta with q = 1
    ThetaOpU t = twist_op(ThetaOpQ::theta(), 1);
    CHECK(t.order() == 1);
    CHECK(t.coeff(1).coeff(0) == PolyQ::constant(1));
    CHECK(t.coeff(0).coeff(-1) == PolyQ(std::vector<Rational>{0, -1})); // -u x^{-1}

    // Euler: x theta^2 + (1-2u) theta + (u-1) + (u^2-u) x^{-1}
    ThetaOpU e = twist_op(euler_op(), 1);
    CHECK(e.coeff(2).coeff(1) == PolyQ::constant(1));
    CHECK(e.coeff(1).coeff(0) == PolyQ(std::vector<Rational>{1, -2}));
    CHECK(e.coeff(0).coeff(0) == PolyQ(std::vector<Rational>{-1, 1}));
    CHECK(e.coeff(0).coeff(-1) == PolyQ(std::vector<Rational>{0, -1, 1}));

    // quartic: 16 theta^2 + (16 + (1-32u) x^-1) theta + 3 + u(16u-1) x^-2
    ThetaOpU q = twist_op(h2_op(), 1);
    CHECK(q.coeff(2).coeff(0) == PolyQ::constant(16));
    CHECK(q.coeff(1).coeff(0) == PolyQ::constant(16));
    CHECK(q.coeff(1).coeff(-1) == PolyQ(std::vector<Rational>{1, -32}));
    CHECK(q.coeff(0).coeff(0) == PolyQ::constant(3));
    CHECK(q.coeff(0).coeff(-2) == PolyQ(std::vector<Rational>{0, -1, 16}));
}

TEST_CASE("twist specialized at u = 0 is the identity transformation") {
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        ThetaOpQ h = rng.theta_op();
        ThetaOpU hu = twist_op(h, rng.range(1, 3));
        CHECK(specialize_twist(hu, Rational(0)) == h);
    }
}

TEST_CASE("two twists compose additively in the exponential coefficient") {
    // twisting by u then u' equals twisting by u + u', as polynomials in both
    // symbols (coefficients in Q[u][u'])
    using PolyUU = Poly<PolyQ>;
    Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        ThetaOpQ h = rng.theta_op(3);
        long q = rng.range(1, 2);

        ThetaOpU once = twist_op(h, q);
        ThetaOp<PolyUU> twice = twist_op(once, q); // u' is the new symbol

        // substitute u -> u + u' in the single twist: u^k -> (u + u')^k
        PolyUU u_plus_uprime(std::vector<PolyQ>{
            PolyQ(std::vector<Rational>{0, 1}), // u
            PolyQ::constant(1),                 // + u'
        });
        ThetaOp<PolyUU> subst = once.map_coeffs<PolyUU>([&](const PolyQ& p) {
            PolyUU acc;
            for (long d = p.degree(); d >= 0; --d) {
                acc = acc * u_plus_uprime;
                acc = acc + PolyUU::constant(PolyQ::constant(p.coeff(d)));
            }
            return acc;
        });
        CHECK(twice == subst);
    }
}

TEST_CASE("power conjugation") {
    // theta -> theta + beta
    ThetaOpQ t = conjugate_power(ThetaOpQ::theta(), Rational(5, 2));
    CHECK(t.coeff(1).coeff(0) == 1);
    CHECK(t.coeff(0).coeff(0) == Rational(5, 2));

    // Euler conjugated by beta = 1: the lowest-degree entry of the theta^0
    // coefficient vanishes because 1 solves the indicial equation
    ThetaOpQ e = conjugate_power(euler_op(), 1);
    CHECK(e.coeff(0).coeff(0) == 0);

    // identity conjugation
    CHECK(conjugate_power(h2_op(), 0) == h2_op());

    Rng rng(13);
    for (int i = 0; i < 25; ++i) {
        ThetaOpQ h = rng.theta_op();
        Rational b = rng.rational();
        CHECK(conjugate_power(conjugate_power(h, b), -b) == h);
    }
}

TEST_CASE("ramification") {
    CHECK(ramify(h2_op(), 1) == h2_op());

    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        ThetaOpQ h = rng.theta_op();
        long a = rng.range(1, 3), b = rng.range(1, 3);
        CHECK(ramify(ramify(h, a), b) == ramify(h, a * b));
    }
}

TEST_CASE("borel transform of the homogeneous Euler operator") {
    BorelOperator<Rational> bt = borel_transform_op(euler_op());
    CHECK(bt.premultiplied == 0);
    // (1 + zeta) theta + zeta
    ThetaOpQ expect;
    expect.var = "zeta";
    expect.c.assign(2, LaurentQ{});
    expect.c[1].add(0, 1);
    expect.c[1].add(1, 1);
    expect.c[0].add(1, 1);
    CHECK(bt.theta_form == expect);
}

TEST_CASE("borel transform of the quartic operator") {
    BorelOperator<Rational> bt = borel_transform_op(h2_op());
    // (16 z^2 + z) f'' + 2(32 z + 1) f' + 35 f
    REQUIRE(bt.d_form.size() == 3);
    CHECK(bt.d_form[2] == PolyQ(std::vector<Rational>{0, 1, 16}));
    CHECK(bt.d_form[1] == PolyQ(std::vector<Rational>{2, 64}));
    CHECK(bt.d_form[0] == PolyQ(std::vector<Rational>{35}));
}

TEST_CASE("borel transform of the twisted quartic operator") {
    ThetaOpQ h = specialize_twist(twist_op(h2_op(), 1), Rational(1, 16));
    // 16 theta^2 + (16 - x^-1) theta + 3
    CHECK(h.coeff(1).coeff(-1) == -1);
    BorelOperator<Rational> bt = borel_transform_op(h);
    CHECK(bt.d_form[2] == PolyQ(std::vector<Rational>{0, -1, 16}));
    CHECK(bt.d_form[1] == PolyQ(std::vector<Rational>{-2, 64}));
    CHECK(bt.d_form[0] == PolyQ(std::vector<Rational>{35}));
}

TEST_CASE("borel transform rejects levels other than one") {
    // slope-2 polygon
    ThetaOpQ h = parse_theta_op("theta + x^-2");
    CHECK_THROWS_AS(borel_transform_op(h), Error);
    try {
        borel_transform_op(h);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedLevel);
    }
}

TEST_CASE("minor coefficient sequences solve the transformed equation") {
    // Euler, shifted to valuation 2 by composing with x^{-1} on the right:
    // H o (x^{-1} .) annihilates x f when H annihilates f
    ThetaOpQ h = euler_op();
    ThetaOpQ h_shift = compose_right_monomial(h, -1);
    PowerSeries<Rational> g = euler_series(30);
    g.beta += 1; // x * euler series
    {
        PowerSeries<Rational> img = apply_op(h_shift, g);
        CHECK((img.is_zero() || img.beta > 30));
    }
    // minor of g: c_n = A_{n+1}/n! with A the absolute coefficients
    BorelOperator<Rational> bt = borel_transform_op(h_shift);
    std::vector<Rational> minor(31);
    for (long n = 0; n <= 30; ++n) {
        // g = sum (-1)^m m! x^{m+2}: A_{n+1} = (-1)^n (n-1)! for n >= 1
        minor[static_cast<size_t>(n)] =
            n == 0 ? Rational(0)
                   : Rational(factorial(n - 1)) * Rational(n % 2 == 0 ? 1 : -1) /
                         Rational(factorial(n));
    }
    PowerSeries<Rational> mhat(0, 1, std::move(minor));
    mhat.rebase();
    PowerSeries<Rational> img = apply_op(bt.theta_form, mhat);
    long trust = image_trust_order(bt.theta_form, mhat);
    for (long n = 0; n <= img.order(); ++n)
        if (img.beta + Rational(n) <= mhat.beta + Rational(trust)) CHECK(img.coeff(n) == 0);
}

TEST_CASE("the quartic minor solves the Borel-transformed equation exactly") {
    // coefficients a_{n+1} = -(4n+1)(4n+3)/(n+1) a_n; minor c_n = a_{n+1}/n!
    long N = 40;
    std::vector<Rational> a(static_cast<size_t>(N) + 2);
    a[0] = 1;
    for (long n = 0; n <= N; ++n)
        a[static_cast<size_t>(n + 1)] =
            -Rational((4 * n + 1) * (4 * n + 3), n + 1) * a[static_cast<size_t>(n)];
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n)
        c[static_cast<size_t>(n)] = a[static_cast<size_t>(n + 1)] / Rational(factorial(n));
    PowerSeries<Rational> minor(0, 1, std::move(c));

    BorelOperator<Rational> bt = borel_transform_op(h2_op());
    PowerSeries<Rational> img = apply_op(bt.theta_form, minor);
    long trust = image_trust_order(bt.theta_form, minor);
    for (long n = 0; n <= img.order(); ++n)
        if (img.beta + Rational(n) <= Rational(trust)) CHECK(img.coeff(n) == 0);
}

TEST_CASE("touchard polynomials") {
    CHECK(touchard(0) == PolyQ::constant(1));
    CHECK(touchard(1) == PolyQ(std::vector<Rational>{0, 1}));
    CHECK(touchard(2) == PolyQ(std::vector<Rational>{0, 1, 1}));
    CHECK(touchard(3) == PolyQ(std::vector<Rational>{0, 1, 3, 1}));
    for (long n = 2; n <= 8; ++n) {
        PolyQ t = touchard(n);
        CHECK(t.coeff(n) == 1);
        CHECK(t.coeff(n - 1) == Rational(n * (n - 1), 2));
        CHECK(t.coeff(0) == 0);
    }
}

TEST_CASE("twisting theta powers produces Touchard polynomials") {
    // e^{-u/x} [theta^n e^{u/x}] = (-1)^n T_n(u/x): apply the twisted power
    // (theta - u x^{-1})^n to the constant series 1
    for (long n = 0; n <= 8; ++n) {
        ThetaOpQ pw = ThetaOpQ::identity();
        for (long i = 0; i < n; ++i) pw = compose(ThetaOpQ::theta(), pw);
        ThetaOpU twisted = twist_op(pw, 1);

        PowerSeries<PolyQ> one(0, 1, {PolyQ::constant(1)});
        PowerSeries<PolyQ> img = apply_op(twisted, one);

        PolyQ t = touchard(n);
        if (n == 0) {
            CHECK(img.coeff(0) == PolyQ::constant(1));
            continue;
        }
        CHECK(img.beta == Rational(-n));
        // coefficient of x^{-k} should be (-1)^n s_{n,k} u^k
        for (long k = 1; k <= n; ++k) {
            Rational expect = t.coeff(k);
            if (n % 2 != 0) expect = -expect;
            PolyQ got = img.coeff(n - k);
            CHECK(got == PolyQ::monomial(k, expect));
        }
    }
}
