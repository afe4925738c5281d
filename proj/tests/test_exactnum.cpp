#include "doctest.h"

#include "resurge/laurent.hpp"
#include "resurge/poly.hpp"
#include "resurge/series.hpp"

#include "test_support.hpp"

using namespace resurge;
using testsupport::Rng;

TEST_CASE("rationals stay reduced with positive denominators") {
    Rational q = Rational(6) / Rational(-4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(Rational(0, 5) == Rational(0, 1));

    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.nonzero_rational(50, 40);
        CHECK(a * (Rational(1) / a) == Rational(1));
        CHECK(denominator(a) > 0);
    }
}

TEST_CASE("laurent products") {
    // (1+x)(1-x) = 1-x^2
    LaurentQ a, b;
    a.add(0, 1); a.add(1, 1);
    b.add(0, 1); b.add(1, -1);
    LaurentQ prod = a * b;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(2) == -1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.c.size() == 2);

    // x^-1 * x = 1
    CHECK(LaurentQ::monomial(-1, 1) * LaurentQ::monomial(1, 1) == LaurentQ::constant(1));

    // (16 + x^-1) * x = 16x + 1
    LaurentQ c;
    c.add(0, 16); c.add(-1, 1);
    LaurentQ d = c * LaurentQ::monomial(1, 1);
    CHECK(d.coeff(1) == 16);
    CHECK(d.coeff(0) == 1);
}

TEST_CASE("laurent ring axioms on random triples") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        LaurentQ a = rng.laurent(), b = rng.laurent(), c = rng.laurent();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("no zero coefficients are ever stored") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        LaurentQ a = rng.laurent(-3, 3, 5), b = rng.laurent(-3, 3, 5);
        for (const auto& [e, v] : (a * b - b * a).c) CHECK(!v.is_zero());
        for (const auto& [e, v] : (a + (-a)).c) CHECK(!v.is_zero());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("series_log basics") {
    // log(1) = 0
    PowerSeries<Rational> one = PowerSeries<Rational>::one(8);
    CHECK(series_log(one).is_zero());

    // log(1 + x) is the alternating harmonic series
    std::vector<Rational> a(11, Rational(0));
    a[0] = 1; a[1] = 1;
    PowerSeries<Rational> f(0, 1, a);
    PowerSeries<Rational> w = series_log(f);
    for (long n = 1; n <= 10; ++n) {
        Rational expect = Rational(n % 2 == 1 ? 1 : -1, n);
        CHECK(w.coeff(n) == expect);
    }
}

TEST_CASE("series_log matches a brute-force Mercator composition") {
    // oracle: log(1+g) = sum_{m>=1} (-1)^{m+1} g^m / m by naive expansion
    auto oracle = [](const PowerSeries<Rational>& f) {
        long N = f.order();
        PowerSeries<Rational> g = f;
        g.a[0] = 0;
        PowerSeries<Rational> acc(0, 1, std::vector<Rational>(static_cast<size_t>(N) + 1));
        PowerSeries<Rational> gp = g;
        for (long m = 1; m <= N; ++m) {
            Rational w(m % 2 == 1 ? 1 : -1, m);
            for (long n = 0; n <= N; ++n)
                acc.a[static_cast<size_t>(n)] += w * gp.coeff(n);
            gp = series_mul(gp, g);
        }
        return acc;
    };

    // the quartic partition-function head: 1 - 3 l + (105/2) l^2
    std::vector<Rational> a = {Rational(1), Rational(-3), Rational(105, 2)};
    PowerSeries<Rational> f(0, 1, a);
    PowerSeries<Rational> w = series_log(f);
    PowerSeries<Rational> expect = oracle(f);
    CHECK(w.coeff(1) == expect.coeff(1));
    CHECK(w.coeff(2) == expect.coeff(2));
    CHECK(w.coeff(1) == Rational(-3));
    CHECK(w.coeff(2) == Rational(48));

    Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        PowerSeries<Rational> r = rng.series_unit_constant(8);
        CHECK(series_log(r) == oracle(r));
    }
}

TEST_CASE("series_log inverts series_exp") {
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        PowerSeries<Rational> f = rng.series_unit_constant(10);
        PowerSeries<Rational> back = series_exp(series_log(f));
        CHECK(back == f);
    }
}

TEST_CASE("series_log rejects bad normalizations") {
    std::vector<Rational> a = {Rational(2), Rational(1)};
    PowerSeries<Rational> f(0, 1, a);
    CHECK_THROWS_AS(series_log(f), Error);
    try {
        series_log(f);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Normalization);
    }

    PowerSeries<Rational> g(Rational(1, 2), 2, {Rational(1)});
    try {
        series_log(g);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("poly gcd and rational roots") {
    // (u-1)^2 (u+2) is not squarefree; (u-1)(u+2) is
    PolyQ u1(std::vector<Rational>{-1, 1});
    PolyQ u2(std::vector<Rational>{2, 1});
    CHECK(!poly_squarefree(u1 * u1 * u2));
    CHECK(poly_squarefree(u1 * u2));

    PolyQ p = u1 * u2 * PolyQ(std::vector<Rational>{Rational(-1, 16), 1});
    auto roots = rational_roots(p);
    CHECK(roots.size() == 3);
    CHECK(std::find(roots.begin(), roots.end(), Rational(1)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(-2)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(1, 16)) != roots.end());
}

TEST_CASE("complex polynomial roots") {
    // u^2 + 1 -> +-i
    PolyC p(std::vector<Complex>{Complex(1), Complex(0), Complex(1)});
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK(abs(r.re) < precision_eps(40));
        CHECK(abs(abs(r.im) - 1) < precision_eps(40));
    }
}

TEST_CASE("exact rational square roots") {
    Rational out;
    CHECK(exact_sqrt(Rational(4), out));
    CHECK(out == 2);
    CHECK(exact_sqrt(Rational(9, 16), out));
    CHECK(out == Rational(3, 4));
    CHECK(!exact_sqrt(Rational(2), out));
    CHECK(!exact_sqrt(Rational(-4), out));
}
