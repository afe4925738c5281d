#include "doctest.h"

#include "resurge/models.hpp"
#include "resurge/newton.hpp"
#include "resurge/op_parser.hpp"

#include "test_support.hpp"

using namespace resurge;
using testsupport::Rng;
using testsupport::euler_op;
using testsupport::h2_op;

TEST_CASE("Euler polygon at zero") {
    NewtonPolygon np = newton_polygon(euler_op(), PolygonAt::Zero);
    REQUIRE(np.vertices.size() == 3);
    CHECK(np.vertices[0] == std::array<long, 2>{0, 0});
    CHECK(np.vertices[1] == std::array<long, 2>{1, 0});
    CHECK(np.vertices[2] == std::array<long, 2>{2, 1});
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0].q == 0);
    CHECK(np.slopes[0].length == 1);
    CHECK(np.slopes[1].q == 1);
    CHECK(np.slopes[1].length == 1);
}

TEST_CASE("quartic operator polygon") {
    NewtonPolygon np = newton_polygon(h2_op(), PolygonAt::Zero);
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0].q == 0);
    CHECK(np.slopes[1].q == 1);
}

TEST_CASE("partition-function polygons carry slope 1/(k-1), slope 1 after ramification") {
    for (long k = 2; k <= 6; ++k) {
        EkModel ek = build_Ek(k, 2);
        NewtonPolygon np = newton_polygon(ek.op_lambda, PolygonAt::Zero);
        auto sp = np.single_positive_slope();
        REQUIRE(sp.has_value());
        CHECK(*sp == Rational(1, k - 1));

        REQUIRE(ek.op_x.has_value());
        NewtonPolygon npx = newton_polygon(*ek.op_x, PolygonAt::Zero);
        auto spx = npx.single_positive_slope();
        REQUIRE(spx.has_value());
        CHECK(*spx == 1);
        // horizontal slope of length one in both pictures
        CHECK(np.horizontal_length() == 1);
        CHECK(npx.horizontal_length() == 1);
    }
}

TEST_CASE("polygon at infinity mirrors the inverted-variable polygon at zero") {
    Rng rng(57);
    for (int i = 0; i < 40; ++i) {
        ThetaOpQ h = rng.theta_op();
        NewtonPolygon inf = newton_polygon(h, PolygonAt::Infinity);
        NewtonPolygon zero_inverted = newton_polygon(invert_variable(h), PolygonAt::Zero);
        CHECK(inf == mirror_polygon(zero_inverted));
    }
}

TEST_CASE("slopes increase strictly along the lower boundary") {
    Rng rng(91);
    for (int i = 0; i < 40; ++i) {
        NewtonPolygon np = newton_polygon(rng.theta_op(4), PolygonAt::Zero);
        for (size_t s = 1; s < np.slopes.size(); ++s) CHECK(np.slopes[s - 1].q < np.slopes[s].q);
    }
}

TEST_CASE("indicial fixtures") {
    IndicialData<Rational> h2 = indicial_polynomial(h2_op());
    REQUIRE(h2.rational_roots.size() == 1);
    CHECK(h2.rational_roots[0] == 0);

    IndicialData<Rational> eu = indicial_polynomial(euler_op());
    REQUIRE(eu.rational_roots.size() == 1);
    CHECK(eu.rational_roots[0] == 1);

    // twisted Airy operator at u = 2/3 (q = 1):
    // 9 theta^2 + (18 - 12/x) theta + 8 - 6/x  ->  beta = -1/2
    ThetaOpQ airy;
    airy.c.assign(3, LaurentQ{});
    airy.add_term(2, 0, 9);
    airy.add_term(1, 0, 18);
    airy.add_term(1, -1, -12);
    airy.add_term(0, 0, 8);
    airy.add_term(0, -1, -6);
    IndicialData<Rational> ai = indicial_polynomial(airy);
    REQUIRE(ai.rational_roots.size() == 1);
    CHECK(ai.rational_roots[0] == Rational(-1, 2));
}

TEST_CASE("indicial rejects polygons without horizontal slope") {
    // Airy coupling operator: (3theta+2)(3theta+1) - lambda^{-1}
    ThetaOpQ h = parse_theta_op("9*theta^2 + 9*theta + 2 - x^-1");
    CHECK_THROWS_AS(indicial_polynomial(h), Error);
    try {
        indicial_polynomial(h);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoFormalSolution);
    }
}

TEST_CASE("determining fixtures") {
    DeterminingData eu = determining_polynomial(euler_op(), 1);
    CHECK(eu.P == PolyQ(std::vector<Rational>{0, -1, 1})); // u^2 - u
    REQUIRE(eu.exact_roots.size() == 1);
    CHECK(eu.exact_roots[0] == 1);

    DeterminingData h2 = determining_polynomial(h2_op(), 1);
    CHECK(h2.P == PolyQ(std::vector<Rational>{0, -1, 16})); // u(16u - 1)
    REQUIRE(h2.exact_roots.size() == 1);
    CHECK(h2.exact_roots[0] == Rational(1, 16));
}

TEST_CASE("determining polynomial for the ramified partition family") {
    for (long k = 3; k <= 6; ++k) {
        EkModel ek = build_Ek(k, 2);
        REQUIRE(ek.determining.has_value());
        const DeterminingData& det = *ek.determining;

        // P_k(u) = -m u + (-2km u)^k
        Rational m(1, k - 1);
        PolyQ expect;
        {
            std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
            c[1] = -m;
            c[static_cast<size_t>(k)] = rational_pow(Rational(-2 * k) * m, k);
            expect = PolyQ(std::move(c));
        }
        CHECK(det.P == expect);

        // nonzero roots satisfy u^{k-1} = (-1)^k m / (2km)^k to 1e-50
        Rational rhs = m / rational_pow(Rational(2 * k) * m, k);
        if (k % 2 != 0) rhs = -rhs;
        auto roots = det.all_roots();
        CHECK(static_cast<long>(roots.size()) == k - 1);
        for (const auto& u : roots) {
            Complex lhs = pow(u, k - 1);
            CHECK(abs(lhs - Complex(rhs)) < BigFloat("1e-50"));
        }
    }
}

TEST_CASE("twisted operators keep the polygon shape at determining roots") {
    for (long k : {2L, 3L}) {
        EkModel ek = build_Ek(k, 2);
        NewtonPolygon base = newton_polygon(*ek.op_x, PolygonAt::Zero);
        ThetaOpU hu = twist_op(*ek.op_x, 1);
        for (const auto& u : ek.exact_roots) {
            NewtonPolygon tw = newton_polygon(specialize_twist(hu, u), PolygonAt::Zero);
            CHECK(tw == base);
        }
        for (const auto& u : ek.determining->numeric_roots) {
            NewtonPolygon tw = newton_polygon(detail::specialize_twist_at(hu, u), PolygonAt::Zero);
            CHECK(tw == base);
        }
    }
}

TEST_CASE("the x^{1-k} theta^0 coefficient of the twisted family vanishes identically") {
    for (long k = 2; k <= 8; ++k) {
        EkModel ek = build_Ek(k, 2);
        ThetaOpU hu = twist_op(*ek.op_x, 1);
        PolyQ coeff = hu.coeff(0).coeff(1 - k);
        CHECK(coeff.is_zero());
    }
}

TEST_CASE("the theta^1 twisted coefficient never vanishes at determining roots") {
    for (long k = 2; k <= 8; ++k) {
        EkModel ek = build_Ek(k, 2);
        ThetaOpU hu = twist_op(*ek.op_x, 1);
        // Q_k(u) = m + 2 k^2 m (-2km u)^{k-1}, read off at x^{1-k} theta^1
        Rational m(1, k - 1);
        PolyQ qk = hu.coeff(1).coeff(1 - k);
        PolyQ expect;
        {
            std::vector<Rational> c(static_cast<size_t>(k - 1) + 1, Rational(0));
            c[0] = m;
            c[static_cast<size_t>(k - 1)] =
                Rational(2 * k * k) * m * rational_pow(Rational(-2 * k) * m, k - 1);
            expect = PolyQ(std::move(c));
        }
        CHECK(qk == expect);

        // no common root with the determining cofactor: gcd is constant
        PolyQ cof = ek.determining->P.shift_down(1);
        CHECK(poly_gcd(cof, qk).degree() == 0);
    }
}

TEST_CASE("repeated determining roots are rejected") {
    // x^2 theta^3 + 2x theta^2 + theta - 1 has P(u) = -u (u-1)^2
    ThetaOpQ h = parse_theta_op("x^2*theta^3 + 2*x*theta^2 + theta - 1");
    NewtonPolygon np = newton_polygon(h, PolygonAt::Zero);
    auto sp = np.single_positive_slope();
    REQUIRE(sp.has_value());
    CHECK(*sp == 1);
    CHECK_THROWS_AS(determining_polynomial(h, 1), Error);
    try {
        determining_polynomial(h, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MultipleRoot);
    }
}

TEST_CASE("fractional slopes are routed to ramification") {
    // slope 1/2 polygon
    ThetaOpQ h = parse_theta_op("x*theta^3 + theta - 1");
    NewtonPolygon np = newton_polygon(h, PolygonAt::Zero);
    auto sp = np.single_positive_slope();
    REQUIRE(sp.has_value());
    CHECK(*sp == Rational(1, 2));
    CHECK_THROWS_AS(determining_polynomial(h, Rational(1, 2)), Error);
    try {
        determining_polynomial(h, Rational(1, 2));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedRamification);
    }
}

TEST_CASE("slope strings for serialization") {
    NewtonPolygon np = newton_polygon(euler_op(), PolygonAt::Zero);
    CHECK(np.slopes.front().q.str() == "0");
    CHECK(np.slopes.back().q.str() == "1");
}
