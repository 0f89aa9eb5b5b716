#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "kd/poly.hpp"
#include "kd/quadext.hpp"

using namespace kd;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(0, 5).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-7/4") == Rational(-7, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("876160/9").den() == 9);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("rational arithmetic") {
    Rational a(3, 4), b(-2, 5);
    CHECK(a + b == Rational(7, 20));
    CHECK(a * b == Rational(-3, 10));
    CHECK(a / b == Rational(-15, 8));
    CHECK(a.inv() == Rational(4, 3));
    CHECK(b.pow(-2) == Rational(25, 4));
    CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
}

TEST_CASE("rational square detection") {
    CHECK(*rational_sqrt(Rational(4, 9)) == Rational(2, 3));
    CHECK(*rational_sqrt(Rational(14641)) == Rational(121));
    CHECK(!rational_sqrt(Rational(-47)).has_value());
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(*rational_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("quadratic extension arithmetic") {
    Rational d(-47);
    QuadExt one_plus(d, Rational(1), Rational(1));
    QuadExt one_minus(d, Rational(1), Rational(-1));
    CHECK((one_plus * one_minus).is_rational());
    CHECK((one_plus * one_minus).u() == Rational(1) - d);

    QuadExt root(d, Rational(0), Rational(1));
    CHECK(root.inv() == QuadExt(d, Rational(0), d.inv()));
    CHECK(root * root.inv() == QuadExt(d, Rational(1), Rational(0)));

    QuadExt z(d, Rational(3), Rational(2));
    CHECK(z.norm() == Rational(197));
    CHECK(z.conj() == QuadExt(d, Rational(3), Rational(-2)));
    CHECK_THROWS_AS(QuadExt(d, Rational(0), Rational(0)).inv(), DivisionByZero);
    CHECK_THROWS_AS(z + QuadExt(Rational(5), Rational(1), Rational(1)), FieldMismatchError);
}

TEST_CASE("quadratic extension rejects square radicands") {
    CHECK_THROWS_AS(QuadExt(Rational(4), Rational(1), Rational(1)), InvalidParametersError);
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), Rational(1)), InvalidParametersError);
}

TEST_CASE("norm is multiplicative") {
    testutil::Rng rng(11);
    Rational d(-47);
    for (int i = 0; i < 100; ++i) {
        QuadExt x(d, rng.rational(), rng.rational());
        QuadExt y(d, rng.rational(), rng.rational());
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("polynomial basics") {
    UniPoly p = UniPoly::parse_expr("X^5-2X^4+2X^3-X^2+1");
    CHECK(p.degree() == 5);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(4) == Rational(-2));
    CHECK(p.is_monic());
    CHECK(UniPoly::parse_expr("2*X+1/3") == UniPoly({Rational(1, 3), Rational(2)}));
    CHECK_THROWS_AS(UniPoly::parse_expr("X^+"), ParseError);

    UniPoly q = UniPoly::parse_expr("X^2-1");
    auto [quo, rem] = (p * q).divmod(q);
    CHECK(quo == p);
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(p.divmod(UniPoly()), ZeroPolynomialError);
}

TEST_CASE("polynomial reversal and composition") {
    UniPoly p = UniPoly::parse_expr("X^3+2X+5");
    CHECK(p.reversed(3) == UniPoly({Rational(1), Rational(0), Rational(2), Rational(5)}));
    UniPoly inner = UniPoly::parse_expr("X+1");
    CHECK(p.compose(inner).eval(Rational(2)) == p.eval(Rational(3)));
}

TEST_CASE("polynomial gcd") {
    UniPoly a = UniPoly::parse_expr("X^2-1");
    UniPoly b = UniPoly::parse_expr("X^2-2X+1");
    CHECK(UniPoly::gcd(a, b) == UniPoly::parse_expr("X-1"));
    CHECK(UniPoly::gcd(a, UniPoly()) == a.monic());
}

TEST_CASE("resultants") {
    CHECK(poly_resultant(UniPoly::parse_expr("X-1"), UniPoly::parse_expr("X+1")) ==
          Rational(2));
    CHECK(poly_resultant(UniPoly::parse_expr("X+1"), UniPoly::parse_expr("X-1")) ==
          Rational(-2));
    CHECK(poly_resultant(UniPoly::parse_expr("X^2+1"), UniPoly::parse_expr("X")) ==
          Rational(1));
    CHECK(poly_resultant(UniPoly::parse_expr("X^3+X+1"), UniPoly::parse_expr("3X^2+1")) ==
          Rational(31));
    CHECK_THROWS_AS(poly_resultant(UniPoly(), UniPoly::parse_expr("X")),
                    ZeroPolynomialError);
}

TEST_CASE("discriminants") {
    CHECK(poly_discriminant(UniPoly::parse_expr("X^2+1")) == Rational(-4));
    CHECK(poly_discriminant(UniPoly::parse_expr("X^3+X+1")) == Rational(-31));
    CHECK(poly_discriminant(UniPoly::parse_expr("X^5-2X^4+2X^3-X^2+1")) == Rational(2209));
    CHECK_THROWS_AS(poly_discriminant(UniPoly::parse_expr("X+1")), DegreeError);
}

TEST_CASE("depressed cubic discriminant formula") {
    testutil::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Rational a = rng.rational(), b = rng.rational();
        UniPoly p({a, b, Rational(0), Rational(1)});
        if (p.degree() != 3) continue;
        Rational expected = -(Rational(4) * b.pow(3) + Rational(27) * a * a);
        if (expected.is_zero()) continue;
        CHECK(poly_discriminant(p) == expected);
    }
}

TEST_CASE("rational function normalization") {
    RatFunc f(UniPoly::parse_expr("2X^2-2"), UniPoly::parse_expr("4X-4"));
    CHECK(f.num() == UniPoly::parse_expr("1/2X+1/2"));
    CHECK(f.den() == UniPoly::constant(Rational(1)));
    RatFunc again(f.num(), f.den());
    CHECK(again == f);

    RatFunc g(UniPoly::parse_expr("X"), UniPoly::parse_expr("X^2"));
    CHECK(!g.eval(Rational(0)).has_value());
    CHECK(*g.eval(Rational(3)) == Rational(1, 3));
}

TEST_CASE("homogenized composition") {
    UniPoly p = UniPoly::parse_expr("X^2+X+1");
    UniPoly N = UniPoly::parse_expr("X+1");
    UniPoly D = UniPoly::parse_expr("X-2");
    UniPoly h = compose_homogenized(p, N, D);
    Rational x(5);
    Rational lhs = h.eval(x);
    Rational rhs = p.eval(N.eval(x) / D.eval(x)) * (D.eval(x).pow(2));
    CHECK(lhs == rhs);
}
