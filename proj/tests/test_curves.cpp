#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "kd/curve.hpp"
#include "kd/fixtures.hpp"
#include "kd/json_io.hpp"

using namespace kd;

namespace {

CurveQ curve_E10() {
    return CurveQ(Rational(0), Rational(1316), Rational(0), Rational(212064),
                  Rational(78074896));
}

} // namespace

TEST_CASE("on_curve") {
    CurveQ E = curve_E10();
    CHECK(E.on_curve(PointQ::affine(Rational(-188), Rational(8836))));
    CHECK(!E.on_curve(PointQ::affine(Rational(1), Rational(1))));
    CHECK(E.on_curve(PointQ::infinity()));

    CurveQ Eastar(Rational(0), Rational(0), Rational(216), Rational(0), Rational(0));
    CHECK(Eastar.on_curve(PointQ::affine(Rational(0), Rational(0))));
}

TEST_CASE("singular curves are rejected") {
    CHECK_THROWS_AS(CurveQ(Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)),
                    SingularCurveError);
}

TEST_CASE("group law basics") {
    CurveQ E = curve_E10();
    PointQ P1 = PointQ::affine(Rational(-188), Rational(8836));
    PointQ P2 = PointQ::affine(Rational(0), Rational(-8836));

    CHECK(E.add(P1, PointQ::infinity()) == P1);
    CHECK(E.add(P1, E.neg(P1)).is_infinity());
    CHECK(E.add(P1, E.neg(P2)).x() == Rational(-1128));
    CHECK(E.mul(0, P1).is_infinity());
    CHECK(E.mul(2, P2) == PointQ::affine(Rational(-1172), Rational(-5228)));
    CHECK_THROWS_AS(E.add(P1, PointQ::affine(Rational(1), Rational(1))),
                    PointValidationError);
}

TEST_CASE("seven-torsion point") {
    // C_a at a = 2
    CurveQ C(Rational(5), Rational(2), Rational(8), Rational(0), Rational(0));
    PointQ K = PointQ::affine(Rational(0), Rational(0));
    CHECK(C.mul(7, K).is_infinity());
    CHECK(!C.mul(3, K).is_infinity());
    CHECK(*C.torsion_order(K) == 7);
}

TEST_CASE("torsion orders") {
    CurveQ E(Rational(0), Rational(-409948), Rational(0), Rational(20578452576),
             Rational::parse("-2360098139294192"));
    PointQ P1 = PointQ::affine(Rational(1054152), Rational(857435524));
    CHECK(*E.torsion_order(P1) == 5);

    // (0,0) on the quintic twist E*_a at a = 3
    CurveQ Eastar(Rational(-2), Rational(-3), Rational(-3), Rational(0), Rational(0));
    CHECK(*Eastar.torsion_order(PointQ::affine(Rational(0), Rational(0))) == 5);

    CurveQ E10 = curve_E10();
    CHECK(!E10.torsion_order(PointQ::affine(Rational(-188), Rational(8836))).has_value());
}

TEST_CASE("j-invariants") {
    // E*_{1,0} : y^2 = x^3 + 1316x^2 - 6786048x - 21410794352
    CurveQ E1(Rational(0), Rational(1316), Rational(0), Rational(-6786048),
              Rational::parse("-21410794352"));
    CHECK(E1.j_invariant() == Rational(-4096, 11));

    // E*_{1,-18} has the same j: the formula does not depend on b
    CurveQ E2(Rational(0), Rational(-409948), Rational(0), Rational::parse("-658510482432"),
              Rational::parse("647219253560911504"));
    CHECK(E2.j_invariant() == E1.j_invariant());
}

TEST_CASE("associativity and multiplication laws on random multiples") {
    CurveQ E = curve_E10();
    PointQ P1 = PointQ::affine(Rational(-188), Rational(8836));
    PointQ P2 = PointQ::affine(Rational(0), Rational(-8836));
    testutil::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        PointQ A = E.mul(rng.integer(-3, 3), P1);
        PointQ B = E.mul(rng.integer(-3, 3), P2);
        PointQ C = E.add(E.mul(rng.integer(-2, 2), P1), E.mul(rng.integer(-2, 2), P2));
        CHECK(E.add(E.add(A, B), C) == E.add(A, E.add(B, C)));
        CHECK(E.on_curve(E.add(A, B)));
    }
    for (long m = -10; m <= 10; m += 3)
        for (long n = -10; n <= 10; n += 4)
            CHECK(E.mul(m + n, P1) == E.add(E.mul(m, P1), E.mul(n, P1)));
}

TEST_CASE("every fixture generator lies on its curve") {
    Json fixtures = load_fixtures();
    int counted = 0;
    for (const char* kind : {"quintic", "cubic", "fixed_disc"}) {
        for (const auto& fx : fixtures.at(kind)) {
            if (!fx.contains("mw")) continue;
            for (const char* side : {"mw", "mw_star"}) {
                CurveQ C = curve_from_json(fx.at(side).at("curve"));
                for (const auto& pj : fx.at(side).at("free")) {
                    CHECK(C.on_curve(point_from_json(pj)));
                    ++counted;
                }
                for (const auto& tj : fx.at(side).at("torsion")) {
                    CHECK(C.on_curve(point_from_json(tj.at("point"))));
                    ++counted;
                }
            }
        }
    }
    CHECK(counted == 28);
}

TEST_CASE("group law over a quadratic extension") {
    Rational d(-47);
    QuadExt ctx(d, Rational(0), Rational(1));
    CurveQ E = curve_E10();
    CurveK EK = lift_curve(E, ctx);
    PointK P = lift_point(PointQ::affine(Rational(-188), Rational(8836)), ctx);
    CHECK(EK.on_curve(P));
    CHECK(EK.add(P, EK.neg(P)).is_infinity());
    CHECK(EK.mul(3, P) == lift_point(E.mul(3, PointQ::affine(Rational(-188), Rational(8836))), ctx));
}
