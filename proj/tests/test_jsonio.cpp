#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "kd/fixtures.hpp"
#include "kd/json_io.hpp"
#include "kd/septic.hpp"

using namespace kd;

TEST_CASE("rational serialization") {
    CHECK(rational_to_json(Rational(-7, 4)) == Json("-7/4"));
    CHECK(rational_to_json(Rational(12)) == Json("12"));
    CHECK(rational_from_json(Json("876160/9")) == Rational(876160, 9));
    CHECK(rational_from_json(Json(-5)) == Rational(-5));
    CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);

    testutil::Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        Rational r = rng.rational(1000, 100);
        CHECK(rational_from_json(rational_to_json(r)) == r);
    }
}

TEST_CASE("polynomial serialization") {
    UniPoly p = UniPoly::parse_expr("X^5-2X^4+X^3+X^2-X+1");
    Json j = poly_to_json(p);
    CHECK(j == Json::parse("[1,-1,1,1,-2,1]"));
    CHECK(poly_from_json(j) == p);

    // non-integral coefficients fall back to strings
    UniPoly q({Rational(1, 2), Rational(1)});
    Json jq = poly_to_json(q);
    CHECK(jq.at(0).is_string());
    CHECK(poly_from_json(jq) == q);

    // huge coefficients exceed int64 and travel as strings
    UniPoly big({Rational::parse("123456789012345678901234567890"), Rational(1)});
    Json jb = poly_to_json(big);
    CHECK(jb.at(0).is_string());
    CHECK(poly_from_json(jb) == big);

    CHECK(poly_from_json(Json::parse("[\"1/3\", 2]")) ==
          UniPoly({Rational(1, 3), Rational(2)}));
    CHECK_THROWS_AS(poly_from_json(Json("nope")), ParseError);
}

TEST_CASE("point serialization") {
    PointQ P = PointQ::affine(Rational(-188), Rational(8836));
    Json j = point_to_json(P);
    CHECK(j.at("x") == Json("-188"));
    CHECK(point_from_json(j) == P);
    CHECK(point_to_json(PointQ::infinity()) == Json("inf"));
    CHECK(point_from_json(Json("inf")).is_infinity());
    CHECK_THROWS_AS(point_from_json(Json("nowhere")), ParseError);
    CHECK_THROWS_AS(point_from_json(Json::parse("{\"x\": \"1\"}")), ParseError);
}

TEST_CASE("curve serialization") {
    CurveQ E(Rational(0), Rational(1316), Rational(0), Rational(212064),
             Rational(78074896));
    CHECK(curve_from_json(curve_to_json(E)) == E);
    CHECK_THROWS_AS(curve_from_json(Json::parse("{\"a1\": \"0\"}")), ParseError);
}

TEST_CASE("rational function and isogeny round trips") {
    SepticFamily fam{Rational(2)};
    const IsogenyMap& psi = fam.psi();
    CHECK(ratfunc_from_json(ratfunc_to_json(psi.x_map())) == psi.x_map());
    IsogenyMap back = isogeny_from_json(isogeny_to_json(psi));
    CHECK(back == psi);
    CHECK(back.kernel_generator() == psi.kernel_generator());
}

TEST_CASE("mw basis round trips") {
    Json fixtures = load_fixtures();
    for (const char* kind : {"quintic", "cubic", "fixed_disc"})
        for (const auto& fx : fixtures.at(kind)) {
            if (!fx.contains("mw")) continue;
            for (const char* side : {"mw", "mw_star"}) {
                MWBasis basis = mw_basis_from_json(fx.at(side));
                Json j = mw_basis_to_json(basis);
                MWBasis again = mw_basis_from_json(j);
                CHECK(again.curve == basis.curve);
                CHECK(again.free_gens == basis.free_gens);
                CHECK(again.torsion_gens == basis.torsion_gens);
            }
        }
}

TEST_CASE("malformed basis documents") {
    CHECK_THROWS_AS(mw_basis_from_json(Json::parse("{\"free\": []}")), ParseError);
    Json bad = Json::parse(R"({"curve": {"a1":"0","a2":"0","a3":"0","a4":"0","a6":"1"},
                               "free": "not-a-list", "torsion": []})");
    CHECK_THROWS_AS(mw_basis_from_json(bad), ParseError);
}
