#include "kd/cubic.hpp"

#include "kd/transform.hpp"

namespace kd {

namespace {

CurveQ curve_minus_432(const Rational& C) {
    return CurveQ(Rational(0), Rational(0), Rational(0), Rational(0), Rational(-432) * C);
}
CurveQ curve_plus_11664(const Rational& C) {
    return CurveQ(Rational(0), Rational(0), Rational(0), Rational(0), Rational(11664) * C);
}

CurveQ curve_Ea(const Rational& a) {
    // y^2 + 216a y = x^3 - 326592 a^2
    return CurveQ(Rational(0), Rational(0), Rational(216) * a, Rational(0),
                  Rational(-326592) * a * a);
}
CurveQ curve_Ea_star(const Rational& a) {
    // y^2 + 216a y = x^3
    return CurveQ(Rational(0), Rational(0), Rational(216) * a, Rational(0), Rational(0));
}

// f: E_{a,b} -> E_a, (x, y) |-> (9x/d, -27y/(d sqrt d) - 108a).
template <class K>
CurveTransform<K> f_transform(const Rational& a, const Rational& d, const K& sqrt_d) {
    K u = embed(sqrt_d, Rational(-1, 3)) * sqrt_d;
    K zero = embed(sqrt_d, Rational(0));
    K t = embed(sqrt_d, Rational(-4) * a * d) * sqrt_d;
    return CurveTransform<K>{u, zero, zero, t};
}

// f*: E*_{a,b} -> E*_a, (x, y) |-> (x/d, y/(d sqrt d) - 108a).
template <class K>
CurveTransform<K> fstar_transform(const Rational& a, const Rational& d, const K& sqrt_d) {
    K zero = embed(sqrt_d, Rational(0));
    K t = embed(sqrt_d, Rational(108) * a * d) * sqrt_d;
    return CurveTransform<K>{sqrt_d, zero, zero, t};
}

Rational lower(const Rational& x) { return x; }
Rational lower(const QuadExt& x) {
    if (!x.is_rational())
        throw ConjugationError("sqrt(d) component failed to cancel: " + x.str());
    return x.u();
}

} // namespace

Rational cubic_d(const Rational& a, const Rational& b) {
    return -(Rational(4) * b.pow(3) + Rational(27) * a * a);
}

UniPoly cubic_poly(const Rational& a, const Rational& b) {
    return UniPoly({a, b, Rational(0), Rational(1)});
}

IsogenyMap explicit_phi(const Rational& C) {
    CurveQ dom = curve_minus_432(C);
    CurveQ cod = curve_plus_11664(C);
    UniPoly x2 = UniPoly::monomial(2, Rational(1));
    UniPoly x3 = UniPoly::monomial(3, Rational(1));
    // x |-> (x^3 - 1728C)/x^2,  y |-> (x^3 + 3456C) y / x^3
    RatFunc xmap(x3 - UniPoly::constant(Rational(1728) * C), x2);
    IsogenyYMap ymap{UniPoly(), x3 + UniPoly::constant(Rational(3456) * C), x3};
    return IsogenyMap(dom, cod, xmap, ymap, 3);
}

IsogenyMap explicit_phi_star(const Rational& C) {
    CurveQ dom = curve_plus_11664(C);
    CurveQ cod = curve_minus_432(C);
    UniPoly x2 = UniPoly::monomial(2, Rational(9));
    UniPoly x3 = UniPoly::monomial(3, Rational(27));
    // x |-> (x^3 + 46656C)/(9x^2),  y |-> (-x^3 + 93312C) y / (27x^3)
    RatFunc xmap(UniPoly::monomial(3, Rational(1)) + UniPoly::constant(Rational(46656) * C),
                 x2);
    IsogenyYMap ymap{UniPoly(),
                     -UniPoly::monomial(3, Rational(1)) +
                         UniPoly::constant(Rational(93312) * C),
                     x3};
    return IsogenyMap(dom, cod, xmap, ymap, 3);
}

CubicFamily::CubicFamily(const Rational& a, const Rational& b)
    : params_{a, b, cubic_d(a, b)},
      sqrt_d_(rational_sqrt(params_.d)),
      E_([&] {
          if (a.is_zero()) throw InvalidParametersError("cubic family needs a != 0");
          if (params_.d.is_zero())
              throw InvalidParametersError("4b^3 + 27a^2 = 0: degenerate cubic");
          return curve_minus_432(a * a * params_.d.pow(3));
      }()),
      Estar_(curve_plus_11664(a * a * params_.d.pow(3))),
      Ea_(curve_Ea(a)),
      Eastar_(curve_Ea_star(a)),
      phi_(explicit_phi(a * a * params_.d.pow(3))),
      phi_star_(explicit_phi_star(a * a * params_.d.pow(3))),
      lambda_star_(velu(Eastar_, PointQ::affine(Rational(0), Rational(0)), 3)) {
    if (lambda_star_.codomain() != Ea_)
        throw InvalidParametersError("Velu codomain disagrees with the twist model");
    auto order = Eastar_.torsion_order(PointQ::affine(Rational(0), Rational(0)));
    if (!order || *order != 3)
        throw InvalidParametersError("(0,0) must have order 3 on E*_a");
}

PointQ CubicFamily::phi_star_eval(const PointQ& Pstar) const {
    if (!Estar_.on_curve(Pstar))
        throw PointValidationError("phi* argument is not on E*_{a,b}");
    return phi_star_.evaluate(Pstar);
}

template <class K>
PointQ CubicFamily::conjugated_impl(const PointQ& Pstar, const K& sqrt_d) const {
    auto fstar = fstar_transform(params_.a, params_.d, sqrt_d);
    auto f = f_transform(params_.a, params_.d, sqrt_d);
    auto on_twist = fstar.push_point(lift_point(Pstar, sqrt_d));
    auto image = lambda_star_.evaluate_raw(on_twist);
    auto back = f.pull_point(image);
    if (back.is_infinity()) return PointQ::infinity();
    PointQ result = PointQ::affine(lower(back.x()), lower(back.y()));
    if (!E_.on_curve(result)) throw PointValidationError("conjugated phi* image left E");
    return result;
}

PointQ CubicFamily::phi_star_eval_conjugated(const PointQ& Pstar) const {
    if (!Estar_.on_curve(Pstar))
        throw PointValidationError("phi* argument is not on E*_{a,b}");
    if (Pstar.is_infinity()) return Pstar;
    if (sqrt_d_) return conjugated_impl(Pstar, *sqrt_d_);
    return conjugated_impl(Pstar, QuadExt(params_.d, Rational(0), Rational(1)));
}

Rational CubicFamily::point_to_beta(const PointQ& P) const {
    if (P.is_infinity()) throw InfinityError("beta of the point at infinity");
    return P.x() / (Rational(-4) * params_.d);
}

UniPoly CubicFamily::cubic_from_point(const PointQ& P) const {
    return cubic_poly(params_.a, point_to_beta(P));
}

FixedDiscCurve fixed_disc_curve(const Rational& D) {
    if (D.is_zero()) throw InvalidParametersError("fixed discriminant must be nonzero");
    return FixedDiscCurve{D, curve_minus_432(D), curve_plus_11664(D), explicit_phi_star(D)};
}

UniPoly cubic_from_point(const FixedDiscCurve& fd, const PointQ& P) {
    if (P.is_infinity())
        throw InfinityError("no cubic attached to the point at infinity");
    if (!fd.E.on_curve(P)) throw PointValidationError("point is not on E_D");
    return UniPoly({-(P.y() / Rational(108)), -(P.x() / Rational(12)), Rational(0),
                    Rational(1)});
}

MonicCubicPoint point_from_monic(const UniPoly& g) {
    if (g.degree() != 3 || !g.is_monic())
        throw ShapeError("expected a monic cubic polynomial");
    Rational p = -g.coeff(2), q = g.coeff(1), r = -g.coeff(0);
    Rational D = poly_discriminant(g);
    if (D.is_zero()) throw InvalidParametersError("cubic has zero discriminant");
    Rational x = Rational(4) * (p * p - Rational(3) * q);
    Rational y = Rational(4) * (Rational(2) * p.pow(3) - Rational(9) * p * q + Rational(27) * r);
    return MonicCubicPoint{D, PointQ::affine(x, y)};
}

CubicParams reduce_to_family(const FixedDiscCurve& fd, const PointQ& P_g) {
    if (P_g.is_infinity()) throw InfinityError("cannot reduce the point at infinity");
    if (!fd.E.on_curve(P_g)) throw PointValidationError("point is not on E_D");
    Rational a = -(fd.D * fd.D);
    Rational b = -(fd.D / Rational(4)) * P_g.x();
    return CubicParams{a, b, cubic_d(a, b)};
}

} // namespace kd
