#include "kd/quintic.hpp"

#include "kd/septic.hpp"
#include "kd/transform.hpp"

namespace kd {

namespace {

// Coefficient polynomials shared by d(a,b), the curve display and the
// parameter transform.
Rational c0_of(const Rational& a) {
    // a(4a^4 - 4a^3 - 40a^2 + 91a - 4)
    return a * (Rational(4) * a.pow(4) - Rational(4) * a.pow(3) - Rational(40) * a * a +
                Rational(91) * a - Rational(4));
}
Rational c1_of(const Rational& a) {
    // 2a(3a+1)(4a-7)
    return Rational(2) * a * (Rational(3) * a + Rational(1)) * (Rational(4) * a - Rational(7));
}
Rational c2_of(const Rational& a) {
    // a^2 - 30a + 1
    return a * a - Rational(30) * a + Rational(1);
}

CurveQ curve_E(const Rational& a, const Rational& d) {
    return CurveQ(Rational(0), d * c2_of(a), Rational(0),
                  Rational(-8) * d * d * c1_of(a) / Rational(2), // -8 d^2 a(3a+1)(4a-7)
                  Rational(-16) * d.pow(3) * c0_of(a));
}

CurveQ curve_Ea_star(const Rational& a) {
    // y^2 - (a-1)xy - ay = x^3 - ax^2
    return CurveQ(-(a - Rational(1)), -a, -a, Rational(0), Rational(0));
}

CurveQ curve_Ea(const Rational& a) {
    // y^2 - (a-1)xy - ay = x^3 - ax^2 - 5a(a^2+2a-1)x - a(a^4+10a^3-5a^2+15a-1)
    return CurveQ(-(a - Rational(1)), -a, -a,
                  Rational(-5) * a * (a * a + Rational(2) * a - Rational(1)),
                  -a * (a.pow(4) + Rational(10) * a.pow(3) - Rational(5) * a * a +
                        Rational(15) * a - Rational(1)));
}

// f: E_{a,b} -> E_a, given as the coordinate change x = u^2 x' + r, ...
template <class K>
CurveTransform<K> f_transform(const Rational& a, const Rational& d, const K& sqrt_d) {
    K u = embed(sqrt_d, Rational(2)) * sqrt_d;
    K r = embed(sqrt_d, Rational(8) * a * d);
    K s = embed(sqrt_d, -(a - Rational(1))) * sqrt_d;
    K t = embed(sqrt_d, Rational(-4) * a * d) * sqrt_d;
    return CurveTransform<K>{u, r, s, t};
}

// f*: E*_{a,b} -> E*_a.
template <class K>
CurveTransform<K> fstar_transform(const Rational& a, const Rational& d, const K& sqrt_d) {
    K u = embed(sqrt_d, Rational(10)) * sqrt_d;
    K r = embed(sqrt_d, Rational(8) * d * (a * a - Rational(5) * a + Rational(1)));
    K s = embed(sqrt_d, Rational(-5) * (a - Rational(1))) * sqrt_d;
    K t = embed(sqrt_d, Rational(-500) * a * d) * sqrt_d;
    return CurveTransform<K>{u, r, s, t};
}

Rational lower(const Rational& x) { return x; }
Rational lower(const QuadExt& x) {
    if (!x.is_rational())
        throw ConjugationError("sqrt(d) component failed to cancel: " + x.str());
    return x.u();
}

template <class K>
CurveQ lower_curve(const WeierstrassCurve<K>& E) {
    return CurveQ(lower(E.a1()), lower(E.a2()), lower(E.a3()), lower(E.a4()), lower(E.a6()));
}

} // namespace

UniPoly brumer_poly(const Rational& a, const Rational& b) {
    return UniPoly({a, b, a * a - a - Rational(2) * b - Rational(1), -(a - b - Rational(3)),
                    a - Rational(3), Rational(1)});
}

Rational quintic_d(const Rational& a, const Rational& b) {
    return Rational(-4) * b.pow(3) + c2_of(a) * b * b + c1_of(a) * b - c0_of(a);
}

Rational hoshi_rikuna_p(const Rational& a, const Rational& b) {
    // b^4 + a(3a+1)(4a-7) b^2 - 2a(4a^4-4a^3-40a^2+91a-4) b
    //   + a(a^6+5a^5-81a^4+352a^3-634a^2-65a-1)
    return b.pow(4) + (c1_of(a) / Rational(2)) * b * b - Rational(2) * c0_of(a) * b +
           a * (a.pow(6) + Rational(5) * a.pow(5) - Rational(81) * a.pow(4) +
                Rational(352) * a.pow(3) - Rational(634) * a * a - Rational(65) * a -
                Rational(1));
}

Rational hoshi_rikuna_q(const Rational& a, const Rational& b) {
    // 4b^3 - (a^2-30a+1) b^2 - 2a(3a+1)(4a-7) b + a(4a^4-4a^3-40a^2+91a-4) = -d(a,b)
    return Rational(4) * b.pow(3) - c2_of(a) * b * b - c1_of(a) * b + c0_of(a);
}

Rational hoshi_rikuna(const Rational& a, const Rational& b) {
    Rational q = hoshi_rikuna_q(a, b);
    if (q.is_zero()) throw PoleError("parameter transform has a pole at this (a, b)");
    return hoshi_rikuna_p(a, b) / q;
}

UniPoly septic_poly(const Rational& a, const Rational& b) {
    return septic_N(a) - b * septic_D(a);
}

QuinticFamily::QuinticFamily(const Rational& a, const Rational& b)
    : params_{a, b, quintic_d(a, b)},
      sqrt_d_(rational_sqrt(params_.d)),
      E_([&] {
          if (a.is_zero()) throw InvalidParametersError("quintic family needs a != 0");
          if (params_.d.is_zero())
              throw InvalidParametersError("d(a, b) = 0: no associated curve");
          try {
              return curve_E(a, params_.d);
          } catch (const SingularCurveError&) {
              throw InvalidParametersError("E_{a,b} is singular at (a, b) = (" + a.str() +
                                           ", " + b.str() + ")");
          }
      }()),
      Ea_(curve_Ea(a)),
      Eastar_(curve_Ea_star(a)),
      lambda_star_(velu(Eastar_, PointQ::affine(Rational(0), Rational(0)), 5)),
      Estar_([&] {
          if (sqrt_d_) return build_estar(*sqrt_d_);
          return build_estar(QuadExt(params_.d, Rational(0), Rational(1)));
      }()),
      P0_(PointQ::affine(Rational(-4) * params_.d * b, Rational(4) * params_.d * params_.d)) {
    if (lambda_star_.codomain() != Ea_)
        throw InvalidParametersError("Velu codomain disagrees with the twist model");
    if (!E_.on_curve(P0_))
        throw InvalidParametersError("base point fell off E_{a,b}");
}

template <class K>
CurveQ QuinticFamily::build_estar(const K& sqrt_d) const {
    auto fstar = fstar_transform(params_.a, params_.d, sqrt_d);
    auto lifted = lift_curve(Eastar_, sqrt_d);
    return lower_curve(fstar.inverse().push_curve(lifted));
}

template <class K>
PointQ QuinticFamily::phi_star_impl(const PointQ& Pstar, const K& sqrt_d) const {
    auto fstar = fstar_transform(params_.a, params_.d, sqrt_d);
    auto f = f_transform(params_.a, params_.d, sqrt_d);
    auto on_twist = fstar.push_point(lift_point(Pstar, sqrt_d));
    auto image = lambda_star_.evaluate_raw(on_twist);
    auto back = f.pull_point(image);
    if (back.is_infinity()) return PointQ::infinity();
    PointQ result = PointQ::affine(lower(back.x()), lower(back.y()));
    if (!E_.on_curve(result))
        throw PointValidationError("phi* image left E_{a,b}");
    return result;
}

PointQ QuinticFamily::phi_star_eval(const PointQ& Pstar) const {
    if (!Estar_.on_curve(Pstar))
        throw PointValidationError("phi* argument is not on E*_{a,b}");
    if (Pstar.is_infinity()) return Pstar;
    if (sqrt_d_) return phi_star_impl(Pstar, *sqrt_d_);
    return phi_star_impl(Pstar, QuadExt(params_.d, Rational(0), Rational(1)));
}

Rational QuinticFamily::point_to_beta(const PointQ& P) const {
    if (P.is_infinity()) throw InfinityError("beta of the point at infinity");
    return P.x() / (Rational(-4) * params_.d);
}

UniPoly QuinticFamily::brumer_from_point(const PointQ& P) const {
    return brumer_poly(params_.a, point_to_beta(P));
}

UniPoly QuinticFamily::kummer_poly(const PointQ& P) const {
    if (P.is_infinity()) throw InfinityError("Kummer polynomial of the point at infinity");
    Rational xfP = P.x() / (Rational(4) * params_.d) - Rational(2) * params_.a;
    return lambda_star_.x_map().num() - xfP * lambda_star_.x_map().den();
}

Rational QuinticFamily::doubling_transform(const PointQ& P) const {
    if (P.is_infinity()) throw InfinityError("doubling transform of the point at infinity");
    PointQ doubled = E_.mul(2, P);
    if (doubled.is_infinity())
        throw InfinityError("[2]P is the point at infinity; no parameter attached");
    return doubled.x() / (Rational(-4) * params_.d);
}

} // namespace kd
