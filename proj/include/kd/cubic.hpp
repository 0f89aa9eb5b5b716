#pragma once

#include <optional>
#include <utility>

#include "kd/curve.hpp"
#include "kd/isogeny.hpp"
#include "kd/poly.hpp"

namespace kd {

struct CubicParams {
    Rational a, b, d;
};

/// d(a, b) = -(4b^3 + 27a^2), the discriminant of X^3 + bX + a.
Rational cubic_d(const Rational& a, const Rational& b);

/// X^3 + bX + a.
UniPoly cubic_poly(const Rational& a, const Rational& b);

/// Degree-3 isogeny y^2 = x^3 - 432C  ->  y^2 = x^3 + 11664C,
/// x |-> (x^3 - 1728C)/x^2.
IsogenyMap explicit_phi(const Rational& C);

/// Its dual, y^2 = x^3 + 11664C -> y^2 = x^3 - 432C,
/// x |-> (x^3 + 46656C)/(9x^2).
IsogenyMap explicit_phi_star(const Rational& C);

/// Curves and maps for the cubic family X^3 + bX + a: E / E* over Q with the
/// printed degree-3 isogenies, the twists E_a / E*_a, and lambda* from Velu.
class CubicFamily {
public:
    CubicFamily(const Rational& a, const Rational& b);

    const CubicParams& params() const { return params_; }
    bool is_degenerate() const { return sqrt_d_.has_value(); }

    const CurveQ& E() const { return E_; }
    const CurveQ& Estar() const { return Estar_; }
    const CurveQ& Ea() const { return Ea_; }
    const CurveQ& Eastar() const { return Eastar_; }
    const IsogenyMap& phi() const { return phi_; }
    const IsogenyMap& phi_star() const { return phi_star_; }
    const IsogenyMap& lambda_star() const { return lambda_star_; }

    /// Image under the printed dual isogeny (the primary route).
    PointQ phi_star_eval(const PointQ& Pstar) const;

    /// The same image computed as f^-1 after lambda* after f* through
    /// Q(sqrt(d)); cross-checks the commutative diagram.
    PointQ phi_star_eval_conjugated(const PointQ& Pstar) const;

    /// beta = x(P) / (-4d); the class of P fixes the splitting field of
    /// X^3 + beta X + a.
    Rational point_to_beta(const PointQ& P) const;
    UniPoly cubic_from_point(const PointQ& P) const;

private:
    template <class K>
    PointQ conjugated_impl(const PointQ& Pstar, const K& sqrt_d) const;

    CubicParams params_;
    std::optional<Rational> sqrt_d_;
    CurveQ E_;
    CurveQ Estar_;
    CurveQ Ea_;
    CurveQ Eastar_;
    IsogenyMap phi_;
    IsogenyMap phi_star_;
    IsogenyMap lambda_star_;
};

/// y^2 = x^3 - 432 D together with its 3-isogenous partner y^2 = x^3 + 11664 D
/// and the dual isogeny between them.
struct FixedDiscCurve {
    Rational D;
    CurveQ E;
    CurveQ Estar;
    IsogenyMap phi_star; // Estar -> E
};

FixedDiscCurve fixed_disc_curve(const Rational& D);

/// F(P; X) = X^3 - x(P)/12 X - y(P)/108; its discriminant is D.
UniPoly cubic_from_point(const FixedDiscCurve& fd, const PointQ& P);

/// For monic g = X^3 - pX^2 + qX - r with disc(g) != 0: the point
/// P_g = (4(p^2-3q), 4(2p^3-9pq+27r)) on E_{disc(g)}.
struct MonicCubicPoint {
    Rational D;
    PointQ P;
};
MonicCubicPoint point_from_monic(const UniPoly& g);

/// (a, b) = (-D^2, -D x(P_g)/4), the family parameters of the fixed-disc model.
CubicParams reduce_to_family(const FixedDiscCurve& fd, const PointQ& P_g);

} // namespace kd
