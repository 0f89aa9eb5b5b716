#pragma once

#include <optional>

#include "kd/curve.hpp"
#include "kd/isogeny.hpp"
#include "kd/poly.hpp"

namespace kd {

struct QuinticParams {
    Rational a, b, d;
};

/// X^5 + (a-3)X^4 - (a-b-3)X^3 + (a^2-a-2b-1)X^2 + bX + a.
UniPoly brumer_poly(const Rational& a, const Rational& b);

/// Square class invariant d(a, b); disc of the Brumer quintic is a^2 d^2.
Rational quintic_d(const Rational& a, const Rational& b);

/// The two polynomials of the closed-form parameter transform phi = p/q.
Rational hoshi_rikuna_p(const Rational& a, const Rational& b);
Rational hoshi_rikuna_q(const Rational& a, const Rational& b);

/// phi(a, b) = p/q; throws PoleError when q vanishes.
Rational hoshi_rikuna(const Rational& a, const Rational& b);

/// Dihedral septic family N_a(X) - b D_a(X) (see septic.hpp for the curve side).
UniPoly septic_poly(const Rational& a, const Rational& b);

/// The full bundle of curves and maps attached to a parameter pair (a, b):
/// E and E* over Q, their twists E_a / E*_a, the degree-5 isogeny
/// lambda* = E*_a -> E_a, and the base point P0 on E.
class QuinticFamily {
public:
    QuinticFamily(const Rational& a, const Rational& b);

    const QuinticParams& params() const { return params_; }
    bool is_degenerate() const { return sqrt_d_.has_value(); }

    const CurveQ& E() const { return E_; }
    const CurveQ& Estar() const { return Estar_; }
    const CurveQ& Ea() const { return Ea_; }
    const CurveQ& Eastar() const { return Eastar_; }
    const IsogenyMap& lambda_star() const { return lambda_star_; }

    const PointQ& base_point() const { return P0_; }

    /// Dual-isogeny evaluation E* -> E through Q(sqrt(d)): f^-1 after lambda*
    /// after f*.  Throws ConjugationError if the sqrt(d) components fail to
    /// cancel, PointValidationError for off-curve input.
    PointQ phi_star_eval(const PointQ& Pstar) const;

    Rational point_to_beta(const PointQ& P) const;
    UniPoly brumer_from_point(const PointQ& P) const;

    /// B(X) = N(X) - x(f(P)) D(X), the minimal polynomial of the x-coordinate
    /// of a lambda*-preimage of f(P).
    UniPoly kummer_poly(const PointQ& P) const;

    /// beta' = x([2]P) / (-4d); throws InfinityError when [2]P is infinity.
    Rational doubling_transform(const PointQ& P) const;

private:
    template <class K>
    PointQ phi_star_impl(const PointQ& Pstar, const K& sqrt_d) const;
    template <class K>
    CurveQ build_estar(const K& sqrt_d) const;

    QuinticParams params_;
    std::optional<Rational> sqrt_d_; // set iff d is a rational square
    CurveQ E_;
    CurveQ Ea_;
    CurveQ Eastar_;
    IsogenyMap lambda_star_;
    CurveQ Estar_;
    PointQ P0_;
};

} // namespace kd
