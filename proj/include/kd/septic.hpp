#pragma once

#include <vector>

#include "kd/curve.hpp"
#include "kd/isogeny.hpp"
#include "kd/poly.hpp"

namespace kd {

/// Numerator of the x-map of the degree-7 isogeny out of C_a (monic, degree 7).
UniPoly septic_N(const Rational& a);

/// Denominator x^2 (x + a^2(a-1))^2 (x + a(a-1))^2.
UniPoly septic_D(const Rational& a);

/// {0, -a^2(a-1), -a(a-1)}: the x-coordinates of the nonzero kernel points.
std::vector<Rational> septic_kernel_xcoords(const Rational& a);

/// The curve C_a with its 7-torsion point (0,0) and the degree-7 isogeny
/// psi = C_a -> C_a / <(0,0)> built by Velu's formulas.
class SepticFamily {
public:
    explicit SepticFamily(Rational a);

    const Rational& a() const { return a_; }
    const CurveQ& C() const { return C_; }
    const IsogenyMap& psi() const { return psi_; }

private:
    Rational a_;
    CurveQ C_;
    IsogenyMap psi_;
};

} // namespace kd
