#include "kd/septic.hpp"

namespace kd {

namespace {

CurveQ septic_curve(const Rational& a) {
    // y^2 + (a^2+a-1) xy + a^3(a-1) y = x^3 + a(a-1) x^2
    return CurveQ(a * a + a - Rational(1), a * (a - Rational(1)),
                  a.pow(3) * (a - Rational(1)), Rational(0), Rational(0));
}

void check_admissible(const Rational& a) {
    if (a.is_zero() || a == Rational(1))
        throw InvalidParametersError("septic family needs a outside {0, 1}");
}

} // namespace

UniPoly septic_N(const Rational& a) {
    check_admissible(a);
    const Rational one(1);
    Rational am1 = a - one;
    return UniPoly({
        a.pow(12) * am1.pow(6),
        a.pow(9) * am1.pow(5) * (Rational(3) * a * a + Rational(3) * a - one),
        a.pow(7) * am1.pow(4) * (a + one) *
            (Rational(3) * a * a + Rational(5) * a - Rational(3)),
        a.pow(4) * am1.pow(3) *
            (a.pow(5) + Rational(7) * a.pow(4) + Rational(8) * a.pow(3) -
             Rational(4) * a * a - a - one),
        a.pow(3) * am1 * am1 *
            (a.pow(4) + Rational(13) * a.pow(3) - Rational(12) * a * a + Rational(9) * a -
             Rational(6)),
        -a * am1 *
            (a.pow(5) - Rational(7) * a.pow(4) + Rational(5) * a.pow(3) -
             Rational(3) * a * a + Rational(2) * a + one),
        Rational(2) * a * am1 * (a + one),
        one,
    });
}

UniPoly septic_D(const Rational& a) {
    check_admissible(a);
    UniPoly x({Rational(0), Rational(1)});
    UniPoly f1({a * a * (a - Rational(1)), Rational(1)});
    UniPoly f2({a * (a - Rational(1)), Rational(1)});
    return (x * x) * (f1 * f1) * (f2 * f2);
}

std::vector<Rational> septic_kernel_xcoords(const Rational& a) {
    check_admissible(a);
    return {Rational(0), -(a * a * (a - Rational(1))), -(a * (a - Rational(1)))};
}

SepticFamily::SepticFamily(Rational a)
    : a_(std::move(a)),
      C_([&] {
          check_admissible(a_);
          try {
              return septic_curve(a_);
          } catch (const SingularCurveError&) {
              throw InvalidParametersError("C_a is singular at a = " + a_.str());
          }
      }()),
      psi_(velu(C_, PointQ::affine(Rational(0), Rational(0)), 7)) {}

} // namespace kd
