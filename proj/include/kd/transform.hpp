#pragma once

#include "kd/curve.hpp"

namespace kd {

/// Change of Weierstrass coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
/// push_* maps from (x, y) to (x', y'); pull_* goes the other way.
template <class K>
struct CurveTransform {
    K u, r, s, t;

    CurveTransform inverse() const {
        K ui = embed(u, Rational(1)) / u;
        K u2 = u * u;
        return CurveTransform{ui, -r / u2, -s / u, (s * r - t) / (u2 * u)};
    }

    WeierstrassCurve<K> push_curve(const WeierstrassCurve<K>& E) const {
        K u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u4 * u2;
        K two = embed(u, Rational(2)), three = embed(u, Rational(3));
        K a1 = (E.a1() + two * s) / u;
        K a2 = (E.a2() - s * E.a1() + three * r - s * s) / u2;
        K a3 = (E.a3() + r * E.a1() + two * t) / u3;
        K a4 = (E.a4() - s * E.a3() + two * r * E.a2() - (t + r * s) * E.a1() +
                three * r * r - two * s * t) / u4;
        K a6 = (E.a6() + r * E.a4() + r * r * E.a2() + r * r * r - t * E.a3() - t * t -
                r * t * E.a1()) / u6;
        return WeierstrassCurve<K>(a1, a2, a3, a4, a6);
    }

    CurvePoint<K> push_point(const CurvePoint<K>& P) const {
        if (P.is_infinity()) return P;
        K u2 = u * u, u3 = u2 * u;
        K xp = (P.x() - r) / u2;
        K yp = (P.y() - s * (P.x() - r) - t) / u3;
        return CurvePoint<K>::affine(xp, yp);
    }

    CurvePoint<K> pull_point(const CurvePoint<K>& P) const {
        if (P.is_infinity()) return P;
        K u2 = u * u, u3 = u2 * u;
        K x = u2 * P.x() + r;
        K y = u3 * P.y() + s * u2 * P.x() + t;
        return CurvePoint<K>::affine(x, y);
    }
};

} // namespace kd
