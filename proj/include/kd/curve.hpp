#pragma once

#include <optional>
#include <utility>

#include "kd/errors.hpp"
#include "kd/quadext.hpp"
#include "kd/rational.hpp"

namespace kd {

/// Point on a long Weierstrass curve: affine (x, y) or the point at infinity.
template <class K>
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(K x, K y) { return CurvePoint(std::move(x), std::move(y)); }

    bool is_infinity() const { return !xy_.has_value(); }
    const K& x() const {
        if (is_infinity()) throw InfinityError("x() of the point at infinity");
        return xy_->first;
    }
    const K& y() const {
        if (is_infinity()) throw InfinityError("y() of the point at infinity");
        return xy_->second;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return a.x() == b.x() && a.y() == b.y();
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

private:
    CurvePoint() = default;
    CurvePoint(K x, K y) : xy_(std::in_place, std::move(x), std::move(y)) {}

    std::optional<std::pair<K, K>> xy_;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q or Q(sqrt(d)).
/// Nonsingular by construction.
template <class K>
class WeierstrassCurve {
public:
    using Point = CurvePoint<K>;

    WeierstrassCurve(K a1, K a2, K a3, K a4, K a6)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
          a4_(std::move(a4)), a6_(std::move(a6)) {
        if (elem_is_zero(disc()))
            throw SingularCurveError("curve discriminant vanishes");
    }

    const K& a1() const { return a1_; }
    const K& a2() const { return a2_; }
    const K& a3() const { return a3_; }
    const K& a4() const { return a4_; }
    const K& a6() const { return a6_; }

    K b2() const { return a1_ * a1_ + scale(4, a2_); }
    K b4() const { return scale(2, a4_) + a1_ * a3_; }
    K b6() const { return a3_ * a3_ + scale(4, a6_); }
    K b8() const {
        return a1_ * a1_ * a6_ + scale(4, a2_ * a6_) - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
               a4_ * a4_;
    }
    K c4() const { return b2() * b2() - scale(24, b4()); }
    K c6() const { return -(b2() * b2() * b2()) + scale(36, b2() * b4()) - scale(216, b6()); }
    K disc() const {
        K B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - scale(8, B4 * B4 * B4) - scale(27, B6 * B6) +
               scale(9, B2 * B4 * B6);
    }
    K j_invariant() const {
        K C4 = c4();
        return C4 * C4 * C4 / disc();
    }

    bool on_curve(const Point& P) const {
        if (P.is_infinity()) return true;
        const K& x = P.x();
        const K& y = P.y();
        K lhs = y * y + a1_ * x * y + a3_ * y;
        K rhs = x * x * x + a2_ * x * x + a4_ * x + a6_;
        return elem_is_zero(lhs - rhs);
    }

    Point neg(const Point& P) const {
        require(P);
        if (P.is_infinity()) return P;
        return Point::affine(P.x(), -P.y() - a1_ * P.x() - a3_);
    }

    Point add(const Point& P, const Point& Q) const {
        require(P);
        require(Q);
        return add_raw(P, Q);
    }

    Point mul(long n, const Point& P) const {
        require(P);
        if (n < 0) return neg(mul(-n, P));
        Point acc = Point::infinity();
        Point base = P;
        while (n > 0) {
            if (n & 1) acc = add_raw(acc, base);
            base = add_raw(base, base);
            n >>= 1;
        }
        return acc;
    }

    /// Smallest n <= bound with [n]P = infinity.  The default bound 12 is only
    /// meaningful over Q (Mazur); over an extension pass an explicit bound.
    std::optional<int> torsion_order(const Point& P, int bound = 12) const {
        require(P);
        Point acc = Point::infinity();
        for (int n = 1; n <= bound; ++n) {
            acc = add_raw(acc, P);
            if (acc.is_infinity()) return n;
        }
        return std::nullopt;
    }

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ &&
               a.a6_ == b.a6_;
    }
    friend bool operator!=(const WeierstrassCurve& a, const WeierstrassCurve& b) {
        return !(a == b);
    }

    /// Chord-tangent law without the on-curve precondition check.
    Point add_raw(const Point& P, const Point& Q) const {
        if (P.is_infinity()) return Q;
        if (Q.is_infinity()) return P;
        const K &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
        K lambda = zero_like(x1), nu = zero_like(x1);
        if (x1 == x2) {
            if (Q == neg_raw(P)) return Point::infinity();
            K denom = scale(2, y1) + a1_ * x1 + a3_;
            lambda = (scale(3, x1 * x1) + scale(2, a2_ * x1) + a4_ - a1_ * y1) / denom;
            nu = (-(x1 * x1 * x1) + a4_ * x1 + scale(2, a6_) - a3_ * y1) / denom;
        } else {
            lambda = (y2 - y1) / (x2 - x1);
            nu = y1 - lambda * x1;
        }
        K x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
        K y3 = -(lambda + a1_) * x3 - nu - a3_;
        return Point::affine(std::move(x3), std::move(y3));
    }

private:
    Point neg_raw(const Point& P) const {
        if (P.is_infinity()) return P;
        return Point::affine(P.x(), -P.y() - a1_ * P.x() - a3_);
    }

    void require(const Point& P) const {
        if (!on_curve(P)) throw PointValidationError("point does not lie on the curve");
    }

    static K scale(long n, const K& x) { return embed(x, Rational(n)) * x; }

    K a1_, a2_, a3_, a4_, a6_;
};

using PointQ = CurvePoint<Rational>;
using CurveQ = WeierstrassCurve<Rational>;
using PointK = CurvePoint<QuadExt>;
using CurveK = WeierstrassCurve<QuadExt>;

/// Embed a curve over Q into Q(sqrt(d)) (or trivially into Q).
template <class K>
WeierstrassCurve<K> lift_curve(const CurveQ& E, const K& context) {
    return WeierstrassCurve<K>(embed(context, E.a1()), embed(context, E.a2()),
                               embed(context, E.a3()), embed(context, E.a4()),
                               embed(context, E.a6()));
}

template <class K>
CurvePoint<K> lift_point(const CurvePoint<Rational>& P, const K& context) {
    if (P.is_infinity()) return CurvePoint<K>::infinity();
    return CurvePoint<K>::affine(embed(context, P.x()), embed(context, P.y()));
}

} // namespace kd
