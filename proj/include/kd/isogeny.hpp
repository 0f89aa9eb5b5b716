#pragma once

#include <optional>

#include "kd/curve.hpp"
#include "kd/poly.hpp"

namespace kd {

/// y-component of an isogeny: y |-> (u(x) + v(x) * y) / w(x).
struct IsogenyYMap {
    UniPoly u, v, w;

    friend bool operator==(const IsogenyYMap& a, const IsogenyYMap& b) {
        return a.u == b.u && a.v == b.v && a.w == b.w;
    }
};

/// Cyclic rational isogeny between curves over Q, stored as explicit rational
/// maps.  Built by velu() from a rational kernel point, or directly from
/// printed formulas.
class IsogenyMap {
public:
    IsogenyMap(CurveQ domain, CurveQ codomain, RatFunc x_map, IsogenyYMap y_map, int degree,
               std::optional<PointQ> kernel_generator = std::nullopt);

    const CurveQ& domain() const { return domain_; }
    const CurveQ& codomain() const { return codomain_; }
    const RatFunc& x_map() const { return x_map_; }
    const IsogenyYMap& y_map() const { return y_map_; }
    int degree() const { return degree_; }
    const std::optional<PointQ>& kernel_generator() const { return kernel_gen_; }

    /// Image of a rational point; validates the input and the image.
    PointQ evaluate(const PointQ& P) const;

    /// Same map applied over Q or Q(sqrt(d)); no curve membership checks.
    template <class K>
    CurvePoint<K> evaluate_raw(const CurvePoint<K>& P) const {
        if (P.is_infinity()) return CurvePoint<K>::infinity();
        K den = x_map_.den().eval(P.x());
        if (elem_is_zero(den)) return CurvePoint<K>::infinity();
        K x = x_map_.num().eval(P.x()) / den;
        K y = (y_map_.u.eval(P.x()) + y_map_.v.eval(P.x()) * P.y()) / y_map_.w.eval(P.x());
        return CurvePoint<K>::affine(std::move(x), std::move(y));
    }

    /// True iff the x-map denominator's roots are exactly the x-coordinates of
    /// the nonzero multiples of the declared kernel generator.
    bool verify_kernel() const;

    friend bool operator==(const IsogenyMap& a, const IsogenyMap& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
               a.x_map_ == b.x_map_ && a.y_map_ == b.y_map_ && a.degree_ == b.degree_;
    }

    /// Equality up to post-composition with [-1] on the codomain.
    bool equal_up_to_sign(const IsogenyMap& other) const;

private:
    CurveQ domain_, codomain_;
    RatFunc x_map_;
    IsogenyYMap y_map_;
    int degree_;
    std::optional<PointQ> kernel_gen_;
};

/// Velu's formulas: the separable isogeny with kernel generated by K, an
/// odd-prime-order rational point on C.
IsogenyMap velu(const CurveQ& C, const PointQ& K, int ell);

IsogenyMap identity_isogeny(const CurveQ& C);

/// g after f; throws DomainMismatchError unless f.codomain == g.domain.
IsogenyMap compose(const IsogenyMap& g, const IsogenyMap& f);

} // namespace kd
