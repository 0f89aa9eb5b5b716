#include "kd/isogeny.hpp"

#include <algorithm>
#include <vector>

namespace kd {

IsogenyMap::IsogenyMap(CurveQ domain, CurveQ codomain, RatFunc x_map, IsogenyYMap y_map,
                       int degree, std::optional<PointQ> kernel_generator)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), x_map_(std::move(x_map)),
      y_map_(std::move(y_map)), degree_(degree), kernel_gen_(std::move(kernel_generator)) {}

PointQ IsogenyMap::evaluate(const PointQ& P) const {
    if (!domain_.on_curve(P))
        throw PointValidationError("isogeny argument is not on the domain curve");
    PointQ image = evaluate_raw(P);
    if (!codomain_.on_curve(image))
        throw PointValidationError("isogeny image left the codomain curve");
    return image;
}

bool IsogenyMap::verify_kernel() const {
    if (!kernel_gen_) return false;
    // x-coordinates of the nonzero kernel points (each appears for +/- pair)
    std::vector<Rational> xs;
    PointQ acc = PointQ::infinity();
    for (int i = 1; i <= (degree_ - 1) / 2; ++i) {
        acc = domain_.add_raw(acc, *kernel_gen_);
        if (acc.is_infinity()) return false;
        xs.push_back(acc.x());
    }
    UniPoly den = x_map_.den();
    for (const auto& x : xs) {
        UniPoly lin({-x, Rational(1)});
        bool divided = false;
        for (;;) {
            auto [q, r] = den.divmod(lin);
            if (!r.is_zero()) break;
            den = q;
            divided = true;
        }
        if (!divided) return false;
    }
    return den.degree() == 0;
}

bool IsogenyMap::equal_up_to_sign(const IsogenyMap& other) const {
    if (domain_ != other.domain_ || codomain_ != other.codomain_ ||
        degree_ != other.degree_ || x_map_ != other.x_map_)
        return false;
    if (y_map_ == other.y_map_) return true;
    // [-1] on the codomain sends y to -y - A1*x - A3; applied after the other
    // map: y'' = -(u + v*y)/w - A1*X(x) - A3.
    const Rational& A1 = codomain_.a1();
    const Rational& A3 = codomain_.a3();
    RatFunc X = other.x_map_;
    RatFunc u_over_w(other.y_map_.u, other.y_map_.w);
    RatFunc v_over_w(other.y_map_.v, other.y_map_.w);
    RatFunc neg_u = RatFunc(UniPoly()) - u_over_w - RatFunc(UniPoly::constant(A1)) * X -
                    RatFunc(UniPoly::constant(A3));
    RatFunc neg_v = RatFunc(UniPoly()) - v_over_w;
    RatFunc my_u(y_map_.u, y_map_.w);
    RatFunc my_v(y_map_.v, y_map_.w);
    return my_u == neg_u && my_v == neg_v;
}

IsogenyMap velu(const CurveQ& C, const PointQ& kernel_gen, int ell) {
    if (ell < 3 || ell % 2 == 0)
        throw KernelOrderError("velu requires an odd prime degree");
    auto order = C.torsion_order(kernel_gen, ell);
    if (!order || *order != ell)
        throw KernelOrderError("kernel point does not have order " + std::to_string(ell));

    const Rational &a1 = C.a1(), &a2 = C.a2(), &a3 = C.a3(), &a4 = C.a4(), &a6 = C.a6();

    struct KernelTerm {
        Rational x, y, gx, gy, v, u;
    };
    std::vector<KernelTerm> terms;
    PointQ Q = kernel_gen;
    for (int i = 0; i < (ell - 1) / 2; ++i) {
        const Rational &xq = Q.x(), &yq = Q.y();
        KernelTerm t;
        t.x = xq;
        t.y = yq;
        t.gx = Rational(3) * xq * xq + Rational(2) * a2 * xq + a4 - a1 * yq;
        t.gy = Rational(-2) * yq - a1 * xq - a3;
        t.v = Rational(2) * t.gx - a1 * t.gy;
        t.u = t.gy * t.gy;
        terms.push_back(t);
        Q = C.add_raw(Q, kernel_gen);
    }

    Rational v_sum(0), w_sum(0);
    for (const auto& t : terms) {
        v_sum += t.v;
        w_sum += t.u + t.x * t.v;
    }
    CurveQ codomain(a1, a2, a3, a4 - Rational(5) * v_sum,
                    a6 - C.b2() * v_sum - Rational(7) * w_sum);

    // D(x) = prod (x - xq); Dq = D / (x - xq)
    UniPoly D({Rational(1)});
    for (const auto& t : terms) D = D * UniPoly({-t.x, Rational(1)});
    std::vector<UniPoly> Dq;
    for (const auto& t : terms)
        Dq.push_back(D.divmod(UniPoly({-t.x, Rational(1)})).first);

    UniPoly D2 = D * D, D3 = D2 * D;
    UniPoly X = UniPoly({Rational(0), Rational(1)}) * D2;
    for (size_t i = 0; i < terms.size(); ++i)
        X = X + terms[i].v * (Dq[i] * D) + terms[i].u * (Dq[i] * Dq[i]);

    // Y(x, y) = y - sum [ u*(2y + a1 x + a3)/(x-xq)^3
    //                   + v*(a1 (x-xq) + y - yq)/(x-xq)^2
    //                   + (a1 u - gx gy)/(x-xq)^2 ]
    UniPoly Yv = D3;
    UniPoly Yu;
    UniPoly a1x_a3({a3, a1});
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        UniPoly Dq2 = Dq[i] * Dq[i];
        UniPoly Dq3 = Dq2 * Dq[i];
        UniPoly Dq2D = Dq2 * D;
        Yv = Yv - (Rational(2) * t.u) * Dq3 - t.v * Dq2D;
        UniPoly lin({-t.x, Rational(1)});
        Yu = Yu - t.u * (a1x_a3 * Dq3) - t.v * ((a1 * lin - UniPoly::constant(t.y)) * Dq2D) -
             (a1 * t.u - t.gx * t.gy) * Dq2D;
    }

    return IsogenyMap(C, codomain, RatFunc(X, D2), IsogenyYMap{Yu, Yv, D3}, ell, kernel_gen);
}

IsogenyMap identity_isogeny(const CurveQ& C) {
    UniPoly one({Rational(1)});
    UniPoly x({Rational(0), Rational(1)});
    return IsogenyMap(C, C, RatFunc(x, one), IsogenyYMap{UniPoly(), one, one}, 1);
}

IsogenyMap compose(const IsogenyMap& g, const IsogenyMap& f) {
    if (f.codomain() != g.domain())
        throw DomainMismatchError("compose: codomain of inner map differs from outer domain");

    RatFunc X = g.x_map().compose(f.x_map());

    // Y = (ug(Xf) + vg(Xf) * Yf) / wg(Xf) with Yf = (uf + vf*y)/wf.
    const UniPoly& N = f.x_map().num();
    const UniPoly& D = f.x_map().den();
    const int du = g.y_map().u.degree(), dv = g.y_map().v.degree(), dw = g.y_map().w.degree();
    const int h = std::max({du, dv, dw, 0});
    auto lifted = [&](const UniPoly& p, int dp) {
        if (p.is_zero()) return UniPoly();
        return compose_homogenized(p, N, D) * D.pow(static_cast<unsigned>(h - dp));
    };
    UniPoly Pu = lifted(g.y_map().u, du);
    UniPoly Pv = lifted(g.y_map().v, dv);
    UniPoly Pw = lifted(g.y_map().w, dw);

    UniPoly U = Pu * f.y_map().w + Pv * f.y_map().u;
    UniPoly V = Pv * f.y_map().v;
    UniPoly W = Pw * f.y_map().w;

    // cancel common polynomial content
    UniPoly gcd_uv = UniPoly::gcd(UniPoly::gcd(U, V), W);
    if (gcd_uv.degree() > 0) {
        U = U.divmod(gcd_uv).first;
        V = V.divmod(gcd_uv).first;
        W = W.divmod(gcd_uv).first;
    }

    return IsogenyMap(f.domain(), g.codomain(), X, IsogenyYMap{U, V, W},
                      g.degree() * f.degree(), std::nullopt);
}

} // namespace kd
