#include "kd/mw.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

namespace kd {

namespace {

using BF = boost::multiprecision::mpfr_float;

struct Cpx {
    BF re, im;
    Cpx() : re(0), im(0) {}
    Cpx(BF r, BF i) : re(std::move(r)), im(std::move(i)) {}
    BF real() const { return re; }
    BF imag() const { return im; }
    friend Cpx operator+(const Cpx& a, const Cpx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cpx operator-(const Cpx& a, const Cpx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cpx operator*(const Cpx& a, const Cpx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cpx operator/(const Cpx& a, const Cpx& b) {
        BF n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Cpx& operator*=(const Cpx& b) { return *this = *this * b; }
    Cpx& operator-=(const Cpx& b) { return *this = *this - b; }
};

BF abs(const Cpx& z) { return sqrt(z.re * z.re + z.im * z.im); }

BF to_bf(const Rational& r) {
    return BF(r.num().get_str()) / BF(r.den().get_str());
}

mpz_class round_to_mpz(const BF& x) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
    return z;
}

// Durand-Kerner iteration on the monic polynomial with the given coefficients
// (constant first, leading 1 implicit).  Returns the roots, or nothing if the
// iteration did not settle.
std::optional<std::vector<Cpx>> durand_kerner(const std::vector<BF>& coeffs, unsigned prec) {
    const size_t n = coeffs.size();
    auto eval = [&](const Cpx& z) {
        Cpx acc(BF(1), BF(0));
        for (size_t i = n; i-- > 0;) acc = acc * z + Cpx(coeffs[i], BF(0));
        return acc;
    };
    BF radius(1);
    for (const auto& c : coeffs) {
        BF m = abs(c);
        if (m > radius) radius = m;
    }
    radius += 1;
    std::vector<Cpx> z;
    Cpx seed(BF("0.4"), BF("0.9"));
    Cpx w(radius, BF(0));
    for (size_t k = 0; k < n; ++k) {
        w *= seed;
        z.push_back(w);
    }
    BF tol = pow(BF(2), -static_cast<int>(prec) + 32);
    for (int iter = 0; iter < 1000; ++iter) {
        BF worst(0);
        for (size_t i = 0; i < n; ++i) {
            Cpx denom(BF(1), BF(0));
            for (size_t j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            Cpx delta = eval(z[i]) / denom;
            z[i] -= delta;
            BF step = abs(delta) / (BF(1) + abs(z[i]));
            if (step > worst) worst = step;
        }
        if (worst < tol) return z;
    }
    return std::nullopt;
}

bool divides_exactly(const UniPoly& p, const UniPoly& factor) {
    return p.divmod(factor).second.is_zero();
}

} // namespace

bool reducibility_oracle(const UniPoly& p) {
    const int n = p.degree();
    if (n < 2 || n > 7) throw DegreeError("reducibility oracle expects degree 2..7");

    // repeated factor
    UniPoly g = UniPoly::gcd(p, p.derivative());
    if (g.degree() > 0) return true;

    // primitive integer model: L * monic has integer coefficients
    mpz_class denlcm(1);
    for (int i = 0; i <= n; ++i)
        denlcm = lcm(denlcm, p.coeff(i).den());
    std::vector<mpz_class> zc;
    mpz_class content(0);
    for (int i = 0; i <= n; ++i) {
        Rational c = p.coeff(i) * Rational(mpz_class(denlcm), mpz_class(1));
        zc.push_back(c.num());
        content = gcd(content, c.num());
    }
    if (content == 0) throw ZeroPolynomialError("zero polynomial");
    for (auto& c : zc) c /= content;
    mpz_class L = zc.back();
    if (L < 0) {
        for (auto& c : zc) c = -c;
        L = -L;
    }
    Rational Lr{mpz_class(L), mpz_class(1)};

    for (unsigned prec : {256u, 512u, 1024u, 2048u}) {
        BF::default_precision(static_cast<unsigned>(prec * 0.302)); // bits to digits10
        std::vector<BF> monic;
        for (int i = 0; i < n; ++i)
            monic.push_back(BF(zc[static_cast<size_t>(i)].get_str()) / BF(L.get_str()));
        auto roots = durand_kerner(monic, prec);
        if (!roots) continue;

        BF real_tol = pow(BF(2), -static_cast<int>(prec) / 4);
        bool decisive = true;
        auto snap = [&](const BF& value) -> std::optional<Rational> {
            BF scaled = value * BF(L.get_str());
            mpz_class nearest = round_to_mpz(scaled);
            BF err = abs(scaled - BF(nearest.get_str()));
            if (err > BF("0.25")) decisive = false;
            return Rational(nearest, mpz_class(L));
        };

        // rational roots
        for (const auto& r : *roots) {
            if (abs(r.imag()) > real_tol * (BF(1) + abs(r.real()))) continue;
            auto cand = snap(r.real());
            if (cand && p.eval(*cand).is_zero()) return true;
        }
        // rational quadratic factors
        if (n >= 4) {
            for (size_t i = 0; i < roots->size(); ++i)
                for (size_t j = i + 1; j < roots->size(); ++j) {
                    Cpx s = (*roots)[i] + (*roots)[j];
                    Cpx pr = (*roots)[i] * (*roots)[j];
                    if (abs(s.imag()) > real_tol * (BF(1) + abs(s.real()))) continue;
                    if (abs(pr.imag()) > real_tol * (BF(1) + abs(pr.real()))) continue;
                    auto cs = snap(s.real());
                    auto cp = snap(pr.real());
                    if (!cs || !cp) continue;
                    UniPoly quad({*cp, -*cs, Rational(1)});
                    if (divides_exactly(p, quad)) return true;
                }
        }
        // degree 6/7 can also split off a rational cubic
        if (n >= 6) {
            for (size_t i = 0; i < roots->size(); ++i)
                for (size_t j = i + 1; j < roots->size(); ++j)
                    for (size_t k = j + 1; k < roots->size(); ++k) {
                        Cpx e1 = (*roots)[i] + (*roots)[j] + (*roots)[k];
                        Cpx e2 = (*roots)[i] * (*roots)[j] + (*roots)[i] * (*roots)[k] +
                                 (*roots)[j] * (*roots)[k];
                        Cpx e3 = (*roots)[i] * (*roots)[j] * (*roots)[k];
                        if (abs(e1.imag()) > real_tol * (BF(1) + abs(e1.real()))) continue;
                        if (abs(e2.imag()) > real_tol * (BF(1) + abs(e2.real()))) continue;
                        if (abs(e3.imag()) > real_tol * (BF(1) + abs(e3.real()))) continue;
                        auto c1 = snap(e1.real());
                        auto c2 = snap(e2.real());
                        auto c3 = snap(e3.real());
                        if (!c1 || !c2 || !c3) continue;
                        UniPoly cub({-*c3, *c2, -*c1, Rational(1)});
                        if (divides_exactly(p, cub)) return true;
                    }
        }
        if (decisive) return false;
    }
    return false;
}

} // namespace kd
