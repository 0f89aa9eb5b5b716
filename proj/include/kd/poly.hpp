#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kd/errors.hpp"
#include "kd/rational.hpp"

namespace kd {

/// Dense univariate polynomial over Q, coefficients stored constant term
/// first.  The zero polynomial is the empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    static UniPoly monomial(int deg, const Rational& coeff);

    /// Minimal expression reader for inputs like "X^3+X+1" or "X^5-2X^4+1/3".
    static UniPoly parse_expr(const std::string& text);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == Rational(1); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const Rational& r);
    friend UniPoly operator*(const Rational& r, const UniPoly& a) { return a * r; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division; throws ZeroPolynomialError on zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(unsigned e) const;
    UniPoly compose(const UniPoly& inner) const;

    /// X^n * p(1/X): coefficient reversal padded to degree n.
    UniPoly reversed(int n) const;

    template <class K>
    K eval(const K& x) const {
        K acc = zero_like(x);
        for (int i = degree(); i >= 0; --i)
            acc = acc * x + embed(x, c_[static_cast<size_t>(i)]);
        return acc;
    }

    static UniPoly gcd(UniPoly a, UniPoly b); // monic gcd, gcd(0,0)=0

    std::string str(const std::string& var = "X") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Sylvester-matrix resultant; throws ZeroPolynomialError on zero input.
Rational poly_resultant(const UniPoly& p, const UniPoly& q);

/// disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p); requires deg p >= 2.
Rational poly_discriminant(const UniPoly& p);

/// Reduced rational function: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_({Rational(1)}) {}
    RatFunc(UniPoly num, UniPoly den);
    explicit RatFunc(UniPoly num) : RatFunc(std::move(num), UniPoly({Rational(1)})) {}

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    /// Value at x, or nothing when x is a pole.
    template <class K>
    std::optional<K> eval(const K& x) const {
        K d = den_.eval(x);
        if (elem_is_zero(d)) return std::nullopt;
        return num_.eval(x) / d;
    }

    /// Substitution f(g) for rational g.
    RatFunc compose(const RatFunc& inner) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    UniPoly num_, den_;
};

/// p(N/D) written over the common denominator D^deg(p): returns the numerator
/// polynomial of p(N/D) * D^deg(p).
UniPoly compose_homogenized(const UniPoly& p, const UniPoly& N, const UniPoly& D);

} // namespace kd
