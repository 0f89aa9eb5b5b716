#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "kd/errors.hpp"

namespace kd {

/// Exact rational number, always in lowest terms with positive denominator.
/// Zero is represented as 0/1.  Backed by GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

    Rational(mpz_class n, mpz_class d) {
        if (sgn(d) == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(std::move(n), std::move(d));
        v_.canonicalize();
    }

    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    /// Accepts "p", "p/q" and "-p/q" with arbitrary-precision integers.
    static Rational parse(const std::string& s) {
        try {
            mpq_class v(s);
            if (sgn(v.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
            v.canonicalize();
            Rational r;
            r.v_ = std::move(v);
            return r;
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed rational '" + s + "'");
        }
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return wrap(1 / v_);
    }

    Rational abs() const { return wrap(::abs(v_)); }

    Rational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.v_ = mpq_class(n, d); // already canonical: num/den coprime
        return r;
    }

private:
    static Rational wrap(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

/// Returns u >= 0 with u^2 = r when r is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

// Field-generic helpers; the QuadExt overloads live in quadext.hpp.
inline Rational embed(const Rational& /*context*/, const Rational& r) { return r; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline bool elem_is_zero(const Rational& r) { return r.is_zero(); }

} // namespace kd
