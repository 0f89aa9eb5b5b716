#pragma once

#include "kd/errors.hpp"
#include "kd/rational.hpp"

namespace kd {

/// Element u + v*sqrt(d) of the quadratic field Q(sqrt(d)).
/// The radicand d must be a nonzero non-square; callers detect the
/// degenerate square case with rational_sqrt and stay over Q.
class QuadExt {
public:
    QuadExt(Rational d, Rational u, Rational v)
        : d_(std::move(d)), u_(std::move(u)), v_(std::move(v)) {
        if (d_.is_zero())
            throw InvalidParametersError("quadratic extension with zero radicand");
        if (rational_sqrt(d_))
            throw InvalidParametersError("radicand " + d_.str() +
                                         " is a rational square; work over Q instead");
    }

    const Rational& d() const { return d_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    QuadExt conj() const { return QuadExt(d_, u_, -v_); }
    Rational norm() const { return u_ * u_ - d_ * v_ * v_; }

    QuadExt operator-() const { return QuadExt(d_, -u_, -v_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.d_, a.u_ + b.u_, a.v_ + b.v_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.d_, a.u_ - b.u_, a.v_ - b.v_);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return QuadExt(a.d_, a.u_ * b.u_ + a.d_ * a.v_ * b.v_,
                       a.u_ * b.v_ + a.v_ * b.u_);
    }

    QuadExt inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt(d))");
        Rational n = norm(); // nonzero: d is not a square
        return QuadExt(d_, u_ / n, -v_ / n);
    }

    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inv(); }

    friend QuadExt operator+(const QuadExt& a, const Rational& r) {
        return QuadExt(a.d_, a.u_ + r, a.v_);
    }
    friend QuadExt operator-(const QuadExt& a, const Rational& r) {
        return QuadExt(a.d_, a.u_ - r, a.v_);
    }
    friend QuadExt operator*(const QuadExt& a, const Rational& r) {
        return QuadExt(a.d_, a.u_ * r, a.v_ * r);
    }
    friend QuadExt operator*(const Rational& r, const QuadExt& a) { return a * r; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    std::string str() const {
        return u_.str() + (v_.sign() >= 0 ? "+" : "") + v_.str() + "*sqrt(" + d_.str() + ")";
    }

private:
    void check(const QuadExt& o) const {
        if (d_ != o.d_)
            throw FieldMismatchError("mixed radicands " + d_.str() + " and " + o.d_.str());
    }

    Rational d_, u_, v_;
};

inline QuadExt embed(const QuadExt& context, const Rational& r) {
    return QuadExt(context.d(), r, Rational(0));
}
inline QuadExt zero_like(const QuadExt& context) { return embed(context, Rational(0)); }
inline bool elem_is_zero(const QuadExt& x) { return x.is_zero(); }

} // namespace kd
