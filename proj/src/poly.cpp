#include "kd/poly.hpp"

#include <cctype>

namespace kd {

UniPoly UniPoly::monomial(int deg, const Rational& coeff) {
    if (deg < 0) throw DegreeError("monomial with negative degree");
    std::vector<Rational> c(static_cast<size_t>(deg) + 1, Rational(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rational& r) {
    std::vector<Rational> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(x * r);
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - divisor.degree()) + 1,
                            Rational(0));
    const Rational lc = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / lc;
        q[static_cast<size_t>(shift)] = factor;
        rem = rem - divisor * UniPoly::monomial(shift, factor);
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rational> c;
    c.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result({Rational(1)});
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (int i = degree(); i >= 0; --i)
        acc = acc * inner + UniPoly::constant(c_[static_cast<size_t>(i)]);
    return acc;
}

UniPoly UniPoly::reversed(int n) const {
    if (n < degree()) throw DegreeError("reversal bound below degree");
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[static_cast<size_t>(n) - i] = c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        bool first = out.empty();
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        bool unit = (c == Rational(1));
        if (i == 0 || !unit) out += c.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

// Determinant by Gaussian elimination with exact rationals.
Rational determinant(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col].inv();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] * inv;
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

} // namespace

Rational poly_resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw ZeroPolynomialError("resultant of the zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) return p.leading().pow(n);
    if (n == 0) return q.leading().pow(m);
    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = p.coeff(m - i);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = q.coeff(n - i);
    return determinant(std::move(s));
}

Rational poly_discriminant(const UniPoly& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeError("discriminant needs degree >= 2");
    Rational res = poly_resultant(p, p.derivative());
    Rational disc = res / p.leading();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroPolynomialError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly({Rational(1)});
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lc = den_.leading();
    if (lc != Rational(1)) {
        num_ = num_ * lc.inv();
        den_ = den_ * lc.inv();
    }
}

UniPoly compose_homogenized(const UniPoly& p, const UniPoly& N, const UniPoly& D) {
    const int n = p.degree();
    if (n < 0) return UniPoly();
    UniPoly acc; // Horner in N/D, clearing one power of D per step
    for (int i = n; i >= 0; --i) {
        acc = acc * N + UniPoly::constant(p.coeff(i)) * D.pow(static_cast<unsigned>(n - i));
    }
    return acc;
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    const int dn = num_.degree(), dd = den_.degree();
    const int h = std::max(dn, dd);
    UniPoly top = compose_homogenized(num_, inner.num_, inner.den_) *
                  inner.den_.pow(static_cast<unsigned>(h - dn));
    UniPoly bottom = compose_homogenized(den_, inner.num_, inner.den_) *
                     inner.den_.pow(static_cast<unsigned>(h - dd));
    return RatFunc(std::move(top), std::move(bottom));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_integer() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        return digits;
    }

    // term := [sign] [coeff] [('X'|'x') ['^' exp]]
    UniPoly read_term(int sign) {
        Rational coeff(1);
        bool have_coeff = false;
        std::string ip = read_integer();
        if (!ip.empty()) {
            coeff = Rational::parse(ip);
            have_coeff = true;
            if (eat('/')) {
                std::string q = read_integer();
                if (q.empty()) throw ParseError("expected denominator in polynomial text");
                coeff /= Rational::parse(q);
            }
        }
        bool star = have_coeff && eat('*');
        skip_ws();
        int deg = 0;
        if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
            ++pos;
            deg = 1;
            if (eat('^')) {
                std::string e = read_integer();
                if (e.empty()) throw ParseError("expected exponent in polynomial text");
                deg = std::stoi(e);
            }
        } else if (star || !have_coeff) {
            throw ParseError("expected term in polynomial text");
        }
        if (sign < 0) coeff = -coeff;
        return UniPoly::monomial(deg, coeff);
    }

    UniPoly parse() {
        UniPoly acc;
        int sign = 1;
        if (eat('+')) sign = 1;
        else if (eat('-')) sign = -1;
        acc = acc + read_term(sign);
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else throw ParseError(std::string("unexpected character '") + s[pos] + "'");
            acc = acc + read_term(sign);
        }
        return acc;
    }
};

} // namespace

UniPoly UniPoly::parse_expr(const std::string& text) {
    ExprParser p(text);
    return p.parse();
}

} // namespace kd
