#pragma once

// Exact scalars in Q(t1, ..., tk): quotients of polynomials in formal symbols
// that are assumed independent.  Integrality and zero tests are decidable:
// a scalar is an integer exactly when it is a constant integer.

#include "twistlab/polynomial.hpp"
#include "twistlab/rational.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

namespace twistlab {

class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(const Rational& q) : num_(q), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(long n) : Scalar(Rational(n)) {}          // NOLINT(google-explicit-constructor)
    Scalar(const Integer& n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// The formal symbol t_{index+1}.
    static Scalar symbol(std::size_t index) { return Scalar(Poly::symbol(index), Poly(1)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    /// Rational value; requires is_rational().
    Rational rational() const
    {
        if (!is_rational()) throw DomainError("scalar '" + str() + "' is not rational");
        return num_.constant_term();
    }
    bool is_integer() const { return is_rational() && is_integral(num_.constant_term()); }
    Integer integer() const
    {
        if (!is_integer()) throw DomainError("scalar '" + str() + "' is not an integer");
        return num_.constant_term().get_num();
    }
    /// q0 + sum qi*ti form.
    bool is_linear() const { return den_.is_constant() && num_.is_affine(); }

    /// Size measure: 0 for rationals, otherwise terms and degrees of both parts.
    std::size_t complexity() const
    {
        if (is_rational()) return 0;
        return num_.terms().size() + 2 * den_.terms().size() + num_.total_degree() + 2 * den_.total_degree();
    }

    std::size_t num_symbols() const { return std::max(num_.num_vars(), den_.num_vars()); }

    Scalar operator-() const
    {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // Sums and products cancel against the gcd of the denominators only, as
    // the parts of reduced fractions are coprime.
    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_constant() && b.den_.is_constant()) return from_coprime(a.num_ + b.num_, Poly(1));
        const Poly g = Poly::gcd(a.den_, b.den_);
        if (g.is_constant()) return from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        const Poly ad = Poly::divide_exact(a.den_, g).value();
        const Poly bd = Poly::divide_exact(b.den_, g).value();
        Poly t = a.num_ * bd + b.num_ * ad;
        Poly den = ad * b.den_;
        if (t.is_zero()) return Scalar();
        const Poly h = Poly::gcd(t, g);
        if (!h.is_constant()) {
            t = Poly::divide_exact(t, h).value();
            den = Poly::divide_exact(den, h).value();
        }
        return from_coprime(std::move(t), std::move(den));
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_constant() && b.den_.is_constant()) return from_coprime(a.num_ * b.num_, Poly(1));
        auto cancel = [](const Poly& n, const Poly& d) {
            if (d.is_constant()) return std::pair<Poly, Poly>{n, d};
            const Poly g = Poly::gcd(n, d);
            if (g.is_constant()) return std::pair<Poly, Poly>{n, d};
            return std::pair<Poly, Poly>{Poly::divide_exact(n, g).value(), Poly::divide_exact(d, g).value()};
        };
        const auto [n1, d2] = cancel(a.num_, b.den_);
        const auto [n2, d1] = cancel(b.num_, a.den_);
        return from_coprime(n1 * n2, d1 * d2);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b)
    {
        if (b.is_zero()) throw DomainError("division by zero scalar");
        return a * from_coprime(b.den_, b.num_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar scaled(const Rational& q) const
    {
        Scalar r = *this;
        r.num_ = r.num_.scaled(q);
        if (r.num_.is_zero()) r.den_ = Poly(1);
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Representative modulo 1: only the rational constant term of a
    /// polynomial value can be shifted, so that is moved into [0, 1).
    Scalar mod_one() const
    {
        if (!den_.is_constant()) return *this;
        const Rational c = num_.constant_term();
        const Rational shift = Rational(floor_of(c));
        if (shift == 0) return *this;
        return *this - Scalar(shift);
    }

    std::string str() const
    {
        if (den_ == Poly(1)) return num_.str();
        auto wrap = [](const Poly& p) {
            const std::string s = p.str();
            return p.terms().size() > 1 ? "(" + s + ")" : s;
        };
        std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
        return n + "/" + wrap(den_);
    }

private:
    // num and den already coprime; only the leading coefficient is fixed.
    static Scalar from_coprime(Poly num, Poly den)
    {
        Scalar r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        if (r.num_.is_zero()) {
            r.den_ = Poly(1);
            return r;
        }
        const Rational lc = r.den_.leading_coefficient();
        if (lc != 1) {
            r.num_ = r.num_.scaled(Rational(1) / lc);
            r.den_ = r.den_.scaled(Rational(1) / lc);
        }
        return r;
    }

    void normalize()
    {
        if (den_.is_zero()) throw DomainError("scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (!den_.is_constant()) {
            Poly g = Poly::gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = Poly::divide_exact(num_, g).value();
                den_ = Poly::divide_exact(den_, g).value();
            }
        }
        const Rational lc = den_.leading_coefficient();
        if (lc != 1) {
            num_ = num_.scaled(Rational(1) / lc);
            den_ = den_.scaled(Rational(1) / lc);
        }
    }

    Poly num_;
    Poly den_;
};

/// A point of the circle R/Z, written e(angle) = exp(2 pi i angle).
class CircleValue {
public:
    CircleValue() = default;
    explicit CircleValue(Scalar angle) : angle_(std::move(angle).mod_one()) {}

    const Scalar& angle() const { return angle_; }
    bool is_one() const { return angle_.is_integer(); }

    friend CircleValue operator*(const CircleValue& a, const CircleValue& b) { return CircleValue(a.angle_ + b.angle_); }
    CircleValue conj() const { return CircleValue(-angle_); }

    friend bool operator==(const CircleValue& a, const CircleValue& b) { return (a.angle_ - b.angle_).is_integer(); }
    friend bool operator!=(const CircleValue& a, const CircleValue& b) { return !(a == b); }

    std::string str() const { return "e(" + angle_.str() + ")"; }

private:
    Scalar angle_;
};

namespace detail {

// Recursive-descent parser for scalar literals such as "1/2 + 2*t1" or "t2/t1".
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : s_(text) {}

    Scalar parse()
    {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("scalar literal '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr()
    {
        Scalar v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Scalar term()
    {
        Scalar v = unary();
        while (true) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }
    Scalar unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        Scalar base = primary();
        if (eat('^')) {
            const auto p = digits();
            Scalar r(1);
            for (unsigned long i = 0; i < p; ++i) r *= base;
            return r;
        }
        return base;
    }
    unsigned long digits()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        if (pos_ - start > 6) fail("exponent or symbol index too large");
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }
    Scalar primary()
    {
        skip_ws();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == 'T')) {
            ++pos_;
            const auto idx = digits();
            if (idx == 0) fail("symbols are numbered from t1");
            return Scalar::symbol(idx - 1);
        }
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number, symbol or '('");
        return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

}  // namespace twistlab
