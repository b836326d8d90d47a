#pragma once

// Sparse multivariate polynomials over Q in the formal symbols t1, t2, ...
// Variable index 0 is t1.  Used as numerators/denominators of Scalar.

#include "twistlab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace twistlab {

/// Exponent vector, trailing zeros trimmed so that equal monomials compare equal.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t var, std::uint32_t power = 1)
    {
        Monomial m;
        if (power == 0) return m;
        m.exps_.assign(var + 1, 0);
        m.exps_[var] = power;
        return m;
    }

    std::uint32_t exponent(std::size_t var) const { return var < exps_.size() ? exps_[var] : 0; }
    std::size_t num_vars() const { return exps_.size(); }
    bool is_one() const { return exps_.empty(); }

    std::uint32_t total_degree() const
    {
        std::uint32_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r;
        r.exps_.assign(std::max(exps_.size(), o.exps_.size()), 0);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = exponent(i) + o.exponent(i);
        return r;
    }

    bool divides(const Monomial& o) const
    {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exponent(i)) return false;
        return true;
    }

    /// o / *this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const
    {
        Monomial r;
        r.exps_.assign(o.exps_.size(), 0);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = o.exponent(i) - exponent(i);
        r.trim();
        return r;
    }

    Monomial without(std::size_t var) const
    {
        Monomial r = *this;
        if (var < r.exps_.size()) r.exps_[var] = 0;
        r.trim();
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        r.exps_.assign(std::min(a.exps_.size(), b.exps_.size()), 0);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.trim();
        return r;
    }

    /// Lexicographic with t1 most significant.
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = a.exponent(i), y = b.exponent(i);
            if (x != y) return x < y;
        }
        return false;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "t" + std::to_string(i + 1);
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

private:
    void trim()
    {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }
    std::vector<std::uint32_t> exps_;
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c)  // NOLINT(google-explicit-constructor)
    {
        if (c != 0) terms_.emplace(Monomial(), c);
    }
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly symbol(std::size_t var, std::uint32_t power = 1)
    {
        Poly p;
        p.terms_.emplace(Monomial::variable(var, power), Rational(1));
        return p;
    }
    static Poly term(const Monomial& m, const Rational& c)
    {
        Poly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_term() const
    {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

    /// True if every term has total degree <= 1.
    bool is_affine() const
    {
        for (const auto& [m, c] : terms_)
            if (m.total_degree() > 1) return false;
        return true;
    }

    std::uint32_t total_degree() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::size_t num_vars() const
    {
        std::size_t n = 0;
        for (const auto& [m, c] : terms_) n = std::max(n, m.num_vars());
        return n;
    }

    std::uint32_t degree_in(std::size_t var) const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
        return d;
    }

    /// Coefficients with respect to `var`: power -> polynomial free of var.
    std::map<std::uint32_t, Poly> coefficients_in(std::size_t var) const
    {
        std::map<std::uint32_t, Poly> out;
        for (const auto& [m, c] : terms_) out[m.exponent(var)].add_term(m.without(var), c);
        return out;
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& q) const
    {
        if (q == 0) return {};
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c *= q;
        return r;
    }

    Poly times_monomial(const Monomial& mono) const
    {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Exact division; nullopt when b does not divide a.
    static std::optional<Poly> divide_exact(Poly a, const Poly& b)
    {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        Poly q;
        const Monomial& lb = b.leading_monomial();
        const Rational& cb = b.leading_coefficient();
        while (!a.is_zero()) {
            const Monomial& la = a.leading_monomial();
            if (!lb.divides(la)) return std::nullopt;
            Poly t = term(lb.quotient_of(la), a.leading_coefficient() / cb);
            a -= t * b;
            q += t;
        }
        return q;
    }

    /// Greatest common divisor, normalized so that the leading coefficient is 1.
    static Poly gcd(const Poly& a, const Poly& b)
    {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        if (a.is_constant() || b.is_constant()) return Poly(1);
        // Monomial-only fast path.
        if (a.terms_.size() == 1 && b.terms_.size() == 1)
            return symbolic_term(Monomial::gcd(a.leading_monomial(), b.leading_monomial()));
        // A factor of total degree one is either a common factor or coprime.
        if (a.total_degree() == 1) return divide_exact(b, a) ? a.monic() : Poly(1);
        if (b.total_degree() == 1) return divide_exact(a, b) ? b.monic() : Poly(1);
        const std::size_t nv = std::max(a.num_vars(), b.num_vars());
        std::size_t var = nv;
        for (std::size_t v = nv; v-- > 0;) {
            if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
                var = v;
                break;
            }
        }
        if (var == nv) return Poly(1);
        return gcd_in(a, b, var).monic();
    }

    Poly monic() const
    {
        if (is_zero()) return {};
        return scaled(Rational(1) / leading_coefficient());
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Highest terms first reads naturally: "t1 + 1/2".
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (m.is_one()) {
                os << mag.get_str();
            } else {
                if (mag != 1) os << mag.get_str() << "*";
                os << m.str();
            }
        }
        return os.str();
    }

private:
    static Poly symbolic_term(const Monomial& m) { return term(m, Rational(1)); }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Content with respect to `var`: gcd of the coefficient polynomials.
    static Poly content_in(const Poly& p, std::size_t var)
    {
        Poly g;
        for (const auto& [e, c] : p.coefficients_in(var)) {
            g = gcd(g, c);
            if (g.is_constant()) return Poly(1);
        }
        return g;
    }

    static Poly primitive_in(const Poly& p, std::size_t var)
    {
        if (p.is_zero()) return p;
        Poly c = content_in(p, var);
        if (c.is_constant()) return p.monic();
        return divide_exact(p, c).value().monic();
    }

    static Poly leading_in(const Poly& p, std::size_t var)
    {
        const auto d = p.degree_in(var);
        Poly r;
        for (const auto& [m, c] : p.terms_)
            if (m.exponent(var) == d) r.add_term(m.without(var), c);
        return r;
    }

    // Pseudo-remainder of a by b with respect to var.
    static Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var)
    {
        const auto db = b.degree_in(var);
        const Poly lb = leading_in(b, var);
        while (!a.is_zero() && a.degree_in(var) >= db) {
            const auto da = a.degree_in(var);
            Poly la = leading_in(a, var);
            a = lb * a - la.times_monomial(Monomial::variable(var, da - db)) * b;
        }
        return a;
    }

    // Primitive PRS in the main variable `var` (all variables of a, b have index <= var).
    static Poly gcd_in(const Poly& a, const Poly& b, std::size_t var)
    {
        const Poly ca = content_in(a, var);
        const Poly cb = content_in(b, var);
        const Poly c = gcd(ca, cb);
        Poly p = ca.is_constant() ? a : divide_exact(a, ca).value();
        Poly q = cb.is_constant() ? b : divide_exact(b, cb).value();
        if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
        if (q.degree_in(var) == 0) return c;  // q is a pure content after division -> constant
        while (true) {
            Poly r = pseudo_remainder(p, q, var);
            if (r.is_zero()) break;
            if (r.degree_in(var) == 0) return c;
            p = std::move(q);
            q = primitive_in(r, var);
        }
        return c * primitive_in(q, var);
    }

    Terms terms_;
};

}  // namespace twistlab
