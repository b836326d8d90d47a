#pragma once

// Exact arithmetic in Q(zeta_N): rational coefficient vectors reduced modulo
// the N-th cyclotomic polynomial.

#include "twistlab/rational.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace twistlab {

namespace detail {

// Polynomial division of a by monic b over Z; returns the quotient.
inline std::vector<Integer> divide_monic(std::vector<Integer> a, const std::vector<Integer>& b)
{
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    std::vector<Integer> q(a.size() - db, Integer(0));
    for (std::size_t k = a.size(); k-- > db;) {
        const Integer c = a[k];
        if (c == 0) continue;
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    return q;
}

}  // namespace detail

/// Coefficients (constant term first) of the N-th cyclotomic polynomial.
inline const std::vector<Integer>& cyclotomic_polynomial(long n)
{
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    if (n < 1) throw DomainError("cyclotomic index must be positive");
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = detail::divide_monic(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

/// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class Cyclotomic {
public:
    explicit Cyclotomic(long n = 1) : n_(n), c_(degree(n), Rational(0)) {}

    static Cyclotomic zeta_power(long n, long k)
    {
        std::vector<Rational> h(static_cast<std::size_t>(n), Rational(0));
        h[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
        return from_powers(n, h);
    }

    static Cyclotomic rational(long n, const Rational& q)
    {
        Cyclotomic c(n);
        c.c_[0] = q;
        return c;
    }

    /// sum_k h[k] zeta^k for a histogram indexed by exponent mod N.
    static Cyclotomic from_powers(long n, const std::vector<Rational>& h)
    {
        const auto& phi = cyclotomic_polynomial(n);
        const std::size_t d = phi.size() - 1;
        std::vector<Rational> a = h;
        for (std::size_t k = a.size(); k-- > d;) {
            if (a[k] == 0) continue;
            const Rational c = a[k];
            for (std::size_t i = 0; i <= d; ++i) a[k - d + i] -= c * Rational(phi[i]);
        }
        a.resize(d);
        Cyclotomic out(n);
        out.c_ = std::move(a);
        return out;
    }

    long order() const { return n_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b)
    {
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b)
    {
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
    {
        std::vector<Rational> h(2 * a.c_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) h[i + j] += a.c_[i] * b.c_[j];
        }
        return from_powers(a.n_, h);
    }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

    /// Complex conjugation zeta -> zeta^-1.
    Cyclotomic conj() const
    {
        std::vector<Rational> h(static_cast<std::size_t>(n_), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) h[static_cast<std::size_t>((n_ - static_cast<long>(i)) % n_)] += c_[i];
        return from_powers(n_, h);
    }

    static std::size_t degree(long n) { return cyclotomic_polynomial(n).size() - 1; }

private:
    long n_;
    std::vector<Rational> c_;
};

/// Zero test for sum_k h[k] zeta_N^k with integer multiplicities.
inline bool powers_vanish(long n, const std::vector<long>& h)
{
    bool any = false;
    for (long x : h)
        if (x != 0) any = true;
    if (!any) return true;
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t d = phi.size() - 1;
    // Machine-word reduction; falls back to GMP if values grow large.
    constexpr long long limit = 1LL << 40;
    std::vector<long long> a(h.begin(), h.end());
    std::vector<long long> ph(phi.size());
    bool small = true;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (!phi[i].fits_slong_p() || abs(phi[i]) > 1000) small = false;
        else ph[i] = phi[i].get_si();
    }
    if (small) {
        for (std::size_t k = a.size(); k-- > d && small;) {
            const long long c = a[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= d; ++i) {
                a[k - d + i] -= c * ph[i];
                if (a[k - d + i] > limit || a[k - d + i] < -limit) small = false;
            }
        }
        if (small) {
            for (std::size_t i = 0; i < d; ++i)
                if (a[i] != 0) return false;
            return true;
        }
    }
    std::vector<Integer> b(h.begin(), h.end());
    for (std::size_t k = b.size(); k-- > d;) {
        if (b[k] == 0) continue;
        const Integer c = b[k];
        for (std::size_t i = 0; i <= d; ++i) b[k - d + i] -= c * phi[i];
    }
    for (std::size_t i = 0; i < d; ++i)
        if (b[i] != 0) return false;
    return true;
}

}  // namespace twistlab
