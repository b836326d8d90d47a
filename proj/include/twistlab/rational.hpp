#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for domain errors (bad input, precondition failures).  The CLI maps
/// these to exit code 1; ParseError maps to exit code 2.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Representative of q mod 1 in [0, 1).
inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

/// Non-negative residue of a mod n (n > 0).
inline Integer mod_floor(const Integer& a, const Integer& n)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional sign, no spaces).
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("malformed rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace twistlab
