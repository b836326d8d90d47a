#pragma once

// Brute-force ground truth on finite abelian groups.  The twisted group
// algebra is built from its structure constants u_g u_h = zeta^c(g,h) u_(g+h)
// and split by central idempotents indexed by characters of the centre's
// support S.

#include "twistlab/cocycle.hpp"
#include "twistlab/cyclotomic.hpp"
#include "twistlab/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace twistlab {

/// Size bound for finite computations (TWISTLAB_MAX_FINITE, default 64).
inline long finite_bound()
{
    if (const char* env = std::getenv("TWISTLAB_MAX_FINITE")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 64;
}

/// lcm of the denominators of the entries of a rational matrix.
inline Integer value_order(const ScalarMatrix& B)
{
    Integer m = 1;
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            if (!B(i, j).is_rational()) throw DomainError("finite cocycle entry '" + B(i, j).str() + "' is not rational");
            m = lcm(m, B(i, j).rational().get_den());
        }
    return m;
}

class FiniteTwistedAlgebra {
public:
    FiniteTwistedAlgebra(const Cocycle& w, long bound)
        : group_(w.group), cocycle_(w)
    {
        if (!group_.is_finite()) throw DomainError("finite oracle needs a finite group, got " + group_.str());
        if (group_.order() > bound)
            throw DomainError("group order " + group_.order().get_str() + " exceeds the finite bound " + std::to_string(bound));
        elements_ = group_.enumerate();
        const std::size_t n = elements_.size();
        value_order_ = to_int64(twistlab::value_order(w.B));
        root_order_ = to_int64(lcm(Integer(2 * value_order_), group_.exponent()));
        radix_.assign(group_.torsion_count(), 1);
        for (std::size_t i = radix_.size(); i-- > 1;) radix_[i - 1] = radix_[i] * group_.torsion()[i].get_si();
        add_.assign(n * n, 0);
        table_.assign(n * n, 0);
        // Scaled integer form of B: entries times root_order.
        std::vector<std::vector<long>> Bn(group_.dim(), std::vector<long>(group_.dim()));
        for (std::size_t i = 0; i < group_.dim(); ++i)
            for (std::size_t j = 0; j < group_.dim(); ++j) {
                const Rational x = w.B(i, j).rational() * Rational(root_order_);
                Bn[i][j] = to_int64(mod_floor(x.get_num(), Integer(root_order_)));
            }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<long> s(group_.torsion_count());
                long e = 0;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    s[i] = (elements_[a][i] + elements_[b][i]) % group_.torsion()[i].get_si();
                    for (std::size_t j = 0; j < s.size(); ++j) e += elements_[a][i] * Bn[i][j] % root_order_ * elements_[b][j];
                }
                add_[a * n + b] = index_of(s);
                table_[a * n + b] = static_cast<int>(((e % root_order_) + root_order_) % root_order_);
            }
    }

    const Group& group() const { return group_; }
    const Cocycle& cocycle() const { return cocycle_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<long>& element(std::size_t i) const { return elements_[i]; }
    long value_order() const { return value_order_; }
    /// N: structure constants are powers of zeta_N.
    long root_order() const { return root_order_; }

    std::size_t index_of(const std::vector<long>& x) const
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < x.size(); ++i) idx += static_cast<std::size_t>(x[i] * radix_[i]);
        return idx;
    }
    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
    std::size_t neg(std::size_t a) const
    {
        std::vector<long> x = elements_[a];
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (group_.torsion()[i].get_si() - x[i]) % group_.torsion()[i].get_si();
        return index_of(x);
    }
    /// Exponent c with u_a u_b = zeta_N^c u_(a+b).
    int exponent(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

    /// Unit vectors of the torsion coordinates.
    std::vector<std::size_t> generators() const
    {
        std::vector<std::size_t> g;
        for (std::size_t i = 0; i < group_.torsion_count(); ++i) {
            std::vector<long> x(group_.torsion_count(), 0);
            x[i] = 1;
            g.push_back(index_of(x));
        }
        return g;
    }

    /// u_a* = conj(omega(a,-a)) u_(-a): exponent of the coefficient.
    int star_exponent(std::size_t a) const { return static_cast<int>((root_order_ - exponent(a, neg(a))) % root_order_); }

    /// Exhaustive check of (u_a u_b) u_c = u_a (u_b u_c).
    bool associative() const
    {
        const std::size_t n = size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const int ab = exponent(a, b);
                const std::size_t s = add(a, b);
                for (std::size_t c = 0; c < n; ++c) {
                    const long lhs = ab + exponent(s, c);
                    const long rhs = exponent(a, add(b, c)) + exponent(b, c);
                    if ((lhs - rhs) % root_order_ != 0) return false;
                }
            }
        return true;
    }

    /// u_a u_b = zeta^k u_b u_a: commutation exponent k.
    long commutator(std::size_t a, std::size_t b) const
    {
        return ((exponent(a, b) - exponent(b, a)) % root_order_ + root_order_) % root_order_;
    }

    /// Checks u_a* u_a = u_0 for all a.
    bool star_consistent() const
    {
        for (std::size_t a = 0; a < size(); ++a) {
            const std::size_t na = neg(a);
            if ((star_exponent(a) + exponent(na, a)) % root_order_ != 0) return false;
        }
        return true;
    }

private:
    Group group_;
    Cocycle cocycle_;
    std::vector<std::vector<long>> elements_;
    std::vector<long> radix_;
    std::vector<std::size_t> add_;
    std::vector<int> table_;
    long value_order_ = 1;
    long root_order_ = 2;
};

inline FiniteTwistedAlgebra build_algebra(const Cocycle& w) { return FiniteTwistedAlgebra(w, finite_bound()); }

/// Element of the algebra whose coefficients are (integer) sums of powers of
/// zeta_N divided by a common denominator: coeff[g][k] counts zeta^k on u_g.
struct AlgebraElement {
    long denominator = 1;
    std::vector<std::vector<long>> coeff;
};

namespace detail {

inline AlgebraElement multiply(const FiniteTwistedAlgebra& A, const AlgebraElement& x, const AlgebraElement& y)
{
    const long N = A.root_order();
    AlgebraElement z;
    z.denominator = x.denominator * y.denominator;
    z.coeff.assign(A.size(), std::vector<long>(static_cast<std::size_t>(N), 0));
    for (std::size_t a = 0; a < A.size(); ++a) {
        for (long i = 0; i < N; ++i) {
            const long xa = x.coeff[a][static_cast<std::size_t>(i)];
            if (!xa) continue;
            for (std::size_t b = 0; b < A.size(); ++b) {
                const int e = A.exponent(a, b);
                auto& dst = z.coeff[A.add(a, b)];
                for (long j = 0; j < N; ++j) {
                    const long yb = y.coeff[b][static_cast<std::size_t>(j)];
                    if (yb) dst[static_cast<std::size_t>((i + j + e) % N)] += xa * yb;
                }
            }
        }
    }
    return z;
}

inline AlgebraElement zero_element(const FiniteTwistedAlgebra& A, long den = 1)
{
    return AlgebraElement{den, std::vector<std::vector<long>>(A.size(), std::vector<long>(static_cast<std::size_t>(A.root_order()), 0))};
}

inline AlgebraElement basis_element(const FiniteTwistedAlgebra& A, std::size_t g)
{
    AlgebraElement e = zero_element(A);
    e.coeff[g][0] = 1;
    return e;
}

// x == y as algebra elements (cross-multiplied denominators).
inline bool equal(const FiniteTwistedAlgebra& A, const AlgebraElement& x, const AlgebraElement& y)
{
    for (std::size_t g = 0; g < A.size(); ++g) {
        std::vector<long> d(static_cast<std::size_t>(A.root_order()));
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = x.coeff[g][k] * y.denominator - y.coeff[g][k] * x.denominator;
        if (!powers_vanish(A.root_order(), d)) return false;
    }
    return true;
}

}  // namespace detail

struct Block {
    long dimension = 0;              ///< d, the block is M_d
    long algebra_dimension = 0;      ///< dim p A = d^2
    long center_dimension = 0;
    std::vector<long> character;     ///< central character: exponents mod N on the elements of S
};

struct BlockDecomposition {
    Group group;
    long root_order = 1;
    std::vector<std::vector<long>> S;  ///< elements of S
    std::vector<long> normalization;   ///< F(s): u'_s = zeta^-F(s) u_s is a homomorphism
    std::vector<Block> blocks;
    bool associative = false;
    bool idempotents_ok = false;      ///< idempotent, central, orthogonal, summing to 1
    bool all_matrix_blocks = false;

    long total_dimension() const
    {
        long t = 0;
        for (const auto& b : blocks) t += b.algebra_dimension;
        return t;
    }
    bool ok() const
    {
        return associative && idempotents_ok && all_matrix_blocks && total_dimension() == group.order().get_si();
    }
};

namespace detail {

// Subgroup generated by gens inside the finite algebra's group.
inline std::vector<std::size_t> closure(const FiniteTwistedAlgebra& A, const std::vector<std::size_t>& gens)
{
    std::vector<bool> in(A.size(), false);
    std::vector<std::size_t> out{0};
    in[0] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (auto g : gens) {
            const std::size_t s = A.add(out[k], g);
            if (!in[s]) {
                in[s] = true;
                out.push_back(s);
            }
        }
    return out;
}

}  // namespace detail

inline BlockDecomposition block_decomposition(const FiniteTwistedAlgebra& A)
{
    BlockDecomposition out;
    out.group = A.group();
    out.root_order = A.root_order();
    out.associative = A.associative() && A.star_consistent();
    const long N = A.root_order();
    const std::size_t n = A.size();
    const auto gens = A.generators();

    // S: elements commuting with every generator.
    std::vector<std::size_t> S;
    for (std::size_t g = 0; g < n; ++g) {
        bool central = true;
        for (auto e : gens)
            if (A.commutator(g, e) != 0) central = false;
        if (central) S.push_back(g);
    }
    std::vector<long> s_pos(n, -1);
    for (std::size_t k = 0; k < S.size(); ++k) s_pos[S[k]] = static_cast<long>(k);
    for (auto s : S) out.S.push_back(A.element(s));

    // Generators of S, greedily.
    std::vector<std::size_t> sgens;
    {
        std::vector<std::size_t> span = detail::closure(A, sgens);
        for (auto s : S) {
            if (std::find(span.begin(), span.end(), s) != span.end()) continue;
            sgens.push_back(s);
            span = detail::closure(A, sgens);
        }
    }
    // F(0) = 0 and F(s) + F(e) - F(s+e) = c(s,e) mod N for s in S, e in sgens.
    const std::size_t m = S.size();
    IntMatrix eq(1 + m * sgens.size(), m);
    std::vector<Integer> rhs(eq.rows(), Integer(0));
    eq(0, static_cast<std::size_t>(s_pos[0])) = 1;
    std::size_t row = 1;
    for (auto s : S)
        for (auto e : sgens) {
            eq(row, static_cast<std::size_t>(s_pos[s])) += 1;
            eq(row, static_cast<std::size_t>(s_pos[e])) += 1;
            eq(row, static_cast<std::size_t>(s_pos[A.add(s, e)])) -= 1;
            rhs[row] = A.exponent(s, e);
            ++row;
        }
    const auto F = solve_mod(eq, rhs, Integer(N));
    if (!F) throw std::logic_error("internal: cocycle restricted to S is not a coboundary");
    std::vector<long> f(m);
    for (std::size_t k = 0; k < m; ++k) f[k] = (*F)[k].get_si();
    out.normalization = f;

    // Characters of S: restrictions of characters of G, deduplicated.
    std::set<std::vector<long>> chars;
    for (std::size_t y = 0; y < n; ++y) {
        std::vector<long> chi(m);
        for (std::size_t k = 0; k < m; ++k) {
            long e = 0;
            const auto& s = A.element(S[k]);
            const auto& yy = A.element(y);
            for (std::size_t i = 0; i < s.size(); ++i) e += s[i] * yy[i] * (N / A.group().torsion()[i].get_si());
            chi[k] = e % N;
        }
        chars.insert(chi);
    }
    if (chars.size() != m) throw std::logic_error("internal: character count differs from |S|");

    // Central idempotents p_chi = (1/|S|) sum_s conj(chi(s)) u'_s.
    std::vector<AlgebraElement> idem;
    for (const auto& chi : chars) {
        AlgebraElement p = detail::zero_element(A, static_cast<long>(m));
        for (std::size_t k = 0; k < m; ++k) p.coeff[S[k]][static_cast<std::size_t>(((-chi[k] - f[k]) % N + N) % N)] += 1;
        idem.push_back(std::move(p));
    }
    bool ok = true;
    AlgebraElement total = detail::zero_element(A, static_cast<long>(m));
    for (std::size_t a = 0; a < idem.size() && ok; ++a) {
        const auto& p = idem[a];
        for (std::size_t g = 0; g < n; ++g)
            for (long k = 0; k < N; ++k) total.coeff[g][static_cast<std::size_t>(k)] += p.coeff[g][static_cast<std::size_t>(k)];
        if (!detail::equal(A, detail::multiply(A, p, p), p)) ok = false;
        for (auto e : gens) {
            const AlgebraElement ue = detail::basis_element(A, e);
            if (!detail::equal(A, detail::multiply(A, p, ue), detail::multiply(A, ue, p))) ok = false;
        }
        for (std::size_t b = a + 1; b < idem.size() && ok; ++b)
            if (!detail::equal(A, detail::multiply(A, p, idem[b]), detail::zero_element(A))) ok = false;
    }
    if (ok && !detail::equal(A, total, detail::basis_element(A, 0))) ok = false;
    out.idempotents_ok = ok;

    // Each block p A: spanned by p u_g; coefficients are single powers, so p u_g is a
    // monomial vector supported on the coset g + S.
    out.all_matrix_blocks = true;
    std::size_t ci = 0;
    for (const auto& chi : chars) {
        const AlgebraElement& p = idem[ci++];
        std::vector<std::vector<std::pair<std::size_t, long>>> reps;  // one monomial vector per independent direction
        std::vector<std::size_t> rep_elem;
        std::vector<bool> covered(n, false);
        bool proportional = true;
        for (std::size_t g = 0; g < n; ++g) {
            const AlgebraElement pg = detail::multiply(A, p, detail::basis_element(A, g));
            std::vector<std::pair<std::size_t, long>> v;
            for (std::size_t x = 0; x < n; ++x) {
                int terms = 0;
                long e = 0;
                for (long k = 0; k < N; ++k)
                    if (pg.coeff[x][static_cast<std::size_t>(k)]) {
                        ++terms;
                        e = k;
                    }
                if (terms > 1) proportional = false;
                if (terms == 1) v.emplace_back(x, e);
            }
            if (v.empty()) continue;
            // Same support as an earlier vector: must be a scalar multiple of it.
            const auto it = std::find_if(reps.begin(), reps.end(), [&](const auto& r) { return r.front().first == v.front().first; });
            if (it != reps.end()) {
                const auto& r = *it;
                if (r.size() != v.size()) {
                    proportional = false;
                    continue;
                }
                const long shift = v[0].second - r[0].second;
                for (std::size_t k = 0; k < v.size(); ++k)
                    if (v[k].first != r[k].first || (v[k].second - r[k].second - shift) % N != 0) proportional = false;
                continue;
            }
            for (const auto& [x, e] : v) {
                if (covered[x]) proportional = false;
                covered[x] = true;
            }
            reps.push_back(v);
            rep_elem.push_back(g);
        }
        Block blk;
        blk.character = chi;
        blk.algebra_dimension = static_cast<long>(reps.size());
        // Centre of p A: basis vectors p u_g whose commutation scalars with all generators are trivial.
        for (auto g : rep_elem) {
            bool central = true;
            for (auto e : gens)
                if (A.commutator(g, e) != 0) central = false;
            if (central) ++blk.center_dimension;
        }
        long d = 0;
        while ((d + 1) * (d + 1) <= blk.algebra_dimension) ++d;
        blk.dimension = d;
        if (!proportional || blk.center_dimension != 1 || d * d != blk.algebra_dimension) out.all_matrix_blocks = false;
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

/// Result of a coboundary search: f with f(g) f(h) / f(g+h) = omega1(g,h) conj(omega2(g,h)).
struct CoboundaryResult {
    bool found = false;
    std::vector<Rational> f;  ///< angle of f at each enumerated element, in [0,1)
    std::vector<std::vector<long>> elements;
    // Certificate of infeasibility: c(g,h) != c(h,g).
    std::vector<long> witness_g, witness_h;
    std::string reason;
};

inline CoboundaryResult solve_coboundary(const Cocycle& w1, const Cocycle& w2)
{
    if (w1.group != w2.group) throw DomainError("cocycles live on different groups");
    const Group& G = w1.group;
    if (!G.is_finite()) throw DomainError("coboundary solver needs a finite group");
    if (G.order() > finite_bound()) throw DomainError("group order exceeds the finite bound");
    const ScalarMatrix D = w1.B - w2.B;
    const auto elems = G.enumerate();
    const std::size_t n = elems.size();
    CoboundaryResult res;
    res.elements = elems;
    auto to_vec = [](const std::vector<long>& x) {
        ScalarVector v;
        for (long c : x) v.push_back(Scalar(c));
        return v;
    };
    std::vector<ScalarVector> ev;
    for (const auto& e : elems) ev.push_back(to_vec(e));
    const Cocycle diff{G, D};
    auto c = [&](std::size_t a, std::size_t b) { return frac_of(detail::bilinear(ev[a], D, ev[b]).rational()); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (c(a, b) != c(b, a)) {
                res.witness_g = elems[a];
                res.witness_h = elems[b];
                res.reason = "antisymmetric part is non-trivial";
                return res;
            }
    // Index arithmetic.
    std::vector<long> radix(G.torsion_count(), 1);
    for (std::size_t i = radix.size(); i-- > 1;) radix[i - 1] = radix[i] * G.torsion()[i].get_si();
    auto index = [&](const std::vector<long>& x) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < x.size(); ++i) idx += static_cast<std::size_t>(x[i] * radix[i]);
        return idx;
    };
    auto add = [&](std::size_t a, std::size_t b) {
        std::vector<long> s(G.torsion_count());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = (elems[a][i] + elems[b][i]) % G.torsion()[i].get_si();
        return index(s);
    };
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < G.torsion_count(); ++i) {
        std::vector<long> x(G.torsion_count(), 0);
        x[i] = 1;
        gens.push_back(index(x));
    }
    const Integer m = value_order(D);
    for (const Integer& M : std::vector<Integer>{m, 2 * m, m * G.exponent(), 2 * m * G.exponent()}) {
        IntMatrix eq(1 + n * gens.size(), n);
        std::vector<Integer> rhs(eq.rows(), Integer(0));
        eq(0, 0) = 1;
        std::size_t row = 1;
        for (std::size_t g = 0; g < n; ++g)
            for (auto e : gens) {
                eq(row, g) += 1;
                eq(row, e) += 1;
                eq(row, add(g, e)) -= 1;
                const Rational v = c(g, e) * Rational(M);
                rhs[row] = v.get_num();
                ++row;
            }
        const auto F = solve_mod(eq, rhs, M);
        if (!F) continue;
        std::vector<Rational> f(n);
        for (std::size_t g = 0; g < n; ++g) {
            Rational q((*F)[g], M);
            q.canonicalize();
            f[g] = frac_of(q);
        }
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (frac_of(f[a] + f[b] - f[add(a, b)] - c(a, b)) != 0) ok = false;
        if (!ok) throw std::logic_error("internal: coboundary solution failed re-verification");
        res.found = true;
        res.f = std::move(f);
        return res;
    }
    res.reason = "no solution modulo the tried root orders";
    return res;
}

}  // namespace twistlab
