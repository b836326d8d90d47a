#pragma once

// Integer matrix normal forms: Smith form with both transforms, row Hermite
// form, integer kernels and linear congruence solving.

#include "twistlab/matrix.hpp"
#include "twistlab/rational.hpp"

#include <optional>
#include <vector>

namespace twistlab {

using IntMatrix = Matrix<Integer>;

struct SmithForm {
    IntMatrix U;     ///< rows x rows, unimodular
    IntMatrix Uinv;  ///< inverse of U
    IntMatrix D;     ///< U * M * W, diagonal with d1 | d2 | ...
    IntMatrix W;     ///< cols x cols, unimodular
    std::size_t rank = 0;

    /// Non-zero diagonal entries, in order.
    std::vector<Integer> divisors() const
    {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

// Unimodular 2x2 data (a b; c d) with a*x + b*y = gcd and c*x + d*y = 0.
struct GcdStep {
    Integer a, b, c, d, g;
};

inline GcdStep gcd_step(const Integer& x, const Integer& y)
{
    GcdStep st;
    if (y % x == 0) {
        // Plain subtraction keeps entries small.
        st.a = 1;
        st.b = 0;
        st.c = -(y / x);
        st.d = 1;
        st.g = x;
        return st;
    }
    mpz_gcdext(st.g.get_mpz_t(), st.a.get_mpz_t(), st.b.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    st.c = -(y / st.g);
    st.d = x / st.g;
    return st;
}

// Smith form by alternating row and column Hermite reductions, followed by
// gcd/lcm repair of the diagonal.  Row operations are mirrored on U, its
// inverse, or on a right-hand side; column operations on W.
class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& m, std::vector<Integer>* rhs = nullptr)
        : D_(m), W_(IntMatrix::identity(m.cols())), rhs_(rhs), track_left_(rhs == nullptr)
    {
        if (track_left_) {
            U_ = IntMatrix::identity(m.rows());
            Uinv_ = IntMatrix::identity(m.rows());
        }
    }

    SmithForm run()
    {
        for (std::size_t round = 0;; ++round) {
            if (round > 4 * (D_.rows() + D_.cols()) + 64) throw std::logic_error("internal: Smith reduction did not converge");
            row_hermite();
            if (diagonal()) break;
            col_hermite();
            if (diagonal()) break;
        }
        std::size_t rank = 0;
        while (rank < std::min(D_.rows(), D_.cols()) && D_(rank, rank) != 0) ++rank;
        for (std::size_t i = 0; i < rank; ++i) {
            for (std::size_t j = i + 1; j < rank; ++j) {
                if (D_(j, j) % D_(i, i) == 0) continue;
                // (x, y) -> (gcd, lcm) by U = (s t; -y/g x/g), W = (1 -t y/g; 1 s x/g).
                const Integer x = D_(i, i), y = D_(j, j);
                Integer g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                const Integer xg = x / g, yg = y / g;
                row_mix(i, j, s, t, -yg, xg);
                col_mix(i, j, Integer(1), -t * yg, Integer(1), s * xg);
            }
            if (D_(i, i) < 0) row_negate(i);
        }
        SmithForm out;
        out.rank = rank;
        out.U = std::move(U_);
        out.Uinv = std::move(Uinv_);
        out.D = std::move(D_);
        out.W = std::move(W_);
        return out;
    }

private:
    bool diagonal() const
    {
        for (std::size_t i = 0; i < D_.rows(); ++i)
            for (std::size_t j = 0; j < D_.cols(); ++j)
                if (i != j && D_(i, j) != 0) return false;
        return true;
    }

    void row_hermite()
    {
        std::size_t r = 0;
        for (std::size_t c = 0; c < D_.cols() && r < D_.rows(); ++c) {
            std::size_t p = r;
            while (p < D_.rows() && D_(p, c) == 0) ++p;
            if (p == D_.rows()) continue;
            row_swap(r, p);
            for (std::size_t i = r + 1; i < D_.rows(); ++i) {
                if (D_(i, c) == 0) continue;
                const GcdStep st = gcd_step(D_(r, c), D_(i, c));
                row_mix(r, i, st.a, st.b, st.c, st.d);
            }
            if (D_(r, c) < 0) row_negate(r);
            for (std::size_t i = 0; i < r; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D_(i, c).get_mpz_t(), D_(r, c).get_mpz_t());
                if (q != 0) row_mix(i, r, Integer(1), -q, Integer(0), Integer(1));
            }
            ++r;
        }
    }

    void col_hermite()
    {
        std::size_t c = 0;
        for (std::size_t r = 0; r < D_.rows() && c < D_.cols(); ++r) {
            std::size_t p = c;
            while (p < D_.cols() && D_(r, p) == 0) ++p;
            if (p == D_.cols()) continue;
            col_swap(c, p);
            for (std::size_t j = c + 1; j < D_.cols(); ++j) {
                if (D_(r, j) == 0) continue;
                const GcdStep st = gcd_step(D_(r, c), D_(r, j));
                col_mix(c, j, st.a, st.c, st.b, st.d);
            }
            if (D_(r, c) < 0) col_negate(c);
            for (std::size_t j = 0; j < c; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D_(r, j).get_mpz_t(), D_(r, c).get_mpz_t());
                if (q != 0) col_mix(j, c, Integer(1), Integer(0), -q, Integer(1));
            }
            ++c;
        }
    }

    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j), ad - bc = 1.
    void row_mix(std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c, const Integer& d)
    {
        auto mix = [&](IntMatrix& M) {
            for (std::size_t k = 0; k < M.cols(); ++k) {
                const Integer x = M(i, k), y = M(j, k);
                M(i, k) = a * x + b * y;
                M(j, k) = c * x + d * y;
            }
        };
        mix(D_);
        if (rhs_) {
            const Integer x = (*rhs_)[i], y = (*rhs_)[j];
            (*rhs_)[i] = a * x + b * y;
            (*rhs_)[j] = c * x + d * y;
        }
        if (!track_left_) return;
        mix(U_);
        // Uinv <- Uinv * (d -b; -c a)
        for (std::size_t k = 0; k < Uinv_.rows(); ++k) {
            const Integer x = Uinv_(k, i), y = Uinv_(k, j);
            Uinv_(k, i) = x * d - y * c;
            Uinv_(k, j) = -x * b + y * a;
        }
    }
    // (col_i, col_j) <- (a col_i + c col_j, b col_i + d col_j): right multiplication by (a b; c d).
    void col_mix(std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c, const Integer& d)
    {
        auto mix = [&](IntMatrix& M) {
            for (std::size_t k = 0; k < M.rows(); ++k) {
                const Integer x = M(k, i), y = M(k, j);
                M(k, i) = a * x + c * y;
                M(k, j) = b * x + d * y;
            }
        };
        mix(D_);
        mix(W_);
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        D_.swap_rows(i, j);
        if (rhs_) std::swap((*rhs_)[i], (*rhs_)[j]);
        if (!track_left_) return;
        U_.swap_rows(i, j);
        Uinv_.swap_cols(i, j);
    }
    void row_negate(std::size_t i)
    {
        for (std::size_t c = 0; c < D_.cols(); ++c) D_(i, c) = -D_(i, c);
        if (rhs_) (*rhs_)[i] = -(*rhs_)[i];
        if (!track_left_) return;
        for (std::size_t c = 0; c < U_.cols(); ++c) U_(i, c) = -U_(i, c);
        for (std::size_t r = 0; r < Uinv_.rows(); ++r) Uinv_(r, i) = -Uinv_(r, i);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        D_.swap_cols(i, j);
        W_.swap_cols(i, j);
    }
    void col_negate(std::size_t i)
    {
        for (std::size_t r = 0; r < D_.rows(); ++r) D_(r, i) = -D_(r, i);
        for (std::size_t r = 0; r < W_.rows(); ++r) W_(r, i) = -W_(r, i);
    }

    IntMatrix D_, U_, Uinv_, W_;
    std::vector<Integer>* rhs_;
    bool track_left_;
};

}  // namespace detail

/// Smith normal form: D = U * M * W.
inline SmithForm smith_normal_form(const IntMatrix& m) { return detail::SmithReducer(m).run(); }

/// Row Hermite normal form of the lattice spanned by the rows of m.  Zero rows
/// are dropped; pivots are positive and entries above a pivot are reduced
/// into [0, pivot).
inline IntMatrix hermite_rows(const IntMatrix& m)
{
    IntMatrix h = m;
    std::size_t r = 0;
    auto mix = [&](std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
        for (std::size_t k = 0; k < h.cols(); ++k) {
            const Integer x = h(i, k), y = h(j, k);
            h(i, k) = a * x + b * y;
            h(j, k) = c * x + d * y;
        }
    };
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        std::size_t p = r;
        while (p < h.rows() && h(p, c) == 0) ++p;
        if (p == h.rows()) continue;
        h.swap_rows(r, p);
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0) continue;
            const detail::GcdStep st = detail::gcd_step(h(r, c), h(i, c));
            mix(r, i, st.a, st.b, st.c, st.d);
        }
        if (h(r, c) < 0)
            for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(r, j);
        }
        ++r;
    }
    return h.block(0, 0, r, h.cols());
}

/// Basis (as columns) of the integer kernel {x in Z^n : m x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& m)
{
    const SmithForm s = smith_normal_form(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank; j < m.cols(); ++j) idx.push_back(j);
    IntMatrix k = s.W.select_columns(idx);
    // Canonical basis: Hermite form of the kernel lattice.
    if (k.cols() > 0) k = hermite_rows(k.transpose()).transpose();
    return k;
}

/// Solves a x = b over Z/modulus.  Returns some solution or nullopt.
inline std::optional<std::vector<Integer>> solve_mod(const IntMatrix& a, const std::vector<Integer>& b, const Integer& modulus)
{
    // Row operations are replayed on b instead of being accumulated in U.
    std::vector<Integer> c = b;
    const SmithForm s = detail::SmithReducer(a, &c).run();
    std::vector<Integer> y(a.cols(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer ci = mod_floor(c[i], modulus);
        if (i >= s.rank || i >= a.cols()) {
            if (ci != 0) return std::nullopt;
            continue;
        }
        const Integer d = mod_floor(s.D(i, i), modulus);
        const Integer g = gcd(d, modulus);
        if (ci % g != 0) return std::nullopt;
        const Integer mg = modulus / g;
        if (mg == 1) continue;
        Integer inv;
        const Integer dg = d / g;
        mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mg.get_mpz_t());
        y[i] = mod_floor((ci / g) * inv, mg);
    }
    std::vector<Integer> x(a.cols(), Integer(0));
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) x[i] += s.W(i, j) * y[j];
        x[i] = mod_floor(x[i], modulus);
    }
    return x;
}

/// Invariant factors (> 1) of the finite abelian group Z^k / (rows of relations),
/// plus the free rank of that quotient.
struct AbelianInvariants {
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;
};

inline AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t k)
{
    AbelianInvariants out;
    if (relations.rows() == 0) {
        out.free_rank = k;
        return out;
    }
    const SmithForm s = smith_normal_form(relations);
    for (auto& d : s.divisors())
        if (d != 1) out.torsion.push_back(d);
    out.free_rank = k - s.rank;
    return out;
}

inline Integer determinant_abs(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::logic_error("determinant of non-square matrix");
    const SmithForm s = smith_normal_form(m);
    if (s.rank < m.rows()) return Integer(0);
    Integer d = 1;
    for (auto& x : s.divisors()) d *= x;
    return d;
}

/// Exact conversion of an integer matrix to rationals and back.
inline Matrix<Rational> to_rational(const IntMatrix& m)
{
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

}  // namespace twistlab
