#pragma once

// Closed subgroups, kernels, annihilators and quotients.
//
// A closed subgroup H of G is stored as a standard group D together with an
// injective homomorphism D -> G (its embedding matrix on covers).  Kernels and
// annihilators are found by solving linear equations over Q(t) whose unknowns
// are partly real and partly integer.

#include "twistlab/group.hpp"
#include "twistlab/intmat.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

/// A linear condition on group elements: the value is zero, or an integer.
enum class Condition { Zero, Integer };

/// Solution set of a homogeneous system: y = P (u, m) with u real (first
/// `real_params` columns) and m integer (remaining columns).
struct MixedSolution {
    std::size_t real_params = 0;
    std::size_t int_params = 0;
    ScalarMatrix P;
};

namespace detail {

inline Poly poly_lcm(const Poly& a, const Poly& b)
{
    const Poly g = Poly::gcd(a, b);
    return Poly::divide_exact(a * b, g).value().monic();
}

// Splits sum_j c_j y_j = 0 (integer y_j) into rational equations, one per monomial.
inline void expand_over_monomials(const std::vector<Scalar>& row, std::vector<std::vector<Rational>>& out)
{
    Poly L(1);
    for (const auto& c : row)
        if (!c.is_zero()) L = poly_lcm(L, c.denominator());
    std::map<Monomial, std::vector<Rational>> by_mono;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        const Poly num = Poly::divide_exact(L * row[j].numerator(), row[j].denominator()).value();
        for (const auto& [m, c] : num.terms()) {
            auto& v = by_mono[m];
            if (v.empty()) v.assign(row.size(), Rational(0));
            v[j] += c;
        }
    }
    for (auto& [m, v] : by_mono) out.push_back(std::move(v));
}

inline IntMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Integer l = 1;
        for (const auto& x : rows[i]) l = lcm(l, x.get_den());
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational y = rows[i][j] * Rational(l);
            m(i, j) = y.get_num();
        }
    }
    return m;
}

}  // namespace detail

/// Solves C y = 0 where y_j is integer when is_int[j] and real otherwise.
inline MixedSolution solve_mixed(const ScalarMatrix& C, const std::vector<bool>& is_int)
{
    const std::size_t n = C.cols();
    std::vector<bool> allowed(n);
    for (std::size_t j = 0; j < n; ++j) allowed[j] = !is_int[j];
    ScalarMatrix M = C;
    const auto piv = rref_in_place(M, &allowed);

    std::vector<std::size_t> int_idx, free_real;
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_int[j]) int_idx.push_back(j);
        else if (!is_pivot[j]) free_real.push_back(j);
    }

    // Remaining rows only involve integer unknowns.
    std::vector<std::vector<Rational>> rat_rows;
    for (std::size_t i = piv.size(); i < M.rows(); ++i) {
        std::vector<Scalar> row;
        for (auto j : int_idx) row.push_back(M(i, j));
        detail::expand_over_monomials(row, rat_rows);
    }
    IntMatrix N;
    if (rat_rows.empty()) {
        N = IntMatrix::identity(int_idx.size());
    } else {
        N = integer_kernel(detail::clear_denominators(rat_rows, int_idx.size()));
    }

    MixedSolution sol;
    sol.real_params = free_real.size();
    sol.int_params = N.cols();
    sol.P = ScalarMatrix(n, sol.real_params + sol.int_params);
    for (std::size_t k = 0; k < free_real.size(); ++k) sol.P(free_real[k], k) = Scalar(1);
    for (std::size_t t = 0; t < int_idx.size(); ++t)
        for (std::size_t c = 0; c < N.cols(); ++c) sol.P(int_idx[t], sol.real_params + c) = Scalar(N(t, c));
    for (std::size_t k = 0; k < piv.size(); ++k) {
        const std::size_t c = piv[k];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == c || is_pivot[j] || M(k, j).is_zero()) continue;
            for (std::size_t col = 0; col < sol.P.cols(); ++col)
                if (!sol.P(j, col).is_zero()) sol.P(c, col) -= M(k, j) * sol.P(j, col);
        }
    }
    return sol;
}

/// Quotient of R^p x Z^q by a discrete subgroup: group, projection and section
/// (both linear maps between covers, with projection * section = identity).
struct StandardQuotient {
    Group group;
    ScalarMatrix projection;  ///< dim(group) x (p + q)
    ScalarMatrix section;     ///< (p + q) x dim(group)
};

/// `gens` has p + q rows; the last q rows must be integers.
inline StandardQuotient quotient_by_discrete(std::size_t p, std::size_t q, const ScalarMatrix& gens)
{
    const std::size_t s = gens.cols();
    IntMatrix Z(q, s);
    ScalarMatrix R(p, s);
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < p; ++i) R(i, j) = gens(i, j);
        for (std::size_t i = 0; i < q; ++i) {
            if (!gens(p + i, j).is_integer()) throw DomainError("discrete generator has a non-integer coordinate");
            Z(i, j) = gens(p + i, j).integer();
        }
    }
    const SmithForm snf = smith_normal_form(Z);
    const std::size_t t = snf.rank;
    ScalarMatrix Wm(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) Wm(i, j) = Scalar(snf.W(i, j));
    const ScalarMatrix Rp = R * Wm;

    ScalarMatrix T(p, q);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < p; ++i) T(i, j) = Rp(i, j) / Scalar(snf.D(j, j));

    // Pure-real generators must span a lattice in their real span.
    std::vector<ScalarVector> basis;
    ScalarMatrix echelon(0, p);
    for (std::size_t j = t; j < s; ++j) {
        ScalarVector v = Rp.column(j);
        std::vector<ScalarVector> trial = basis;
        trial.push_back(v);
        if (rank_of(ScalarMatrix::from_columns(trial, p)) == trial.size()) basis.push_back(v);
    }
    const std::size_t rho = basis.size();
    std::vector<ScalarVector> lattice_basis;
    if (rho > 0) {
        // Coordinates of every pure-real generator in `basis` must be rational.
        const ScalarMatrix Bm = ScalarMatrix::from_columns(basis, p);
        std::vector<std::vector<Rational>> coords;
        for (std::size_t j = t; j < s; ++j) {
            ScalarMatrix aug(p, rho + 1);
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t k = 0; k < rho; ++k) aug(i, k) = Bm(i, k);
                aug(i, rho) = Rp(i, j);
            }
            std::vector<bool> allowed(rho + 1, true);
            allowed[rho] = false;
            const auto piv = rref_in_place(aug, &allowed);
            std::vector<Rational> c(rho);
            for (std::size_t k = 0; k < piv.size(); ++k) {
                if (!aug(k, rho).is_rational())
                    throw DomainError("quotient leaves the category: generators span a dense subgroup (coefficient " +
                                      aug(k, rho).str() + ")");
                c[piv[k]] = aug(k, rho).rational();
            }
            coords.push_back(std::move(c));
        }
        Integer L = 1;
        for (const auto& c : coords)
            for (const auto& x : c) L = lcm(L, x.get_den());
        IntMatrix latt(coords.size(), rho);
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t k = 0; k < rho; ++k) latt(i, k) = Rational(coords[i][k] * Rational(L)).get_num();
        const IntMatrix H = hermite_rows(latt);
        for (std::size_t i = 0; i < H.rows(); ++i) {
            ScalarVector v(p, Scalar(0));
            for (std::size_t k = 0; k < rho; ++k) {
                const Rational f = Rational(H(i, k)) / Rational(L);
                if (f == 0) continue;
                for (std::size_t r = 0; r < p; ++r) v[r] += basis[k][r].scaled(f);
            }
            lattice_basis.push_back(std::move(v));
        }
    }
    // Extend to a basis of R^p with unit vectors.
    std::vector<ScalarVector> full = lattice_basis;
    for (std::size_t k = 0; k < p && full.size() < p; ++k) {
        ScalarVector e(p, Scalar(0));
        e[k] = Scalar(1);
        auto trial = full;
        trial.push_back(e);
        if (rank_of(ScalarMatrix::from_columns(trial, p)) == trial.size()) full = std::move(trial);
    }
    const ScalarMatrix Cm = ScalarMatrix::from_columns(full, p);
    const ScalarMatrix Cinv = p ? inverse(Cm).value() : ScalarMatrix(0, 0);

    std::vector<std::size_t> tors_idx, free_idx;
    std::vector<Integer> tors_orders;
    for (std::size_t j = 0; j < t; ++j)
        if (snf.D(j, j) != 1) {
            tors_idx.push_back(j);
            tors_orders.push_back(snf.D(j, j));
        }
    for (std::size_t j = t; j < q; ++j) free_idx.push_back(j);

    StandardQuotient out;
    out.group = Group(p - rho, free_idx.size(), rho, tors_orders);
    const Group& Q = out.group;
    ScalarMatrix Um(q, q), Uinvm(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            Um(i, j) = Scalar(snf.U(i, j));
            Uinvm(i, j) = Scalar(snf.Uinv(i, j));
        }
    // z = Cinv x - Cinv T U n,  n' = U n.
    const ScalarMatrix CTU = p ? Cinv * T * Um : ScalarMatrix(0, q);
    out.projection = ScalarMatrix(Q.dim(), p + q);
    auto real_row = [&](std::size_t qrow, std::size_t zidx) {
        for (std::size_t c = 0; c < p; ++c) out.projection(qrow, c) = Cinv(zidx, c);
        for (std::size_t c = 0; c < q; ++c) out.projection(qrow, p + c) = -CTU(zidx, c);
    };
    auto int_row = [&](std::size_t qrow, std::size_t nidx) {
        for (std::size_t c = 0; c < q; ++c) out.projection(qrow, p + c) = Um(nidx, c);
    };
    for (std::size_t k = 0; k < p - rho; ++k) real_row(Q.vector_begin() + k, rho + k);
    for (std::size_t k = 0; k < free_idx.size(); ++k) int_row(Q.free_begin() + k, free_idx[k]);
    for (std::size_t k = 0; k < rho; ++k) real_row(Q.torus_begin() + k, k);
    for (std::size_t k = 0; k < tors_idx.size(); ++k) int_row(Q.torsion_begin() + k, tors_idx[k]);

    // Section: n' from free/torsion coordinates, x = C z + T n', n = U^-1 n'.
    ScalarMatrix nprime(q, Q.dim());
    for (std::size_t k = 0; k < free_idx.size(); ++k) nprime(free_idx[k], Q.free_begin() + k) = Scalar(1);
    for (std::size_t k = 0; k < tors_idx.size(); ++k) nprime(tors_idx[k], Q.torsion_begin() + k) = Scalar(1);
    ScalarMatrix z(p, Q.dim());
    for (std::size_t k = 0; k < rho; ++k) z(k, Q.torus_begin() + k) = Scalar(1);
    for (std::size_t k = 0; k < p - rho; ++k) z(rho + k, Q.vector_begin() + k) = Scalar(1);
    const ScalarMatrix x = (p ? Cm * z + T * nprime : ScalarMatrix(0, Q.dim()));
    const ScalarMatrix nn = Uinvm * nprime;
    out.section = ScalarMatrix(p + q, Q.dim());
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < Q.dim(); ++j) out.section(i, j) = x(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < Q.dim(); ++j) out.section(p + i, j) = nn(i, j);
    return out;
}

/// Closed subgroup: a standard group with an injective embedding into the ambient group.
struct ClosedSubgroup {
    Group ambient;
    Group group;
    ScalarMatrix embedding;  ///< ambient.dim() x group.dim()

    bool is_trivial() const { return group.is_trivial(); }
    Homomorphism inclusion() const { return Homomorphism{group, ambient, embedding}; }

    /// Reduced echelon basis of the real subspace (images of vector coordinates).
    ScalarMatrix subspace_basis() const
    {
        ScalarMatrix m(group.vector_dim(), ambient.dim());
        for (std::size_t k = 0; k < group.vector_dim(); ++k)
            for (std::size_t i = 0; i < ambient.dim(); ++i) m(k, i) = embedding(i, group.vector_begin() + k);
        rref_in_place(m);
        return m;
    }
    std::vector<ScalarVector> generators(CoordKind kind) const
    {
        std::vector<ScalarVector> g;
        for (std::size_t j = 0; j < group.dim(); ++j)
            if (group.kind(j) == kind) g.push_back(embedding.column(j));
        return g;
    }
};

inline ClosedSubgroup whole_group(const Group& G)
{
    return ClosedSubgroup{G, G, ScalarMatrix::identity(G.dim())};
}

inline ClosedSubgroup trivial_subgroup(const Group& G)
{
    return ClosedSubgroup{G, Group(), ScalarMatrix(G.dim(), 0)};
}

/// Closed subgroup from a parametrization R^p x Z^q -> cover(G) whose image contains the cover lattice.
inline ClosedSubgroup subgroup_from_parametrization(const Group& G, const ScalarMatrix& P, std::size_t p, std::size_t q)
{
    const ScalarMatrix Lam = G.lattice();
    // Parameters of the lattice generators: solve P w = lambda.
    ScalarMatrix aug(G.dim(), p + q + Lam.cols());
    for (std::size_t i = 0; i < G.dim(); ++i) {
        for (std::size_t j = 0; j < p + q; ++j) aug(i, j) = P(i, j);
        for (std::size_t j = 0; j < Lam.cols(); ++j) aug(i, p + q + j) = Lam(i, j);
    }
    std::vector<bool> allowed(aug.cols(), false);
    for (std::size_t j = 0; j < p + q; ++j) allowed[j] = true;
    const auto piv = rref_in_place(aug, &allowed);
    if (piv.size() != p + q) throw std::logic_error("parametrization is not injective");
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = p + q; j < aug.cols(); ++j)
            if (!aug(i, j).is_zero()) throw DomainError("subgroup does not contain the cover lattice");
    ScalarMatrix gens(p + q, Lam.cols());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < Lam.cols(); ++j) gens(piv[k], j) = aug(k, p + q + j);
    const StandardQuotient sq = quotient_by_discrete(p, q, gens);
    ClosedSubgroup H{G, sq.group, P * sq.section};
    const std::string v = hom_violation(H.group, G, H.embedding);
    if (!v.empty()) throw std::logic_error("internal: subgroup embedding invalid: " + v);
    return H;
}

/// Elements g with each condition row applied to g being zero or an integer.
inline ClosedSubgroup solve_conditions(const Group& G, const ScalarMatrix& rows, const std::vector<Condition>& kinds)
{
    const std::size_t n = G.dim();
    std::size_t slacks = 0;
    for (auto k : kinds)
        if (k == Condition::Integer) ++slacks;
    ScalarMatrix C(rows.rows(), n + slacks);
    std::vector<bool> is_int(n + slacks, true);
    for (std::size_t j = 0; j < n; ++j) is_int[j] = is_discrete(G.kind(j));
    std::size_t s = 0;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) C(i, j) = rows(i, j);
        if (kinds[i] == Condition::Integer) C(i, n + s++) = Scalar(-1);
    }
    const MixedSolution sol = solve_mixed(C, is_int);
    return subgroup_from_parametrization(G, sol.P.block(0, 0, n, sol.P.cols()), sol.real_params, sol.int_params);
}

/// Conditions whose common solution set is the kernel of f.
inline void kernel_conditions(const Homomorphism& f, ScalarMatrix& rows, std::vector<Condition>& kinds)
{
    const Group& C = f.codomain;
    rows = ScalarMatrix(C.dim(), f.domain.dim());
    kinds.assign(C.dim(), Condition::Zero);
    for (std::size_t i = 0; i < C.dim(); ++i) {
        Scalar scale(1);
        if (C.kind(i) == CoordKind::Torus) kinds[i] = Condition::Integer;
        if (C.kind(i) == CoordKind::Torsion) {
            kinds[i] = Condition::Integer;
            scale = Scalar(1) / Scalar(C.order(i));
        }
        for (std::size_t j = 0; j < f.domain.dim(); ++j) rows(i, j) = f.matrix(i, j) * scale;
    }
}

inline ClosedSubgroup kernel(const Homomorphism& f)
{
    const std::string v = hom_violation(f.domain, f.codomain, f.matrix);
    if (!v.empty()) throw DomainError("kernel of an invalid homomorphism: " + v);
    ScalarMatrix rows;
    std::vector<Condition> kinds;
    kernel_conditions(f, rows, kinds);
    return solve_conditions(f.domain, rows, kinds);
}

/// {g in G : e(g^T M y) = 1 for all y in T}.  M is dim(G) x dim(T).
inline ClosedSubgroup pairing_annihilator(const Group& G, const ScalarMatrix& M, const Group& T)
{
    ScalarMatrix rows = M.transpose();
    std::vector<Condition> kinds(T.dim());
    for (std::size_t j = 0; j < T.dim(); ++j) kinds[j] = is_continuous(T.kind(j)) ? Condition::Zero : Condition::Integer;
    return solve_conditions(G, rows, kinds);
}

/// Checks that every generator of H satisfies the conditions exactly (lines and
/// circles must satisfy them identically, so their rows must vanish).
inline bool conditions_hold_on(const ClosedSubgroup& H, const ScalarMatrix& rows, const std::vector<Condition>& kinds)
{
    const ScalarMatrix vals = rows * H.embedding;
    for (std::size_t j = 0; j < H.group.dim(); ++j)
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            const Scalar& v = vals(i, j);
            if (is_continuous(H.group.kind(j)) || kinds[i] == Condition::Zero) {
                if (!v.is_zero()) return false;
            } else if (!v.is_integer()) {
                return false;
            }
        }
    return true;
}

inline bool kernel_audit(const Homomorphism& f, const ClosedSubgroup& K)
{
    ScalarMatrix rows;
    std::vector<Condition> kinds;
    kernel_conditions(f, rows, kinds);
    return conditions_hold_on(K, rows, kinds);
}

namespace detail {

// Solves E w + Lambda l - g y0 = 0; returns the parametrization row of y0.
inline MixedSolution membership_system(const ClosedSubgroup& H, const ScalarVector& g, bool y0_real)
{
    const Group& G = H.ambient;
    const ScalarMatrix Lam = G.lattice();
    const std::size_t nw = H.group.dim(), nl = Lam.cols();
    ScalarMatrix C(G.dim(), nw + nl + 1);
    std::vector<bool> is_int(nw + nl + 1, true);
    for (std::size_t j = 0; j < nw; ++j) is_int[j] = is_discrete(H.group.kind(j));
    is_int[nw + nl] = !y0_real;
    for (std::size_t i = 0; i < G.dim(); ++i) {
        for (std::size_t j = 0; j < nw; ++j) C(i, j) = H.embedding(i, j);
        for (std::size_t j = 0; j < nl; ++j) C(i, nw + j) = Lam(i, j);
        C(i, nw + nl) = -g[i];
    }
    return solve_mixed(C, is_int);
}

}  // namespace detail

/// Decides g in H.
inline bool contains(const ClosedSubgroup& H, const ScalarVector& g)
{
    H.ambient.check_element(g);
    const MixedSolution sol = detail::membership_system(H, g, false);
    const std::size_t row = sol.P.rows() - 1;
    Integer gg = 0;
    for (std::size_t c = 0; c < sol.P.cols(); ++c) gg = gcd(gg, sol.P(row, c).integer());
    return gg == 1;
}

/// Decides whether the whole line R*c (through the cover) lies in H.
inline bool contains_line(const ClosedSubgroup& H, const ScalarVector& c)
{
    const MixedSolution sol = detail::membership_system(H, c, true);
    const std::size_t row = sol.P.rows() - 1;
    for (std::size_t k = 0; k < sol.real_params; ++k)
        if (!sol.P(row, k).is_zero()) return true;
    return false;
}

/// H1 contained in H2 (same ambient group).
inline bool is_subgroup_of(const ClosedSubgroup& H1, const ClosedSubgroup& H2)
{
    for (std::size_t j = 0; j < H1.group.dim(); ++j) {
        const ScalarVector c = H1.embedding.column(j);
        if (is_continuous(H1.group.kind(j)) ? !contains_line(H2, c) : !contains(H2, c)) return false;
    }
    return true;
}

inline bool same_subgroup(const ClosedSubgroup& H1, const ClosedSubgroup& H2)
{
    return is_subgroup_of(H1, H2) && is_subgroup_of(H2, H1);
}

/// G / H with its projection and a linear section on covers.
struct Quotient {
    Group group;
    Homomorphism projection;
    ScalarMatrix section;  ///< G.dim() x group.dim()
};

inline Quotient quotient(const Group& G, const ClosedSubgroup& H)
{
    if (H.ambient != G) throw DomainError("subgroup is not contained in " + G.str());
    const std::string v = hom_violation(H.group, G, H.embedding);
    if (!v.empty()) throw DomainError("subgroup embedding is not a homomorphism into " + G.str() + ": " + v);
    std::vector<std::size_t> cont, disc;
    for (std::size_t i = 0; i < G.dim(); ++i) (is_continuous(G.kind(i)) ? cont : disc).push_back(i);
    const std::size_t nc = cont.size(), nd = disc.size();

    // Real span W of the continuous directions of H.
    std::vector<ScalarVector> wcols;
    for (std::size_t j = 0; j < H.group.dim(); ++j) {
        if (!is_continuous(H.group.kind(j))) continue;
        ScalarVector w(nc);
        for (std::size_t k = 0; k < nc; ++k) w[k] = H.embedding(cont[k], j);
        wcols.push_back(std::move(w));
    }
    ScalarMatrix Qm;  // (nc - k) x nc, kills W, reduced echelon
    if (wcols.empty()) {
        Qm = ScalarMatrix::identity(nc);
    } else {
        const ScalarMatrix Wt = ScalarMatrix::from_columns(wcols, nc).transpose();
        Qm = null_space(Wt).transpose();
    }
    const auto qpiv = rref_in_place(Qm);
    const std::size_t pr = Qm.rows();
    ScalarMatrix Phi0(pr + nd, G.dim());
    for (std::size_t i = 0; i < pr; ++i)
        for (std::size_t k = 0; k < nc; ++k) Phi0(i, cont[k]) = Qm(i, k);
    for (std::size_t k = 0; k < nd; ++k) Phi0(pr + k, disc[k]) = Scalar(1);
    ScalarMatrix Sig0(G.dim(), pr + nd);
    for (std::size_t i = 0; i < pr; ++i) Sig0(cont[qpiv[i]], i) = Scalar(1);
    for (std::size_t k = 0; k < nd; ++k) Sig0(disc[k], pr + k) = Scalar(1);

    std::vector<ScalarVector> gens;
    const ScalarMatrix Lam = G.lattice();
    for (std::size_t j = 0; j < Lam.cols(); ++j) gens.push_back(Phi0.apply(Lam.column(j)));
    for (std::size_t j = 0; j < H.group.dim(); ++j)
        if (is_discrete(H.group.kind(j))) gens.push_back(Phi0.apply(H.embedding.column(j)));
    const ScalarMatrix Gm = ScalarMatrix::from_columns(gens, pr + nd);
    const StandardQuotient sq = quotient_by_discrete(pr, nd, Gm);
    Quotient out{sq.group, Homomorphism{G, sq.group, sq.projection * Phi0}, Sig0 * sq.section};
    const std::string pv = hom_violation(G, out.group, out.projection.matrix);
    if (!pv.empty()) throw std::logic_error("internal: quotient projection invalid: " + pv);
    return out;
}

/// Splitting of a surjection f from R^a x Z^r onto R or onto T.
struct Splitting {
    bool onto_circle = false;
    ScalarVector section;                 ///< v with f(v) = 1
    std::vector<ScalarVector> vector_basis;  ///< basis of the kernel's vector part V'
    std::vector<ScalarVector> free_generators;  ///< Z' (for onto T, preceded by v)
    ClosedSubgroup kernel;
    ScalarMatrix basis_change;  ///< columns: v, V' basis, Z' generators (onto R) -- invertible
};

inline Splitting split_surjection(const Homomorphism& f)
{
    const Group& D = f.domain;
    if (D.torus_dim() || D.torsion_count()) throw DomainError("split_surjection needs a torsion-free domain R^a x Z^r");
    const Group& C = f.codomain;
    const bool onto_r = C == Group(1, 0, 0);
    const bool onto_t = C == Group(0, 0, 1);
    if (!onto_r && !onto_t) throw DomainError("split_surjection needs codomain R or T, got " + C.str());
    const std::string v = hom_violation(D, C, f.matrix);
    if (!v.empty()) throw DomainError("invalid homomorphism: " + v);
    // Simplest non-zero vector entry as pivot keeps the kernel basis small.
    std::size_t pivot = D.vector_dim();
    for (std::size_t i = 0; i < D.vector_dim(); ++i)
        if (!f.matrix(0, i).is_zero() && (pivot == D.vector_dim() || f.matrix(0, i).complexity() < f.matrix(0, pivot).complexity()))
            pivot = i;
    if (pivot == D.vector_dim()) throw DomainError("homomorphism is not surjective: it vanishes on the vector part");
    const Scalar fp = f.matrix(0, pivot);
    Splitting s;
    s.onto_circle = onto_t;
    s.section = D.zero();
    s.section[pivot] = Scalar(1) / fp;
    for (std::size_t l = 0; l < D.vector_dim(); ++l) {
        if (l == pivot) continue;
        ScalarVector b = D.zero();
        b[l] = Scalar(1);
        b[pivot] = -(f.matrix(0, l) / fp);
        s.vector_basis.push_back(std::move(b));
    }
    if (onto_t) s.free_generators.push_back(s.section);
    for (std::size_t k = D.free_begin(); k < D.dim(); ++k) {
        ScalarVector z = D.zero();
        z[k] = Scalar(1);
        z[pivot] = -(f.matrix(0, k) / fp);
        s.free_generators.push_back(std::move(z));
    }
    const Group K(s.vector_basis.size(), s.free_generators.size(), 0);
    std::vector<ScalarVector> cols = s.vector_basis;
    cols.insert(cols.end(), s.free_generators.begin(), s.free_generators.end());
    s.kernel = ClosedSubgroup{D, K, ScalarMatrix::from_columns(cols, D.dim())};
    std::vector<ScalarVector> bc{s.section};
    bc.insert(bc.end(), s.vector_basis.begin(), s.vector_basis.end());
    for (std::size_t k = onto_t ? 1 : 0; k < s.free_generators.size(); ++k) bc.push_back(s.free_generators[k]);
    s.basis_change = ScalarMatrix::from_columns(bc, D.dim());
    return s;
}

}  // namespace twistlab
