#pragma once

// Bicharacter cocycles omega(g, h) = e(g^T B h) on a standard group.

#include "twistlab/group.hpp"
#include "twistlab/subgroup.hpp"

#include <string>

namespace twistlab {

/// First violated pairing rule for M : rows indexed by G1, columns by G2, or "".
inline std::string pairing_violation(const Group& g1, const Group& g2, const ScalarMatrix& m)
{
    if (m.rows() != g1.dim() || m.cols() != g2.dim())
        return "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
               std::to_string(g1.dim()) + "x" + std::to_string(g2.dim());
    for (std::size_t i = 0; i < g1.dim(); ++i)
        for (std::size_t j = 0; j < g2.dim(); ++j) {
            const CoordKind a = g1.kind(i), b = g2.kind(j);
            const Scalar& x = m(i, j);
            auto bad = [&](const std::string& rule) {
                return std::string("block ") + kind_name(a) + " x " + kind_name(b) + ", entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") = " + x.str() + ": " + rule;
            };
            const bool compact_a = a == CoordKind::Torus || a == CoordKind::Torsion;
            const bool compact_b = b == CoordKind::Torus || b == CoordKind::Torsion;
            // Any pairing of a connected factor with a compact one, or of two compact ones
            // where one is a torus, is trivial.
            if ((is_continuous(a) && compact_b) || (compact_a && is_continuous(b))) {
                if (!x.is_zero()) return bad("must be zero");
                continue;
            }
            if ((a == CoordKind::Free && b == CoordKind::Torus) || (a == CoordKind::Torus && b == CoordKind::Free)) {
                if (!x.is_integer()) return bad("must be an integer");
                continue;
            }
            if (a == CoordKind::Torsion || b == CoordKind::Torsion) {
                Integer n;
                if (a == CoordKind::Torsion && b == CoordKind::Torsion) n = gcd(g1.order(i), g2.order(j));
                else n = (a == CoordKind::Torsion) ? g1.order(i) : g2.order(j);
                if (!(x * Scalar(n)).is_integer()) return bad("denominator must divide " + n.get_str());
            }
        }
    return {};
}

/// Equality of the pairings e(g^T M h) defined by two matrices.
inline bool pairing_equal(const Group& g1, const Group& g2, const ScalarMatrix& m1, const ScalarMatrix& m2)
{
    for (std::size_t i = 0; i < g1.dim(); ++i)
        for (std::size_t j = 0; j < g2.dim(); ++j) {
            const Scalar d = m1(i, j) - m2(i, j);
            if (is_discrete(g1.kind(i)) && is_discrete(g2.kind(j))) {
                if (!d.is_integer()) return false;
            } else if (!d.is_zero()) {
                return false;
            }
        }
    return true;
}

struct Cocycle {
    Group group;
    ScalarMatrix B;
};

inline Cocycle make_cocycle(const Group& G, const ScalarMatrix& B)
{
    const std::string v = pairing_violation(G, G, B);
    if (!v.empty()) throw DomainError("invalid cocycle on " + G.str() + ": " + v);
    return Cocycle{G, B};
}

inline Cocycle trivial_cocycle(const Group& G) { return Cocycle{G, ScalarMatrix(G.dim(), G.dim())}; }

namespace detail {

inline Scalar bilinear(const ScalarVector& g, const ScalarMatrix& M, const ScalarVector& h)
{
    Scalar s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) continue;
        for (std::size_t j = 0; j < h.size(); ++j)
            if (!h[j].is_zero() && !M(i, j).is_zero()) s += g[i] * M(i, j) * h[j];
    }
    return s;
}

}  // namespace detail

inline CircleValue evaluate(const Cocycle& w, const ScalarVector& g, const ScalarVector& h)
{
    w.group.check_element(g);
    w.group.check_element(h);
    return CircleValue(detail::bilinear(g, w.B, h));
}

inline ScalarVector add_elements(const Group& G, const ScalarVector& x, const ScalarVector& y)
{
    ScalarVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return G.reduce(z);
}

/// omega(g,h) omega(g+h,l) = omega(g,h+l) omega(h,l).
inline bool cocycle_identity_holds(const Cocycle& w, const ScalarVector& g, const ScalarVector& h, const ScalarVector& l)
{
    const Group& G = w.group;
    return evaluate(w, g, h) * evaluate(w, add_elements(G, g, h), l) == evaluate(w, g, add_elements(G, h, l)) * evaluate(w, h, l);
}

/// h_omega(g)(h) = e(g^T A h) with A = B - B^T.
struct Antisymmetrizer {
    Group group;
    ScalarMatrix A;

    CircleValue evaluate(const ScalarVector& g, const ScalarVector& h) const
    {
        group.check_element(g);
        group.check_element(h);
        return CircleValue(detail::bilinear(g, A, h));
    }
};

inline Antisymmetrizer antisymmetrize(const Cocycle& w) { return Antisymmetrizer{w.group, w.B - w.B.transpose()}; }

/// Pullback along the embedding of H.
inline Cocycle restrict(const Cocycle& w, const ClosedSubgroup& H)
{
    if (H.ambient != w.group) throw DomainError("subgroup of " + H.ambient.str() + " is not in " + w.group.str());
    const ScalarMatrix Bh = H.embedding.transpose() * w.B * H.embedding;
    const std::string v = pairing_violation(H.group, H.group, Bh);
    if (!v.empty()) throw std::logic_error("internal: restricted cocycle invalid: " + v);
    return Cocycle{H.group, Bh};
}

/// omega' on Q pulled back along a projection G -> Q.
inline Cocycle inflate(const Cocycle& wq, const Homomorphism& projection)
{
    if (projection.codomain != wq.group) throw DomainError("projection does not land in the cocycle's group");
    const ScalarMatrix& P = projection.matrix;
    const ScalarMatrix B = P.transpose() * wq.B * P;
    const std::string v = pairing_violation(projection.domain, projection.domain, B);
    if (!v.empty()) throw std::logic_error("internal: inflated cocycle invalid: " + v);
    return Cocycle{projection.domain, B};
}

struct ProductCocycle {
    Cocycle cocycle;
    std::vector<std::size_t> perm;  ///< position of each (G1, G2) coordinate in the product
};

/// omega1 x omega2 on G1 x G2 (block diagonal up to coordinate order).
inline ProductCocycle product(const Cocycle& w1, const Cocycle& w2)
{
    const ProductLayout lay = direct_product(w1.group, w2.group);
    ScalarMatrix B(lay.group.dim(), lay.group.dim());
    const std::size_t n1 = w1.group.dim();
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) B(lay.perm[i], lay.perm[j]) = w1.B(i, j);
    for (std::size_t i = 0; i < w2.group.dim(); ++i)
        for (std::size_t j = 0; j < w2.group.dim(); ++j) B(lay.perm[n1 + i], lay.perm[n1 + j]) = w2.B(i, j);
    return ProductCocycle{Cocycle{lay.group, B}, lay.perm};
}

/// eta((g,l),(g',l')) = phi(g)(l') omega(l,l') on G x L; phi is dim(G) x dim(L)
/// with row i the character phi(e_i) written as angles against L's coordinates.
inline ProductCocycle semidirect_eta(const Cocycle& w, const Group& G, const ScalarMatrix& phi)
{
    const std::string v = pairing_violation(G, w.group, phi);
    if (!v.empty()) throw DomainError("invalid character data for " + G.str() + " -> dual of " + w.group.str() + ": " + v);
    const ProductLayout lay = direct_product(G, w.group);
    ScalarMatrix B(lay.group.dim(), lay.group.dim());
    const std::size_t ng = G.dim();
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < w.group.dim(); ++j) B(lay.perm[i], lay.perm[ng + j]) = phi(i, j);
    for (std::size_t i = 0; i < w.group.dim(); ++i)
        for (std::size_t j = 0; j < w.group.dim(); ++j) B(lay.perm[ng + i], lay.perm[ng + j]) = w.B(i, j);
    return ProductCocycle{Cocycle{lay.group, B}, lay.perm};
}

/// Decided by equality of antisymmetrizers.
inline bool are_cohomologous(const Cocycle& w1, const Cocycle& w2)
{
    if (w1.group != w2.group) throw DomainError("cocycles live on different groups");
    return pairing_equal(w1.group, w1.group, antisymmetrize(w1).A, antisymmetrize(w2).A);
}

/// True when omega is symmetric (trivial antisymmetrizer).
inline bool is_symmetric(const Cocycle& w) { return are_cohomologous(w, trivial_cocycle(w.group)); }

}  // namespace twistlab
