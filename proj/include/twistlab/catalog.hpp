#pragma once

// Worked examples: the orbit strata of the Mautner group and its variations
// M_{chi,mu}, and the prime example over R x Z^n truncated at n primes.

#include "twistlab/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

/// One orbit-type stratum of the T^2-action on C^2, indexed by (|z|, |w|).
struct StratumReport {
    std::string label;        ///< "(0,0)", "(x,0)", "(0,y)" or "(x,y)"
    std::string orbit;        ///< orbit type in words
    Cocycle cocycle;          ///< twisted group algebra the stratum is Morita equivalent to
    SymmetryReport symmetry;
    FieldStructure field;
    AlgebraDescriptor algebra;
    bool simple = false;
    std::optional<ReductionReport> reduction;  ///< reduction of the lifted cocycle
};

namespace detail {

inline StratumReport classify_stratum(std::string label, std::string orbit, Cocycle w)
{
    StratumReport s;
    s.label = std::move(label);
    s.orbit = std::move(orbit);
    s.cocycle = std::move(w);
    s.symmetry = symmetry_group(s.cocycle);
    s.field = field_structure(s.cocycle);
    s.algebra = s.field.algebra();
    s.simple = s.symmetry.totally_skew;
    const Group& q = s.field.lift.cocycle.group;
    if (!q.is_trivial() && !q.is_finite()) s.reduction = reduce(s.field.lift.cocycle);
    return s;
}

}  // namespace detail

/// Strata of the Mautner group C^2 x| R, where t acts by (e(t), e(theta t)).
/// Each stratum is replaced by the twisted group algebra it is Morita
/// equivalent to: the corner by C*(R), each axis by C*(Z) acting on one
/// circle, and the open stratum by the transversal Z-action rotating the
/// second circle by theta.
inline std::vector<StratumReport> mautner_catalog(const Scalar& theta)
{
    if (theta.is_zero()) throw DomainError("theta must be nonzero");
    std::vector<StratumReport> out;
    out.push_back(detail::classify_stratum("(0,0)", "fixed point; stabilizer R", trivial_cocycle(Group(1, 0, 0))));
    out.push_back(detail::classify_stratum("(x,0)", "circle |z| = x; stabilizer Z", trivial_cocycle(Group(0, 1, 0))));
    out.push_back(detail::classify_stratum("(0,y)", "circle |w| = y; stabilizer (1/theta)Z", trivial_cocycle(Group(0, 1, 0))));
    ScalarMatrix phi(1, 1);
    phi(0, 0) = theta;
    out.push_back(detail::classify_stratum("(x,y)", "2-torus |z| = x, |w| = y; R acts through (1, theta)",
                                           semidirect_eta(trivial_cocycle(Group(0, 1, 0)), Group(0, 1, 0), phi).cocycle));
    return out;
}

/// The eta-cocycle of Z acting on the dual of Z^2 through the character
/// with angles (1, theta): the time-one map of the Mautner flow.
inline Cocycle mautner_time_one_eta(const Scalar& theta)
{
    ScalarMatrix phi(1, 2);
    phi(0, 0) = Scalar(1);
    phi(0, 1) = theta;
    return semidirect_eta(trivial_cocycle(Group(0, 2, 0)), Group(0, 1, 0), phi).cocycle;
}

/// Variation M_{chi,mu}: G (no vector or torus part) acts on C^2 through
/// the characters chi and mu, given as angle rows against G's coordinates.
/// Stratum (x,y) uses omega((g1,n1,m1),(g2,n2,m2)) = chi(g1)^n2 mu(g1)^m2
/// on G x Z^2; the axes keep one of the two characters.
inline std::vector<StratumReport> m_chi_mu_catalog(const Group& G, const ScalarVector& chi, const ScalarVector& mu)
{
    if (G.vector_dim() != 0 || G.torus_dim() != 0) throw DomainError("group must have no vector or torus part");
    if (chi.size() != G.dim() || mu.size() != G.dim()) throw DomainError("character rows must have one angle per group coordinate");
    ScalarMatrix both(G.dim(), 2), only_chi(G.dim(), 1), only_mu(G.dim(), 1);
    for (std::size_t i = 0; i < G.dim(); ++i) {
        both(i, 0) = only_chi(i, 0) = chi[i];
        both(i, 1) = only_mu(i, 0) = mu[i];
    }
    const Cocycle Z1 = trivial_cocycle(Group(0, 1, 0));
    const Cocycle Z2 = trivial_cocycle(Group(0, 2, 0));
    std::vector<StratumReport> out;
    out.push_back(detail::classify_stratum("(0,0)", "fixed point; stabilizer G", trivial_cocycle(G)));
    out.push_back(detail::classify_stratum("(x,0)", "circle |z| = x; G acts through chi", semidirect_eta(Z1, G, only_chi).cocycle));
    out.push_back(detail::classify_stratum("(0,y)", "circle |w| = y; G acts through mu", semidirect_eta(Z1, G, only_mu).cocycle));
    out.push_back(detail::classify_stratum("(x,y)", "2-torus |z| = x, |w| = y; G acts through (chi, mu)", semidirect_eta(Z2, G, both).cocycle));
    return out;
}

/// C_0(R+) x| Q+ truncated to the first n primes: R x Z^n with the vector
/// coordinate paired against the i-th generator by the symbol t_i standing
/// for ln p_i.
struct PrimeReport {
    std::size_t n = 0;
    Cocycle cocycle;
    SymmetryReport symmetry;
    std::optional<ReductionReport> reduction;  ///< absent when not totally skew
    std::string rejection;
};

inline Cocycle prime_cocycle(std::size_t n)
{
    if (n < 1 || n > 8) throw DomainError("n must be between 1 and 8");
    ScalarMatrix B(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) B(1 + i, 0) = Scalar::symbol(i);
    return make_cocycle(Group(1, n, 0), B);
}

inline PrimeReport prime_example(std::size_t n)
{
    PrimeReport r;
    r.n = n;
    r.cocycle = prime_cocycle(n);
    r.symmetry = symmetry_group(r.cocycle);
    if (r.symmetry.totally_skew) r.reduction = reduce(r.cocycle);
    else r.rejection = "not totally skew: symmetry group " + r.symmetry.S.group.str();
    return r;
}

}  // namespace twistlab
