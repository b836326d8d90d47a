#pragma once

// Symmetry groups of cocycles and the totally skew lift to G / S.

#include "twistlab/cocycle.hpp"
#include "twistlab/oracle.hpp"
#include "twistlab/subgroup.hpp"

#include <optional>

namespace twistlab {

struct SymmetryReport {
    ClosedSubgroup S;
    Quotient quotient;
    bool totally_skew = false;
    Group dual_of_S;
};

/// S = {g : e(g^T A h) = 1 for every h}, with A = B - B^T.
inline SymmetryReport symmetry_group(const Cocycle& w)
{
    const Antisymmetrizer h = antisymmetrize(w);
    SymmetryReport r;
    r.S = pairing_annihilator(w.group, h.A, w.group);
    r.quotient = quotient(w.group, r.S);
    r.totally_skew = r.S.is_trivial();
    r.dual_of_S = r.S.group.canonical().dual();
    return r;
}

inline bool is_simple(const Cocycle& w) { return symmetry_group(w).totally_skew; }

/// Strictly upper triangular part: a bicharacter whose antisymmetrizer is the
/// given skew matrix.
inline ScalarMatrix upper_part(const ScalarMatrix& A)
{
    ScalarMatrix B(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = i + 1; j < A.cols(); ++j) B(i, j) = A(i, j);
    return B;
}

/// Descends the antisymmetrizer of w to the quotient q (whose kernel must pair
/// trivially with everything) and returns a bicharacter on q.group carrying it.
inline Cocycle descend(const Cocycle& w, const Quotient& q)
{
    const ScalarMatrix A = antisymmetrize(w).A;
    const ScalarMatrix Aq = q.section.transpose() * A * q.section;
    const ScalarMatrix Bq = upper_part(Aq);
    const std::string v = pairing_violation(q.group, q.group, Bq);
    if (!v.empty()) throw std::logic_error("internal: descended cocycle invalid: " + v);
    return Cocycle{q.group, Bq};
}

struct LiftWitness {
    bool antisymmetrizers_equal = false;
    bool quotient_totally_skew = false;
    /// For finite groups: explicit coboundary between inflate(lift) and omega.
    std::optional<CoboundaryResult> coboundary;
};

struct Lift {
    SymmetryReport symmetry;
    Cocycle cocycle;  ///< totally skew, on symmetry.quotient.group
    LiftWitness witness;
};

inline Lift totally_skew_lift(const Cocycle& w)
{
    Lift L{symmetry_group(w), Cocycle{}, {}};
    if (L.symmetry.totally_skew) {
        // Already totally skew: the quotient is G itself; keep the cocycle.
        L.symmetry.quotient = Quotient{w.group, make_hom(w.group, w.group, ScalarMatrix::identity(w.group.dim())),
                                       ScalarMatrix::identity(w.group.dim())};
        L.cocycle = w;
    } else {
        L.cocycle = descend(w, L.symmetry.quotient);
    }
    const Cocycle back = inflate(L.cocycle, L.symmetry.quotient.projection);
    L.witness.antisymmetrizers_equal = are_cohomologous(back, w);
    L.witness.quotient_totally_skew = is_simple(L.cocycle);
    if (w.group.is_finite() && w.group.order() <= finite_bound()) L.witness.coboundary = solve_coboundary(back, w);
    return L;
}

}  // namespace twistlab
