#pragma once

// Structure of C*(G, omega) as a continuous field over the dual of the
// symmetry group, and the dual action on its primitive ideal space.

#include "twistlab/descriptor.hpp"
#include "twistlab/oracle.hpp"
#include "twistlab/reduce.hpp"
#include "twistlab/skew.hpp"

namespace twistlab {

/// Descriptor of C*(G, omega) for a totally skew omega.
inline AlgebraDescriptor classify_totally_skew(const Cocycle& w)
{
    if (w.group.is_trivial()) return AlgebraDescriptor::commutative(Group());
    if (w.group.is_finite()) {
        const BlockDecomposition dec = block_decomposition(build_algebra(w));
        if (!dec.ok() || dec.blocks.size() != 1) throw std::logic_error("internal: totally skew finite cocycle is not a single matrix block");
        return AlgebraDescriptor::matrix(dec.blocks.front().dimension);
    }
    const ReductionReport rep = reduce(w);
    AlgebraDescriptor a;
    if (rep.result_rank == 0) {
        a = rep.stabilization_infinite ? AlgebraDescriptor::compact_operators() : AlgebraDescriptor::matrix(rep.matrix_factor);
        return a;
    }
    a = AlgebraDescriptor::nc_torus(antisymmetrize(rep.result_cocycle).A);
    a.matrix_degree = rep.matrix_factor;
    a.stabilized = rep.stabilization_infinite;
    return a;
}

struct FieldStructure {
    Group base;               ///< dual of the symmetry group
    AlgebraDescriptor fiber;  ///< C*(G/S, lifted cocycle)
    Lift lift;

    /// The whole algebra: commutative when the fiber is trivial, the fiber
    /// itself over a one-point base, a field otherwise.
    AlgebraDescriptor algebra() const
    {
        const bool point_fiber = fiber.kind == AlgebraDescriptor::Kind::Commutative && fiber.space.is_trivial();
        if (point_fiber) return AlgebraDescriptor::commutative(base);
        if (base.is_trivial()) return fiber;
        return AlgebraDescriptor::field(base, fiber);
    }
};

inline FieldStructure field_structure(const Cocycle& w)
{
    FieldStructure f;
    f.lift = totally_skew_lift(w);
    f.base = f.lift.symmetry.dual_of_S;
    f.fiber = classify_totally_skew(f.lift.cocycle);
    return f;
}

/// The dual group acts on Prim = dual(S) by restriction of characters; the
/// action is transitive and every stabilizer is the annihilator of S, which
/// is the dual of G/S.
struct OrbitReport {
    Group dual_group;   ///< dual of G
    Group prim;         ///< dual of S
    Group stabilizer;   ///< annihilator of S in the dual of G
    bool transitive = true;
    std::size_t orbit_count = 1;
    std::optional<Integer> stabilizer_order;  ///< when finite
};

inline OrbitReport dual_action_orbit(const Cocycle& w)
{
    const SymmetryReport s = symmetry_group(w);
    OrbitReport r;
    r.dual_group = w.group.canonical().dual();
    r.prim = s.dual_of_S;
    r.stabilizer = s.quotient.group.canonical().dual();
    if (r.stabilizer.is_finite()) r.stabilizer_order = r.stabilizer.order();
    return r;
}

}  // namespace twistlab
