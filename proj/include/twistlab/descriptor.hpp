#pragma once

// Symbolic descriptions of the algebras that come out of a classification.

#include "twistlab/group.hpp"

#include <memory>
#include <string>

namespace twistlab {

struct AlgebraDescriptor {
    enum class Kind { Matrix, NCTorus, Commutative, ContinuousField, CompactOperators };

    Kind kind = Kind::Matrix;
    long matrix_degree = 1;   ///< tensor factor M_d (Matrix: the whole algebra)
    std::size_t rank = 0;     ///< NCTorus
    ScalarMatrix angles;      ///< NCTorus: commutation angles u_k u_l = e(angles(k,l)) u_l u_k
    Group space;              ///< Commutative: C_0(space); ContinuousField: base space
    std::shared_ptr<const AlgebraDescriptor> fiber;
    bool stabilized = false;  ///< tensored with the compact operators

    static AlgebraDescriptor matrix(long d)
    {
        AlgebraDescriptor a;
        a.matrix_degree = d;
        return a;
    }
    static AlgebraDescriptor commutative(const Group& space)
    {
        AlgebraDescriptor a;
        a.kind = Kind::Commutative;
        a.space = space;
        return a;
    }
    static AlgebraDescriptor nc_torus(const ScalarMatrix& angles)
    {
        AlgebraDescriptor a;
        a.kind = Kind::NCTorus;
        a.rank = angles.rows();
        a.angles = angles;
        return a;
    }
    static AlgebraDescriptor compact_operators()
    {
        AlgebraDescriptor a;
        a.kind = Kind::CompactOperators;
        a.stabilized = true;
        return a;
    }
    static AlgebraDescriptor field(const Group& base, AlgebraDescriptor fib)
    {
        AlgebraDescriptor a;
        a.kind = Kind::ContinuousField;
        a.space = base;
        a.fiber = std::make_shared<const AlgebraDescriptor>(std::move(fib));
        return a;
    }

    static const char* kind_name(Kind k)
    {
        switch (k) {
        case Kind::Matrix: return "matrix";
        case Kind::NCTorus: return "nc_torus";
        case Kind::Commutative: return "commutative";
        case Kind::ContinuousField: return "continuous_field";
        case Kind::CompactOperators: return "compact_operators";
        }
        return "?";
    }

    std::string str() const
    {
        std::string s;
        switch (kind) {
        case Kind::Matrix: s = "M_" + std::to_string(matrix_degree); break;
        case Kind::NCTorus: s = "A_theta(rank " + std::to_string(rank) + ")"; break;
        case Kind::Commutative: s = "C_0(" + space.str() + ")"; break;
        case Kind::ContinuousField: s = "field over " + space.str() + " with fiber " + fiber->str(); break;
        case Kind::CompactOperators: return "K";
        }
        if (kind != Kind::Matrix && matrix_degree > 1) s += " x M_" + std::to_string(matrix_degree);
        if (stabilized) s += " x K";
        return s;
    }
};

}  // namespace twistlab
