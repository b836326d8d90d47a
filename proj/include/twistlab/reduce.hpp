#pragma once

// Reduction of a totally skew cocycle on R^a x Z^r x T^b x F to a cocycle on a
// free abelian group, up to a matrix factor and stabilization by the compact
// operators.  Each step is logged together with the subgroups it used and
// the audits that were run on them.

#include "twistlab/oracle.hpp"
#include "twistlab/skew.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twistlab {

enum class StepKind { CompactElimination, VectorCase1, VectorCase2, FiniteSplit };

inline const char* step_name(StepKind k)
{
    switch (k) {
    case StepKind::CompactElimination: return "compact-elimination";
    case StepKind::VectorCase1: return "vector-case-1";
    case StepKind::VectorCase2: return "vector-case-2";
    case StepKind::FiniteSplit: return "finite-split";
    }
    return "?";
}

struct ReductionStep {
    StepKind kind;
    Group before;
    Group after;
    std::string note;
    std::vector<ClosedSubgroup> subgroups;  ///< kernels and quotient data used by the step
    ScalarMatrix basis_change;              ///< new generators in the coordinates of `before`
    bool kernel_audit_ok = true;
    bool totally_skew_after = true;
};

struct ReductionState {
    Cocycle cocycle;
    /// Linear map from the current group's cover to the input group's cover;
    /// the input antisymmetrizer pulled back along it equals the current one.
    ScalarMatrix lift;
};

struct ReductionReport {
    Group input;
    std::vector<ReductionStep> steps;
    std::size_t result_rank = 0;
    Cocycle result_cocycle;
    ScalarMatrix lift;  ///< surviving Z^r' written in the coordinates of the input
    long matrix_factor = 1;
    Group finite_factor;  ///< F_1, split off as M_d
    bool stabilization_infinite = false;
};

namespace detail {

inline ClosedSubgroup subgroup_from_columns(const Group& ambient, const Group& sub, const ScalarMatrix& E)
{
    const std::string v = hom_violation(sub, ambient, E);
    if (!v.empty()) throw std::logic_error("internal: generators do not define a subgroup: " + v);
    return ClosedSubgroup{ambient, sub, E};
}

inline void require_totally_skew(const Cocycle& w, std::size_t step)
{
    if (!is_simple(w)) throw DomainError("cocycle not totally skew at step " + std::to_string(step));
}

// Rows selecting the coordinates of the given kinds: zero conditions.
inline void coordinate_conditions(const Group& G, std::initializer_list<CoordKind> kinds, ScalarMatrix& rows,
                                  std::vector<Condition>& conds)
{
    std::vector<ScalarVector> r;
    for (std::size_t i = 0; i < G.dim(); ++i)
        for (auto k : kinds)
            if (G.kind(i) == k) {
                ScalarVector e(G.dim(), Scalar(0));
                e[i] = Scalar(1);
                r.push_back(e);
                conds.push_back(Condition::Zero);
            }
    rows = r.empty() ? ScalarMatrix(0, G.dim()) : ScalarMatrix::from_rows(r);
}

inline ScalarMatrix stack(const ScalarMatrix& a, const ScalarMatrix& b)
{
    ScalarMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

}  // namespace detail

/// Removes the torus and the non-skew part of the finite group, then splits
/// off the remaining finite factor.  Returns the matrix degree of that factor.
inline long eliminate_compact(ReductionState& st, std::vector<ReductionStep>& log, Group& finite_factor)
{
    const Cocycle& w = st.cocycle;
    const Group& G = w.group;
    if (G.torus_dim() > G.free_rank()) throw DomainError("torus rank exceeds free rank");
    if (G.torus_dim() == 0 && G.torsion_count() == 0) return 1;
    const ScalarMatrix A = antisymmetrize(w).A;

    // S: elements of the compact part K pairing trivially with K.
    ScalarMatrix rows;
    std::vector<Condition> conds;
    detail::coordinate_conditions(G, {CoordKind::Vector, CoordKind::Free}, rows, conds);
    std::vector<ScalarVector> prow;
    for (std::size_t j = G.torus_begin(); j < G.dim(); ++j) {
        prow.push_back(A.column(j));
        conds.push_back(G.kind(j) == CoordKind::Torus ? Condition::Zero : Condition::Integer);
    }
    const ScalarMatrix s_rows = detail::stack(rows, ScalarMatrix::from_rows(prow));
    const ClosedSubgroup S = solve_conditions(G, s_rows, conds);

    // psi : G -> dual(S), g |-> h(g) restricted to S, in dual coordinates.
    // Dual with the same torsion order as S (no canonicalization).
    const Group Sd(S.group.vector_dim(), S.group.torus_dim(), S.group.free_rank(), S.group.torsion());
    const ScalarMatrix AS = A * S.embedding;  // dim G x dim S
    ScalarMatrix psi(Sd.dim(), G.dim());
    for (std::size_t j = 0; j < S.group.dim(); ++j) {
        // Torus coordinate of S <-> free coordinate of the dual; torsion stays torsion.
        const std::size_t row = S.group.kind(j) == CoordKind::Torus ? Sd.free_begin() + (j - S.group.torus_begin())
                                                                     : Sd.torsion_begin() + (j - S.group.torsion_begin());
        const Scalar scale = S.group.kind(j) == CoordKind::Torsion ? Scalar(S.group.order(j)) : Scalar(1);
        for (std::size_t i = 0; i < G.dim(); ++i) psi(row, i) = AS(i, j) * scale;
    }
    const Homomorphism psi_h = make_hom(G, Sd, psi);
    // Surjectivity: images of the discrete generators together with the
    // torsion relations of the dual generate Z^k x F.
    {
        std::vector<std::vector<Integer>> cols;
        for (std::size_t i = 0; i < G.dim(); ++i) {
            if (!is_discrete(G.kind(i))) continue;
            std::vector<Integer> c;
            for (std::size_t k = 0; k < Sd.dim(); ++k) c.push_back(psi(k, i).integer());
            cols.push_back(c);
        }
        for (std::size_t k = Sd.torsion_begin(); k < Sd.dim(); ++k) {
            std::vector<Integer> c(Sd.dim(), Integer(0));
            c[k] = Sd.order(k);
            cols.push_back(c);
        }
        IntMatrix M(Sd.dim(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t k = 0; k < Sd.dim(); ++k) M(k, j) = cols[j][k];
        const SmithForm sf = smith_normal_form(M);
        bool onto = sf.rank == Sd.dim();
        for (const auto& d : sf.divisors())
            if (d != 1) onto = false;
        if (!onto) throw DomainError("restriction of the antisymmetrizer to the compact symmetry group is not surjective");
    }
    const ClosedSubgroup GS = kernel(psi_h);
    ReductionStep step{StepKind::CompactElimination, G, Group(), "", {S, GS}, GS.embedding, kernel_audit(psi_h, GS), true};

    // S inside G_S, then G_S / S.
    const ClosedSubgroup S_in = solve_conditions(GS.group, s_rows * GS.embedding, conds);
    const Quotient Q = quotient(GS.group, S_in);
    if (Q.group.torus_dim() != 0) throw std::logic_error("internal: torus survived compact elimination");
    const Cocycle wq = descend(restrict(w, GS), Q);
    ScalarMatrix lift = st.lift * GS.embedding * Q.section;
    step.after = Q.group;
    step.note = "symmetry " + S.group.str() + ", kernel " + GS.group.str() + ", quotient " + Q.group.str();
    step.totally_skew_after = is_simple(wq);
    log.push_back(step);
    detail::require_totally_skew(wq, log.size());

    const Group& H = Q.group;
    finite_factor = Group::finite({});
    if (H.torsion_count() == 0) {
        st = ReductionState{wq, lift};
        return 1;
    }
    // Finite split: replace each free generator z by z - f with f in F_1
    // pairing with F_1 exactly as z does.
    std::vector<long> orders;
    for (std::size_t k = H.torsion_begin(); k < H.dim(); ++k) orders.push_back(H.order(k).get_si());
    finite_factor = Group::finite(orders);
    const ScalarMatrix Aq = antisymmetrize(wq).A;
    ScalarMatrix T = ScalarMatrix::identity(H.dim());
    const auto F1 = finite_factor.enumerate();
    if (static_cast<long>(F1.size()) > finite_bound())
        throw DomainError("finite factor of order " + std::to_string(F1.size()) + " exceeds the finite bound");
    const std::size_t t0 = H.torsion_begin();
    for (std::size_t z = H.free_begin(); z < H.torus_begin(); ++z) {
        bool found = false;
        for (const auto& f : F1) {
            bool same = true;
            for (std::size_t x = t0; x < H.dim() && same; ++x) {
                Scalar fx;
                for (std::size_t k = 0; k < f.size(); ++k) fx += Scalar(f[k]) * Aq(t0 + k, x);
                same = (Aq(z, x) - fx).is_integer();
            }
            if (!same) continue;
            for (std::size_t k = 0; k < f.size(); ++k) T(t0 + k, z) = Scalar(-f[k]);
            found = true;
            break;
        }
        if (!found) throw std::logic_error("internal: finite factor is not totally skew");
    }
    std::vector<std::size_t> keep, fin;
    for (std::size_t i = 0; i < H.dim(); ++i) (H.kind(i) == CoordKind::Torsion ? fin : keep).push_back(i);
    const Group rest(H.vector_dim(), H.free_rank(), 0);
    const ClosedSubgroup Rsub = detail::subgroup_from_columns(H, rest, T.select_columns(keep));
    const ClosedSubgroup Fsub = detail::subgroup_from_columns(H, finite_factor, T.select_columns(fin));
    const Cocycle w_rest = restrict(wq, Rsub);
    const Cocycle w_fin = restrict(wq, Fsub);
    // The two factors must pair trivially with each other.
    const ScalarMatrix cross = Rsub.embedding.transpose() * Aq * Fsub.embedding;
    bool split_ok = true;
    for (std::size_t i = 0; i < cross.rows(); ++i)
        for (std::size_t j = 0; j < cross.cols(); ++j)
            if (!cross(i, j).is_integer()) split_ok = false;
    const BlockDecomposition blocks = block_decomposition(build_algebra(w_fin));
    if (!split_ok || !blocks.ok() || blocks.blocks.size() != 1)
        throw std::logic_error("internal: finite split failed");
    const long d = blocks.blocks.front().dimension;
    ReductionStep fs{StepKind::FiniteSplit, H, rest, "", {Rsub, Fsub}, T, split_ok, is_simple(w_rest)};
    fs.note = "split off " + finite_factor.str() + " as M_" + std::to_string(d);
    log.push_back(fs);
    detail::require_totally_skew(w_rest, log.size());
    st = ReductionState{w_rest, lift * Rsub.embedding};
    return d;
}

/// One pass of vector elimination.  Returns false when the vector part is gone.
inline bool eliminate_vector_step(ReductionState& st, std::vector<ReductionStep>& log)
{
    const Cocycle& w = st.cocycle;
    const Group& G = w.group;
    const std::size_t a = G.vector_dim();
    if (a == 0) return false;
    if (G.torus_dim() || G.torsion_count()) throw std::logic_error("vector elimination needs a torsion-free discrete part");
    const ScalarMatrix A = antisymmetrize(w).A;
    // Among admissible columns take the one whose simplest vector entry is
    // simplest, then the one with the smallest total size; ties go to the
    // lowest index.
    auto choose = [&](std::size_t from, std::size_t to, std::size_t& col, std::size_t& row) {
        std::pair<std::size_t, std::size_t> best{SIZE_MAX, SIZE_MAX};
        for (std::size_t j = from; j < to; ++j) {
            std::size_t r = a, pc = SIZE_MAX, total = 0;
            for (std::size_t i = 0; i < G.dim(); ++i) total += A(i, j).complexity();
            for (std::size_t i = 0; i < a; ++i)
                if (!A(i, j).is_zero() && A(i, j).complexity() < pc) {
                    pc = A(i, j).complexity();
                    r = i;
                }
            if (r == a) continue;
            if (std::pair{pc, total} < best) {
                best = {pc, total};
                col = j;
                row = r;
            }
        }
    };
    std::size_t pi = a, pj = a;
    choose(0, a, pj, pi);
    ReductionStep step{StepKind::VectorCase1, G, Group(), "", {}, {}, true, true};
    ScalarMatrix fm(1, G.dim());
    std::size_t dropped;  // coordinate of the closed subgroup H that is divided out
    Homomorphism f;
    if (pi < a) {
        // Case 1: h(g) restricted to the line through e_j, onto R.
        for (std::size_t l = 0; l < G.dim(); ++l) fm(0, l) = A(l, pj);
        f = make_hom(G, Group(1, 0, 0), fm);
        dropped = pj;
        step.note = "line through coordinate " + std::to_string(pj) + ", pivot " + std::to_string(pi);
    } else {
        // Case 2: h(e_k) on G, onto T, for the first vector/free pair that pairs non-trivially.
        std::size_t vi = a, fk = 0;
        choose(G.free_begin(), G.torus_begin(), fk, vi);
        if (vi == a) throw DomainError("cocycle not totally skew at step " + std::to_string(log.size() + 1));
        step.kind = StepKind::VectorCase2;
        for (std::size_t l = 0; l < G.dim(); ++l) fm(0, l) = A(l, fk);
        f = make_hom(G, Group(0, 0, 1), fm);
        dropped = fk;
        step.note = "free generator " + std::to_string(fk) + ", pivot " + std::to_string(vi);
    }
    const Splitting sp = split_surjection(f);
    step.kernel_audit_ok = kernel_audit(f, sp.kernel);
    step.subgroups.push_back(sp.kernel);

    // Generators of the kernel other than the divided-out direction.
    std::vector<ScalarVector> vec, fr;
    auto is_dropped = [&](const ScalarVector& x) {
        for (std::size_t l = 0; l < G.dim(); ++l)
            if (!(x[l] == Scalar(l == dropped ? 1 : 0))) return false;
        return true;
    };
    bool seen = false;
    for (const auto& b : sp.vector_basis) {
        if (is_dropped(b)) {
            seen = true;
            continue;
        }
        vec.push_back(b);
    }
    for (const auto& z : sp.free_generators) {
        if (is_dropped(z)) {
            seen = true;
            continue;
        }
        fr.push_back(z);
    }
    if (!seen) throw std::logic_error("internal: divided-out direction is not a kernel generator");
    std::vector<ScalarVector> cols = vec;
    cols.insert(cols.end(), fr.begin(), fr.end());
    const Group copy(vec.size(), fr.size(), 0);
    const ScalarMatrix E = ScalarMatrix::from_columns(cols, G.dim());
    const ClosedSubgroup C = detail::subgroup_from_columns(G, copy, E);
    // Every generator of the copy lies in the kernel.
    ScalarMatrix rows;
    std::vector<Condition> kinds;
    kernel_conditions(f, rows, kinds);
    if (!conditions_hold_on(C, rows, kinds)) step.kernel_audit_ok = false;
    step.subgroups.push_back(C);
    step.basis_change = E;
    const Cocycle w2 = restrict(w, C);
    step.after = copy;
    step.totally_skew_after = is_simple(w2);
    log.push_back(step);
    if (!step.kernel_audit_ok) throw std::logic_error("internal: kernel audit failed at step " + std::to_string(log.size()));
    detail::require_totally_skew(w2, log.size());
    st = ReductionState{w2, st.lift * E};
    return true;
}

inline ReductionReport reduce(const Cocycle& w)
{
    if (!is_simple(w)) throw DomainError("not totally skew");
    ReductionReport rep;
    rep.input = w.group;
    rep.stabilization_infinite = w.group.vector_dim() + w.group.torus_dim() > 0;
    ReductionState st{w, ScalarMatrix::identity(w.group.dim())};
    rep.finite_factor = Group();
    rep.matrix_factor = eliminate_compact(st, rep.steps, rep.finite_factor);
    while (eliminate_vector_step(st, rep.steps)) {
    }
    rep.result_rank = st.cocycle.group.free_rank();
    rep.result_cocycle = st.cocycle;
    rep.lift = st.lift;
    if (!is_simple(rep.result_cocycle)) throw std::logic_error("internal: result is not totally skew");
    return rep;
}

}  // namespace twistlab
