#pragma once

// The acceptance suite: one check per criterion, shared by the acceptance
// test binary and `twistlab verify-all`.  Output is deterministic: fixed
// seeds, no timings.

#include "twistlab/catalog.hpp"
#include "twistlab/json_io.hpp"
#include "twistlab/strata.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace twistlab::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

/// Every finite abelian group of order <= max_order, as invariant factors
/// n1 | n2 | ... (each >= 2).
inline std::vector<std::vector<long>> abelian_groups(long max_order)
{
    std::vector<std::vector<long>> out{{}};
    std::function<void(std::vector<long>&, long)> extend = [&](std::vector<long>& f, long order) {
        // Next factor is a multiple of the last one.
        const long step = f.empty() ? 1 : f.back();
        for (long n = f.empty() ? 2 : step; order * n <= max_order; n += step) {
            if (n < 2) continue;
            f.push_back(n);
            out.push_back(f);
            extend(f, order * n);
            f.pop_back();
        }
    };
    std::vector<long> f;
    extend(f, 1);
    return out;
}

/// Random bicharacter on a finite group: B(i,j) = k / gcd(n_i, n_j), i < j,
/// with diagonal entries k / n_i.
inline Cocycle random_finite_cocycle(std::mt19937& rng, const Group& G)
{
    const std::size_t k = G.dim();
    ScalarMatrix B(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const long n = gcd(G.order(i), G.order(j)).get_si();
            std::uniform_int_distribution<long> d(0, n - 1);
            B(i, j) = Scalar(make_rational(d(rng), n));
        }
    return make_cocycle(G, B);
}

/// Finite corpus for criteria 2 and 3: every abelian group of order <= 32
/// (except the trivial one), with `per_group` sampled cocycles each.
inline std::vector<Cocycle> finite_corpus(int per_group = 4)
{
    std::mt19937 rng(20240601);
    std::vector<Cocycle> out;
    for (const auto& f : abelian_groups(32)) {
        if (f.empty()) continue;
        std::vector<Integer> tors(f.begin(), f.end());
        const Group G(0, 0, 0, tors);
        for (int s = 0; s < per_group; ++s) out.push_back(random_finite_cocycle(rng, G));
    }
    return out;
}

inline Scalar small_angle(std::mt19937& rng, bool symbols)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 6);
    std::uniform_int_distribution<int> coin(0, 2);
    Scalar x(make_rational(num(rng), den(rng)));
    if (symbols && coin(rng) == 0) x += Scalar(num(rng)) * Scalar::symbol(static_cast<std::size_t>(coin(rng)));
    return x;
}

/// Random group with a <= 4, r <= 6, b <= min(r, 2), |F| <= 16.
inline Group random_reduction_group(std::mt19937& rng)
{
    std::uniform_int_distribution<std::size_t> a(0, 4), r(0, 6);
    const std::size_t rr = r(rng);
    std::uniform_int_distribution<std::size_t> b(0, std::min<std::size_t>(rr, 2));
    std::vector<Integer> tors;
    long order = 1;
    std::uniform_int_distribution<long> n(2, 4);
    std::uniform_int_distribution<int> more(0, 2);
    while (more(rng) != 0) {
        const long m = n(rng);
        if (order * m > 16) break;
        order *= m;
        tors.emplace_back(m);
    }
    return Group(a(rng), rr, b(rng), tors);
}

/// Random cocycle obeying the pairing rules; vector and free coordinates get
/// symbolic entries so that total skewness is common.
inline Cocycle random_reduction_cocycle(std::mt19937& rng, const Group& G)
{
    const std::size_t k = G.dim();
    ScalarMatrix B(k, k);
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const CoordKind x = G.kind(i), y = G.kind(j);
            const bool cx = x == CoordKind::Torus || x == CoordKind::Torsion;
            const bool cy = y == CoordKind::Torus || y == CoordKind::Torsion;
            if ((is_continuous(x) && cy) || (cx && is_continuous(y))) continue;
            if (x == CoordKind::Torsion || y == CoordKind::Torsion) {
                const long n = (x == CoordKind::Torsion && y == CoordKind::Torsion) ? gcd(G.order(i), G.order(j)).get_si()
                               : x == CoordKind::Torsion                            ? G.order(i).get_si()
                                                                                    : G.order(j).get_si();
                std::uniform_int_distribution<long> d(0, n - 1);
                B(i, j) = Scalar(make_rational(d(rng), n));
            } else if (x == CoordKind::Torus || y == CoordKind::Torus) {
                std::uniform_int_distribution<long> d(-2, 2);
                B(i, j) = Scalar(d(rng));
            } else if (i < j && coin(rng) != 0) {
                B(i, j) = small_angle(rng, true);
            }
        }
    return make_cocycle(G, B);
}

inline std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : "; ") + x;
    return s;
}

}  // namespace detail

inline CriterionResult mautner_fidelity()
{
    CriterionResult r{1, "Mautner strata for theta = t1", true, ""};
    std::vector<std::string> bad;
    const auto s = mautner_catalog(Scalar::symbol(0));
    using K = AlgebraDescriptor::Kind;
    if (s.size() != 4) bad.push_back("expected four strata");
    else {
        if (!(s[0].label == "(0,0)" && s[0].algebra.kind == K::Commutative && s[0].algebra.space == Group(1, 0, 0) && !s[0].algebra.stabilized))
            bad.push_back("corner is " + s[0].algebra.str());
        for (int k : {1, 2})
            if (!(s[k].algebra.kind == K::Commutative && s[k].algebra.space == Group(0, 0, 1) && !s[k].algebra.stabilized))
                bad.push_back("axis " + s[k].label + " is " + s[k].algebra.str());
        const auto& o = s[3].algebra;
        ScalarMatrix expect(2, 2);
        expect(0, 1) = Scalar::symbol(0);
        expect(1, 0) = -Scalar::symbol(0);
        if (!(s[3].simple && o.kind == K::NCTorus && o.rank == 2 && o.angles == expect && o.matrix_degree == 1 && !o.stabilized))
            bad.push_back("open stratum is " + o.str());
    }
    r.passed = bad.empty();
    r.detail = r.passed ? "corner C_0(R); axes C(T); open A_theta rank 2, angle t1, simple" : detail::join(bad);
    return r;
}

inline CriterionResult oracle_symmetry_equivalence(const std::vector<Cocycle>& corpus)
{
    CriterionResult r{2, "finite oracle blocks match the symmetry group", true, ""};
    std::size_t groups = 0, checked = 0;
    std::vector<std::string> bad;
    Group last;
    for (const auto& w : corpus) {
        if (w.group != last) ++groups;
        last = w.group;
        const SymmetryReport s = symmetry_group(w);
        const long S = s.S.group.is_trivial() ? 1 : s.S.group.order().get_si();
        const BlockDecomposition dec = block_decomposition(build_algebra(w));
        const long G = w.group.order().get_si();
        ++checked;
        bool ok = dec.ok() && static_cast<long>(dec.blocks.size()) == S;
        for (const auto& b : dec.blocks) ok = ok && b.dimension * b.dimension * S == G;
        if (!ok && bad.size() < 5) bad.push_back(w.group.str());
        if (!ok) r.passed = false;
    }
    r.passed = r.passed && checked >= 200;
    std::ostringstream os;
    os << groups << " groups, " << checked << " cocycles";
    if (!bad.empty()) os << "; failures on " << detail::join(bad);
    r.detail = os.str();
    return r;
}

inline CriterionResult lift_certificates(const std::vector<Cocycle>& corpus)
{
    CriterionResult r{3, "totally skew lift with explicit coboundary", true, ""};
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (const auto& w : corpus) {
        const Lift L = totally_skew_lift(w);
        bool ok = L.witness.quotient_totally_skew && symmetry_group(L.cocycle).totally_skew;
        const Cocycle back = inflate(L.cocycle, L.symmetry.quotient.projection);
        const CoboundaryResult c = solve_coboundary(back, w);
        ok = ok && c.found;
        if (c.found) {
            // f(g) + f(h) - f(g + h) = (back - w)(g, h) mod 1 on every pair.
            const ScalarMatrix D = back.B - w.B;
            const std::size_t n = c.elements.size();
            std::map<std::vector<long>, std::size_t> index;
            for (std::size_t i = 0; i < n; ++i) index[c.elements[i]] = i;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = 0; b < n && ok; ++b) {
                    std::vector<long> sum(c.elements[a].size());
                    Rational d = 0;
                    for (std::size_t i = 0; i < sum.size(); ++i) {
                        sum[i] = (c.elements[a][i] + c.elements[b][i]) % w.group.order(i).get_si();
                        for (std::size_t j = 0; j < sum.size(); ++j) d += D(i, j).rational() * c.elements[a][i] * c.elements[b][j];
                    }
                    const Rational lhs = c.f[a] + c.f[b] - c.f[index.at(sum)] - d;
                    ok = is_integral(lhs);
                }
        }
        ++checked;
        if (!ok) {
            r.passed = false;
            if (bad.size() < 5) bad.push_back(w.group.str());
        }
    }
    std::ostringstream os;
    os << checked << " cocycles certified";
    if (!bad.empty()) os << "; failures on " << detail::join(bad);
    r.detail = os.str();
    return r;
}

inline CriterionResult rational_rotation()
{
    CriterionResult r{4, "rational rotation 1/3 on Z^2", true, ""};
    ScalarMatrix B(2, 2);
    B(0, 1) = Scalar(make_rational(1, 3));
    B(1, 0) = Scalar(make_rational(-1, 3));
    const Cocycle w = make_cocycle(Group(0, 2, 0), B);
    const SymmetryReport s = symmetry_group(w);
    ScalarMatrix three(2, 2);
    three(0, 0) = Scalar(3);
    three(1, 1) = Scalar(3);
    const ClosedSubgroup expect{Group(0, 2, 0), Group(0, 2, 0), three};
    const FieldStructure f = field_structure(w);
    ScalarMatrix Bf(2, 2);
    Bf(0, 1) = Scalar(make_rational(1, 3));
    Bf(1, 0) = Scalar(make_rational(-1, 3));
    const BlockDecomposition dec = block_decomposition(build_algebra(make_cocycle(Group::finite({3, 3}), Bf)));
    std::vector<std::string> bad;
    if (!same_subgroup(s.S, expect)) bad.push_back("S is not 3Z^2");
    if (f.base != Group(0, 0, 2)) bad.push_back("base is " + f.base.str());
    if (!(f.fiber.kind == AlgebraDescriptor::Kind::Matrix && f.fiber.matrix_degree == 3)) bad.push_back("fiber is " + f.fiber.str());
    if (!(dec.ok() && dec.blocks.size() == 1 && dec.blocks[0].dimension == 3)) bad.push_back("oracle on (Z/3)^2 disagrees");
    r.passed = bad.empty();
    r.detail = r.passed ? "S = 3Z^2, base T^2, fiber M_3, oracle one block of degree 3" : detail::join(bad);
    return r;
}

inline CriterionResult reduction_invariants(int samples = 100)
{
    CriterionResult r{5, "reduction invariants on random totally skew inputs", true, ""};
    std::mt19937 rng(31415926);
    int tested = 0, attempts = 0;
    std::vector<std::string> bad;
    std::map<std::string, int> step_counts;
    while (tested < samples && attempts < 200000) {
        ++attempts;
        const Group G = detail::random_reduction_group(rng);
        if (G.is_trivial()) continue;
        const Cocycle w = detail::random_reduction_cocycle(rng, G);
        if (!symmetry_group(w).totally_skew) continue;
        ++tested;
        const ReductionReport rep = reduce(w);
        bool ok = rep.result_rank + G.torus_dim() == G.free_rank();
        ok = ok && rep.result_cocycle.group == Group(0, rep.result_rank, 0);
        ok = ok && symmetry_group(rep.result_cocycle).totally_skew;
        ok = ok && rep.stabilization_infinite == (G.vector_dim() + G.torus_dim() > 0);
        const long f1 = rep.finite_factor.is_trivial() ? 1 : rep.finite_factor.order().get_si();
        ok = ok && rep.matrix_factor * rep.matrix_factor == f1;
        for (const auto& st : rep.steps) {
            ok = ok && st.kernel_audit_ok && st.totally_skew_after;
            ++step_counts[step_name(st.kind)];
        }
        if (!ok) {
            r.passed = false;
            if (bad.size() < 5) bad.push_back(G.str());
        }
    }
    if (tested < samples) r.passed = false;
    std::ostringstream os;
    os << tested << " inputs;";
    for (const auto& [k, n] : step_counts) os << " " << k << "=" << n;
    if (!bad.empty()) os << "; failures on " << detail::join(bad);
    r.detail = os.str();
    return r;
}

inline CriterionResult heisenberg()
{
    CriterionResult r{6, "Heisenberg cocycle on R^2", true, ""};
    ScalarMatrix B(2, 2);
    B(0, 1) = Scalar(1);
    const ReductionReport rep = reduce(make_cocycle(Group(2, 0, 0), B));
    r.passed = rep.result_rank == 0 && rep.stabilization_infinite && rep.matrix_factor == 1;
    r.detail = "rank " + std::to_string(rep.result_rank) + (rep.stabilization_infinite ? ", stabilization infinite" : ", stabilization finite");
    return r;
}

inline CriterionResult prime_truncations()
{
    CriterionResult r{7, "truncated prime example", true, ""};
    std::vector<std::string> parts;
    const PrimeReport one = prime_example(1);
    const bool rejected = !one.symmetry.totally_skew && !one.reduction && one.symmetry.S.group == Group(0, 1, 0);
    r.passed = rejected;
    parts.push_back(std::string("n=1 ") + (rejected ? "rejected" : "NOT rejected"));
    for (std::size_t n = 2; n <= 4; ++n) {
        const PrimeReport p = prime_example(n);
        const bool ok = p.reduction && p.reduction->result_rank == n && p.reduction->stabilization_infinite &&
                        symmetry_group(p.reduction->result_cocycle).totally_skew;
        r.passed = r.passed && ok;
        parts.push_back("n=" + std::to_string(n) + (ok ? " rank " + std::to_string(n) : " failed"));
    }
    r.detail = detail::join(parts);
    return r;
}

inline CriterionResult poset_suite()
{
    CriterionResult r{8, "poset orbit and local closedness suite", true, ""};
    const PosetSweep s = poset_sweep(6);
    r.passed = s.posets == 406 && s.counterexamples.empty();
    std::ostringstream os;
    os << s.posets << " poset classes, " << s.subgroups << " subgroup actions, " << s.orbits << " orbits, " << s.nested_pairs
       << " nested pairs, " << s.counterexamples.size() << " counterexamples";
    r.detail = os.str();
    return r;
}

/// Criteria 1 to 8.
inline std::vector<CriterionResult> run_core()
{
    const auto corpus = detail::finite_corpus();
    return {mautner_fidelity(),  oracle_symmetry_equivalence(corpus), lift_certificates(corpus), rational_rotation(),
            reduction_invariants(), heisenberg(),                    prime_truncations(),        poset_suite()};
}

inline Json to_json(const std::vector<CriterionResult>& rs)
{
    Json a = Json::array();
    for (const auto& c : rs) a.push_back(Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

/// All nine criteria; the last renders criteria 1 to 8 twice and compares bytes.
inline std::vector<CriterionResult> run_all()
{
    auto first = run_core();
    const std::string a = to_json(first).dump(2);
    const std::string b = to_json(run_core()).dump(2);
    first.push_back(CriterionResult{9, "deterministic report", a == b, a == b ? "two renderings byte-identical" : "renderings differ"});
    return first;
}

inline std::string line(const CriterionResult& c)
{
    return std::string(c.passed ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " + c.name + ": " + c.detail;
}

}  // namespace twistlab::acceptance
