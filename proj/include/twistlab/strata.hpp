#pragma once

// Finite T0-spaces as posets.  x <= y means x lies in the closure of {y}, so
// closed sets are down-sets and open sets are up-sets.  Subsets are bitmasks.

#include "twistlab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace twistlab {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask(1) << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

class FinitePoset {
public:
    FinitePoset() = default;

    /// Poset generated by the relations x < y (reflexive-transitive closure).
    static FinitePoset from_relations(int n, const std::vector<std::pair<int, int>>& less)
    {
        if (n < 0 || n > 16) throw DomainError("poset size must be between 0 and 16");
        FinitePoset p;
        p.n_ = n;
        p.below_.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) p.below_[i] = bit(i);
        for (auto [x, y] : less) {
            if (x < 0 || y < 0 || x >= n || y >= n) throw DomainError("relation refers to a point outside the poset");
            p.below_[y] |= bit(x);
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (int y = 0; y < n; ++y) {
                Mask m = p.below_[y];
                for (int x = 0; x < n; ++x)
                    if (m & bit(x)) m |= p.below_[x];
                if (m != p.below_[y]) {
                    p.below_[y] = m;
                    changed = true;
                }
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (p.leq(x, y) && p.leq(y, x)) throw DomainError("relations are not antisymmetric: not a T0 space");
        return p;
    }

    /// From down-sets: below[y] = {x : x <= y}; must already be a partial order.
    static FinitePoset from_down_sets(std::vector<Mask> below)
    {
        FinitePoset p;
        p.n_ = static_cast<int>(below.size());
        p.below_ = std::move(below);
        return p;
    }

    int size() const { return n_; }
    Mask all() const { return n_ == 64 ? ~Mask(0) : bit(n_) - 1; }
    bool leq(int x, int y) const { return (below_[y] >> x) & 1; }
    Mask down(int y) const { return below_[y]; }
    Mask up(int x) const
    {
        Mask m = 0;
        for (int y = 0; y < n_; ++y)
            if (leq(x, y)) m |= bit(y);
        return m;
    }

    Mask closure(Mask Y) const
    {
        Mask c = 0;
        for (int y = 0; y < n_; ++y)
            if (Y & bit(y)) c |= below_[y];
        return c;
    }
    bool is_closed(Mask Y) const { return closure(Y) == Y; }
    bool is_open(Mask U) const { return is_closed(all() & ~U); }

    std::vector<Mask> opens() const
    {
        std::vector<Mask> out;
        for (Mask U = 0; U <= all(); ++U)
            if (is_open(U)) out.push_back(U);
        return out;
    }

    /// Relations x < y as pairs.
    std::vector<std::pair<int, int>> relations() const
    {
        std::vector<std::pair<int, int>> r;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (x != y && leq(x, y)) r.emplace_back(x, y);
        return r;
    }

    bool is_order_automorphism(const std::vector<int>& perm) const
    {
        if (static_cast<int>(perm.size()) != n_) return false;
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int v : perm) {
            if (v < 0 || v >= n_ || seen[v]) return false;
            seen[v] = true;
        }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (leq(x, y) != leq(perm[x], perm[y])) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<Mask> below_;
};

/// Y is open in its closure: closure(Y) \ Y is closed.
inline bool is_locally_closed(const FinitePoset& P, Mask Y) { return P.is_closed(P.closure(Y) & ~Y); }

/// Z locally closed in the relative topology of Y (Z subset of Y).
inline bool is_locally_closed_in(const FinitePoset& P, Mask Z, Mask Y)
{
    // Relative closure is closure(Z) & Y; Z is open in it iff some open U meets it in Z.
    const Mask cz = P.closure(Z) & Y;
    const Mask rest = cz & ~Z;
    // Smallest open containing Z is its up-closure.
    Mask upz = 0;
    for (int x = 0; x < P.size(); ++x)
        if (Z & bit(x)) upz |= P.up(x);
    return (upz & rest) == 0;
}

/// Relative topology on S is discrete: every point of S is open in S.
inline bool is_relatively_discrete(const FinitePoset& P, Mask S)
{
    for (int x = 0; x < P.size(); ++x)
        if ((S & bit(x)) && (P.up(x) & S) != bit(x)) return false;
    return true;
}

/// Pieces partition P and each piece is locally closed.
inline bool verify_decomposition(const FinitePoset& P, const std::vector<Mask>& pieces)
{
    Mask covered = 0;
    for (Mask Y : pieces) {
        if (Y == 0 || (covered & Y)) return false;
        covered |= Y;
        if (!is_locally_closed(P, Y)) return false;
    }
    return covered == P.all();
}

struct TransitivityCheck {
    bool restriction_ok = true;   ///< Z l.c. in P implies Z l.c. in Y
    bool composition_ok = true;   ///< Y l.c. in P and Z l.c. in Y imply Z l.c. in P
    bool ok() const { return restriction_ok && composition_ok; }
};

inline TransitivityCheck check_transitivity(const FinitePoset& P, Mask Z, Mask Y)
{
    if ((Z & ~Y) != 0) throw DomainError("Z must be contained in Y");
    TransitivityCheck c;
    const bool z_in_p = is_locally_closed(P, Z);
    const bool z_in_y = is_locally_closed_in(P, Z, Y);
    const bool y_in_p = is_locally_closed(P, Y);
    if (z_in_p && !z_in_y) c.restriction_ok = false;
    if (y_in_p && z_in_y && !z_in_p) c.composition_ok = false;
    return c;
}

using Permutation = std::vector<int>;

inline Permutation compose(const Permutation& a, const Permutation& b)
{
    // (a o b)(x) = a(b(x))
    Permutation c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
}

inline Permutation identity_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Closure of a set of permutations under composition.
inline std::vector<Permutation> generate_group(int n, const std::vector<Permutation>& gens)
{
    std::set<Permutation> seen{identity_permutation(n)};
    std::vector<Permutation> out{identity_permutation(n)};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& g : gens) {
            Permutation h = compose(g, out[k]);
            if (seen.insert(h).second) out.push_back(std::move(h));
        }
    std::sort(out.begin(), out.end());
    return out;
}

struct PosetAction {
    FinitePoset poset;
    std::vector<Permutation> generators;
};

inline void validate_action(const PosetAction& A)
{
    for (std::size_t k = 0; k < A.generators.size(); ++k)
        if (!A.poset.is_order_automorphism(A.generators[k]))
            throw DomainError("invalid action: generator " + std::to_string(k) + " is not an order-automorphism");
}

struct OrbitAnalysis {
    Mask orbit = 0;
    std::vector<Permutation> stabilizer;
    std::size_t group_order = 0;
    bool discrete = false;
    bool locally_closed = false;
};

inline OrbitAnalysis orbit_analysis(const PosetAction& A, int x)
{
    validate_action(A);
    if (x < 0 || x >= A.poset.size()) throw DomainError("point outside the poset");
    const auto G = generate_group(A.poset.size(), A.generators);
    OrbitAnalysis r;
    r.group_order = G.size();
    for (const auto& g : G) {
        r.orbit |= bit(g[static_cast<std::size_t>(x)]);
        if (g[static_cast<std::size_t>(x)] == x) r.stabilizer.push_back(g);
    }
    r.discrete = is_relatively_discrete(A.poset, r.orbit);
    r.locally_closed = is_locally_closed(A.poset, r.orbit);
    return r;
}

/// All order-automorphisms, by brute force over permutations.
inline std::vector<Permutation> automorphisms(const FinitePoset& P)
{
    std::vector<Permutation> out;
    Permutation p = identity_permutation(P.size());
    do {
        if (P.is_order_automorphism(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Every subgroup of a finite permutation group, each as a sorted element list.
/// Subgroups are grown from the trivial one by adjoining cyclic generators.
inline std::vector<std::vector<Permutation>> all_subgroups(const std::vector<Permutation>& group)
{
    const std::size_t N = group.size();
    if (N == 0) return {};
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i) index[group[i]] = i;
    std::vector<std::vector<std::size_t>> mul(N, std::vector<std::size_t>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) mul[i][j] = index.at(compose(group[i], group[j]));
    const std::size_t e = index.at(identity_permutation(static_cast<int>(group[0].size())));

    using Bits = std::vector<bool>;
    auto close = [&](const Bits& start, const std::vector<std::size_t>& gens) {
        Bits in = start;
        std::vector<std::size_t> list;
        for (std::size_t i = 0; i < N; ++i)
            if (in[i]) list.push_back(i);
        for (std::size_t k = 0; k < list.size(); ++k)
            for (auto g : gens) {
                const std::size_t h = mul[g][list[k]];
                if (!in[h]) {
                    in[h] = true;
                    list.push_back(h);
                }
            }
        return in;
    };
    // One generator per cyclic subgroup.
    std::vector<std::size_t> cyc_gens;
    {
        std::set<Bits> cyclic;
        Bits triv(N, false);
        triv[e] = true;
        for (std::size_t g = 0; g < N; ++g)
            if (cyclic.insert(close(triv, {g})).second) cyc_gens.push_back(g);
    }
    Bits triv(N, false);
    triv[e] = true;
    std::set<Bits> found{triv};
    std::vector<std::pair<Bits, std::vector<std::size_t>>> queue{{triv, {}}};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const Bits H = queue[k].first;
        const std::vector<std::size_t> hg = queue[k].second;
        for (auto g : cyc_gens) {
            if (H[g]) continue;
            std::vector<std::size_t> gens = hg;
            gens.push_back(g);
            Bits K = close(H, gens);
            if (found.insert(K).second) queue.emplace_back(std::move(K), std::move(gens));
        }
    }
    std::vector<std::vector<Permutation>> out;
    for (const auto& [H, gens] : queue) {
        std::vector<Permutation> els;
        for (std::size_t i = 0; i < N; ++i)
            if (H[i]) els.push_back(group[i]);
        out.push_back(std::move(els));
    }
    return out;
}

namespace detail {

// Canonical code of a poset: lexicographically least relation bitstring over
// all relabellings.
inline std::uint64_t poset_code(const FinitePoset& P, const Permutation& perm)
{
    const int n = P.size();
    std::uint64_t code = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) code = (code << 1) | (P.leq(perm[x], perm[y]) ? 1 : 0);
    return code;
}

inline std::uint64_t canonical_code(const FinitePoset& P)
{
    Permutation p = identity_permutation(P.size());
    std::uint64_t best = ~std::uint64_t(0);
    do {
        best = std::min(best, poset_code(P, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline void extend_natural(int n, std::vector<Mask>& below, std::vector<FinitePoset>& out)
{
    const int k = static_cast<int>(below.size());
    if (k == n) {
        out.push_back(FinitePoset::from_down_sets(below));
        return;
    }
    // New point k sits above a down-set of the points 0..k-1.
    for (Mask D = 0; D < bit(k); ++D) {
        bool down_closed = true;
        for (int x = 0; x < k && down_closed; ++x)
            if ((D & bit(x)) && (below[x] & ~D) != 0) down_closed = false;
        if (!down_closed) continue;
        below.push_back(D | bit(k));
        extend_natural(n, below, out);
        below.pop_back();
    }
}

}  // namespace detail

/// One representative per isomorphism class of posets on n points.
inline std::vector<FinitePoset> poset_classes(int n)
{
    if (n < 0 || n > 7) throw DomainError("poset enumeration supports at most 7 points");
    std::vector<FinitePoset> labelled;
    std::vector<Mask> below;
    detail::extend_natural(n, below, labelled);
    std::map<std::uint64_t, FinitePoset> classes;
    for (const auto& P : labelled) classes.emplace(detail::canonical_code(P), P);
    std::vector<FinitePoset> out;
    for (auto& [code, P] : classes) out.push_back(P);
    return out;
}

struct PosetSweep {
    int max_size = 0;
    std::size_t posets = 0;
    std::size_t subgroups = 0;
    std::size_t orbits = 0;
    std::size_t nested_pairs = 0;
    std::vector<std::string> counterexamples;
};

/// Exhaustive check of the orbit and local-closedness statements on every
/// poset with at most max_size points.
inline PosetSweep poset_sweep(int max_size)
{
    PosetSweep s;
    s.max_size = max_size;
    for (int n = 0; n <= max_size; ++n) {
        for (const auto& P : poset_classes(n)) {
            ++s.posets;
            const auto aut = automorphisms(P);
            for (const auto& H : all_subgroups(aut)) {
                ++s.subgroups;
                Mask done = 0;
                for (int x = 0; x < n; ++x) {
                    if (done & bit(x)) continue;
                    Mask orbit = 0;
                    for (const auto& g : H) orbit |= bit(g[static_cast<std::size_t>(x)]);
                    done |= orbit;
                    ++s.orbits;
                    if (!is_relatively_discrete(P, orbit) || !is_locally_closed(P, orbit))
                        s.counterexamples.push_back("orbit of point " + std::to_string(x) + " on a " + std::to_string(n) + "-point poset");
                }
            }
            // Nested pairs Z in Y: enumerate Y, then submasks Z.
            for (Mask Y = 0; Y <= P.all(); ++Y) {
                for (Mask Z = Y;; Z = (Z - 1) & Y) {
                    ++s.nested_pairs;
                    if (!check_transitivity(P, Z, Y).ok())
                        s.counterexamples.push_back("nested pair on a " + std::to_string(n) + "-point poset");
                    if (Z == 0) break;
                }
                if (n == 0) break;
            }
        }
    }
    return s;
}

}  // namespace twistlab
