#include "twistlab/strata.hpp"

#include <catch_amalgamated.hpp>

using namespace twistlab;

namespace {

// Locally closed by the definition: Y = closure(Y) & U for some open U.
bool lc_by_definition(const FinitePoset& P, Mask Y)
{
    const Mask c = P.closure(Y);
    for (Mask U : P.opens())
        if ((c & U) == Y) return true;
    return false;
}

// Relative opens of S are the traces of opens of P.
bool discrete_by_definition(const FinitePoset& P, Mask S)
{
    Mask singletons = 0;
    for (Mask U : P.opens())
        if (popcount(U & S) == 1) singletons |= U & S;
    return singletons == S;
}

FinitePoset chain(int n)
{
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
    return FinitePoset::from_relations(n, r);
}

}  // namespace

TEST_CASE("locally closed subsets", "[strata]")
{
    const FinitePoset c3 = chain(3);
    for (int x = 0; x < 3; ++x) CHECK(is_locally_closed(c3, bit(x)));
    CHECK(is_locally_closed(c3, c3.all()));
    // {a, c} in a < b < c: its closure is everything and {b} is not closed.
    CHECK_FALSE(is_locally_closed(c3, bit(0) | bit(2)));
    CHECK_FALSE(lc_by_definition(c3, bit(0) | bit(2)));

    CHECK(verify_decomposition(c3, {bit(0), bit(1), bit(2)}));
    CHECK(verify_decomposition(chain(2), {bit(0) | bit(1)}));
    CHECK_FALSE(verify_decomposition(c3, {bit(0) | bit(2), bit(1)}));
    CHECK_FALSE(verify_decomposition(c3, {bit(0), bit(1)}));
    CHECK_FALSE(verify_decomposition(c3, {bit(0) | bit(1), bit(1) | bit(2)}));

    CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("orbit analysis fixtures", "[strata]")
{
    // a < c, b < c with the swap of a and b.
    const FinitePoset v = FinitePoset::from_relations(3, {{0, 2}, {1, 2}});
    const auto o = orbit_analysis(PosetAction{v, {{1, 0, 2}}}, 0);
    CHECK(o.orbit == (bit(0) | bit(1)));
    CHECK(o.discrete);
    CHECK(o.locally_closed);
    CHECK(o.group_order == 2);
    CHECK(o.stabilizer.size() == 1);

    const auto t = orbit_analysis(PosetAction{v, {}}, 2);
    CHECK(t.orbit == bit(2));
    CHECK(t.discrete);

    const FinitePoset anti = FinitePoset::from_relations(4, {});
    const auto z4 = orbit_analysis(PosetAction{anti, {{1, 2, 3, 0}}}, 0);
    CHECK(z4.orbit == anti.all());
    CHECK(z4.discrete);
    CHECK(z4.group_order == 4);

    CHECK_THROWS_WITH(orbit_analysis(PosetAction{v, {{2, 1, 0}}}, 0), Catch::Matchers::ContainsSubstring("invalid action"));
    CHECK_THROWS_AS(orbit_analysis(PosetAction{v, {{0, 0, 2}}}, 0), DomainError);
}

TEST_CASE("transitivity fixtures", "[strata]")
{
    const FinitePoset c3 = chain(3);
    for (Mask Y = 0; Y <= c3.all(); ++Y) {
        CHECK(check_transitivity(c3, Y, Y).ok());
        CHECK(check_transitivity(c3, 0, Y).ok());
    }
    CHECK_THROWS_AS(check_transitivity(c3, bit(0), bit(1)), DomainError);
}

TEST_CASE("poset class counts", "[strata]")
{
    const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63, 318};
    std::size_t total = 0;
    for (int n = 0; n <= 6; ++n) {
        const auto cls = poset_classes(n);
        CHECK(cls.size() == expected[static_cast<std::size_t>(n)]);
        total += cls.size();
    }
    CHECK(total == 406);
}

TEST_CASE("subgroup enumeration", "[strata]")
{
    // Subgroup counts of S_3 and S_4 (antichains of 3 and 4 points).
    CHECK(all_subgroups(automorphisms(FinitePoset::from_relations(3, {}))).size() == 6);
    CHECK(all_subgroups(automorphisms(FinitePoset::from_relations(4, {}))).size() == 30);
    CHECK(automorphisms(chain(4)).size() == 1);
}

TEST_CASE("fast predicates agree with the definitions", "[strata][property]")
{
    for (int n = 0; n <= 4; ++n)
        for (const auto& P : poset_classes(n))
            for (Mask Y = 0; Y <= P.all(); ++Y) {
                CHECK(is_locally_closed(P, Y) == lc_by_definition(P, Y));
                CHECK(is_relatively_discrete(P, Y) == discrete_by_definition(P, Y));
                for (Mask Z = Y;; Z = (Z - 1) & Y) {
                    // Relative version by definition: Z = cl_Y(Z) & (U & Y).
                    bool rel = false;
                    for (Mask U : P.opens())
                        if ((P.closure(Z) & Y & U) == Z) rel = true;
                    CHECK(is_locally_closed_in(P, Z, Y) == rel);
                    if (Z == 0) break;
                }
            }
}

TEST_CASE("exhaustive sweep up to six points", "[strata][exhaustive]")
{
    const PosetSweep s = poset_sweep(6);
    CHECK(s.posets == 406);
    CHECK(s.counterexamples.empty());
    CHECK(s.subgroups > s.posets);
}
