#include "twistlab/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twistlab;

namespace {

ScalarMatrix smat(const std::vector<std::vector<const char*>>& rows)
{
    std::vector<ScalarVector> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (auto* x : row) r.back().push_back(parse_scalar(x));
    }
    return ScalarMatrix::from_rows(r);
}

// Invariant factor chains n1 | n2 | ... with product <= bound.
void chains(long bound, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    long prod = 1;
    for (long x : cur) prod *= x;
    if (!cur.empty()) out.push_back(cur);
    const long start = cur.empty() ? 2 : cur.back();
    for (long n = start; prod * n <= bound; n += (cur.empty() ? 1 : cur.back())) {
        if (n % start != 0) continue;
        cur.push_back(n);
        chains(bound, cur, out);
        cur.pop_back();
    }
}

ScalarMatrix random_B(std::mt19937& rng, const Group& G)
{
    ScalarMatrix B(G.dim(), G.dim());
    for (std::size_t i = 0; i < G.dim(); ++i)
        for (std::size_t j = 0; j < G.dim(); ++j) {
            const long n = gcd(G.order(i), G.order(j)).get_si();
            std::uniform_int_distribution<long> k(0, n - 1);
            B(i, j) = Scalar(make_rational(k(rng), n));
        }
    return B;
}

// |S| by direct enumeration: g with g^T (B - B^T) h integral for every h.
long symmetry_order_brute(const Cocycle& w)
{
    const auto A = w.B - w.B.transpose();
    const auto el = w.group.enumerate();
    long count = 0;
    for (const auto& g : el) {
        bool in = true;
        for (const auto& h : el) {
            Rational t = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = 0; j < h.size(); ++j) t += Rational(g[i] * h[j]) * A(i, j).rational();
            if (t.get_den() != 1) {
                in = false;
                break;
            }
        }
        if (in) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("twisted algebra tables", "[oracle]")
{
    const auto A1 = build_algebra(trivial_cocycle(Group::finite({2})));
    CHECK(A1.size() == 2);
    CHECK(A1.associative());
    CHECK(A1.commutator(1, 1) == 0);

    const Group V4 = Group::finite({2, 2});
    const auto A2 = build_algebra(make_cocycle(V4, smat({{"0", "0"}, {"1/2", "0"}})));
    CHECK(A2.associative());
    CHECK(A2.star_consistent());
    const std::size_t e1 = A2.index_of({1, 0}), e2 = A2.index_of({0, 1});
    // u_(0,1) u_(1,0) = -u_(1,0) u_(0,1)
    CHECK(A2.commutator(e2, e1) * 2 == A2.root_order());

    const auto A3 = build_algebra(make_cocycle(Group::finite({3, 3}), smat({{"0", "1/3"}, {"-1/3", "0"}})));
    CHECK(A3.size() == 9);
    CHECK(A3.associative());
    CHECK(A3.root_order() % 3 == 0);
}

TEST_CASE("size bound", "[oracle]")
{
    CHECK_THROWS_AS(FiniteTwistedAlgebra(trivial_cocycle(Group::finite({8, 8, 2})), 64), DomainError);
    CHECK_THROWS_AS(FiniteTwistedAlgebra(trivial_cocycle(Group(0, 1, 0)), 64), DomainError);
    CHECK_NOTHROW(FiniteTwistedAlgebra(trivial_cocycle(Group::finite({8, 8})), 64));
}

TEST_CASE("block decompositions of fixtures", "[oracle]")
{
    const Group V4 = Group::finite({2, 2});
    const auto d1 = block_decomposition(build_algebra(make_cocycle(V4, smat({{"0", "0"}, {"1/2", "0"}}))));
    CHECK(d1.ok());
    REQUIRE(d1.blocks.size() == 1);
    CHECK(d1.blocks[0].dimension == 2);

    const auto d2 = block_decomposition(build_algebra(trivial_cocycle(Group::finite({2}))));
    CHECK(d2.ok());
    REQUIRE(d2.blocks.size() == 2);
    CHECK(d2.blocks[0].dimension == 1);
    CHECK(d2.blocks[1].dimension == 1);

    const auto d3 = block_decomposition(build_algebra(make_cocycle(Group::finite({3, 3}), smat({{"0", "1/3"}, {"-1/3", "0"}}))));
    CHECK(d3.ok());
    REQUIRE(d3.blocks.size() == 1);
    CHECK(d3.blocks[0].dimension == 3);
    CHECK(d3.blocks[0].center_dimension == 1);

    // Z/2 x Z/4 with a cocycle whose symmetry group has order 2.
    const auto d4 = block_decomposition(build_algebra(make_cocycle(Group::finite({2, 4}), smat({{"0", "1/2"}, {"0", "0"}}))));
    CHECK(d4.ok());
    CHECK(d4.blocks.size() == 2);
    for (const auto& b : d4.blocks) CHECK(b.dimension == 2);
}

TEST_CASE("blocks match the symmetry group on all small groups", "[oracle][property]")
{
    std::vector<std::vector<long>> groups;
    std::vector<long> cur;
    chains(32, cur, groups);
    REQUIRE(groups.size() > 30);
    std::mt19937 rng(424242);
    for (const auto& orders : groups) {
        const Group G = Group::finite(orders);
        for (int trial = 0; trial < 3; ++trial) {
            const Cocycle w = make_cocycle(G, random_B(rng, G));
            const auto dec = block_decomposition(build_algebra(w));
            const long S = symmetry_order_brute(w);
            INFO(G.str() << " B=" << w.B(0, 0).str());
            CHECK(dec.ok());
            CHECK(static_cast<long>(dec.blocks.size()) == S);
            CHECK(static_cast<long>(dec.S.size()) == S);
            for (const auto& b : dec.blocks) CHECK(b.dimension * b.dimension * S == G.order().get_si());
        }
    }
}

TEST_CASE("coboundary solver", "[oracle]")
{
    const Group G = Group::finite({3, 3});
    const Cocycle skew = make_cocycle(G, smat({{"0", "1/3"}, {"-1/3", "0"}}));
    const auto same = solve_coboundary(skew, skew);
    REQUIRE(same.found);
    for (const auto& f : same.f) CHECK(f == 0);

    const Cocycle sym = make_cocycle(G, smat({{"1/3", "2/3"}, {"2/3", "0"}}));
    const auto r = solve_coboundary(sym, trivial_cocycle(G));
    REQUIRE(r.found);
    // Re-substitute on all pairs, independently of the solver's own check.
    const auto el = G.enumerate();
    for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b) {
            std::vector<long> s(2);
            for (int i = 0; i < 2; ++i) s[i] = (el[a][i] + el[b][i]) % 3;
            std::size_t ab = 0;
            while (el[ab] != s) ++ab;
            Rational c = 0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) c += Rational(el[a][i] * el[b][j]) * sym.B(i, j).rational();
            CHECK(frac_of(r.f[a] + r.f[b] - r.f[ab] - c) == 0);
        }

    const auto none = solve_coboundary(skew, trivial_cocycle(G));
    CHECK_FALSE(none.found);
    CHECK_FALSE(none.witness_g.empty());
}

TEST_CASE("coboundary exists iff antisymmetrizers agree", "[oracle][property]")
{
    std::mt19937 rng(8080);
    const std::vector<std::vector<long>> shapes{{2, 2}, {2, 4}, {3, 3}, {4, 4}, {2, 2, 2}, {6}, {2, 6}, {3, 6}};
    for (const auto& orders : shapes) {
        const Group G = Group::finite(orders);
        for (int trial = 0; trial < 8; ++trial) {
            const Cocycle w1 = make_cocycle(G, random_B(rng, G));
            Cocycle w2 = make_cocycle(G, random_B(rng, G));
            if (trial % 2 == 0) {
                // Same antisymmetrizer: add a random symmetric matrix to w1.
                ScalarMatrix sym = random_B(rng, G);
                sym = sym + sym.transpose();
                w2 = make_cocycle(G, w1.B + sym);
            }
            CHECK(solve_coboundary(w1, w2).found == are_cohomologous(w1, w2));
        }
    }
}
