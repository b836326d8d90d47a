#include "twistlab/cocycle.hpp"
#include "twistlab/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twistlab;

namespace {

Scalar s(const char* t) { return parse_scalar(t); }

ScalarMatrix smat(const std::vector<std::vector<const char*>>& rows)
{
    std::vector<ScalarVector> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (auto* x : row) r.back().push_back(parse_scalar(x));
    }
    return ScalarMatrix::from_rows(r);
}

ScalarVector ivec(const std::vector<long>& xs)
{
    ScalarVector v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}

// Independent evaluation: sum over index pairs, no matrix product.
Scalar angle_by_sum(const ScalarMatrix& B, const ScalarVector& g, const ScalarVector& h)
{
    Scalar t;
    for (std::size_t j = 0; j < h.size(); ++j) {
        Scalar col;
        for (std::size_t i = 0; i < g.size(); ++i) col += g[i] * B(i, j);
        t += col * h[j];
    }
    return t;
}

// Random valid B on Z^n with small rational entries (denominators up to 6) and
// an occasional symbol.
ScalarMatrix random_free_B(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 6), coin(0, 5);
    ScalarMatrix B(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            B(i, j) = Scalar(make_rational(num(rng), den(rng)));
            if (coin(rng) == 0) B(i, j) += Scalar::symbol(0);
        }
    return B;
}

ScalarMatrix random_finite_B(std::mt19937& rng, const Group& G)
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

ScalarVector random_vec(std::mt19937& rng, std::size_t n, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<long> d(lo, hi);
    ScalarVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar(d(rng)));
    return v;
}

ScalarVector random_element(std::mt19937& rng, const Group& G)
{
    ScalarVector v;
    for (std::size_t i = 0; i < G.dim(); ++i) {
        std::uniform_int_distribution<long> d(0, G.order(i).get_si() - 1);
        v.push_back(Scalar(d(rng)));
    }
    return v;
}

}  // namespace

TEST_CASE("cocycle evaluation", "[cocycle]")
{
    const Group Z2(0, 2, 0);
    const Cocycle rot = make_cocycle(Z2, smat({{"0", "t1"}, {"-t1", "0"}}));
    CHECK(evaluate(rot, ivec({1, 0}), ivec({0, 1})) == CircleValue(s("t1")));
    CHECK(evaluate(rot, ivec({0, 0}), ivec({3, -7})).is_one());

    const Cocycle third = make_cocycle(Z2, smat({{"0", "1/3"}, {"-1/3", "0"}}));
    const auto g = ivec({2, 1}), h = ivec({1, 2});
    CHECK(evaluate(third, g, h).is_one());
    CHECK(angle_by_sum(third.B, g, h) == Scalar(1));
}

TEST_CASE("pairing rules reject invalid blocks", "[cocycle]")
{
    CHECK_THROWS_AS(make_cocycle(Group(1, 0, 1), smat({{"0", "1"}, {"0", "0"}})), DomainError);
    CHECK_THROWS_AS(make_cocycle(Group(0, 1, 1), smat({{"0", "1/2"}, {"0", "0"}})), DomainError);
    CHECK_THROWS_AS(make_cocycle(Group::finite({2, 3}), smat({{"0", "1/2"}, {"0", "0"}})), DomainError);
    CHECK_NOTHROW(make_cocycle(Group::finite({2, 4}), smat({{"0", "1/2"}, {"1/2", "1/4"}})));
    CHECK_NOTHROW(make_cocycle(Group(1, 1, 0), smat({{"t1", "t2"}, {"1/3", "t1/t2"}})));
    try {
        make_cocycle(Group(0, 1, 1), smat({{"0", "1/2"}, {"0", "0"}}));
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("Z x T") != std::string::npos);
        CHECK(std::string(e.what()).find("integer") != std::string::npos);
    }
}

TEST_CASE("cocycle identity", "[cocycle][property]")
{
    std::mt19937 rng(7101);
    const Group Z3(0, 3, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Cocycle w = make_cocycle(Z3, random_free_B(rng, 3));
        CHECK(cocycle_identity_holds(w, random_vec(rng, 3), random_vec(rng, 3), random_vec(rng, 3)));
    }
    const Group F = Group::finite({2, 2, 2});
    const Cocycle w = make_cocycle(F, random_finite_B(rng, F));
    for (const auto& a : F.enumerate())
        for (const auto& b : F.enumerate())
            for (const auto& c : F.enumerate()) REQUIRE(cocycle_identity_holds(w, ivec(a), ivec(b), ivec(c)));
}

TEST_CASE("antisymmetrizer", "[cocycle]")
{
    const Group Z2(0, 2, 0);
    const Cocycle w = make_cocycle(Z2, smat({{"0", "t1"}, {"0", "0"}}));
    CHECK(antisymmetrize(w).A == smat({{"0", "t1"}, {"-t1", "0"}}));
    CHECK(antisymmetrize(make_cocycle(Z2, smat({{"1/5", "t1"}, {"t1", "2"}}))).A.is_zero());
    const auto theta = smat({{"0", "1/7"}, {"-1/7", "0"}});
    CHECK(antisymmetrize(make_cocycle(Z2, theta)).A == theta + theta);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Cocycle r = make_cocycle(Z2, random_free_B(rng, 2));
        const auto h = antisymmetrize(r);
        const auto g1 = random_vec(rng, 2), g2 = random_vec(rng, 2), x = random_vec(rng, 2);
        CHECK(h.evaluate(g1, x) == evaluate(r, g1, x) * evaluate(r, x, g1).conj());
        CHECK(h.evaluate(add_elements(Z2, g1, g2), x) == h.evaluate(g1, x) * h.evaluate(g2, x));
    }
}

TEST_CASE("restriction", "[cocycle]")
{
    const Group Z2(0, 2, 0);
    const Cocycle w = make_cocycle(Z2, smat({{"0", "t1"}, {"-t1", "1/2"}}));
    const ClosedSubgroup H = solve_conditions(Z2, smat({{"1/3", "0"}, {"0", "1/3"}}), {Condition::Integer, Condition::Integer});
    const Cocycle r = restrict(w, H);
    // Evaluate on generator pairs both ways: via the restricted matrix and via the ambient cocycle.
    for (std::size_t i = 0; i < H.group.dim(); ++i)
        for (std::size_t j = 0; j < H.group.dim(); ++j) {
            ScalarVector ei(H.group.dim(), Scalar(0)), ej(H.group.dim(), Scalar(0));
            ei[i] = 1;
            ej[j] = 1;
            CHECK(r.B(i, j) == angle_by_sum(w.B, H.embedding.apply(ei), H.embedding.apply(ej)));
        }
    ScalarMatrix nine = w.B;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) nine(i, j) *= Scalar(9);
    CHECK(r.B == nine);

    CHECK(restrict(w, trivial_subgroup(Z2)).group.dim() == 0);

    const Group R2(2, 0, 0);
    const Cocycle heis = make_cocycle(R2, smat({{"0", "1"}, {"0", "0"}}));
    const ClosedSubgroup line = solve_conditions(R2, smat({{"0", "1"}}), {Condition::Zero});
    CHECK(restrict(heis, line).B.is_zero());
}

TEST_CASE("inflation", "[cocycle]")
{
    const Group Z2(0, 2, 0);
    const ClosedSubgroup H = solve_conditions(Z2, smat({{"1/3", "0"}, {"0", "1/3"}}), {Condition::Integer, Condition::Integer});
    const Quotient q = quotient(Z2, H);
    REQUIRE(q.group == Group::finite({3, 3}));
    const Cocycle wq = make_cocycle(q.group, smat({{"0", "1/3"}, {"-1/3", "0"}}));
    const Cocycle w = inflate(wq, q.projection);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_vec(rng, 2), h = random_vec(rng, 2);
        CHECK(evaluate(w, g, h) == evaluate(wq, q.projection.apply(g), q.projection.apply(h)));
    }
    CHECK(inflate(trivial_cocycle(q.group), q.projection).B.is_zero());
    const Cocycle rot = make_cocycle(Z2, smat({{"0", "t1"}, {"0", "0"}}));
    CHECK(inflate(rot, make_hom(Z2, Z2, ScalarMatrix::identity(2))).B == rot.B);
}

TEST_CASE("products and semidirect cocycles", "[cocycle]")
{
    const Group G1(1, 1, 0), G2 = Group::finite({4});
    const Cocycle w1 = make_cocycle(G1, smat({{"t1", "0"}, {"t2", "1/3"}}));
    const Cocycle w2 = make_cocycle(G2, smat({{"1/4"}}));
    const ProductCocycle p = product(w1, w2);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        ScalarVector g1 = random_vec(rng, 2), h1 = random_vec(rng, 2);
        ScalarVector g2 = random_element(rng, G2), h2 = random_element(rng, G2);
        ScalarVector g(3), h(3);
        for (std::size_t i = 0; i < 2; ++i) {
            g[p.perm[i]] = g1[i];
            h[p.perm[i]] = h1[i];
        }
        g[p.perm[2]] = g2[0];
        h[p.perm[2]] = h2[0];
        CHECK(evaluate(p.cocycle, g, h) == evaluate(w1, g1, h1) * evaluate(w2, g2, h2));
    }
    CHECK(product(trivial_cocycle(G1), trivial_cocycle(G2)).cocycle.B.is_zero());
    const ProductCocycle e = product(w1, trivial_cocycle(Group()));
    CHECK(e.cocycle.group == G1);
    CHECK(e.cocycle.B == w1.B);

    // eta on Z x Z^2 with phi(1) = (t1, t2) and trivial omega.
    const Group Z(0, 1, 0), L(0, 2, 0);
    const ProductCocycle eta = semidirect_eta(trivial_cocycle(L), Z, smat({{"t1", "t2"}}));
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_vec(rng, 3), y = random_vec(rng, 3);
        const Scalar expect = x[eta.perm[0]] * (s("t1") * y[eta.perm[1]] + s("t2") * y[eta.perm[2]]);
        CHECK(evaluate(eta.cocycle, x, y) == CircleValue(expect));
    }
    const ProductCocycle flat = semidirect_eta(trivial_cocycle(L), Z, ScalarMatrix(1, 2));
    CHECK(flat.cocycle.B.is_zero());
    const ProductCocycle rotation = semidirect_eta(trivial_cocycle(Group(0, 1, 0)), Z, smat({{"t1"}}));
    CHECK(rank_of(antisymmetrize(rotation.cocycle).A) == 2);
    CHECK_THROWS_AS(semidirect_eta(trivial_cocycle(Group(0, 0, 1)), Z, smat({{"1/2"}})), DomainError);
}

TEST_CASE("cohomology decisions", "[cocycle]")
{
    const Group Z2(0, 2, 0);
    const Cocycle w = make_cocycle(Z2, smat({{"0", "t1"}, {"0", "0"}}));
    const Cocycle ws = make_cocycle(Z2, smat({{"1/3", "t1 + t2"}, {"t2", "5"}}));
    CHECK(are_cohomologous(w, ws));
    const Cocycle w2 = make_cocycle(Z2, smat({{"0", "2*t1"}, {"0", "0"}}));
    CHECK_FALSE(are_cohomologous(w, w2));

    const Group V4 = Group::finite({2, 2});
    const Cocycle a = make_cocycle(V4, smat({{"0", "1/2"}, {"0", "0"}}));
    const Cocycle b = make_cocycle(V4, smat({{"0", "0"}, {"1/2", "0"}}));
    CHECK(are_cohomologous(a, b));
    const auto f = solve_coboundary(a, b);
    CHECK(f.found);
    CHECK_THROWS_AS(are_cohomologous(a, trivial_cocycle(Z2)), DomainError);
}

TEST_CASE("normalization identities for skew matrices", "[cocycle][property]")
{
    std::mt19937 rng(31337);
    const Group Z3(0, 3, 0);
    for (int trial = 0; trial < 300; ++trial) {
        ScalarMatrix B = random_free_B(rng, 3);
        B = B - B.transpose();
        const Cocycle w = make_cocycle(Z3, B);
        const auto g = random_vec(rng, 3), h = random_vec(rng, 3);
        ScalarVector ng(3), nh(3);
        for (std::size_t i = 0; i < 3; ++i) {
            ng[i] = -g[i];
            nh[i] = -h[i];
        }
        CHECK(evaluate(w, g, ng).is_one());
        CHECK(evaluate(w, g, h) == evaluate(w, nh, ng).conj());
    }
}
