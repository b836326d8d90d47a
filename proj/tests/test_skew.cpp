#include "twistlab/field.hpp"
#include "twistlab/skew.hpp"

#include "generators.hpp"

#include <catch_amalgamated.hpp>

using namespace twistlab;
using gen::smat;
using gen::svec;

TEST_CASE("symmetry group fixtures", "[skew]")
{
    const Group Z2(0, 2, 0);
    const auto rot = symmetry_group(make_cocycle(Z2, smat({{"0", "t1"}, {"-t1", "0"}})));
    CHECK(rot.totally_skew);
    CHECK(rot.S.group.is_trivial());

    const Cocycle third = make_cocycle(Z2, smat({{"0", "1/3"}, {"-1/3", "0"}}));
    const auto s3 = symmetry_group(third);
    CHECK_FALSE(s3.totally_skew);
    CHECK(s3.quotient.group == Group::finite({3, 3}));
    // Membership against the defining condition 2 Theta k in Z^2, for |k_i| <= 9.
    for (long k1 = -9; k1 <= 9; ++k1)
        for (long k2 = -9; k2 <= 9; ++k2) {
            const bool expect = (2 * k2) % 3 == 0 && (2 * k1) % 3 == 0;
            CHECK(contains(s3.S, {Scalar(k1), Scalar(k2)}) == expect);
        }

    const Cocycle heis = make_cocycle(Group(1, 1, 0), smat({{"0", "0"}, {"t1", "0"}}));
    const auto sh = symmetry_group(heis);
    CHECK_FALSE(sh.totally_skew);
    CHECK(sh.S.group == Group(0, 1, 0));
    CHECK(contains(sh.S, svec({"1/t1", "0"})));
    CHECK(contains(sh.S, svec({"-2/t1", "0"})));
    CHECK_FALSE(contains(sh.S, svec({"1/(2*t1)", "0"})));
    CHECK_FALSE(contains(sh.S, svec({"0", "1"})));
    CHECK(sh.dual_of_S == Group(0, 0, 1));
}

TEST_CASE("simplicity", "[skew]")
{
    CHECK(is_simple(make_cocycle(Group(0, 2, 0), smat({{"0", "t1"}, {"-t1", "0"}}))));
    CHECK_FALSE(is_simple(trivial_cocycle(Group(0, 1, 0))));
    CHECK_FALSE(is_simple(make_cocycle(Group(0, 2, 0), smat({{"0", "1/3"}, {"-1/3", "0"}}))));
}

TEST_CASE("lift fixtures", "[skew]")
{
    const Group Z2(0, 2, 0);
    const Cocycle third = make_cocycle(Z2, smat({{"0", "1/3"}, {"-1/3", "0"}}));
    const Lift L = totally_skew_lift(third);
    CHECK(L.cocycle.group == Group::finite({3, 3}));
    CHECK(L.witness.antisymmetrizers_equal);
    CHECK(L.witness.quotient_totally_skew);
    // Totally skew on (Z/3)^2: only the identity pairs trivially with everything.
    long kernel = 0;
    const auto el = L.cocycle.group.enumerate();
    for (const auto& g : el) {
        bool triv = true;
        for (const auto& h : el) {
            ScalarVector gv{Scalar(g[0]), Scalar(g[1])}, hv{Scalar(h[0]), Scalar(h[1])};
            if (!antisymmetrize(L.cocycle).evaluate(gv, hv).is_one()) triv = false;
        }
        kernel += triv;
    }
    CHECK(kernel == 1);

    const Cocycle rot = make_cocycle(Z2, smat({{"0", "t1"}, {"-t1", "0"}}));
    const Lift R = totally_skew_lift(rot);
    CHECK(R.cocycle.group == Z2);
    CHECK(R.cocycle.B == rot.B);

    const Lift T = totally_skew_lift(trivial_cocycle(Z2));
    CHECK(T.cocycle.group.is_trivial());
    CHECK(T.witness.antisymmetrizers_equal);

    const Group F = Group::finite({2, 4});
    const Lift Fl = totally_skew_lift(make_cocycle(F, smat({{"0", "1/2"}, {"0", "1/4"}})));
    REQUIRE(Fl.witness.coboundary.has_value());
    CHECK(Fl.witness.coboundary->found);
}

TEST_CASE("field structure fixtures", "[skew]")
{
    const Group Z2(0, 2, 0);
    const auto f1 = field_structure(make_cocycle(Z2, smat({{"0", "1/3"}, {"-1/3", "0"}})));
    CHECK(f1.base == Group(0, 0, 2));
    CHECK(f1.fiber.kind == AlgebraDescriptor::Kind::Matrix);
    CHECK(f1.fiber.matrix_degree == 3);
    CHECK(f1.algebra().kind == AlgebraDescriptor::Kind::ContinuousField);

    const auto f2 = field_structure(make_cocycle(Z2, smat({{"0", "t1"}, {"-t1", "0"}})));
    CHECK(f2.base.is_trivial());
    CHECK(f2.fiber.kind == AlgebraDescriptor::Kind::NCTorus);
    CHECK(f2.fiber.rank == 2);
    CHECK(f2.fiber.angles == smat({{"0", "2*t1"}, {"-2*t1", "0"}}));
    CHECK_FALSE(f2.fiber.stabilized);

    const auto f3 = field_structure(trivial_cocycle(Group(0, 3, 0)));
    CHECK(f3.base == Group(0, 0, 3));
    CHECK(f3.fiber.kind == AlgebraDescriptor::Kind::Commutative);
    CHECK(f3.fiber.space.is_trivial());
    CHECK(f3.algebra().kind == AlgebraDescriptor::Kind::Commutative);
    CHECK(f3.algebra().space == Group(0, 0, 3));
}

TEST_CASE("dual action on primitive ideals", "[skew]")
{
    const Group Z2(0, 2, 0);
    const auto o1 = dual_action_orbit(make_cocycle(Z2, smat({{"0", "1/3"}, {"-1/3", "0"}})));
    CHECK(o1.prim == Group(0, 0, 2));
    CHECK(o1.stabilizer == Group::finite({3, 3}));
    REQUIRE(o1.stabilizer_order.has_value());
    // Annihilator of 3Z^2 in T^2 by enumeration over (1/9)Z^2 / Z^2.
    long count = 0;
    for (long y1 = 0; y1 < 9; ++y1)
        for (long y2 = 0; y2 < 9; ++y2)
            if ((3 * y1) % 9 == 0 && (3 * y2) % 9 == 0) ++count;
    CHECK(*o1.stabilizer_order == count);

    const auto o2 = dual_action_orbit(make_cocycle(Z2, smat({{"0", "t1"}, {"-t1", "0"}})));
    CHECK(o2.prim.is_trivial());
    CHECK(o2.stabilizer == o2.dual_group);

    const auto o3 = dual_action_orbit(trivial_cocycle(Group(0, 1, 0)));
    CHECK(o3.prim == Group(0, 0, 1));
    CHECK(o3.stabilizer.is_trivial());
}

TEST_CASE("symmetry group properties", "[skew][property]")
{
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 150; ++trial) {
        const Group G = gen::random_group(rng);
        const Cocycle w = gen::random_cocycle(rng, G);
        INFO(G.str());
        const SymmetryReport s = symmetry_group(w);
        // S is exactly the kernel: the restricted antisymmetrizer vanishes,
        // and S pairs trivially with all of G.
        const Cocycle ws = restrict(w, s.S);
        CHECK(is_symmetric(ws));
        const ScalarMatrix SA = s.S.embedding.transpose() * antisymmetrize(w).A;
        CHECK(pairing_equal(s.S.group, G, SA, ScalarMatrix(s.S.group.dim(), G.dim())));
        // Random elements pairing trivially with a generating set lie in S.
        for (int k = 0; k < 5; ++k) {
            const ScalarVector g = gen::random_element(rng, G);
            bool pairs_trivially = true;
            const ScalarMatrix A = antisymmetrize(w).A;
            for (std::size_t j = 0; j < G.dim() && pairs_trivially; ++j) {
                Scalar v;
                for (std::size_t i = 0; i < G.dim(); ++i) v += g[i] * A(i, j);
                pairs_trivially = is_continuous(G.kind(j)) ? v.is_zero() : v.is_integer();
            }
            CHECK(contains(s.S, g) == pairs_trivially);
        }
        const Lift L = totally_skew_lift(w);
        CHECK(L.witness.antisymmetrizers_equal);
        CHECK(L.witness.quotient_totally_skew);
        CHECK(L.symmetry.dual_of_S.dual() == L.symmetry.S.group.canonical());
        if (G.is_finite()) {
            CHECK(s.S.group.order() * s.quotient.group.order() == G.order());
            if (L.witness.coboundary) CHECK(L.witness.coboundary->found);
            const auto dec = block_decomposition(build_algebra(w));
            CHECK(static_cast<long>(dec.blocks.size()) == s.S.group.order().get_si());
        }
    }
}
