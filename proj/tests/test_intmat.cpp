#include "twistlab/intmat.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace twistlab;

namespace {

IntMatrix imat(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long x : row) r.back().emplace_back(x);
    }
    return IntMatrix::from_rows(r);
}

// Independent oracle: gcd of all k x k minors, by cofactor expansion.
Integer det_small(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(i - 1, cc++) = m(i, c);
        const Integer sub = det_small(minor);
        d += (j % 2 ? -1 : 1) * m(0, j) * sub;
    }
    return d;
}

Integer minor_gcd(const IntMatrix& m, std::size_t k)
{
    Integer g = 0;
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> rs, cs;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
        if (rs.size() == k) {
            cs.clear();
            pick_cols(0);
            return;
        }
        for (std::size_t i = start; i < R; ++i) {
            rs.push_back(i);
            pick_rows(i + 1);
            rs.pop_back();
        }
    };
    pick_cols = [&](std::size_t start) {
        if (cs.size() == k) {
            IntMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
            g = gcd(g, det_small(sub));
            return;
        }
        for (std::size_t j = start; j < C; ++j) {
            cs.push_back(j);
            pick_cols(j + 1);
            cs.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

void check_smith(const IntMatrix& m)
{
    const SmithForm s = smith_normal_form(m);
    REQUIRE(s.U * m * s.W == s.D);
    REQUIRE(s.U * s.Uinv == IntMatrix::identity(m.rows()));
    REQUIRE(abs(determinant_abs(s.U)) == 1);
    REQUIRE(abs(determinant_abs(s.W)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) REQUIRE(s.D(i, j) == 0);
    const auto d = s.divisors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) REQUIRE(d[i + 1] % d[i] == 0);
    // d1 * ... * dk = gcd of k x k minors.
    Integer prod = 1;
    for (std::size_t k = 1; k <= std::min<std::size_t>(std::min(m.rows(), m.cols()), 3); ++k) {
        if (k <= d.size()) prod *= d[k - 1];
        else prod = 0;
        REQUIRE(minor_gcd(m, k) == prod);
    }
}

}  // namespace

TEST_CASE("smith normal form fixtures", "[intmat]")
{
    const SmithForm s = smith_normal_form(imat({{2, 4}, {6, 8}}));
    CHECK(s.divisors() == std::vector<Integer>{2, 4});
    check_smith(imat({{2, 4}, {6, 8}}));
    CHECK(smith_normal_form(IntMatrix::identity(3)).divisors() == std::vector<Integer>{1, 1, 1});
    const SmithForm z = smith_normal_form(imat({{0}}));
    CHECK(z.rank == 0);
    CHECK(z.D(0, 0) == 0);
}

TEST_CASE("smith normal form on random matrices", "[intmat][property]")
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
    for (int it = 0; it < 120; ++it) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (rng() % 4 == 0) ? 0 : val(rng);
        check_smith(m);
        if (m.rows() == m.cols()) CHECK(determinant_abs(m) == abs(det_small(m)));
    }
}

TEST_CASE("smith normal form keeps entries bounded", "[intmat]")
{
    // Sparse system from a symmetry-group computation that once caused runaway growth.
    const IntMatrix m = imat({{0, 820, -761, 120, -240, 0, 0, 0},
                              {0, 6, -45, 0, 0, 0, 0, 0},
                              {0, -138, 33, 0, 0, 0, 0, 0},
                              {-2050, 0, -1303, 0, 0, -600, 0, 0},
                              {-3, 0, 0, 0, 0, 0, 0, 0},
                              {69, 0, -40, 0, 0, 0, 0, 0},
                              {3805, 2606, 0, 600, 0, 0, -1200, 0},
                              {9, 0, 0, 0, 0, 0, 0, 0},
                              {-33, 80, 0, 0, 0, 0, 0, 0},
                              {-1, 0, -1, 0, 0, 0, 0, -2}});
    check_smith(m);
    CHECK(smith_normal_form(m).divisors() == std::vector<Integer>{1, 1, 2, 2, 120, 1200, 3600});

    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> val(-999, 999);
    for (int it = 0; it < 30; ++it) {
        IntMatrix r(10, 8);
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = (rng() % 3 == 0) ? val(rng) : 0;
        check_smith(r);
        const SmithForm s = smith_normal_form(r);
        std::size_t bits = 0;
        for (std::size_t i = 0; i < s.W.rows(); ++i)
            for (std::size_t j = 0; j < s.W.cols(); ++j) bits = std::max(bits, mpz_sizeinbase(s.W(i, j).get_mpz_t(), 2));
        CHECK(bits < 2000);
    }
}

TEST_CASE("hermite rows and integer kernel", "[intmat]")
{
    const IntMatrix h = hermite_rows(imat({{2, 4}, {6, 8}, {4, 4}}));
    CHECK(h == imat({{2, 0}, {0, 4}}));
    const IntMatrix k = integer_kernel(imat({{1, 2}}));
    REQUIRE(k.cols() == 1);
    CHECK(abs(k(0, 0)) == 2);
    CHECK(abs(k(1, 0)) == 1);
    CHECK(k(0, 0) + 2 * k(1, 0) == 0);
}

TEST_CASE("congruence solving", "[intmat]")
{
    // 2x = 1 mod 4 has no solution; 2x = 2 mod 4 does.
    CHECK_FALSE(solve_mod(imat({{2}}), {Integer(1)}, Integer(4)).has_value());
    auto x = solve_mod(imat({{2}}), {Integer(2)}, Integer(4));
    REQUIRE(x);
    CHECK(mod_floor(2 * (*x)[0], 4) == 2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int it = 0; it < 100; ++it) {
        IntMatrix a(3, 3);
        std::vector<Integer> sol(3);
        for (auto& s : sol) s = val(rng);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = val(rng);
        std::vector<Integer> b(3, Integer(0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b[i] += a(i, j) * sol[j];
        const Integer M = 12;
        auto y = solve_mod(a, b, M);
        REQUIRE(y);
        for (std::size_t i = 0; i < 3; ++i) {
            Integer lhs = 0;
            for (std::size_t j = 0; j < 3; ++j) lhs += a(i, j) * (*y)[j];
            CHECK(mod_floor(lhs - b[i], M) == 0);
        }
    }
}
