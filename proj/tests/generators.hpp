#pragma once

// Hand-rolled random generators for groups, elements and cocycles.

#include "twistlab/cocycle.hpp"

#include <random>
#include <vector>

namespace gen {

using namespace twistlab;

inline Scalar small_rational(std::mt19937& rng, long den_max = 6)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, den_max);
    return Scalar(make_rational(num(rng), den(rng)));
}

inline Group random_group(std::mt19937& rng, std::size_t max_vector = 1, std::size_t max_free = 2, std::size_t max_torus = 1,
                          std::size_t max_torsion = 2)
{
    std::uniform_int_distribution<std::size_t> a(0, max_vector), r(0, max_free), b(0, max_torus), t(0, max_torsion);
    std::uniform_int_distribution<long> order(2, 4);
    std::vector<Integer> tors;
    const std::size_t k = t(rng);
    for (std::size_t i = 0; i < k; ++i) tors.emplace_back(order(rng));
    return Group(a(rng), r(rng), b(rng), tors);
}

/// Entry allowed by the pairing rules for coordinates i, j.
inline Scalar random_entry(std::mt19937& rng, const Group& G, std::size_t i, std::size_t j, bool symbols = true)
{
    const CoordKind a = G.kind(i), b = G.kind(j);
    const bool compact_a = a == CoordKind::Torus || a == CoordKind::Torsion;
    const bool compact_b = b == CoordKind::Torus || b == CoordKind::Torsion;
    std::uniform_int_distribution<int> coin(0, 3);
    if ((is_continuous(a) && compact_b) || (compact_a && is_continuous(b))) return Scalar();
    if (a == CoordKind::Torsion || b == CoordKind::Torsion) {
        const Integer n = (a == CoordKind::Torsion && b == CoordKind::Torsion) ? gcd(G.order(i), G.order(j))
                          : a == CoordKind::Torsion                           ? G.order(i)
                                                                               : G.order(j);
        std::uniform_int_distribution<long> k(0, n.get_si() - 1);
        return Scalar(make_rational(k(rng), n.get_si()));
    }
    if (a == CoordKind::Torus || b == CoordKind::Torus) {
        std::uniform_int_distribution<long> k(-2, 2);
        return Scalar(k(rng));
    }
    Scalar x = coin(rng) == 0 ? Scalar() : small_rational(rng);
    if (symbols && coin(rng) == 0) x += Scalar::symbol(coin(rng) % 2);
    return x;
}

inline Cocycle random_cocycle(std::mt19937& rng, const Group& G, bool symbols = true)
{
    ScalarMatrix B(G.dim(), G.dim());
    for (std::size_t i = 0; i < G.dim(); ++i)
        for (std::size_t j = 0; j < G.dim(); ++j) B(i, j) = random_entry(rng, G, i, j, symbols);
    return make_cocycle(G, B);
}

inline ScalarVector random_element(std::mt19937& rng, const Group& G)
{
    std::uniform_int_distribution<long> k(-6, 6);
    ScalarVector x;
    for (std::size_t i = 0; i < G.dim(); ++i) {
        switch (G.kind(i)) {
        case CoordKind::Vector: x.push_back(small_rational(rng)); break;
        case CoordKind::Free: x.push_back(Scalar(k(rng))); break;
        case CoordKind::Torus: x.push_back(Scalar(make_rational(k(rng), 7))); break;
        case CoordKind::Torsion: x.push_back(Scalar(k(rng))); break;
        }
    }
    return G.reduce(x);
}

inline ScalarMatrix smat(const std::vector<std::vector<const char*>>& rows)
{
    std::vector<ScalarVector> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (auto* x : row) r.back().push_back(parse_scalar(x));
    }
    return ScalarMatrix::from_rows(r);
}

inline ScalarVector svec(const std::vector<const char*>& xs)
{
    ScalarVector v;
    for (auto* x : xs) v.push_back(parse_scalar(x));
    return v;
}

}  // namespace gen
