#pragma once

// Compactly generated abelian groups R^a x Z^r x T^b x (+) Z/n_i.
//
// Every group is handled through its cover R^(a+b) x Z^(r+k): an element is a
// coordinate vector over Scalar in the fixed order vector, free, torus,
// torsion.  The group is the cover modulo the lattice spanned by the unit
// vectors of the torus coordinates and n_i times the unit vectors of the
// torsion coordinates.

#include "twistlab/intmat.hpp"
#include "twistlab/matrix.hpp"
#include "twistlab/scalar.hpp"

#include <string>
#include <vector>

namespace twistlab {

enum class CoordKind { Vector, Free, Torus, Torsion };

inline const char* kind_name(CoordKind k)
{
    switch (k) {
    case CoordKind::Vector: return "vector";
    case CoordKind::Free: return "free";
    case CoordKind::Torus: return "torus";
    case CoordKind::Torsion: return "torsion";
    }
    return "?";
}

inline bool is_continuous(CoordKind k) { return k == CoordKind::Vector || k == CoordKind::Torus; }
inline bool is_discrete(CoordKind k) { return !is_continuous(k); }

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

class Group {
public:
    Group() = default;
    Group(std::size_t vector, std::size_t free, std::size_t torus, std::vector<Integer> torsion = {})
        : a_(vector), r_(free), b_(torus), torsion_(std::move(torsion))
    {
        for (const auto& n : torsion_)
            if (n < 2) throw DomainError("torsion orders must be at least 2, got " + n.get_str());
    }

    static Group finite(const std::vector<long>& orders)
    {
        std::vector<Integer> t;
        for (long n : orders) t.emplace_back(n);
        return Group(0, 0, 0, std::move(t));
    }

    std::size_t vector_dim() const { return a_; }
    std::size_t free_rank() const { return r_; }
    std::size_t torus_dim() const { return b_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    std::size_t torsion_count() const { return torsion_.size(); }

    std::size_t dim() const { return a_ + r_ + b_ + torsion_.size(); }
    std::size_t vector_begin() const { return 0; }
    std::size_t free_begin() const { return a_; }
    std::size_t torus_begin() const { return a_ + r_; }
    std::size_t torsion_begin() const { return a_ + r_ + b_; }

    CoordKind kind(std::size_t i) const
    {
        if (i < a_) return CoordKind::Vector;
        if (i < a_ + r_) return CoordKind::Free;
        if (i < a_ + r_ + b_) return CoordKind::Torus;
        if (i < dim()) return CoordKind::Torsion;
        throw std::out_of_range("coordinate index out of range");
    }
    /// Order of a torsion coordinate.
    const Integer& order(std::size_t i) const { return torsion_.at(i - torsion_begin()); }

    bool is_finite() const { return a_ == 0 && r_ == 0 && b_ == 0; }
    bool is_compact() const { return a_ == 0 && r_ == 0; }
    bool is_discrete() const { return a_ == 0 && b_ == 0; }
    bool is_trivial() const { return a_ == 0 && r_ == 0 && b_ == 0 && torsion_.empty(); }

    /// |G| for a finite group.
    Integer order() const
    {
        if (!is_finite()) throw DomainError("order of an infinite group");
        Integer n = 1;
        for (const auto& x : torsion_) n *= x;
        return n;
    }
    /// Exponent (lcm of torsion orders) of the finite part.
    Integer exponent() const
    {
        Integer e = 1;
        for (const auto& x : torsion_) e = lcm(e, x);
        return e;
    }

    /// Invariant factors of the finite part, in divisibility order.
    std::vector<Integer> invariant_factors() const
    {
        IntMatrix d(torsion_.size(), torsion_.size());
        for (std::size_t i = 0; i < torsion_.size(); ++i) d(i, i) = torsion_[i];
        return abelian_invariants(d, torsion_.size()).torsion;
    }

    /// Canonical descriptor: same a, r, b and invariant-factor torsion.
    Group canonical() const { return Group(a_, r_, b_, invariant_factors()); }

    /// Structural isomorphism (descriptor equality after canonicalization).
    bool isomorphic_to(const Group& o) const
    {
        return a_ == o.a_ && r_ == o.r_ && b_ == o.b_ && invariant_factors() == o.invariant_factors();
    }

    /// Pontryagin dual at the descriptor level: Z^r and T^r swap, R and finite parts are self-dual.
    Group dual() const { return Group(a_, b_, r_, invariant_factors()); }

    friend bool operator==(const Group& x, const Group& y)
    {
        return x.a_ == y.a_ && x.r_ == y.r_ && x.b_ == y.b_ && x.torsion_ == y.torsion_;
    }
    friend bool operator!=(const Group& x, const Group& y) { return !(x == y); }

    std::string str() const
    {
        std::vector<std::string> parts;
        if (a_) parts.push_back(a_ == 1 ? "R" : "R^" + std::to_string(a_));
        if (r_) parts.push_back(r_ == 1 ? "Z" : "Z^" + std::to_string(r_));
        if (b_) parts.push_back(b_ == 1 ? "T" : "T^" + std::to_string(b_));
        for (const auto& n : torsion_) parts.push_back("Z/" + n.get_str());
        if (parts.empty()) return "0";
        std::string s = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
        return s;
    }

    /// Lattice generators of the cover kernel, as columns of an n x (b + k) matrix.
    ScalarMatrix lattice() const
    {
        ScalarMatrix l(dim(), b_ + torsion_.size());
        for (std::size_t t = 0; t < b_; ++t) l(torus_begin() + t, t) = Scalar(1);
        for (std::size_t j = 0; j < torsion_.size(); ++j) l(torsion_begin() + j, b_ + j) = Scalar(torsion_[j]);
        return l;
    }

    // -- elements ---------------------------------------------------------

    ScalarVector zero() const { return ScalarVector(dim(), Scalar(0)); }

    /// Checks that discrete coordinates are integers.
    void check_element(const ScalarVector& x) const
    {
        if (x.size() != dim())
            throw DomainError("element has " + std::to_string(x.size()) + " coordinates, group " + str() + " needs " + std::to_string(dim()));
        for (std::size_t i = 0; i < dim(); ++i)
            if (twistlab::is_discrete(kind(i)) && !x[i].is_integer())
                throw DomainError("coordinate " + std::to_string(i) + " (" + kind_name(kind(i)) + ") must be an integer, got " + x[i].str());
    }

    /// Canonical representative: torus coordinates mod 1, torsion coordinates mod n.
    ScalarVector reduce(ScalarVector x) const
    {
        check_element(x);
        for (std::size_t i = torus_begin(); i < torsion_begin(); ++i) x[i] = x[i].mod_one();
        for (std::size_t i = torsion_begin(); i < dim(); ++i) x[i] = Scalar(mod_floor(x[i].integer(), order(i)));
        return x;
    }

    bool equal_elements(const ScalarVector& x, const ScalarVector& y) const
    {
        check_element(x);
        check_element(y);
        for (std::size_t i = 0; i < dim(); ++i) {
            const Scalar d = x[i] - y[i];
            switch (kind(i)) {
            case CoordKind::Vector:
            case CoordKind::Free:
                if (!d.is_zero()) return false;
                break;
            case CoordKind::Torus:
                if (!d.is_integer()) return false;
                break;
            case CoordKind::Torsion:
                if (d.integer() % order(i) != 0) return false;
                break;
            }
        }
        return true;
    }

    bool is_identity(const ScalarVector& x) const { return equal_elements(x, zero()); }

    /// Enumerates all elements of a finite group in mixed-radix order.
    std::vector<std::vector<long>> enumerate() const
    {
        if (!is_finite()) throw DomainError("cannot enumerate an infinite group");
        std::vector<std::vector<long>> out;
        std::vector<long> cur(torsion_.size(), 0);
        const long total = to_int64(order());
        out.reserve(static_cast<std::size_t>(total));
        for (long idx = 0; idx < total; ++idx) {
            out.push_back(cur);
            for (std::size_t i = cur.size(); i-- > 0;) {
                if (++cur[i] < torsion_[i].get_si()) break;
                cur[i] = 0;
            }
        }
        return out;
    }

private:
    std::size_t a_ = 0, r_ = 0, b_ = 0;
    std::vector<Integer> torsion_;
};

/// Direct product G1 x G2 with coordinates re-sorted into standard order.
/// `perm[i]` is the product coordinate of the i-th coordinate of (G1, G2) concatenated.
struct ProductLayout {
    Group group;
    std::vector<std::size_t> perm;
};

inline ProductLayout direct_product(const Group& g1, const Group& g2)
{
    ProductLayout p;
    std::vector<Integer> tor = g1.torsion();
    tor.insert(tor.end(), g2.torsion().begin(), g2.torsion().end());
    p.group = Group(g1.vector_dim() + g2.vector_dim(), g1.free_rank() + g2.free_rank(), g1.torus_dim() + g2.torus_dim(), tor);
    const Group& G = p.group;
    auto place = [&](const Group& g, std::size_t i, std::size_t offset_v, std::size_t offset_f, std::size_t offset_t, std::size_t offset_k) {
        switch (g.kind(i)) {
        case CoordKind::Vector: return G.vector_begin() + offset_v + i;
        case CoordKind::Free: return G.free_begin() + offset_f + (i - g.free_begin());
        case CoordKind::Torus: return G.torus_begin() + offset_t + (i - g.torus_begin());
        case CoordKind::Torsion: return G.torsion_begin() + offset_k + (i - g.torsion_begin());
        }
        return std::size_t(0);
    };
    for (std::size_t i = 0; i < g1.dim(); ++i) p.perm.push_back(place(g1, i, 0, 0, 0, 0));
    for (std::size_t i = 0; i < g2.dim(); ++i)
        p.perm.push_back(place(g2, i, g1.vector_dim(), g1.free_rank(), g1.torus_dim(), g1.torsion_count()));
    return p;
}

/// Continuous homomorphism given by a Scalar matrix on covers (codomain x domain).
struct Homomorphism {
    Group domain;
    Group codomain;
    ScalarMatrix matrix;

    ScalarVector apply(const ScalarVector& x) const
    {
        domain.check_element(x);
        return codomain.reduce(matrix.apply(x));
    }
};

/// Empty string when `m` defines a homomorphism `dom -> cod`, otherwise the first violated rule.
inline std::string hom_violation(const Group& dom, const Group& cod, const ScalarMatrix& m)
{
    if (m.rows() != cod.dim() || m.cols() != dom.dim())
        return "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
               std::to_string(cod.dim()) + "x" + std::to_string(dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) {
        const CoordKind cj = dom.kind(j);
        for (std::size_t i = 0; i < cod.dim(); ++i) {
            const CoordKind ri = cod.kind(i);
            const Scalar& x = m(i, j);
            auto bad = [&](const std::string& rule) {
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " + kind_name(cj) + " -> " + kind_name(ri) +
                       " = " + x.str() + ": " + rule;
            };
            if (is_continuous(cj) && is_discrete(ri) && !x.is_zero()) return bad("continuous part cannot reach a discrete factor");
            if (cj == CoordKind::Torus) {
                if (ri == CoordKind::Vector && !x.is_zero()) return bad("torus has no non-trivial image in a vector group");
                if (ri == CoordKind::Torus && !x.is_integer()) return bad("torus to torus entries are integers");
            }
            if (is_discrete(cj) && is_discrete(ri) && !x.is_integer()) return bad("discrete to discrete entries are integers");
            if (cj == CoordKind::Torsion) {
                const Integer& n = dom.order(j);
                const Scalar y = x * Scalar(n);
                switch (ri) {
                case CoordKind::Vector:
                case CoordKind::Free:
                    if (!x.is_zero()) return bad("torsion element has no non-trivial image in a torsion-free factor");
                    break;
                case CoordKind::Torus:
                    if (!y.is_integer()) return bad("image of Z/" + n.get_str() + " in T needs denominator dividing " + n.get_str());
                    break;
                case CoordKind::Torsion:
                    if (y.integer() % cod.order(i) != 0) return bad("order relation not respected");
                    break;
                }
            }
        }
    }
    return {};
}

inline Homomorphism make_hom(const Group& dom, const Group& cod, const ScalarMatrix& m)
{
    const std::string v = hom_violation(dom, cod, m);
    if (!v.empty()) throw DomainError("invalid homomorphism " + dom.str() + " -> " + cod.str() + ": " + v);
    return Homomorphism{dom, cod, m};
}

}  // namespace twistlab
