#pragma once

// JSON reading and writing.  Scalars are written as literal strings; on input
// they may be strings, integers, or {"q": "p/q", "sym": {"t1": "2"}}.
// Schema errors are ParseErrors naming the JSON pointer of the bad field.

#include "twistlab/catalog.hpp"
#include "twistlab/intmat.hpp"
#include "twistlab/strata.hpp"

#include <json.hpp>

#include <string>

namespace twistlab {

using Json = nlohmann::ordered_json;

namespace json {

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& what)
{
    throw ParseError("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

inline const Json& field(const Json& j, const std::string& pointer, const char* key)
{
    if (!j.is_object()) schema_error(pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(pointer + "/" + key, "missing field");
    return *it;
}

inline long read_long(const Json& j, const std::string& pointer, long lo = 0)
{
    long v = 0;
    if (j.is_number_integer()) v = j.get<long>();
    else if (j.is_string()) {
        try {
            std::size_t pos = 0;
            v = std::stol(j.get<std::string>(), &pos);
            if (pos != j.get<std::string>().size()) schema_error(pointer, "expected an integer");
        } catch (const std::logic_error&) {
            schema_error(pointer, "expected an integer");
        }
    } else schema_error(pointer, "expected an integer");
    if (v < lo) schema_error(pointer, "must be at least " + std::to_string(lo));
    return v;
}

inline Scalar read_scalar(const Json& j, const std::string& pointer)
{
    try {
        if (j.is_string()) return parse_scalar(j.get<std::string>());
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_object()) {
            Scalar s;
            if (auto q = j.find("q"); q != j.end()) s += read_scalar(*q, pointer + "/q");
            if (auto sym = j.find("sym"); sym != j.end()) {
                if (!sym->is_object()) schema_error(pointer + "/sym", "expected an object");
                for (const auto& [name, c] : sym->items())
                    s += read_scalar(c, pointer + "/sym/" + name) * parse_scalar(name);
            }
            for (const auto& [key, v] : j.items())
                if (key != "q" && key != "sym") schema_error(pointer + "/" + key, "unknown field");
            return s;
        }
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        if (msg.rfind("schema violation", 0) == 0) throw;
        schema_error(pointer, msg);
    }
    schema_error(pointer, "expected a scalar literal");
}

inline ScalarVector read_vector(const Json& j, const std::string& pointer)
{
    if (!j.is_array()) schema_error(pointer, "expected an array");
    ScalarVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_scalar(j[i], pointer + "/" + std::to_string(i)));
    return v;
}

inline ScalarMatrix read_matrix(const Json& j, const std::string& pointer, std::size_t rows, std::size_t cols)
{
    if (!j.is_array()) schema_error(pointer, "expected an array of rows");
    if (j.size() != rows) schema_error(pointer, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    ScalarMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string p = pointer + "/" + std::to_string(i);
        const ScalarVector row = read_vector(j[i], p);
        if (row.size() != cols) schema_error(p, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
    }
    return m;
}

inline Group read_group(const Json& j, const std::string& pointer = "")
{
    if (!j.is_object()) schema_error(pointer, "expected a group object");
    for (const auto& [key, v] : j.items())
        if (key != "vector" && key != "free" && key != "torus" && key != "torsion" && key != "name") schema_error(pointer + "/" + key, "unknown field");
    auto count = [&](const char* key) -> std::size_t {
        auto it = j.find(key);
        return it == j.end() ? 0 : static_cast<std::size_t>(read_long(*it, pointer + "/" + key));
    };
    std::vector<Integer> tors;
    if (auto it = j.find("torsion"); it != j.end()) {
        if (!it->is_array()) schema_error(pointer + "/torsion", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) tors.emplace_back(read_long((*it)[i], pointer + "/torsion/" + std::to_string(i), 2));
    }
    return Group(count("vector"), count("free"), count("torus"), tors);
}

inline Cocycle read_cocycle(const Json& j, const std::string& pointer = "")
{
    const Group G = read_group(field(j, pointer, "group"), pointer + "/group");
    const ScalarMatrix B = read_matrix(field(j, pointer, "B"), pointer + "/B", G.dim(), G.dim());
    return make_cocycle(G, B);
}

inline IntMatrix read_int_matrix(const Json& j, const std::string& pointer = "")
{
    if (!j.is_array()) schema_error(pointer, "expected an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 || !j[0].is_array() ? 0 : j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string p = pointer + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != cols) schema_error(p, "rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) {
            const Scalar s = read_scalar(j[i][k], p + "/" + std::to_string(k));
            if (!s.is_integer()) schema_error(p + "/" + std::to_string(k), "expected an integer");
            m(i, k) = s.integer();
        }
    }
    return m;
}

// Writers.

inline Json to_json(const Scalar& s) { return s.str(); }
inline Json to_json(const Rational& q) { return q.get_str(); }
inline Json to_json(const Integer& n) { return n.get_str(); }

inline Json to_json(const ScalarVector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

template <class T>
Json to_json(const Matrix<T>& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        a.push_back(std::move(row));
    }
    return a;
}

inline Json to_json(const Group& G)
{
    Json t = Json::array();
    for (std::size_t i = 0; i < G.torsion().size(); ++i) t.push_back(G.torsion()[i].get_si());
    return Json{{"vector", G.vector_dim()}, {"free", G.free_rank()}, {"torus", G.torus_dim()}, {"torsion", t}, {"name", G.str()}};
}

inline Json to_json(const Cocycle& w) { return Json{{"group", to_json(w.group)}, {"B", to_json(w.B)}}; }

inline Json to_json(const ClosedSubgroup& H)
{
    return Json{{"group", to_json(H.group)}, {"embedding", to_json(H.embedding)}};
}

inline Json to_json(const SymmetryReport& s)
{
    return Json{{"S", to_json(s.S)},
                {"quotient", to_json(s.quotient.group)},
                {"totally_skew", s.totally_skew},
                {"dual_of_S", to_json(s.dual_of_S)}};
}

inline Json to_json(const AlgebraDescriptor& a)
{
    using K = AlgebraDescriptor::Kind;
    Json j{{"kind", AlgebraDescriptor::kind_name(a.kind)}, {"description", a.str()}};
    switch (a.kind) {
    case K::Matrix: j["degree"] = a.matrix_degree; break;
    case K::NCTorus:
        j["rank"] = a.rank;
        j["commutation_angles"] = to_json(a.angles);
        j["matrix_factor"] = a.matrix_degree;
        break;
    case K::Commutative: j["space"] = to_json(a.space); break;
    case K::ContinuousField:
        j["base"] = to_json(a.space);
        j["fiber"] = to_json(*a.fiber);
        break;
    case K::CompactOperators: break;
    }
    j["stabilized"] = a.stabilized;
    return j;
}

inline Json to_json(const CoboundaryResult& c)
{
    Json j{{"found", c.found}};
    if (c.found) {
        Json f = Json::array();
        for (std::size_t i = 0; i < c.elements.size(); ++i) f.push_back(Json{{"element", c.elements[i]}, {"angle", to_json(c.f[i])}});
        j["f"] = f;
    } else {
        j["reason"] = c.reason;
        if (!c.witness_g.empty()) j["witness"] = Json{{"g", c.witness_g}, {"h", c.witness_h}};
    }
    return j;
}

inline Json to_json(const Lift& L)
{
    Json w{{"antisymmetrizers_equal", L.witness.antisymmetrizers_equal}, {"quotient_totally_skew", L.witness.quotient_totally_skew}};
    if (L.witness.coboundary) w["coboundary"] = to_json(*L.witness.coboundary);
    return Json{{"symmetry", to_json(L.symmetry)}, {"lifted_cocycle", to_json(L.cocycle)}, {"witness", w}};
}

inline Json to_json(const ReductionReport& r)
{
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json subs = Json::array();
        for (const auto& H : s.subgroups) subs.push_back(to_json(H));
        steps.push_back(Json{{"kind", step_name(s.kind)},
                             {"before", s.before.str()},
                             {"after", s.after.str()},
                             {"note", s.note},
                             {"subgroups", subs},
                             {"basis_change", to_json(s.basis_change)},
                             {"kernel_audit_ok", s.kernel_audit_ok},
                             {"totally_skew_after", s.totally_skew_after}});
    }
    return Json{{"input", to_json(r.input)},
                {"steps", steps},
                {"result_rank", r.result_rank},
                {"result_cocycle", to_json(r.result_cocycle)},
                {"lift", to_json(r.lift)},
                {"matrix_factor", r.matrix_factor},
                {"finite_factor", to_json(r.finite_factor)},
                {"stabilization_infinite", r.stabilization_infinite}};
}

inline Json to_json(const BlockDecomposition& d)
{
    Json blocks = Json::array();
    for (const auto& b : d.blocks)
        blocks.push_back(Json{{"dimension", b.dimension},
                              {"algebra_dimension", b.algebra_dimension},
                              {"center_dimension", b.center_dimension},
                              {"character", b.character}});
    return Json{{"group", to_json(d.group)},
                {"root_order", d.root_order},
                {"S_order", d.S.size()},
                {"S", d.S},
                {"blocks", blocks},
                {"total_dimension", d.total_dimension()},
                {"associative", d.associative},
                {"idempotents_ok", d.idempotents_ok},
                {"check", d.ok() ? "ok" : "failed"}};
}

inline Json to_json(const FieldStructure& f)
{
    return Json{{"base", to_json(f.base)}, {"fiber", to_json(f.fiber)}, {"algebra", to_json(f.algebra())}};
}

inline Json to_json(const OrbitReport& o)
{
    Json j{{"dual_group", to_json(o.dual_group)},
           {"prim", to_json(o.prim)},
           {"stabilizer", to_json(o.stabilizer)},
           {"transitive", o.transitive},
           {"orbit_count", o.orbit_count}};
    if (o.stabilizer_order) j["stabilizer_order"] = o.stabilizer_order->get_str();
    return j;
}

inline Json to_json(const StratumReport& s)
{
    Json j{{"label", s.label},
           {"orbit", s.orbit},
           {"cocycle", to_json(s.cocycle)},
           {"symmetry", to_json(s.symmetry)},
           {"algebra", to_json(s.algebra)},
           {"simple", s.simple}};
    if (s.reduction) j["reduction"] = to_json(*s.reduction);
    return j;
}

inline Json to_json(const PrimeReport& p)
{
    Json j{{"n", p.n}, {"cocycle", to_json(p.cocycle)}, {"symmetry", to_json(p.symmetry)}};
    if (p.reduction) j["reduction"] = to_json(*p.reduction);
    else j["rejected"] = p.rejection;
    return j;
}

inline Json to_json(const SmithForm& s)
{
    Json d = Json::array();
    for (const auto& x : s.divisors()) d.push_back(x.get_str());
    return Json{{"divisors", d}, {"rank", s.rank}, {"D", to_json(s.D)}, {"U", to_json(s.U)}, {"W", to_json(s.W)}};
}

inline Json to_json(const PosetSweep& s)
{
    return Json{{"max_size", s.max_size},
                {"poset_classes", s.posets},
                {"subgroup_actions", s.subgroups},
                {"orbits", s.orbits},
                {"nested_pairs", s.nested_pairs},
                {"counterexamples", s.counterexamples}};
}

}  // namespace json
}  // namespace twistlab
