#include "qlie/serialize.hpp"

namespace qlie {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JsonSchemaError(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

Scalar as_scalar(const json& j) {
    if (!j.is_string()) bad("scalars must be strings");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        bad("bad scalar '" + j.get<std::string>() + "': " + e.what());
    }
}

// 1-based index in [1, n] to 0-based.
int as_index(const json& j, int n, const char* what) {
    int k = as_int(j, what);
    if (k < 1 || k > n) bad(std::string(what) + " index " + std::to_string(k) + " out of range");
    return k - 1;
}

std::vector<std::string> as_labels(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (auto& x : j) {
        if (!x.is_string()) bad(std::string(what) + " must hold strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

}  // namespace

json to_json(const Tensor& t) {
    json entries = json::array();
    for (uint32_t c = 0; c < t.cols(); ++c)
        for (auto& [r, v] : t.column(c)) {
            json out = json::array(), in = json::array();
            for (int i : unpack(r, t.dim(), t.out_arity())) out.push_back(i + 1);
            for (int i : unpack(c, t.dim(), t.in_arity())) in.push_back(i + 1);
            entries.push_back(json::array({out, in, v.str()}));
        }
    return json{{"n", t.dim()}, {"in_arity", t.in_arity()}, {"out_arity", t.out_arity()}, {"entries", entries}};
}

Tensor tensor_from_json(const json& j) {
    int n = as_int(field(j, "n"), "n"), a = as_int(field(j, "in_arity"), "in_arity"),
        b = as_int(field(j, "out_arity"), "out_arity");
    if (n < 1 || a < 0 || b < 0) bad("tensor dimension and arities must be positive");
    TensorBuilder tb(n, a, b);
    const json& es = field(j, "entries");
    if (!es.is_array()) bad("entries must be an array");
    for (auto& e : es) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_array() || !e[1].is_array())
            bad("tensor entries are [[out...], [in...], \"scalar\"]");
        if (int(e[0].size()) != b || int(e[1].size()) != a) bad("tensor entry has the wrong arity");
        std::vector<int> out, in;
        for (auto& x : e[0]) out.push_back(as_index(x, n, "tensor"));
        for (auto& x : e[1]) in.push_back(as_index(x, n, "tensor"));
        tb.add(out, in, as_scalar(e[2]));
    }
    return tb.build();
}

json to_json(const Presentation& p) {
    json rels = json::array();
    for (auto& r : p.relations) {
        json d2 = json::array(), d1 = json::array();
        NCPoly p2 = r.part(2), p1 = r.part(1);
        for (auto& [w, c] : p2.terms()) d2.push_back(json::array({w[0] + 1, w[1] + 1, c.str()}));
        for (auto& [w, c] : p1.terms()) d1.push_back(json::array({w[0] + 1, c.str()}));
        rels.push_back(json{{"deg2", d2}, {"deg1", d1}, {"deg0", r.coeff({}).str()}});
    }
    return json{{"generators", p.generators}, {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
    auto gens = as_labels(field(j, "generators"), "generators");
    int n = int(gens.size());
    const json& rs = field(j, "relations");
    if (!rs.is_array()) bad("relations must be an array");
    std::vector<NCPoly> rels;
    for (auto& r : rs) {
        NCPoly p;
        for (auto& t : field(r, "deg2")) {
            if (!t.is_array() || t.size() != 3) bad("deg2 terms are [i, j, \"scalar\"]");
            p.add({as_index(t[0], n, "generator"), as_index(t[1], n, "generator")}, as_scalar(t[2]));
        }
        for (auto& t : field(r, "deg1")) {
            if (!t.is_array() || t.size() != 2) bad("deg1 terms are [i, \"scalar\"]");
            p.add({as_index(t[0], n, "generator")}, as_scalar(t[1]));
        }
        p.add({}, as_scalar(field(r, "deg0")));
        rels.push_back(p);
    }
    return Presentation(gens, rels);
}

json to_json(const FiniteGroup& g) {
    json table = json::array();
    for (auto& row : g.table()) {
        json jr = json::array();
        for (int x : row) jr.push_back(x + 1);
        table.push_back(jr);
    }
    return json{{"elements", g.labels()}, {"table", table}, {"identity", g.labels()[g.identity()]}};
}

FiniteGroup group_from_json(const json& j) {
    auto elems = as_labels(field(j, "elements"), "elements");
    int n = int(elems.size());
    const json& t = field(j, "table");
    if (!t.is_array()) bad("table must be an array");
    std::vector<std::vector<int>> table;
    for (auto& row : t) {
        if (!row.is_array()) bad("table rows must be arrays");
        std::vector<int> r;
        for (auto& x : row) r.push_back(as_index(x, n, "table"));
        table.push_back(r);
    }
    const json& id = field(j, "identity");
    if (!id.is_string()) bad("identity must be an element label");
    auto it = std::find(elems.begin(), elems.end(), id.get<std::string>());
    if (it == elems.end()) bad("identity is not an element");
    return FiniteGroup(elems, table, int(it - elems.begin()));
}

json to_json(const AxiomReport& r) {
    json out = json::array();
    for (auto& a : r.results())
        out.push_back(json{{"axiom", a.axiom}, {"status", a.pass ? "pass" : "fail"}, {"witness", a.witness}});
    return out;
}

AxiomReport report_from_json(const json& j) {
    if (!j.is_array()) bad("axiom report must be an array");
    AxiomReport r;
    for (auto& a : j) {
        const json& s = field(a, "status");
        if (s != "pass" && s != "fail") bad("status must be \"pass\" or \"fail\"");
        const json& ax = field(a, "axiom");
        const json& w = field(a, "witness");
        if (!ax.is_string() || !w.is_string()) bad("axiom and witness must be strings");
        r.add(ax.get<std::string>(), s == "pass", w.get<std::string>());
    }
    return r;
}

json to_json(const GradedDims& d) { return json(d.values()); }

GradedDims dims_from_json(const json& j) {
    if (!j.is_array()) bad("graded dimensions must be an array");
    GradedDims d;
    int k = 0;
    for (auto& x : j) {
        if (!x.is_number_unsigned()) bad("graded dimensions must be nonnegative integers");
        d.dims.emplace_back(k++, x.get<uint64_t>());
    }
    d.truncation = k - 1;
    return d;
}

json to_json(const BraidedLieAlgebra& L) {
    return json{{"labels", L.labels},         {"delta", to_json(L.delta)}, {"eps", to_json(L.eps)},
                {"bracket", to_json(L.bracket)}, {"psi", to_json(L.psi)},     {"ups", to_json(L.ups)}};
}

BraidedLieAlgebra braided_lie_from_json(const json& j) {
    BraidedLieAlgebra L = BraidedLieAlgebra::from_structure(
        as_labels(field(j, "labels"), "labels"), tensor_from_json(field(j, "delta")), tensor_from_json(field(j, "eps")),
        tensor_from_json(field(j, "bracket")), tensor_from_json(field(j, "psi")));
    if (j.contains("ups") && tensor_from_json(j.at("ups")) != L.ups) bad("ups does not match the canonical braiding");
    return L;
}

}  // namespace qlie
