#include "doctest.h"
#include "qlie/rmatrix.hpp"
#include "qlie/serialize.hpp"

using namespace qlie;

namespace {

// Parsing the dump and dumping again must reproduce it byte for byte.
void check_stable(const json& j) {
    std::string text = j.dump(2);
    CHECK(json::parse(text).dump(2) == text);
}

}  // namespace

TEST_CASE("tensor JSON round trip") {
    Tensor R = multiparam_R(MultiParams::symbolic(2)).R;
    json j = to_json(R);
    CHECK(j["n"] == 2);
    CHECK(j["in_arity"] == 2);
    CHECK(tensor_from_json(j) == R);
    CHECK(tensor_from_json(json::parse(j.dump())) == R);
    check_stable(j);
}

TEST_CASE("tensor JSON uses 1-based indices") {
    json j = json::parse(R"({"n": 2, "in_arity": 1, "out_arity": 1, "entries": [[[1], [2], "q"]]})");
    Tensor t = tensor_from_json(j);
    CHECK(t.at(0, 1) == Scalar::q());
    CHECK(t.nnz() == 1);
}

TEST_CASE("tensor JSON schema errors") {
    auto parse = [](const char* s) { return tensor_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"n": 2, "in_arity": 1, "entries": []})"), JsonSchemaError);
    CHECK_THROWS_AS(parse(R"({"n": 2, "in_arity": 1, "out_arity": 1, "entries": [[[3], [1], "1"]]})"), JsonSchemaError);
    CHECK_THROWS_AS(parse(R"({"n": 2, "in_arity": 1, "out_arity": 1, "entries": [[[1, 1], [1], "1"]]})"), JsonSchemaError);
    CHECK_THROWS_AS(parse(R"({"n": 2, "in_arity": 1, "out_arity": 1, "entries": [[[1], [1], 1]]})"), JsonSchemaError);
    CHECK_THROWS_AS(parse(R"({"n": 2, "in_arity": 1, "out_arity": 1, "entries": [[[1], [1], "1/"]]})"), JsonSchemaError);
}

TEST_CASE("presentation JSON round trip") {
    BraidedLieAlgebra L = matrix_braided_lie(multiparam_R(MultiParams::standard(2, Scalar::q())));
    Presentation p = enveloping_presentation(L);
    json j = to_json(p);
    Presentation back = presentation_from_json(j);
    CHECK(back.generators == p.generators);
    REQUIRE(back.relations.size() == p.relations.size());
    for (size_t i = 0; i < p.relations.size(); ++i) CHECK(back.relations[i] == p.relations[i]);
    check_stable(j);

    json inh = json::parse(R"({"generators": ["x", "y"],
        "relations": [{"deg2": [[1, 2, "1"], [2, 1, "-1"]], "deg1": [[1, "-1"]], "deg0": "0"}]})");
    Presentation u = presentation_from_json(inh);
    CHECK(u.relations[0] == NCPoly::word({0, 1}) - NCPoly::word({1, 0}) - NCPoly::gen(0));
    CHECK(to_json(u) == inh);
    json degenerate = json::parse(R"({"generators": ["x"], "relations": [{"deg2": [], "deg1": [[1, "1"]], "deg0": "0"}]})");
    CHECK_THROWS_AS(presentation_from_json(degenerate), DegenerateRelation);
}

TEST_CASE("group JSON round trip") {
    for (const char* name : {"S3", "Z4", "D4", "S4"}) {
        FiniteGroup G = FiniteGroup::by_name(name);
        json j = to_json(G);
        FiniteGroup back = group_from_json(j);
        CHECK(back.labels() == G.labels());
        CHECK(back.table() == G.table());
        CHECK(back.identity() == G.identity());
        check_stable(j);
    }
    json z2 = json::parse(R"({"elements": ["1", "a"], "table": [[1, 2], [2, 1]], "identity": "1"})");
    CHECK(group_from_json(z2).inv(1) == 1);
    json bad = json::parse(R"({"elements": ["1", "a"], "table": [[1, 2], [2, 2]], "identity": "1"})");
    CHECK_THROWS_AS(group_from_json(bad), InvalidGroup);
}

TEST_CASE("report and dims JSON") {
    AxiomReport r;
    r.add("first", true);
    r.add("second", false, "x != y");
    json j = to_json(r);
    CHECK(j[1]["status"] == "fail");
    CHECK(j[1]["witness"] == "x != y");
    CHECK(to_json(report_from_json(j)) == j);
    check_stable(j);

    GradedDims d;
    d.dims = {{0, 1}, {1, 4}, {2, 10}};
    CHECK(to_json(d).dump() == "[1,4,10]");
    CHECK(dims_from_json(to_json(d)).values() == d.values());
}

TEST_CASE("braided Lie algebra JSON round trip") {
    FiniteGroup G = FiniteGroup::symmetric(3);
    BraidedLieAlgebra L = calculus_braided_lie(G, conjugacy_classes(G)[1], true);
    json j = to_json(L);
    BraidedLieAlgebra back = braided_lie_from_json(j);
    CHECK(back.labels == L.labels);
    CHECK(back.bracket == L.bracket);
    CHECK(back.ups == L.ups);
    check_stable(j);
    j["ups"] = to_json(Tensor::identity(L.dim(), 2));
    CHECK_THROWS_AS(braided_lie_from_json(j), JsonSchemaError);
}
