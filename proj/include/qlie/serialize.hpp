#pragma once

#include "qlie/groups.hpp"
#include "qlie/lie.hpp"
#include "qlie/present.hpp"
#include "qlie/report.hpp"
#include "qlie/tensor.hpp"

#include <json.hpp>

// JSON schemas. Indices are 1-based, scalars are strings in Scalar::parse syntax.
//   Tensor        {n, in_arity, out_arity, entries: [[out...], [in...], "s"]...}
//   Presentation  {generators, relations: [{deg2: [[i, j, "s"]...], deg1: [[i, "s"]...], deg0: "s"}...]}
//   FiniteGroup   {elements, table: [[k...]...], identity: "label"}
//   AxiomReport   [{axiom, status: "pass" | "fail", witness}...]
//   GradedDims    [d0, d1, ...]
//   BraidedLieAlgebra {labels, delta, eps, bracket, psi, ups}
namespace qlie {

using json = nlohmann::ordered_json;

class JsonSchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json to_json(const Tensor& t);
json to_json(const Presentation& p);
json to_json(const FiniteGroup& g);
json to_json(const AxiomReport& r);
json to_json(const GradedDims& d);
json to_json(const BraidedLieAlgebra& L);

Tensor tensor_from_json(const json& j);
Presentation presentation_from_json(const json& j);
FiniteGroup group_from_json(const json& j);
AxiomReport report_from_json(const json& j);
GradedDims dims_from_json(const json& j);
BraidedLieAlgebra braided_lie_from_json(const json& j);

}  // namespace qlie
