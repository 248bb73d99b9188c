#pragma once

#include "qlie/linalg.hpp"
#include "qlie/ncpoly.hpp"
#include "qlie/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlie {

struct BraidedLieAlgebra;
struct QuantumLieAlgebra;

class DegenerateRelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DegreeTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NoStabilization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotCentral : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generators and relations of degree <= 2. Every relation has a nonzero degree-2 part.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<NCPoly> relations;

    Presentation() = default;
    Presentation(std::vector<std::string> gens, std::vector<NCPoly> rels);

    int size() const { return int(generators.size()); }
    bool homogeneous() const;
    // Relations as vectors in T_{<=2}.
    std::vector<SparseVec> relation_vectors() const;
    std::string str() const;
};

struct GradedDims {
    std::vector<std::pair<int, uint64_t>> dims;
    int truncation = 0;
    int slack = -1;  // filtered computations only
    std::vector<uint64_t> values() const;
};

struct TruncationOptions {
    int slack_start = 1;
    int slack_ceiling = 3;
    uint64_t max_words = 400000;
};

Presentation enveloping_presentation(const BraidedLieAlgebra& L);
Presentation u_presentation(const QuantumLieAlgebra& g);

GradedDims graded_dims(const Presentation& p, int d_max, const TruncationOptions& opt = {});
GradedDims filtered_dims(const Presentation& p, int d_max, const TruncationOptions& opt = {});
bool ideal_member(const Presentation& p, const NCPoly& elt, int d, const TruncationOptions& opt = {});
// elt of degree <= 1: every commutator with a generator lies in the relation span.
bool is_central(const Presentation& p, const NCPoly& elt);

// Rewrites p in the basis {c} + complement (default: the generators other than the last
// one on which c is supported) and substitutes c -> value. Throws NotCentral, or
// DegenerateRelation when a relation loses its degree-2 part.
Presentation central_quotient(const Presentation& p, const NCPoly& c, const Scalar& value,
                              const std::vector<NCPoly>& complement = {},
                              const std::vector<std::string>& labels = {});

// The three relations of B_red(sl_q(2)) in the basis h, X, Y for a given lambda.
std::vector<NCPoly> witten_relations(const Scalar& q, const Scalar& lambda);
// p must be on generators h, X, Y. Span equality of relation sets, per displayed relation.
AxiomReport witten_check(const Presentation& p, const Scalar& q, const Scalar& lambda);
// Rescales the generators by mu, takes q -> 1 and compares with the sl_2 relations
// [h,X] = 2X, [h,Y] = -2Y, [X,Y] = h.
AxiomReport witten_classical_limit(const Presentation& p);

Presentation quadratic_dual(const Presentation& p);
bool same_relations(const Presentation& a, const Presentation& b);

}  // namespace qlie
