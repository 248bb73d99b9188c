#pragma once

#include "qlie/report.hpp"
#include "qlie/rmatrix.hpp"
#include "qlie/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlie {

// Structural failures that carry a witness in what().
class NotAQuantumLieAlgebra : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class BackgroundBraidingRequired : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotSplit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class ZeroCounit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotTriangular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class CrossBraidingNotSymmetric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Vector space g with braiding sigma and bracket; delta and psi are optional.
struct QuantumLieAlgebra {
    std::vector<std::string> labels;
    Tensor sigma;    // 2 -> 2
    Tensor bracket;  // 2 -> 1
    std::optional<Tensor> delta;  // 1 -> 2
    std::optional<Tensor> psi;    // 2 -> 2

    int dim() const { return int(labels.size()); }
};

// Coalgebra with bracket and background braiding. ups is the canonical braiding; it is
// derived from the other maps unless a construction supplies it independently.
struct BraidedLieAlgebra {
    std::vector<std::string> labels;
    Tensor delta;    // 1 -> 2
    Tensor eps;      // 1 -> 0
    Tensor bracket;  // 2 -> 1
    Tensor psi;      // 2 -> 2
    Tensor ups;      // 2 -> 2

    int dim() const { return int(labels.size()); }
    static BraidedLieAlgebra from_structure(std::vector<std::string> labels, Tensor delta, Tensor eps,
                                            Tensor bracket, Tensor psi);
};

// ([ , ] (x) id)(id (x) psi)(delta (x) id)
Tensor canonical_braiding(const Tensor& delta, const Tensor& bracket, const Tensor& psi);
Scalar counit(const BraidedLieAlgebra& L, const SparseVec& x);
SparseVec bracket_of(const Tensor& bracket, const SparseVec& x, const SparseVec& y);

AxiomReport check_quantum_axioms(const QuantumLieAlgebra& g);
// t~sigma on k gamma + g, gamma first.
Tensor extended_sigma(const QuantumLieAlgebra& g);
BraidedLieAlgebra extend(const QuantumLieAlgebra& g);
AxiomReport check_braided_axioms(const BraidedLieAlgebra& L);

// n^2-dimensional algebra on X^i_j (index i*n + j), with ups from the R-matrix contraction.
BraidedLieAlgebra matrix_braided_lie(const RMatrix& r);
std::vector<std::string> matrix_labels(int n);
// Independent checks of the matrix construction: the suffix identities for ups and the
// bracket, the canonical-braiding form of ups, and the closed bracket formula.
AxiomReport verify_matrix_construction(const BraidedLieAlgebra& L, const RMatrix& r);

// sum_i q^{2i} X^i_i
SparseVec q_trace(int n, const Scalar& q);
// Rt^j_a^a_i X^i_j
SparseVec q_trace_contraction(const RMatrix& r);
// Scalar s with a = s b, or nullopt when a is not a multiple of b.
std::optional<Scalar> proportionality(const SparseVec& a, const SparseVec& b);

struct SplitData {
    std::vector<std::string> labels;  // c followed by the ker(eps) basis
    std::vector<SparseVec> basis;     // the same in original coordinates
    SparseVec c;
    Tensor omega;  // on ker(eps), 2 -> 2
    Tensor bracket;  // on ker(eps), 2 -> 1
    Tensor rho;    // ker(eps) -> ker(eps)^2
    Tensor theta;  // ker(eps) -> ker(eps)
    std::optional<Scalar> lambda;
    AxiomReport report;
};
// complement: optional ker(eps) basis (defaults to the kernel of eps).
SplitData split_decompose(const BraidedLieAlgebra& L, const SparseVec& c, bool generalized_jacobi = true,
                          const std::vector<SparseVec>& complement = {},
                          const std::vector<std::string>& complement_labels = {});
// c = utr / eps(utr); throws ZeroCounit when eps(utr) = 0.
SparseVec split_element(const BraidedLieAlgebra& L, const SparseVec& utr);

// Centrality of utr, then the Cartan, weight, root and ladder tables for
// L = matrix_braided_lie(multiparam_R(p)). H_sign multiplies every H_i (negative controls).
AxiomReport verify_sl_structure(const BraidedLieAlgebra& L, const MultiParams& p, const Scalar& H_sign = Scalar(1));
// Each labelled family (i)..(iii.f) lies in Im(id - Upsilon), and together they span it.
AxiomReport verify_relation_table(const BraidedLieAlgebra& L, const MultiParams& p);

QuantumLieAlgebra triangular_qla(const RMatrix& r);
// cross12: L1 (x) L2 -> L2 (x) L1 and cross21: L2 (x) L1 -> L1 (x) L2, as maps on the
// direct sum space of the respective blocks.
BraidedLieAlgebra direct_sum(const BraidedLieAlgebra& L1, const BraidedLieAlgebra& L2, const Tensor& cross12,
                             const Tensor& cross21);
// Flip-type cross braiding between spaces of dimensions a and b, scaled by s.
Tensor block_flip(int a, int b, const Scalar& s = Scalar(1));
BraidedLieAlgebra trivial_extension(const BraidedLieAlgebra& L);
AxiomReport goodness_check(const BraidedLieAlgebra& L, const SparseVec& unit);

QuantumLieAlgebra classical_sl2();
QuantumLieAlgebra classical_abelian(int n);
BraidedLieAlgebra one_dimensional();

}  // namespace qlie
