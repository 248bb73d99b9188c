#pragma once

#include "qlie/present.hpp"
#include "qlie/report.hpp"
#include "qlie/scalar.hpp"
#include "qlie/tensor.hpp"

#include <optional>
#include <string>

namespace qlie {

class ZeroParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bi-invertible 2 -> 2 tensor with its inverse and second inverse computed once.
// R^i_k^j_l is stored as entry [(i,j),(k,l)].
struct RMatrix {
    Tensor R, Rinv, Rtilde;
    Scalar q = Scalar::q();
    std::optional<MultiParams> params;

    int n() const { return R.dim(); }
    // Throws Singular if either inverse is missing.
    static RMatrix from_tensor(const Tensor& r, const Scalar& q = Scalar::q(),
                               std::optional<MultiParams> params = std::nullopt);
};

Scalar M_entry(const MultiParams& p, int i, int j);  // 1-based
Tensor multiparam_tensor(const MultiParams& p);
RMatrix multiparam_R(const MultiParams& p);

// "multiparam:n=3;q=7/5;r12=q;r13=2" (unset r_ij stay symbolic, a value "q" means the
// chosen q) or "standard:n=2".
MultiParams parse_multiparams(const std::string& spec);

// Yang-Baxter R12 R13 R23 = R23 R13 R12, Hecke for tau o R, bi-invertibility, and for
// the multiparameter family the two explicit inverse formulas.
AxiomReport verify_rmatrix(const RMatrix& r);
AxiomReport verify_M_lemma(const MultiParams& p);

// Entries of R t1 t2 - t2 t1 R on generators t^i_j (index i*n + j), zero entries dropped.
Presentation frt_relations(const RMatrix& r);

}  // namespace qlie
