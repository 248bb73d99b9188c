#pragma once

#include "qlie/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlie {

// Sparse vector: strictly increasing indices, no zero values.
using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
// a + c*b
SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Scalar& c);
Scalar sv_get(const SparseVec& a, uint32_t i);
SparseVec sv_from_map(const std::map<uint32_t, Scalar>& m);

class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class Singular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear map V^{(x)a} -> V^{(x)b}, dim V = d. Entry (row, col) is the coefficient of the
// output basis word `row` in the image of the input basis word `col`; words are packed
// row-major in base d with the first factor most significant. Indices are 0-based in
// the C++ API and 1-based in JSON.
class Tensor {
public:
    Tensor() = default;
    Tensor(int dim, int in_arity, int out_arity);

    int dim() const { return d_; }
    int in_arity() const { return a_; }
    int out_arity() const { return b_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return uint32_t(cols_.size()); }
    const SparseVec& column(uint32_t c) const { return cols_[c]; }
    Scalar at(uint32_t row, uint32_t col) const { return sv_get(cols_[col], row); }
    Scalar at(const std::vector<int>& out, const std::vector<int>& in) const;
    size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    static Tensor identity(int dim, int arity);
    // Swaps a block of `a` factors past a block of `b` factors.
    static Tensor flip(int dim, int a = 1, int b = 1);
    // Column vector (in_arity 0) and covector (out_arity 0) helpers.
    static Tensor vector(int dim, int arity, const SparseVec& v);
    static Tensor from_columns(int dim, int in_arity, int out_arity, std::vector<SparseVec> cols);
    static Tensor from_function(int dim, int in_arity, int out_arity,
                                const std::function<SparseVec(uint32_t)>& column_of);

    uint32_t pack(const std::vector<int>& idx) const;  // unused arity inferred from size
    SparseVec apply(const SparseVec& v) const;
    Tensor map_scalars(const std::function<Scalar(const Scalar&)>& f) const;
    Tensor scaled(const Scalar& c) const;
    // Reorders the tensor factors of both domain and codomain of a 2 -> 2 map so that
    // entry [(i,j),(k,l)] moves to [(i,l),(k,j)].
    Tensor partial_transpose2() const;
    Tensor transpose() const;  // as a matrix: swaps arities

    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor& a, const Tensor& b);
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
    int d_ = 0, a_ = 0, b_ = 0;
    uint32_t rows_ = 1;
    std::vector<SparseVec> cols_;
    friend class TensorBuilder;
};

class TensorBuilder {
public:
    TensorBuilder(int dim, int in_arity, int out_arity);
    void add(uint32_t row, uint32_t col, const Scalar& v);
    void add(const std::vector<int>& out, const std::vector<int>& in, const Scalar& v);
    Tensor build() const;
    uint32_t pack_out(const std::vector<int>& out) const;
    uint32_t pack_in(const std::vector<int>& in) const;

private:
    int d_, a_, b_;
    std::vector<std::map<uint32_t, Scalar>> cols_;
};

uint32_t ipow(uint32_t base, int e);
std::vector<int> unpack(uint32_t packed, int dim, int arity);
uint32_t pack(const std::vector<int>& idx, int dim);

// f o g
Tensor compose(const Tensor& f, const Tensor& g);
// Composition of a chain, applied right to left: chain({f, g, h}) = f o g o h.
Tensor chain(std::initializer_list<Tensor> maps);
Tensor tensor(const Tensor& f, const Tensor& g);
Tensor tensor(std::initializer_list<Tensor> maps);

// Matrix inverse of a square tensor (in_arity == out_arity).
Tensor inverse(const Tensor& t);

enum class InversePattern { Ordinary, Second };
// Ordinary: T^{-1}. Second: the tensor X with X^i_b^a_j T^b_k^l_a = delta^i_k delta^j_l,
// i.e. ((T^{t2})^{-1})^{t2}. Throws Singular.
Tensor solve_right_inverse(const Tensor& t, InversePattern pattern);

// Witness describing the first basis input on which a and b differ, or nullopt.
std::optional<std::string> first_difference(const Tensor& a, const Tensor& b,
                                            const std::vector<std::string>& labels = {});
std::string word_label(uint32_t packed, int dim, int arity, const std::vector<std::string>& labels = {});

// Threads used by data-parallel loops; read from QLIE_THREADS (default 1).
int worker_threads();
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace qlie
