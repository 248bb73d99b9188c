#pragma once

#include "qlie/tensor.hpp"

#include <vector>

namespace qlie {

// Incremental Gauss-Jordan elimination over Q(q, r_ij). Stored rows are fully reduced
// against each other, which lets the pivot of a new row be chosen freely (lightest
// entry first). Each row carries a tag recording it as a combination of the inputs.
class Eliminator {
public:
    explicit Eliminator(bool track_tags = false) : track_(track_tags) {}

    // Reduces v against the stored rows. Returns true if v was independent (and
    // stores it); otherwise returns false and, if tags are tracked, `dependency` holds
    // the combination of earlier inputs (plus this one) that vanishes.
    bool insert(const SparseVec& v, const SparseVec& tag = {}, SparseVec* dependency = nullptr);
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    size_t rank() const { return rows_.size(); }

    struct Row {
        uint32_t pivot;
        SparseVec v, tag;
    };
    const std::vector<Row>& rows() const { return rows_; }

private:
    bool track_;
    std::vector<Row> rows_;
    std::map<uint32_t, size_t> pivot_row_;
};

size_t rank_of(const std::vector<SparseVec>& vecs);
// Basis of the span (rows of the reduced echelon form, sorted by pivot).
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vecs);
bool span_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b);
bool span_contains(const std::vector<SparseVec>& span, const std::vector<SparseVec>& vecs);
// Kernel and image of a tensor viewed as a matrix.
std::vector<SparseVec> kernel(const Tensor& t);
std::vector<SparseVec> image(const Tensor& t);
size_t rank_of(const Tensor& t);
// Basis of the annihilator of span(vecs) in the dual of a space of dimension `dim`,
// using the standard pairing of basis words.
std::vector<SparseVec> orthogonal_complement(const std::vector<SparseVec>& vecs, uint32_t dim);

}  // namespace qlie
