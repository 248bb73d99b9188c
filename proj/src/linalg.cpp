#include "qlie/linalg.hpp"

#include <algorithm>

namespace qlie {

namespace {

// v - sum_k c_k * w_k, accumulated in one pass.
SparseVec subtract_combination(const SparseVec& v, const std::vector<std::pair<Scalar, const SparseVec*>>& terms) {
    if (terms.empty()) return v;
    if (terms.size() == 1) return sv_axpy(v, -terms[0].first, *terms[0].second);
    std::map<uint32_t, Scalar> acc;
    for (auto& [k, s] : v) acc.emplace(k, s);
    for (auto& [c, w] : terms)
        for (auto& [k, s] : *w) acc[k] -= c * s;
    return sv_from_map(acc);
}

}  // namespace

SparseVec Eliminator::reduce(const SparseVec& v) const {
    std::vector<std::pair<Scalar, const SparseVec*>> terms;
    for (auto& [k, s] : v) {
        auto it = pivot_row_.find(k);
        if (it != pivot_row_.end()) terms.emplace_back(s, &rows_[it->second].v);
    }
    return subtract_combination(v, terms);
}

bool Eliminator::insert(const SparseVec& v, const SparseVec& tag, SparseVec* dependency) {
    std::vector<std::pair<Scalar, const SparseVec*>> terms, tag_terms;
    for (auto& [k, s] : v) {
        auto it = pivot_row_.find(k);
        if (it == pivot_row_.end()) continue;
        terms.emplace_back(s, &rows_[it->second].v);
        if (track_) tag_terms.emplace_back(s, &rows_[it->second].tag);
    }
    SparseVec w = subtract_combination(v, terms);
    SparseVec t = track_ ? subtract_combination(tag, tag_terms) : SparseVec{};
    if (w.empty()) {
        if (dependency) *dependency = std::move(t);
        return false;
    }
    size_t best = 0, best_w = w[0].second.weight();
    for (size_t k = 1; k < w.size() && best_w > 1; ++k) {
        size_t wk = w[k].second.weight();
        if (wk < best_w) best = k, best_w = wk;
    }
    uint32_t p = w[best].first;
    Scalar inv = w[best].second.inverse();
    w = sv_scale(w, inv);
    if (track_) t = sv_scale(t, inv);
    for (auto& row : rows_) {
        Scalar c = sv_get(row.v, p);
        if (c.is_zero()) continue;
        row.v = sv_axpy(row.v, -c, w);
        if (track_) row.tag = sv_axpy(row.tag, -c, t);
    }
    pivot_row_[p] = rows_.size();
    rows_.push_back({p, std::move(w), std::move(t)});
    return true;
}

size_t rank_of(const std::vector<SparseVec>& vecs) {
    Eliminator e;
    for (auto& v : vecs) e.insert(v);
    return e.rank();
}

std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vecs) {
    Eliminator e;
    for (auto& v : vecs) e.insert(v);
    std::vector<Eliminator::Row> rows = e.rows();
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.pivot < b.pivot; });
    std::vector<SparseVec> out;
    for (auto& r : rows) out.push_back(r.v);
    return out;
}

bool span_contains(const std::vector<SparseVec>& span, const std::vector<SparseVec>& vecs) {
    Eliminator e;
    for (auto& v : span) e.insert(v);
    for (auto& v : vecs)
        if (!e.contains(v)) return false;
    return true;
}

bool span_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
    return span_contains(a, b) && span_contains(b, a);
}

std::vector<SparseVec> kernel(const Tensor& t) {
    Eliminator e(true);
    std::vector<SparseVec> out;
    for (uint32_t c = 0; c < t.cols(); ++c) {
        SparseVec dep;
        if (!e.insert(t.column(c), {{c, Scalar(1)}}, &dep)) out.push_back(std::move(dep));
    }
    return out;
}

std::vector<SparseVec> image(const Tensor& t) {
    std::vector<SparseVec> cols;
    for (uint32_t c = 0; c < t.cols(); ++c)
        if (!t.column(c).empty()) cols.push_back(t.column(c));
    return span_basis(cols);
}

size_t rank_of(const Tensor& t) {
    Eliminator e;
    for (uint32_t c = 0; c < t.cols(); ++c) e.insert(t.column(c));
    return e.rank();
}

std::vector<SparseVec> orthogonal_complement(const std::vector<SparseVec>& vecs, uint32_t dim) {
    Eliminator e;
    for (auto& v : vecs) e.insert(v);
    std::vector<bool> is_pivot(dim, false);
    for (auto& r : e.rows()) is_pivot.at(r.pivot) = true;
    std::vector<SparseVec> out;
    for (uint32_t j = 0; j < dim; ++j) {
        if (is_pivot[j]) continue;
        std::map<uint32_t, Scalar> f{{j, Scalar(1)}};
        for (auto& r : e.rows()) {
            Scalar c = sv_get(r.v, j);
            if (!c.is_zero()) f[r.pivot] -= c;
        }
        out.push_back(sv_from_map(f));
    }
    return out;
}

}  // namespace qlie
