#include "qlie/tensor.hpp"
#include "qlie/linalg.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace qlie {

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Scalar(1), b); }

SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero() || b.empty()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Scalar s = a[i].second + c * b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const SparseVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out = a;
    for (auto& e : out) e.second *= c;
    return out;
}

Scalar sv_get(const SparseVec& a, uint32_t i) {
    auto it = std::lower_bound(a.begin(), a.end(), i, [](const auto& e, uint32_t k) { return e.first < k; });
    if (it != a.end() && it->first == i) return it->second;
    return Scalar();
}

SparseVec sv_from_map(const std::map<uint32_t, Scalar>& m) {
    SparseVec v;
    for (auto& [k, s] : m)
        if (!s.is_zero()) v.emplace_back(k, s);
    return v;
}

uint32_t ipow(uint32_t base, int e) {
    uint64_t r = 1;
    for (int k = 0; k < e; ++k) {
        r *= base;
        if (r > 0xffffffffull) throw std::overflow_error("tensor power too large");
    }
    return uint32_t(r);
}

std::vector<int> unpack(uint32_t packed, int dim, int arity) {
    std::vector<int> idx(arity);
    for (int k = arity - 1; k >= 0; --k) {
        idx[k] = int(packed % dim);
        packed /= dim;
    }
    return idx;
}

uint32_t pack(const std::vector<int>& idx, int dim) {
    uint32_t p = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim) throw std::out_of_range("tensor index out of range");
        p = p * dim + uint32_t(i);
    }
    return p;
}

Tensor::Tensor(int dim, int in_arity, int out_arity) : d_(dim), a_(in_arity), b_(out_arity) {
    if (dim < 1 || in_arity < 0 || out_arity < 0) throw std::invalid_argument("bad tensor shape");
    rows_ = ipow(dim, out_arity);
    cols_.resize(ipow(dim, in_arity));
}

Scalar Tensor::at(const std::vector<int>& out, const std::vector<int>& in) const {
    if (int(out.size()) != b_ || int(in.size()) != a_) throw ArityMismatch("index arity mismatch");
    return at(qlie::pack(out, d_), qlie::pack(in, d_));
}

size_t Tensor::nnz() const {
    size_t n = 0;
    for (auto& c : cols_) n += c.size();
    return n;
}

uint32_t Tensor::pack(const std::vector<int>& idx) const { return qlie::pack(idx, d_); }

Tensor Tensor::identity(int dim, int arity) {
    Tensor t(dim, arity, arity);
    for (uint32_t c = 0; c < t.cols(); ++c) t.cols_[c] = {{c, Scalar(1)}};
    return t;
}

Tensor Tensor::flip(int dim, int a, int b) {
    Tensor t(dim, a + b, a + b);
    uint32_t da = ipow(dim, a), db = ipow(dim, b);
    for (uint32_t x = 0; x < da; ++x)
        for (uint32_t y = 0; y < db; ++y) t.cols_[x * db + y] = {{y * da + x, Scalar(1)}};
    return t;
}

Tensor Tensor::vector(int dim, int arity, const SparseVec& v) {
    Tensor t(dim, 0, arity);
    t.cols_[0] = v;
    return t;
}

Tensor Tensor::from_columns(int dim, int in_arity, int out_arity, std::vector<SparseVec> cols) {
    Tensor t(dim, in_arity, out_arity);
    if (cols.size() != t.cols_.size()) throw DimensionMismatch("column count mismatch");
    for (auto& c : cols)
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].first >= t.rows_ || c[k].second.is_zero() || (k && c[k - 1].first >= c[k].first))
                throw std::invalid_argument("malformed sparse column");
        }
    t.cols_ = std::move(cols);
    return t;
}

Tensor Tensor::from_function(int dim, int in_arity, int out_arity,
                             const std::function<SparseVec(uint32_t)>& column_of) {
    Tensor t(dim, in_arity, out_arity);
    parallel_for(t.cols_.size(), [&](size_t c) { t.cols_[c] = column_of(uint32_t(c)); });
    return t;
}

SparseVec Tensor::apply(const SparseVec& v) const {
    std::map<uint32_t, Scalar> acc;
    for (auto& [c, s] : v) {
        if (c >= cols_.size()) throw DimensionMismatch("vector index out of range");
        for (auto& [r, t] : cols_[c]) acc[r] += s * t;
    }
    return sv_from_map(acc);
}

Tensor Tensor::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
    Tensor t(d_, a_, b_);
    parallel_for(cols_.size(), [&](size_t c) {
        SparseVec out;
        for (auto& [r, s] : cols_[c]) {
            Scalar v = f(s);
            if (!v.is_zero()) out.emplace_back(r, std::move(v));
        }
        t.cols_[c] = std::move(out);
    });
    return t;
}

Tensor Tensor::scaled(const Scalar& c) const {
    return map_scalars([&](const Scalar& s) { return s * c; });
}

Tensor Tensor::partial_transpose2() const {
    if (a_ != 2 || b_ != 2) throw ArityMismatch("partial transpose needs a 2 -> 2 tensor");
    TensorBuilder b(d_, 2, 2);
    for (uint32_t c = 0; c < cols(); ++c) {
        auto kl = unpack(c, d_, 2);
        for (auto& [r, s] : cols_[c]) {
            auto ij = unpack(r, d_, 2);
            b.add({ij[0], kl[1]}, {kl[0], ij[1]}, s);
        }
    }
    return b.build();
}

Tensor Tensor::transpose() const {
    TensorBuilder b(d_, b_, a_);
    for (uint32_t c = 0; c < cols(); ++c)
        for (auto& [r, s] : cols_[c]) b.add(c, r, s);
    return b.build();
}

static void check_same_shape(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("tensor dimension mismatch");
    if (a.in_arity() != b.in_arity() || a.out_arity() != b.out_arity()) throw ArityMismatch("tensor arity mismatch");
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b);
    Tensor t(a.d_, a.a_, a.b_);
    for (uint32_t c = 0; c < a.cols(); ++c) t.cols_[c] = sv_add(a.cols_[c], b.cols_[c]);
    return t;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b);
    Tensor t(a.d_, a.a_, a.b_);
    for (uint32_t c = 0; c < a.cols(); ++c) t.cols_[c] = sv_axpy(a.cols_[c], Scalar(-1), b.cols_[c]);
    return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.d_ != b.d_ || a.a_ != b.a_ || a.b_ != b.b_) return false;
    for (uint32_t c = 0; c < a.cols(); ++c) {
        auto& x = a.cols_[c];
        auto& y = b.cols_[c];
        if (x.size() != y.size()) return false;
        for (size_t k = 0; k < x.size(); ++k)
            if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
    }
    return true;
}

TensorBuilder::TensorBuilder(int dim, int in_arity, int out_arity)
    : d_(dim), a_(in_arity), b_(out_arity), cols_(ipow(dim, in_arity)) {}

void TensorBuilder::add(uint32_t row, uint32_t col, const Scalar& v) {
    if (v.is_zero()) return;
    if (col >= cols_.size() || row >= ipow(d_, b_)) throw std::out_of_range("tensor entry out of range");
    cols_[col][row] += v;
}

uint32_t TensorBuilder::pack_out(const std::vector<int>& out) const {
    if (int(out.size()) != b_) throw ArityMismatch("output index arity mismatch");
    return pack(out, d_);
}

uint32_t TensorBuilder::pack_in(const std::vector<int>& in) const {
    if (int(in.size()) != a_) throw ArityMismatch("input index arity mismatch");
    return pack(in, d_);
}

void TensorBuilder::add(const std::vector<int>& out, const std::vector<int>& in, const Scalar& v) {
    add(pack_out(out), pack_in(in), v);
}

Tensor TensorBuilder::build() const {
    Tensor t(d_, a_, b_);
    for (size_t c = 0; c < cols_.size(); ++c) t.cols_[c] = sv_from_map(cols_[c]);
    return t;
}

Tensor compose(const Tensor& f, const Tensor& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("compose: dimension mismatch");
    if (f.in_arity() != g.out_arity()) throw ArityMismatch("compose: arity mismatch");
    return Tensor::from_function(f.dim(), g.in_arity(), f.out_arity(), [&](uint32_t c) {
        const SparseVec& gc = g.column(c);
        if (gc.size() == 1 && gc[0].second.is_one()) return f.column(gc[0].first);
        std::map<uint32_t, Scalar> acc;
        for (auto& [k, s] : gc)
            for (auto& [r, t] : f.column(k)) acc[r] += s * t;
        return sv_from_map(acc);
    });
}

Tensor chain(std::initializer_list<Tensor> maps) {
    if (maps.size() == 0) throw std::invalid_argument("empty chain");
    auto it = std::rbegin(maps);
    Tensor acc = *it++;
    for (; it != std::rend(maps); ++it) acc = compose(*it, acc);
    return acc;
}

Tensor tensor(const Tensor& f, const Tensor& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("tensor: dimension mismatch");
    uint32_t gc = g.cols(), gr = g.rows();
    return Tensor::from_function(f.dim(), f.in_arity() + g.in_arity(), f.out_arity() + g.out_arity(),
                                 [&](uint32_t c) {
                                     const SparseVec& x = f.column(c / gc);
                                     const SparseVec& y = g.column(c % gc);
                                     SparseVec out;
                                     out.reserve(x.size() * y.size());
                                     for (auto& [r1, s1] : x)
                                         for (auto& [r2, s2] : y) out.emplace_back(r1 * gr + r2, s1 * s2);
                                     return out;
                                 });
}

Tensor tensor(std::initializer_list<Tensor> maps) {
    if (maps.size() == 0) throw std::invalid_argument("empty tensor product");
    auto it = maps.begin();
    Tensor acc = *it++;
    for (; it != maps.end(); ++it) acc = tensor(acc, *it);
    return acc;
}

Tensor inverse(const Tensor& t) {
    if (t.in_arity() != t.out_arity()) throw ArityMismatch("inverse of a non-square tensor");
    uint32_t n = t.cols();
    Eliminator e(true);
    for (uint32_t c = 0; c < n; ++c)
        if (!e.insert(t.column(c), {{c, Scalar(1)}})) throw Singular("tensor is singular");
    // Each stored row is a unit vector e_p with tag x satisfying T x = e_p.
    std::vector<SparseVec> cols(n);
    for (auto& row : e.rows()) cols[row.pivot] = row.tag;
    return Tensor::from_columns(t.dim(), t.in_arity(), t.out_arity(), std::move(cols));
}

Tensor solve_right_inverse(const Tensor& t, InversePattern pattern) {
    if (pattern == InversePattern::Ordinary) return inverse(t);
    Tensor pt = t.partial_transpose2();
    try {
        return inverse(pt).partial_transpose2();
    } catch (const Singular&) {
        throw Singular("no second inverse: the partial transpose is singular");
    }
}

std::string word_label(uint32_t packed, int dim, int arity, const std::vector<std::string>& labels) {
    if (arity == 0) return "1";
    std::string s;
    for (int i : unpack(packed, dim, arity)) {
        if (!s.empty()) s += "(x)";
        s += labels.empty() ? "e" + std::to_string(i + 1) : labels.at(i);
    }
    return s;
}

std::optional<std::string> first_difference(const Tensor& a, const Tensor& b, const std::vector<std::string>& labels) {
    check_same_shape(a, b);
    for (uint32_t c = 0; c < a.cols(); ++c) {
        SparseVec d = sv_axpy(a.column(c), Scalar(-1), b.column(c));
        if (d.empty()) continue;
        uint32_t r = d[0].first;
        return "input " + word_label(c, a.dim(), a.in_arity(), labels) + ": coefficient of " +
               word_label(r, a.dim(), a.out_arity(), labels) + " is " + a.at(r, c).str() + " vs " +
               b.at(r, c).str();
    }
    return std::nullopt;
}

int worker_threads() {
    const char* env = std::getenv("QLIE_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    int threads = worker_threads();
    if (threads <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (size_t i = size_t(t); i < n; i += size_t(threads)) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace qlie
