#include "qlie/present.hpp"
#include "qlie/lie.hpp"

#include <set>

namespace qlie {

Presentation::Presentation(std::vector<std::string> gens, std::vector<NCPoly> rels)
    : generators(std::move(gens)), relations(std::move(rels)) {
    for (auto& r : relations) {
        if (r.degree() > 2) throw std::invalid_argument("relation of degree > 2");
        if (r.part(2).is_zero()) throw DegenerateRelation("relation without degree-2 part: " + r.str(generators));
        for (auto& [w, c] : r.terms())
            for (int g : w)
                if (g < 0 || g >= size()) throw std::out_of_range("relation uses an unknown generator");
    }
}

bool Presentation::homogeneous() const {
    for (auto& r : relations)
        if (!(r.part(2) == r)) return false;
    return true;
}

std::vector<SparseVec> Presentation::relation_vectors() const {
    WordSpace ws{size(), 2};
    std::vector<SparseVec> out;
    for (auto& r : relations) out.push_back(ws.embed(r));
    return out;
}

std::string Presentation::str() const {
    std::string s;
    for (auto& r : relations) s += r.str(generators) + " = 0\n";
    return s;
}

Presentation enveloping_presentation(const BraidedLieAlgebra& L) {
    int N = L.dim();
    std::vector<NCPoly> rels;
    WordSpace ws{N, 2};
    Eliminator e;
    for (uint32_t col = 0; col < uint32_t(N) * N; ++col) {
        NCPoly r = NCPoly::word({int(col / N), int(col % N)});
        for (auto& [row, v] : L.ups.column(col)) r.add({int(row / N), int(row % N)}, -v);
        if (!r.is_zero() && e.insert(ws.embed(r))) rels.push_back(r);
    }
    return Presentation(L.labels, rels);
}

bool is_central(const Presentation& p, const NCPoly& elt) {
    if (elt.degree() > 1) throw std::invalid_argument("is_central expects an element of degree <= 1");
    WordSpace ws{p.size(), 2};
    std::vector<SparseVec> comm;
    for (int g = 0; g < p.size(); ++g) {
        NCPoly x = NCPoly::gen(g);
        SparseVec v = ws.embed(elt * x - x * elt);
        if (!v.empty()) comm.push_back(v);
    }
    return span_contains(p.relation_vectors(), comm);
}

std::vector<uint64_t> GradedDims::values() const {
    std::vector<uint64_t> v;
    for (auto& [d, x] : dims) v.push_back(x);
    return v;
}

namespace {

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// All words of length k over n letters, in deg-lex order.
std::vector<Word> words_of_length(int n, int k) {
    std::vector<Word> out;
    uint64_t total = ipow(uint64_t(n), k);
    out.reserve(total);
    for (uint64_t x = 0; x < total; ++x) {
        Word w(k);
        uint64_t y = x;
        for (int i = k - 1; i >= 0; --i) {
            w[i] = int(y % n);
            y /= n;
        }
        out.push_back(std::move(w));
    }
    return out;
}

Word concat(const Word& a, const Word& b, const Word& c) {
    Word w;
    w.reserve(a.size() + b.size() + c.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    w.insert(w.end(), c.begin(), c.end());
    return w;
}

SparseVec sandwich(const WordSpace& ws, const Word& u, const NCPoly& r, const Word& v) {
    std::map<uint32_t, Scalar> m;
    for (auto& [w, c] : r.terms()) m[ws.index(concat(u, w, v))] += c;
    return sv_from_map(m);
}

// Span of u r v with deg u + deg v <= top - 2, inside T_{<=top}.
Eliminator truncated_ideal(const Presentation& p, int top, const TruncationOptions& opt) {
    WordSpace ws{p.size(), top};
    if (ws.size() > opt.max_words)
        throw DegreeTooLarge("word space T_<=" + std::to_string(top) + " has " + std::to_string(ws.size()) +
                             " words, above the bound " + std::to_string(opt.max_words));
    Eliminator e;
    for (int k = 0; k <= top - 2; ++k)
        for (int a = 0; a <= k; ++a) {
            auto us = words_of_length(p.size(), a), vs = words_of_length(p.size(), k - a);
            for (auto& r : p.relations)
                for (auto& u : us)
                    for (auto& v : vs) e.insert(sandwich(ws, u, r, v));
        }
    return e;
}

// dim(W cap T_{<=d}) for d = 0..d_max, W given by its reduced rows in T_{<=top}.
std::vector<uint64_t> low_part_dims(const Eliminator& w, const WordSpace& ws, int d_max) {
    std::vector<uint64_t> out;
    for (int d = 0; d <= d_max; ++d) {
        uint32_t cut = uint32_t(ws.offset(d + 1));
        Eliminator high;
        for (auto& row : w.rows()) {
            SparseVec hv;
            for (auto& [k, c] : row.v)
                if (k >= cut) hv.emplace_back(k, c);
            if (!hv.empty()) high.insert(hv);
        }
        out.push_back(w.rank() - high.rank());
    }
    return out;
}

int valuation_at_one(Poly p) {
    Poly t = Poly::variable(var_q()) - Poly(1);
    Bindings one{{var_q(), Scalar(1)}};
    int k = 0;
    while (!p.is_zero() && specialize(Scalar::from_poly(p), one).is_zero()) {
        p = divexact(p, t);
        ++k;
    }
    return k;
}

int valuation_at_one(const Scalar& s) {
    if (s.is_zero()) return std::numeric_limits<int>::max();
    if (s.is_rational()) return 0;
    return valuation_at_one(s.num()) - valuation_at_one(s.den());
}

}  // namespace

Presentation u_presentation(const QuantumLieAlgebra& g) {
    int N = g.dim();
    std::vector<NCPoly> rels;
    for (uint32_t col = 0; col < uint32_t(N) * N; ++col) {
        NCPoly r = NCPoly::word({int(col / N), int(col % N)});
        for (auto& [row, v] : g.sigma.column(col)) r.add({int(row / N), int(row % N)}, -v);
        for (auto& [row, v] : g.bracket.column(col)) r.add({int(row)}, -v);
        if (!r.is_zero()) rels.push_back(r);
    }
    return Presentation(g.labels, rels);
}

GradedDims graded_dims(const Presentation& p, int d_max, const TruncationOptions& opt) {
    if (!p.homogeneous()) throw std::invalid_argument("graded_dims needs a homogeneous presentation");
    int N = p.size();
    GradedDims out;
    out.truncation = d_max;
    std::vector<SparseVec> S;
    for (auto& r : p.relations) {
        std::map<uint32_t, Scalar> m;
        for (auto& [w, c] : r.terms()) m[uint32_t(w[0] * N + w[1])] += c;
        S.push_back(sv_from_map(m));
    }
    S = span_basis(S);
    std::vector<SparseVec> prev;  // basis of I_{d-1} in V^{(x)(d-1)}
    for (int d = 0; d <= d_max; ++d) {
        uint64_t total = ipow(uint64_t(N), d);
        if (total > opt.max_words)
            throw DegreeTooLarge("degree " + std::to_string(d) + " has " + std::to_string(total) + " words");
        if (d < 2) {
            out.dims.push_back({d, total});
            continue;
        }
        // I_d = I_{d-1} (x) V + V^{(x)(d-2)} (x) S
        Eliminator e;
        for (auto& b : prev)
            for (int x = 0; x < N; ++x) {
                SparseVec v;
                for (auto& [k, c] : b) v.emplace_back(k * uint32_t(N) + uint32_t(x), c);
                e.insert(v);
            }
        uint32_t shift = uint32_t(N) * uint32_t(N);
        for (uint64_t u = 0; u < ipow(uint64_t(N), d - 2); ++u)
            for (auto& s : S) {
                SparseVec v;
                for (auto& [k, c] : s) v.emplace_back(uint32_t(u) * shift + k, c);
                e.insert(v);
            }
        prev.clear();
        for (auto& row : e.rows()) prev.push_back(row.v);
        out.dims.push_back({d, total - e.rank()});
    }
    return out;
}

GradedDims filtered_dims(const Presentation& p, int d_max, const TruncationOptions& opt) {
    int N = p.size();
    std::vector<std::vector<uint64_t>> history;
    for (int s = opt.slack_start; s <= opt.slack_ceiling; ++s) {
        int top = d_max + s;
        Eliminator w = truncated_ideal(p, top, opt);
        history.push_back(low_part_dims(w, WordSpace{N, top}, d_max));
        size_t h = history.size();
        if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3]) {
            GradedDims out;
            out.truncation = d_max;
            out.slack = s - 2;
            WordSpace ws{N, d_max};
            uint64_t prev = 0;
            for (int d = 0; d <= d_max; ++d) {
                uint64_t f = ws.offset(d + 1) - history.back()[d];
                out.dims.push_back({d, f - prev});
                prev = f;
            }
            return out;
        }
    }
    throw NoStabilization("filtered dimensions not stable up to slack " + std::to_string(opt.slack_ceiling));
}

bool ideal_member(const Presentation& p, const NCPoly& elt, int d, const TruncationOptions& opt) {
    if (elt.is_zero()) return true;
    if (elt.degree() > d) throw std::invalid_argument("element degree exceeds the bound");
    int N = p.size();
    std::vector<std::vector<uint64_t>> history;
    for (int s = opt.slack_start; s <= opt.slack_ceiling; ++s) {
        int top = d + s;
        Eliminator w = truncated_ideal(p, top, opt);
        if (w.contains(WordSpace{N, top}.embed(elt))) return true;
        history.push_back(low_part_dims(w, WordSpace{N, top}, d));
        size_t h = history.size();
        if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3]) return false;
    }
    throw NoStabilization("membership undecided up to slack " + std::to_string(opt.slack_ceiling));
}

Presentation central_quotient(const Presentation& p, const NCPoly& c, const Scalar& value,
                              const std::vector<NCPoly>& complement, const std::vector<std::string>& labels) {
    int N = p.size();
    if (c.is_zero() || !(c.part(1) == c))
        throw std::invalid_argument("central_quotient expects a homogeneous degree-1 element");
    if (!is_central(p, c)) throw NotCentral("element is not central: " + c.str(p.generators));

    std::vector<NCPoly> comp = complement;
    std::vector<std::string> names = labels;
    if (comp.empty()) {
        int last = -1;
        for (auto& [w, x] : c.terms()) last = std::max(last, w[0]);
        for (int g = 0; g < N; ++g)
            if (g != last) {
                comp.push_back(NCPoly::gen(g));
                if (labels.empty()) names.push_back(p.generators[g]);
            }
    }
    if (int(comp.size()) != N - 1) throw std::invalid_argument("complement must have N-1 elements");
    if (names.empty())
        for (int k = 1; k < N; ++k) names.push_back("k" + std::to_string(k));
    if (names.size() != comp.size()) throw std::invalid_argument("one label per complement element");

    // Columns of P are the new basis vectors in old coordinates; P^-1 gives old generators.
    std::vector<SparseVec> cols;
    auto coords = [&](const NCPoly& e) {
        if (!(e.part(1) == e)) throw std::invalid_argument("basis elements must be homogeneous of degree 1");
        std::map<uint32_t, Scalar> m;
        for (auto& [w, x] : e.terms()) m[uint32_t(w[0])] += x;
        return sv_from_map(m);
    };
    cols.push_back(coords(c));
    for (auto& e : comp) cols.push_back(coords(e));
    Tensor Pinv = inverse(Tensor::from_columns(N, 1, 1, cols));
    std::vector<NCPoly> images(N);
    for (int g = 0; g < N; ++g)
        for (auto& [j, x] : Pinv.column(uint32_t(g)))
            images[g] = images[g] + (j == 0 ? NCPoly(x * value) : NCPoly::gen(int(j) - 1, x));

    WordSpace ws{N - 1, 2};
    Eliminator all, top;
    std::vector<NCPoly> rels;
    for (auto& r : p.relations) {
        NCPoly t = r.substitute(images);
        if (t.is_zero()) continue;
        if (all.insert(ws.embed(t))) {
            rels.push_back(t);
            top.insert(ws.embed(t.part(2)));
        }
    }
    if (all.rank() != top.rank())
        throw DegenerateRelation("the quotient relations have a combination without degree-2 part (" +
                                 std::to_string(all.rank() - top.rank()) + " dimensional)");
    return Presentation(names, rels);
}

std::vector<NCPoly> witten_relations(const Scalar& q, const Scalar& lambda) {
    NCPoly h = NCPoly::gen(0), X = NCPoly::gen(1), Y = NCPoly::gen(2);
    Scalar one(1), qm4 = q.pow(-4);
    return {
        (h * X).scaled(q.pow(-2)) - X * h - X.scaled(lambda * (one - qm4)),
        (h * Y).scaled(q * q) - Y * h + Y.scaled(lambda * q * q * (one - qm4)),
        X * Y - Y * X - (h * h).scaled((q * q - one) / (q * q + one)) - h.scaled(lambda * (one - q.pow(-2))),
    };
}

AxiomReport witten_check(const Presentation& p, const Scalar& q, const Scalar& lambda) {
    AxiomReport rep;
    if (p.size() != 3) {
        rep.add("generators h, X, Y", false, std::to_string(p.size()) + " generators");
        return rep;
    }
    auto rels = witten_relations(q, lambda);
    std::vector<SparseVec> span = p.relation_vectors(), want;
    WordSpace ws{3, 2};
    const char* names[] = {"q^-2 hX - Xh = lambda(1-q^-4) X", "q^2 hY - Yh = -lambda q^2(1-q^-4) Y",
                           "[X,Y] = (q^2-1)/(q^2+1) h^2 + lambda(1-q^-2) h"};
    for (int i = 0; i < 3; ++i) {
        want.push_back(ws.embed(rels[i]));
        bool in = span_contains(span, {want.back()});
        rep.add(names[i], in, in ? "" : "not implied by the quotient relations");
    }
    bool eq = span_equal(span, want);
    rep.add("no further relations", eq, eq ? "" : "relation span differs (rank " + std::to_string(rank_of(span)) + ")");
    return rep;
}

AxiomReport witten_classical_limit(const Presentation& p) {
    AxiomReport rep;
    Scalar mu = mu_of(Scalar::q());
    WordSpace ws{p.size(), 2};
    std::vector<NCPoly> images;
    for (int g = 0; g < p.size(); ++g) images.push_back(NCPoly::gen(g, mu));
    std::vector<SparseVec> scaled;
    for (auto& r : p.relations) scaled.push_back(ws.embed(r.substitute(images)));
    Bindings one{{var_q(), Scalar(1)}};
    std::vector<SparseVec> limit;
    for (auto& v : span_basis(scaled)) {
        int k = std::numeric_limits<int>::max();
        for (auto& [i, c] : v) k = std::min(k, valuation_at_one(c));
        Scalar f = (Scalar::q() - Scalar(1)).pow(-k);
        SparseVec lv;
        for (auto& [i, c] : v) {
            Scalar x = specialize(c * f, one);
            if (!x.is_zero()) lv.emplace_back(i, x);
        }
        limit.push_back(lv);
    }
    size_t r = rank_of(limit);
    size_t r0 = rank_of(scaled);
    rep.add("rank preserved at q = 1", r == r0, r == r0 ? "" : "rank " + std::to_string(r) + " at q = 1");
    NCPoly h = NCPoly::gen(0), X = NCPoly::gen(1), Y = NCPoly::gen(2);
    std::vector<SparseVec> sl2 = {ws.embed(h * X - X * h - X.scaled(Scalar(2))),
                                  ws.embed(h * Y - Y * h + Y.scaled(Scalar(2))), ws.embed(X * Y - Y * X - h)};
    rep.add("q -> 1 limit is sl_2: [h,X] = 2X, [h,Y] = -2Y, [X,Y] = h", span_equal(limit, sl2));
    return rep;
}

Presentation quadratic_dual(const Presentation& p) {
    if (!p.homogeneous()) throw std::invalid_argument("quadratic_dual needs a homogeneous presentation");
    int N = p.size();
    std::vector<SparseVec> S;
    for (auto& r : p.relations) {
        std::map<uint32_t, Scalar> m;
        for (auto& [w, c] : r.terms()) m[uint32_t(w[0] * N + w[1])] += c;
        S.push_back(sv_from_map(m));
    }
    std::vector<NCPoly> rels;
    for (auto& v : orthogonal_complement(S, uint32_t(N) * uint32_t(N))) {
        NCPoly r;
        for (auto& [k, c] : v) r.add({int(k / N), int(k % N)}, c);
        rels.push_back(r);
    }
    std::vector<std::string> gens;
    for (auto& g : p.generators) gens.push_back(g.size() > 1 && g.back() == '*' ? g.substr(0, g.size() - 1) : g + "*");
    return Presentation(gens, rels);
}

bool same_relations(const Presentation& a, const Presentation& b) {
    return a.size() == b.size() && span_equal(a.relation_vectors(), b.relation_vectors());
}

}  // namespace qlie
