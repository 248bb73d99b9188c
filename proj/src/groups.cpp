#include "qlie/groups.hpp"
#include "qlie/present.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qlie {

namespace {

using Perm = std::vector<int>;

std::string cycle_label(const Perm& p) {
    int n = int(p.size());
    std::vector<bool> seen(n);
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || p[i] == i) continue;
        s += "(";
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            s += std::to_string(j + 1);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

void check_class(const FiniteGroup& G, const std::vector<int>& C) {
    std::set<int> s(C.begin(), C.end());
    if (s.size() != C.size()) throw std::invalid_argument("calculus subset has repeated elements");
    for (int g : C) {
        if (g < 0 || g >= G.order()) throw std::out_of_range("calculus subset element out of range");
        if (g == G.identity()) throw ContainsIdentity("calculus subset contains the identity");
    }
    for (int g = 0; g < G.order(); ++g)
        for (int h : C)
            if (!s.count(G.conj(g, h)))
                throw NotAdInvariant(G.labels()[g] + " " + G.labels()[h] + " " + G.labels()[G.inv(g)] +
                                     " leaves the subset");
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table, int identity)
    : labels_(std::move(labels)), table_(std::move(table)), e_(identity) {
    int n = int(labels_.size());
    if (n == 0) throw InvalidGroup("empty group");
    if (int(table_.size()) != n) throw InvalidGroup("table has the wrong number of rows");
    for (auto& row : table_) {
        if (int(row.size()) != n) throw InvalidGroup("table row has the wrong length");
        for (int x : row)
            if (x < 0 || x >= n) throw InvalidGroup("table entry out of range");
    }
    if (e_ < 0 || e_ >= n) throw InvalidGroup("identity index out of range");
    for (int a = 0; a < n; ++a)
        if (table_[e_][a] != a || table_[a][e_] != a) throw InvalidGroup("identity fails on " + labels_[a]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InvalidGroup("not associative on " + labels_[a] + ", " + labels_[b] + ", " + labels_[c]);
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == e_ && table_[b][a] == e_) inv_[a] = b;
        if (inv_[a] < 0) throw InvalidGroup(labels_[a] + " has no inverse");
    }
}

int FiniteGroup::index_of(const std::string& label) const {
    for (int i = 0; i < order(); ++i)
        if (labels_[i] == label) return i;
    throw std::out_of_range("no group element " + label);
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric groups are built for n <= 5");
    std::vector<Perm> perms;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<Perm, int> index;
    for (int i = 0; i < int(perms.size()); ++i) index[perms[i]] = i;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(perms.size());
    for (auto& a : perms) labels.push_back(cycle_label(a));
    // (ab)(x) = a(b(x))
    for (size_t i = 0; i < perms.size(); ++i)
        for (auto& b : perms) {
            Perm c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[i][b[x]];
            table[i].push_back(index[c]);
        }
    return FiniteGroup(labels, table, 0);
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n);
    for (int a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
        for (int b = 0; b < n; ++b) table[a].push_back((a + b) % n);
    }
    return FiniteGroup(labels, table, 0);
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
    // index k: r^k for k < n; n + k: s r^k. Relations s^2 = e, r s = s r^-1.
    auto mul = [n](int a, int b) {
        bool sa = a >= n, sb = b >= n;
        int ka = a % n, kb = b % n;
        // (s^sa r^ka)(s^sb r^kb) = s^(sa+sb) r^(+-ka + kb)
        int k = ((sb ? -ka : ka) + kb) % n;
        if (k < 0) k += n;
        return ((sa != sb) ? n : 0) + k;
    };
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(2 * n);
    for (int a = 0; a < 2 * n; ++a) {
        int k = a % n;
        std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
        labels.push_back(a < n ? (k == 0 ? "e" : r) : "s" + r);
        for (int b = 0; b < 2 * n; ++b) table[a].push_back(mul(a, b));
    }
    return FiniteGroup(labels, table, 0);
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
    if (name.size() >= 2) {
        int k = 0;
        try {
            size_t pos = 0;
            k = std::stoi(name.substr(1), &pos);
            if (pos != name.size() - 1) k = 0;
        } catch (const std::exception&) {
            k = 0;
        }
        if (k > 0) {
            if (name[0] == 'S') return symmetric(k);
            if (name[0] == 'Z') return cyclic(k);
            if (name[0] == 'D') return dihedral(k);
        }
    }
    throw std::invalid_argument("unknown group name " + name);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(G.order());
    for (int h = 0; h < G.order(); ++h) {
        if (seen[h]) continue;
        std::set<int> cls;
        for (int g = 0; g < G.order(); ++g) cls.insert(G.conj(g, h));
        for (int x : cls) seen[x] = true;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

BraidedLieAlgebra calculus_braided_lie(const FiniteGroup& G, const std::vector<int>& C, bool extended) {
    check_class(G, C);
    std::vector<int> elems;
    if (extended) elems.push_back(G.identity());
    elems.insert(elems.end(), C.begin(), C.end());
    int N = int(elems.size());
    std::map<int, int> pos;
    for (int i = 0; i < N; ++i) pos[elems[i]] = i;

    std::vector<std::string> labels;
    for (int g : elems) labels.push_back("X_" + G.labels()[g]);
    TensorBuilder D(N, 1, 2), e(N, 1, 0), br(N, 2, 1);
    for (int i = 0; i < N; ++i) {
        D.add(uint32_t(i * N + i), uint32_t(i), Scalar(1));
        e.add(0, uint32_t(i), Scalar(1));
        for (int j = 0; j < N; ++j)
            br.add(uint32_t(pos.at(G.conj(elems[i], elems[j]))), uint32_t(i * N + j), Scalar(1));
    }
    return BraidedLieAlgebra::from_structure(labels, D.build(), e.build(), br.build(), Tensor::flip(N));
}

QuantumLieAlgebra quantum_lie_of_calculus(const FiniteGroup& G, const std::vector<int>& C) {
    check_class(G, C);
    int N = int(C.size());
    std::map<int, int> pos;
    for (int i = 0; i < N; ++i) pos[C[i]] = i;
    QuantumLieAlgebra g;
    TensorBuilder s(N, 2, 2), br(N, 2, 1), d(N, 1, 2);
    for (int i = 0; i < N; ++i) {
        g.labels.push_back("x_" + G.labels()[C[i]]);
        d.add(uint32_t(i * N + i), uint32_t(i), Scalar(1));
        for (int j = 0; j < N; ++j) {
            uint32_t col = uint32_t(i * N + j);
            int k = pos.at(G.conj(C[i], C[j]));
            s.add(uint32_t(k * N + i), col, Scalar(1));
            br.add(uint32_t(k), col, Scalar(1));
            br.add(uint32_t(j), col, Scalar(-1));
        }
    }
    g.sigma = s.build();
    g.bracket = br.build();
    g.delta = d.build();
    g.psi = Tensor::flip(N);
    return g;
}

AxiomReport s3_zero_divisor_demo() {
    FiniteGroup G = FiniteGroup::symmetric(3);
    std::vector<int> C = {G.index_of("(12)"), G.index_of("(13)"), G.index_of("(23)")};
    BraidedLieAlgebra L = calculus_braided_lie(G, C);
    Presentation B = enveloping_presentation(L);
    B.generators = {"X1", "X2", "X3"};
    auto X = [](int i) { return NCPoly::gen(i - 1); };
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};

    AxiomReport rep;
    {
        std::vector<NCPoly> rels;
        for (auto& p : perms) rels.push_back(X(p[0]) * X(p[1]) - X(p[2]) * X(p[0]));
        WordSpace ws{3, 2};
        std::vector<SparseVec> v;
        for (auto& r : rels) v.push_back(ws.embed(r));
        rep.add("relations X_iX_j = X_kX_i", span_equal(v, B.relation_vectors()));
    }
    std::string w;
    for (auto& p : perms) {
        NCPoly xi = X(p[0]), xj = X(p[1]), xk = X(p[2]);
        if (!ideal_member(B, xi * xj * xj - xj * xj * xi, 3)) w = "X_iX_j^2 = X_j^2X_i fails for " + B.generators[p[0] - 1];
        if (!ideal_member(B, xi * xj * xj - xk * xk * xi, 3)) w = "X_iX_j^2 = X_k^2X_i fails for " + B.generators[p[0] - 1];
    }
    rep.add("(a) X_iX_j^2 = X_j^2X_i = X_k^2X_i", w.empty(), w);
    w.clear();
    for (int i = 1; i <= 3; ++i)
        for (int m = 1; m <= 3; ++m)
            if (!ideal_member(B, X(i) * X(i) * X(m) - X(m) * X(i) * X(i), 3))
                w = "X" + std::to_string(i) + "^2 does not commute with X" + std::to_string(m);
    rep.add("(b) X_i^2 central", w.empty(), w);
    rep.add("(c) X1(X2^2 - X3^2) = 0", ideal_member(B, X(1) * (X(2) * X(2) - X(3) * X(3)), 3));
    rep.add("(d) X2^2 - X3^2 != 0", !ideal_member(B, X(2) * X(2) - X(3) * X(3), 3));
    rep.add("(d) X1 != 0", !ideal_member(B, X(1), 3));
    return rep;
}

}  // namespace qlie
