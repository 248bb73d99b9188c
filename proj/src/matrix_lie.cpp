#include "qlie/lie.hpp"
#include "qlie/linalg.hpp"
#include "qlie/present.hpp"

#include <tuple>

namespace qlie {

namespace {

// Nonzero entries of a 2 -> 2 tensor as R^x_y^z_w: {x, y, z, w, value}.
struct Entry {
    int x, y, z, w;
    Scalar v;
};

std::vector<Entry> entries(const Tensor& t) {
    int n = t.dim();
    std::vector<Entry> out;
    for (uint32_t c = 0; c < t.cols(); ++c) {
        auto in = unpack(c, n, 2);
        for (auto& [r, v] : t.column(c)) {
            auto o = unpack(r, n, 2);
            out.push_back({o[0], in[0], o[1], in[1], v});
        }
    }
    return out;
}

uint32_t X(int n, int i, int j) { return uint32_t(i * n + j); }

// Conjugates of X1 as elements of L, indexed (ik, jl): W = R21 X1 R when with_inverse is
// false, Z = R^-1 X1 R otherwise.
SparseVec conjugated(const RMatrix& r, bool with_inverse, int i, int j, int k, int l) {
    int n = r.n();
    std::map<uint32_t, Scalar> m;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar left = with_inverse ? r.Rinv.at({i, k}, {a, b}) : r.R.at({k, i}, {b, a});
            if (left.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                Scalar right = r.R.at({c, b}, {j, l});
                if (!right.is_zero()) m[X(n, a, c)] += left * right;
            }
        }
    return sv_from_map(m);
}

SparseVec outer(int N, const SparseVec& x, const SparseVec& y) {
    std::map<uint32_t, Scalar> m;
    for (auto& [i, a] : x)
        for (auto& [j, b] : y) m[i * uint32_t(N) + j] += a * b;
    return sv_from_map(m);
}

// Columns (i,j,k,l) of sum_d A^{ik}_{jd} (x) X^d_l and sum_d X^k_d (x) A^{id}_{jl}.
std::pair<Tensor, Tensor> suffix_pair(const RMatrix& r, bool with_inverse) {
    int n = r.n(), N = n * n;
    std::vector<SparseVec> lhs, rhs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    SparseVec u, v;
                    for (int d = 0; d < n; ++d) {
                        u = sv_add(u, outer(N, conjugated(r, with_inverse, i, j, k, d), {{X(n, d, l), Scalar(1)}}));
                        v = sv_add(v, outer(N, {{X(n, k, d), Scalar(1)}}, conjugated(r, with_inverse, i, j, d, l)));
                    }
                    lhs.push_back(u);
                    rhs.push_back(v);
                }
    return {Tensor::from_columns(N, 2, 2, lhs), Tensor::from_columns(N, 2, 2, rhs)};
}

}  // namespace

std::vector<std::string> matrix_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back("X^" + std::to_string(i) + "_" + std::to_string(j));
    return out;
}

BraidedLieAlgebra matrix_braided_lie(const RMatrix& r) {
    int n = r.n(), N = n * n;
    BraidedLieAlgebra L;
    L.labels = matrix_labels(n);

    TensorBuilder D(N, 1, 2), e(N, 1, 0);
    for (int i = 0; i < n; ++i) {
        e.add(0, X(n, i, i), Scalar(1));
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a) D.add(X(n, i, a) * N + X(n, a, j), X(n, i, j), Scalar(1));
    }
    L.delta = D.build();
    L.eps = e.build();

    // Upsilon(X^i_j (x) X^k_l) = R^-1^a_m^i_b R^n_c^b_o R^p_d^c_l Rt^d_j^k_a X^m_n (x) X^o_p
    auto Ri = entries(r.Rinv), Rr = entries(r.R), Rt = entries(r.Rtilde);
    L.ups = Tensor::from_function(N, 2, 2, [&](uint32_t col) {
        int i = int(col / N) / n, j = int(col / N) % n, k = int(col % N) / n, l = int(col % N) % n;
        std::map<uint32_t, Scalar> out;
        for (auto& t4 : Rt) {
            if (t4.y != j || t4.z != k) continue;
            int d = t4.x, a = t4.w;
            for (auto& t1 : Ri) {
                if (t1.x != a || t1.z != i) continue;
                int m = t1.y, b = t1.w;
                Scalar v14 = t1.v * t4.v;
                for (auto& t2 : Rr) {
                    if (t2.z != b) continue;
                    int nn = t2.x, c = t2.y, o = t2.w;
                    for (auto& t3 : Rr) {
                        if (t3.y != d || t3.z != c || t3.w != l) continue;
                        int p = t3.x;
                        out[X(n, m, nn) * N + X(n, o, p)] += v14 * t2.v * t3.v;
                    }
                }
            }
        }
        return sv_from_map(out);
    });
    L.bracket = compose(tensor(Tensor::identity(N, 1), L.eps), L.ups);

    // Psi(Z (x) X2) = X2 (x) Z with Z = R^-1 X1 R
    auto [U, V] = suffix_pair(r, true);
    L.psi = compose(V, inverse(U));
    return L;
}

AxiomReport verify_matrix_construction(const BraidedLieAlgebra& L, const RMatrix& r) {
    AxiomReport rep;
    int n = r.n(), N = n * n;
    const auto& lb = L.labels;
    // Upsilon(R21 X1 R (x) X2) = X2 (x) R21 X1 R
    auto [U, V] = suffix_pair(r, false);
    rep.check_equal("Upsilon suffix identity", compose(L.ups, U), V, lb);
    // [R21 X1 R, X2] = X2 Q with Q = R21 R
    {
        Tensor Q = chain({Tensor::flip(n), r.R, Tensor::flip(n), r.R});
        std::vector<SparseVec> lhs, rhs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        lhs.push_back(L.bracket.apply(U.column(uint32_t(((i * n + j) * n + k) * n + l))));
                        std::map<uint32_t, Scalar> m;
                        for (int d = 0; d < n; ++d) m[X(n, k, d)] += Q.at({i, d}, {j, l});
                        rhs.push_back(sv_from_map(m));
                    }
        rep.check_equal("bracket suffix identity", Tensor::from_columns(N, 2, 1, lhs),
                        Tensor::from_columns(N, 2, 1, rhs), lb);
    }
    rep.check_equal("Upsilon = ([,](x)id)(id(x)Psi)(D(x)id)", L.ups, canonical_braiding(L.delta, L.bracket, L.psi),
                    lb);
    // (eps (x) id) Upsilon (x (x) y) = eps(y) x
    rep.check_equal("(eps(x)id)Upsilon = id(x)eps", compose(tensor(L.eps, Tensor::identity(N, 1)), L.ups),
                    tensor(Tensor::identity(N, 1), L.eps), lb);

    // [X^i_j, X^k_l] = d^i_j X^k_l - mu q q^{-2j} d^k_j X^i_l + mu R^-1^a_m^i_b R^n_c^b_l Rt^c_j^k_a X^m_n
    Scalar q = r.q, mu = q - q.inverse();
    TensorBuilder tb(N, 2, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    uint32_t col = X(n, i, j) * N + X(n, k, l);
                    if (i == j) tb.add(X(n, k, l), col, Scalar(1));
                    if (k == j) tb.add(X(n, i, l), col, -mu * q * q.pow(-2 * (j + 1)));
                    for (int a = 0; a < n; ++a)
                        for (int m = 0; m < n; ++m)
                            for (int b = 0; b < n; ++b) {
                                Scalar x = r.Rinv.at({a, i}, {m, b});
                                if (x.is_zero()) continue;
                                for (int nn = 0; nn < n; ++nn)
                                    for (int c = 0; c < n; ++c) {
                                        Scalar y = r.R.at({nn, b}, {c, l});
                                        if (y.is_zero()) continue;
                                        tb.add(X(n, m, nn), col, mu * x * y * r.Rtilde.at({c, k}, {j, a}));
                                    }
                            }
                }
    rep.check_equal("bracket formula (q-Hecke R-matrix form)", L.bracket, tb.build(), lb);
    return rep;
}

SparseVec q_trace(int n, const Scalar& q) {
    SparseVec v;
    for (int i = 0; i < n; ++i) v.emplace_back(X(n, i, i), q.pow(2 * (i + 1)));
    return v;
}

SparseVec q_trace_contraction(const RMatrix& r) {
    int n = r.n();
    std::map<uint32_t, Scalar> m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a) m[X(n, i, j)] += r.Rtilde.at({j, a}, {a, i});
    return sv_from_map(m);
}

std::optional<Scalar> proportionality(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return a.empty() ? std::optional<Scalar>(Scalar()) : std::nullopt;
    Scalar s = sv_get(a, b[0].first) / b[0].second;
    if (sv_axpy(a, -s, b).empty()) return s;
    return std::nullopt;
}

namespace {

// Collects the first failure per label, preserving label order.
class LabelledChecks {
public:
    void expect(const std::string& label, const SparseVec& got, const SparseVec& want, const std::string& where,
                const std::vector<std::string>& names) {
        auto& e = slot(label);
        SparseVec diff = sv_axpy(got, Scalar(-1), want);
        if (!diff.empty() && e.witness.empty()) e.witness = where + ": got " + show(got, names) + ", expected " + show(want, names);
    }
    void fail(const std::string& label, const std::string& witness) {
        auto& e = slot(label);
        if (e.witness.empty()) e.witness = witness;
    }
    void touch(const std::string& label) { slot(label); }
    void into(AxiomReport& rep) const {
        for (auto& e : items_) rep.add(e.axiom, e.witness.empty(), e.witness);
    }
    static std::string show(const SparseVec& v, const std::vector<std::string>& names) {
        std::string s;
        for (auto& [k, c] : v) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ") " + names[k];
        }
        return s.empty() ? "0" : s;
    }

private:
    AxiomResult& slot(const std::string& label) {
        for (auto& e : items_)
            if (e.axiom == label) return e;
        items_.push_back({label, true, {}});
        return items_.back();
    }
    std::vector<AxiomResult> items_;
};

}  // namespace

AxiomReport verify_sl_structure(const BraidedLieAlgebra& L, const MultiParams& p, const Scalar& H_sign) {
    int n = p.n;
    Scalar q = p.q, qi = q.inverse(), mu = q - qi, lam = Scalar(1) + mu * mu;
    const auto& names = L.labels;
    auto Xe = [n](int i, int j) { return SparseVec{{X(n, i - 1, j - 1), Scalar(1)}}; };
    auto add = [](const SparseVec& a, const SparseVec& b) { return sv_add(a, b); };
    auto mul = [](const Scalar& c, const SparseVec& a) { return sv_scale(a, c); };
    auto d = [](int a, int b) { return Scalar(a == b ? 1 : 0); };
    auto qint = [&](int a) { return (Scalar(1) - q.pow(2 * a)) / (Scalar(1) - q * q); };
    auto h = [&](int i) { return sv_axpy(Xe(i, i), Scalar(-1), Xe(i + 1, i + 1)); };
    auto H = [&](int i) {
        SparseVec s;
        for (int a = 1; a < i; ++a) s = add(s, mul(qint(a), h(a)));
        return mul(H_sign, s);
    };
    auto br = [&](const SparseVec& x, const SparseVec& y) { return bracket_of(L.bracket, x, y); };
    auto Xl = [&](int i) { return Xe(i + 1, i); };
    auto Yl = [&](int i) { return Xe(i, i + 1); };

    AxiomReport rep;
    // Centrality of utr in B(L): every commutator with a generator lies in the relation span.
    {
        Presentation B = enveloping_presentation(L);
        NCPoly u;
        for (auto& [k, c] : q_trace(n, q)) u = u + NCPoly::gen(int(k), c);
        rep.add("(a) utr central in B(L)", is_central(B, u));
    }

    LabelledChecks ck;
    SparseVec utr = q_trace(n, q);
    Scalar eu = counit(L, utr);
    std::vector<std::pair<std::string, SparseVec>> basis;
    for (int i = 1; i < n; ++i) basis.push_back({"h_" + std::to_string(i), h(i)});
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            if (k != l) basis.push_back({names[X(n, k - 1, l - 1)], Xe(k, l)});

    const std::string I = "(i) utr brackets, lambda = 1+mu^2";
    ck.expect(I, br(utr, utr), mul(eu, utr), "[utr,utr]", names);
    for (auto& [nm, x] : basis) {
        ck.expect(I, br(x, utr), {}, "[" + nm + ",utr]", names);
        ck.expect(I, br(utr, x), mul(eu * lam, x), "[utr," + nm + "]", names);
    }

    const std::string CA = "(ii.a) Cartan";
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            SparseVec want;
            if (i == j)
                want = add(mul(-mu * mu * qint(2) * q.pow(-2 * i), H(i)), mul(-mu * mu * q.pow(-2 * i) * qint(i + 1), h(i)));
            else if (j == i + 1)
                want = mul(mu * mu * q.pow(-2 * i), H(i + 1));
            else if (j == i - 1)
                want = mul(mu * mu * q.pow(-2 * (i - 1)), H(i));
            ck.expect(CA, br(h(i), h(j)), want, "[h_" + std::to_string(i) + ",h_" + std::to_string(j) + "]", names);
        }

    const std::string WT = "(ii.b) weight";
    for (int i = 1; i < n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                if (k == l) continue;
                Scalar a = mu * (q.pow(-2 * i) * (qi * d(k, i + 1) - q * d(k, i)) + qi * d(l, i) - q * d(l, i + 1));
                Scalar b = mu * (qi * d(k, i) - q * d(k, i + 1) + q.pow(-2 * i) * (qi * d(l, i + 1) - q * d(l, i)));
                std::string xn = names[X(n, k - 1, l - 1)], hn = "h_" + std::to_string(i);
                ck.expect(WT, br(h(i), Xe(k, l)), mul(a, Xe(k, l)), "[" + hn + "," + xn + "]", names);
                ck.expect(WT, br(Xe(k, l), h(i)), mul(b, Xe(k, l)), "[" + xn + "," + hn + "]", names);
            }

    // The sigma term is checked twice: on X^k_l as displayed, and on X^k_j, which is what
    // the closed bracket formula gives.
    const std::string RT = "(ii.c) root";
    const std::string RT_KJ = "(ii.c) root, sigma term on X^k_j";
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i == j || k == l) continue;
                    SparseVec common = mul(-q * mu * q.pow(-2 * j) * d(k, j), Xe(i, l));
                    if (i == l && j == k) {
                        common = add(common, mul(q * mu * q.pow(-2 * k), Xe(k, k)));
                        common = add(common, mul(-mu * mu * q.pow(-2 * (k - 1)), H(k)));
                    }
                    Scalar sig = mu * d(i, l) * cocycle(i, j, k, p);
                    std::string where = "[" + names[X(n, i - 1, j - 1)] + "," + names[X(n, k - 1, l - 1)] + "]";
                    SparseVec got = br(Xe(i, j), Xe(k, l));
                    ck.expect(RT, got, add(common, mul(sig, Xe(k, l))), where, names);
                    ck.expect(RT_KJ, got, add(common, mul(sig, Xe(k, j))), where, names);
                }

    // Ladder table: each row gives [h_i, Z] = value and [h_i, Z] = factor [Z, h_i].
    const std::string LD = "ladder relations";
    for (int i = 1; i < n; ++i) {
        std::string hn = "h_" + std::to_string(i);
        struct Row {
            int idx;
            bool is_x;
            Scalar value, factor;
        };
        std::vector<Row> rows = {
            {i - 1, true, -q * mu * q.pow(-2 * i), -q.pow(-2 * (i - 1))},
            {i, true, qi * mu * (Scalar(1) + q.pow(-2 * i)), -q.pow(-2)},
            {i + 1, true, -q * mu, -q.pow(2 * (i + 1))},
            {i - 1, false, qi * mu, -q.pow(2 * (i - 1))},
            {i, false, -q * mu * (Scalar(1) + q.pow(-2 * i)), -q.pow(2)},
            {i + 1, false, qi * mu * q.pow(-2 * i), -q.pow(-2 * (i + 1))},
        };
        for (auto& r : rows) {
            if (r.idx < 1 || r.idx >= n) continue;
            SparseVec z = r.is_x ? Xl(r.idx) : Yl(r.idx);
            std::string zn = (r.is_x ? "X_" : "Y_") + std::to_string(r.idx);
            SparseVec hz = br(h(i), z);
            ck.expect(LD, hz, mul(r.value, z), "[" + hn + "," + zn + "]", names);
            ck.expect(LD, hz, mul(r.factor, br(z, h(i))), "[" + hn + "," + zn + "] vs [" + zn + "," + hn + "]", names);
        }
        for (int j = 1; j < n; ++j) {
            SparseVec xy, yx;
            if (i == j) {
                xy = mul(mu * q.pow(-2 * i + 1), sv_axpy(h(i), -q * mu, H(i)));
                yx = mul(-mu * q.pow(-2 * i - 1), add(mul(q.pow(2 * i), h(i)), mul(q * mu, H(i))));
            }
            ck.expect(LD, br(Xl(i), Yl(j)), xy, "[X_" + std::to_string(i) + ",Y_" + std::to_string(j) + "]", names);
            ck.expect(LD, br(Yl(j), Xl(i)), yx, "[Y_" + std::to_string(j) + ",X_" + std::to_string(i) + "]", names);
        }
    }

    if (n == 2) {
        // Full table on {utr, h, X, Y}.
        const std::string T2 = "(d) n=2 bracket table";
        SparseVec hh = h(1), x = Xl(1), y = Yl(1);
        std::vector<std::pair<std::string, SparseVec>> b4 = {{"utr", utr}, {"h", hh}, {"X", x}, {"Y", y}};
        auto table = [&](int a, int b) -> SparseVec {
            if (a == 0) return b == 0 ? mul(eu, utr) : mul(eu * lam, b4[b].second);
            if (b == 0) return {};
            Scalar c2 = Scalar(1) + q.pow(-2);
            if (a == 1 && b == 1) return mul(-mu * mu * q.pow(-2) * qint(2), hh);
            if (a == 1 && b == 2) return mul(qi * mu * c2, x);
            if (a == 1 && b == 3) return mul(-q * mu * c2, y);
            if (a == 2 && b == 1) return mul(-q * q * qi * mu * c2, x);
            if (a == 3 && b == 1) return mul(q.pow(-2) * q * mu * c2, y);
            if (a == 2 && b == 3) return mul(mu * qi, hh);
            if (a == 3 && b == 2) return mul(-mu * qi, hh);
            return {};
        };
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                ck.expect(T2, br(b4[a].second, b4[b].second), table(a, b),
                          "[" + b4[a].first + "," + b4[b].first + "]", names);
    }
    ck.into(rep);
    return rep;
}

AxiomReport verify_relation_table(const BraidedLieAlgebra& L, const MultiParams& p) {
    int n = p.n, N = n * n;
    Scalar q = p.q, qi = q.inverse(), mu = q - qi;
    auto G = [n](int i, int j) { return NCPoly::gen(int(X(n, i - 1, j - 1))); };
    auto s = [&](int i, int j, int k) { return cocycle(i, j, k, p); };
    auto sb = [&](int i, int j, int k) { return cocycle(i, j, k, p, true); };
    auto th = [](int a, int b) { return Scalar(a > b ? 1 : 0); };
    auto distinct = [](std::initializer_list<int> v) {
        for (auto a = v.begin(); a != v.end(); ++a)
            for (auto b = a + 1; b != v.end(); ++b)
                if (*a == *b) return false;
        return true;
    };
    // sum_{a<m} X^x_a X^a_y
    auto chain2 = [&](int m, int x, int y) {
        NCPoly s;
        for (int a = 1; a < m; ++a) s = s + G(x, a) * G(a, y);
        return s;
    };

    std::vector<std::pair<std::string, std::vector<NCPoly>>> table;
    auto put = [&](const std::string& label, const NCPoly& r) {
        for (auto& [l, v] : table)
            if (l == label) return v.push_back(r);
        table.push_back({label, {r}});
    };
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            if (i < k) put("(i)", G(i, i) * G(k, k) - G(k, k) * G(i, i));
            for (int l = 1; l <= n; ++l) {
                if (!distinct({i, k, l})) continue;
                NCPoly comm = G(i, i) * G(k, l) - G(k, l) * G(i, i);
                if (k > i && l > i) put("(ii.a)", comm);
                if (i > k && i > l) put("(ii.b)", comm);
                if (l > i && i > k) put("(ii.c)", comm + (G(i, l) * G(k, i)).scaled(mu * sb(k, i, l)));
                if (k > i && i > l) put("(ii.d)", comm - (G(i, l) * G(k, i)).scaled(mu * sb(i, l, k)));
            }
        }
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l) {
            if (i == l) continue;
            NCPoly tail = chain2(i, i, l).scaled(qi * mu);
            if (i < l) put("(ii.e)", G(i, i) * G(i, l) - (G(i, l) * G(i, i)).scaled(q.pow(-2)) + tail);
            if (i > l) put("(ii.f)", G(i, i) * G(i, l) - G(i, l) * G(i, i) + tail);
            int k = l;
            if (i > k) put("(ii.g)", G(i, i) * G(k, i) - G(k, i) * G(i, i) - chain2(i, k, i).scaled(mu * qi));
            if (i < k) put("(ii.h)", G(i, i) * G(k, i) - (G(k, i) * G(i, i)).scaled(q * q) - chain2(i, k, i).scaled(mu * q));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                for (int l = 1; l <= n; ++l)
                    if (distinct({i, j, k, l}) && i < k)
                        put("(iii.a)", G(i, j) * G(k, l) - (G(k, l) * G(i, j)).scaled(s(i, j, k) * sb(i, j, l)) -
                                           (G(k, j) * G(i, l)).scaled(mu * th(j, l) * s(i, j, k)));
                if (!distinct({i, j, k})) continue;
                // (iii.b): letters i, j, l -> here (i, j, k) with j < k playing l.
                if (j < k) put("(iii.b)", (G(i, j) * G(i, k)).scaled(q) - (G(i, k) * G(i, j)).scaled(sb(i, j, k)));
                if (i < k) put("(iii.c)", G(i, j) * G(k, j) - (G(k, j) * G(i, j)).scaled(q * s(i, j, k)));
                // (iii.d): letters i, j, l with i < j -> here l = k.
                if (i < j)
                    put("(iii.d)", (G(i, j) * G(j, k)).scaled(q) - (G(j, k) * G(i, j)).scaled(sb(j, k, i)) +
                                       chain2(j, i, k).scaled(mu) - (G(j, j) * G(i, k)).scaled(mu * th(j, k)));
                if (i < k)
                    put("(iii.e)", (G(i, j) * G(k, i)).scaled(sb(i, j, k)) - (G(k, i) * G(i, j)).scaled(q) -
                                       chain2(i, k, j).scaled(mu) - (G(k, j) * G(i, i)).scaled(mu * th(j, i)));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            NCPoly rhs;
            for (int a = 1; a < i; ++a) rhs = rhs + (G(a, j) * G(j, a)).scaled(q * mu * q.pow(2 * (a - i)));
            rhs = rhs + (G(j, j) * G(i, i)).scaled(qi * mu);
            rhs = rhs - chain2(j, i, i).scaled(qi * mu);
            for (int b = 1; b < j; ++b)
                for (int a = 1; a < i; ++a) rhs = rhs + (G(a, b) * G(b, a)).scaled(mu * mu * q.pow(2 * (a - i)));
            for (int a = 1; a < i; ++a) rhs = rhs - (G(j, j) * G(a, a)).scaled(mu * mu * q.pow(2 * (a - i)));
            put("(iii.f)", G(i, j) * G(j, i) - G(j, i) * G(i, j) - rhs);
        }

    AxiomReport rep;
    Presentation B = enveloping_presentation(L);
    std::vector<SparseVec> span = B.relation_vectors();
    WordSpace ws{N, 2};
    std::vector<SparseVec> all;
    size_t count = 0;
    for (auto& [label, rels] : table) {
        std::string witness;
        for (auto& r : rels) {
            SparseVec v = ws.embed(r);
            all.push_back(v);
            if (witness.empty() && !span_contains(span, {v})) witness = r.str(L.labels) + " not in Im(id - Upsilon)";
        }
        count += rels.size();
        rep.add("relation " + label, witness.empty(), witness);
    }
    size_t expected = size_t(N) * (N - 1) / 2;
    rep.add("relation count = binom(n^2,2)", count == expected,
            count == expected ? "" : std::to_string(count) + " listed, expected " + std::to_string(expected));
    size_t rk = rank_of(span);
    rep.add("rank Im(id - Upsilon) = binom(n^2,2)", rk == expected,
            rk == expected ? "" : "rank " + std::to_string(rk));
    rep.add("listed relations span Im(id - Upsilon)", span_equal(all, span));
    return rep;
}

SparseVec split_element(const BraidedLieAlgebra& L, const SparseVec& utr) {
    Scalar e = counit(L, utr);
    if (e.is_zero()) throw ZeroCounit("eps(utr) = 0, so utr cannot be normalized to a split element");
    return sv_scale(utr, e.inverse());
}

}  // namespace qlie
