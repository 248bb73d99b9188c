#include "qlie/rmatrix.hpp"

#include <sstream>

namespace qlie {

RMatrix RMatrix::from_tensor(const Tensor& r, const Scalar& q, std::optional<MultiParams> params) {
    if (r.in_arity() != 2 || r.out_arity() != 2) throw ArityMismatch("an R-matrix is a 2 -> 2 tensor");
    RMatrix m;
    m.R = r;
    m.q = q;
    m.params = std::move(params);
    m.Rinv = solve_right_inverse(r, InversePattern::Ordinary);
    m.Rtilde = solve_right_inverse(r, InversePattern::Second);
    return m;
}

Scalar M_entry(const MultiParams& p, int i, int j) {
    if (i == j) return p.q;
    if (i < j) return p.q / p.param(i, j);
    return p.param(j, i) / p.q;
}

Tensor multiparam_tensor(const MultiParams& p) {
    if (p.n < 2) throw std::out_of_range("multiparameter R-matrix needs n >= 2");
    if (p.q.is_zero()) throw ZeroParameter("q = 0");
    for (int j = 2; j <= p.n; ++j)
        for (int i = 1; i < j; ++i)
            if (p.param(i, j).is_zero()) throw ZeroParameter("r" + std::to_string(i) + std::to_string(j) + " = 0");
    Scalar mu = p.q - p.q.inverse();
    TensorBuilder tb(p.n, 2, 2);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            tb.add({i, j}, {i, j}, M_entry(p, i + 1, j + 1));
            if (j > i) tb.add({i, j}, {j, i}, mu);
        }
    return tb.build();
}

RMatrix multiparam_R(const MultiParams& p) { return RMatrix::from_tensor(multiparam_tensor(p), p.q, p); }

MultiParams parse_multiparams(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    if (kind != "multiparam" && kind != "standard")
        throw std::invalid_argument("unknown R-matrix family '" + kind + "'");
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("expected key=value in '" + item + "'");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    int n = kv.count("n") ? std::stoi(kv["n"]) : 2;
    if (n < 2 || n > 6) throw std::invalid_argument("n must lie in 2..6");
    Scalar q = kv.count("q") ? Scalar::parse(kv["q"]) : Scalar::q();
    auto value = [&](const std::string& s) { return specialize(Scalar::parse(s), {{var_q(), q}}); };
    MultiParams p = kind == "standard" ? MultiParams::standard(n, q) : MultiParams::symbolic(n);
    p.q = q;
    for (auto& [k, v] : kv) {
        if (k == "n" || k == "q") continue;
        if (k.size() != 3 || k[0] != 'r') throw std::invalid_argument("unknown parameter '" + k + "'");
        int i = k[1] - '0', j = k[2] - '0';
        if (i < 1 || j <= i || j > n) throw std::invalid_argument("parameter '" + k + "' out of range");
        p.r[{i, j}] = value(v);
    }
    return p;
}

namespace {

std::string idx(std::initializer_list<int> v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
    return s;
}

}  // namespace

AxiomReport verify_rmatrix(const RMatrix& m) {
    AxiomReport rep;
    int n = m.n();
    Tensor id = Tensor::identity(n, 1), tau = Tensor::flip(n);
    Tensor r12 = tensor(m.R, id), r23 = tensor(id, m.R);
    Tensor t23 = tensor(id, tau);
    Tensor r13 = chain({t23, r12, t23});
    rep.check_equal("Yang-Baxter", chain({r12, r13, r23}), chain({r23, r13, r12}));

    Tensor rh = compose(tau, m.R), id2 = Tensor::identity(n, 2);
    Tensor hecke = compose(rh - id2.scaled(m.q), rh + id2.scaled(m.q.inverse()));
    rep.add("q-Hecke", hecke.is_zero(), "(Rh-q)(Rh+1/q) is nonzero");
    rep.add("q-Hecke minimal polynomial", rh != id2.scaled(m.q) && rh != id2.scaled(-m.q.inverse()),
            "tau o R is a scalar");

    rep.check_equal("inverse", compose(m.R, m.Rinv), id2);
    // sum_{a,b} Rt^i_b^a_j R^b_k^l_a = d^i_k d^j_l, contracted index by index
    std::string witness;
    for (int i = 0; i < n && witness.empty(); ++i)
        for (int j = 0; j < n && witness.empty(); ++j)
            for (int k = 0; k < n && witness.empty(); ++k)
                for (int l = 0; l < n && witness.empty(); ++l) {
                    Scalar acc;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) acc += m.Rtilde.at({i, a}, {b, j}) * m.R.at({b, l}, {k, a});
                    if (acc != Scalar(i == k && j == l ? 1 : 0))
                        witness = "i,j,k,l = " + idx({i, j, k, l}) + ": contraction is " + acc.str();
                }
    rep.add("second inverse", witness.empty(), witness);

    if (m.params) {
        MultiParams inv = *m.params;
        inv.q = m.params->q.inverse();
        for (auto& [key, v] : inv.r) v = v.inverse();
        rep.check_equal("inverse formula R^-1(q,r) = R(1/q,1/r)", m.Rinv, multiparam_tensor(inv));
        TensorBuilder tb(n, 2, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        tb.add({i, j}, {k, l}, m.Rinv.at({i, j}, {k, l}) * m.params->q.pow(2 * (l - j)));
        rep.check_equal("second inverse formula Rt = R^-1 q^2(l-j)", m.Rtilde, tb.build());
    }
    return rep;
}

AxiomReport verify_M_lemma(const MultiParams& p) {
    AxiomReport rep;
    int n = p.n;
    Scalar q = p.q, qi = q.inverse(), mu = q - qi;
    auto M = [&](int i, int j) { return M_entry(p, i, j); };
    auto d = [](int a, int b) { return Scalar(a == b ? 1 : 0); };
    std::string w1, w2;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Scalar lhs = M(k, i).inverse() * M(j, i) * M(j, k).inverse();
                Scalar rhs = cocycle(i, j, k, p) + q * d(i, j) + qi * (d(i, k) + d(j, k)) -
                             (q + qi) * d(i, j) * d(j, k);
                if (lhs != rhs && w1.empty())
                    w1 = "i,j,k = " + idx({i - 1, j - 1, k - 1}) + ": " + lhs.str() + " vs " + rhs.str();
                for (int l = 1; l <= n; ++l) {
                    Scalar lhs2 = M(k, i).inverse() * M(j, k).inverse() * M(l, i) * M(j, l);
                    Scalar rhs2(1);
                    if (k != l) {
                        Scalar s = cocycle(i, j, k, p), sb = cocycle(i, j, l, p, true);
                        rhs2 = s * sb + qi * sb * (d(k, i) + d(k, j)) + q * s * (d(l, i) + d(l, j)) +
                               d(i, j) * (Scalar(1) + mu * q * d(i, l) - qi * mu * d(j, k)) +
                               d(i, k) * d(j, l) + d(k, j) * d(i, l);
                    }
                    if (lhs2 != rhs2 && w2.empty())
                        w2 = "i,j,k,l = " + idx({i - 1, j - 1, k - 1, l - 1}) + ": " + lhs2.str() + " vs " +
                             rhs2.str();
                }
            }
    rep.add("M-lemma three-factor identity", w1.empty(), w1);
    rep.add("M-lemma four-factor identity", w2.empty(), w2);
    return rep;
}

Presentation frt_relations(const RMatrix& m) {
    int n = m.n();
    std::vector<std::string> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gens.push_back("t^" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    auto t = [n](int i, int j) { return i * n + j; };
    std::vector<NCPoly> rels;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    NCPoly rel;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            rel.add({t(a, j), t(b, l)}, m.R.at({i, k}, {a, b}));
                            rel.add({t(k, b), t(i, a)}, -m.R.at({a, b}, {j, l}));
                        }
                    if (!rel.is_zero()) rels.push_back(std::move(rel));
                }
    return Presentation(gens, rels);
}

}  // namespace qlie
