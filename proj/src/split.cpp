#include "qlie/lie.hpp"
#include "qlie/linalg.hpp"

namespace qlie {

namespace {

std::string vec_label(const SparseVec& v, int dim, int arity, const std::vector<std::string>& labels) {
    std::string s;
    for (auto& [k, c] : v) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ") " + word_label(k, dim, arity, labels);
    }
    return s.empty() ? "0" : s;
}

SparseVec basis_vec(uint32_t i) { return {{i, Scalar(1)}}; }

}  // namespace

SplitData split_decompose(const BraidedLieAlgebra& L, const SparseVec& c, bool generalized_jacobi,
                          const std::vector<SparseVec>& complement,
                          const std::vector<std::string>& complement_labels) {
    int N = L.dim();
    const auto& lb = L.labels;
    auto fail = [](const std::string& what) { throw NotSplit(what); };

    if (!(counit(L, c) == Scalar(1))) fail("eps(c) = " + counit(L, c).str() + ", expected 1");
    Tensor cvec = Tensor::vector(N, 1, c);
    for (int i = 0; i < N; ++i) {
        SparseVec x = basis_vec(uint32_t(i));
        SparseVec want = sv_scale(c, counit(L, x));
        SparseVec got = bracket_of(L.bracket, x, c);
        if (!sv_axpy(got, Scalar(-1), want).empty()) fail("[" + lb[i] + ", c] = " + vec_label(got, N, 1, lb) + " != eps(x) c");
        Tensor xv = Tensor::vector(N, 1, x);
        Tensor cx = tensor(cvec, xv), xc = tensor(xv, cvec);
        if (!(compose(L.psi, cx) == xc)) fail("Psi(c (x) " + lb[i] + ") != " + lb[i] + " (x) c");
        if (!(compose(L.psi, xc) == cx)) fail("Psi(" + lb[i] + " (x) c) != c (x) " + lb[i]);
        if (!(compose(L.ups, xc) == cx)) fail("Upsilon(" + lb[i] + " (x) c) != c (x) " + lb[i]);
    }

    SplitData out;
    out.c = c;
    std::vector<SparseVec> K = complement.empty() ? kernel(L.eps) : complement;
    if (int(K.size()) != N - 1) fail("complement has dimension " + std::to_string(K.size()) + ", expected N-1");
    for (auto& k : K)
        if (!counit(L, k).is_zero()) fail("complement vector " + vec_label(k, N, 1, lb) + " is not in ker eps");
    int m = N - 1;

    out.labels.push_back("c");
    for (int a = 0; a < m; ++a)
        out.labels.push_back(a < int(complement_labels.size()) ? complement_labels[a] : "k" + std::to_string(a + 1));
    out.basis.push_back(c);
    for (auto& k : K) out.basis.push_back(k);

    Tensor P = Tensor::from_columns(N, 1, 1, out.basis), Pinv;
    try {
        Pinv = inverse(P);
    } catch (const Singular&) {
        fail("c lies in the span of the complement");
    }
    Tensor P2 = tensor(P, P), P2inv = tensor(Pinv, Pinv);
    Tensor ups = chain({P2inv, L.ups, P2});
    Tensor br = chain({Pinv, L.bracket, P2});
    const auto& nl = out.labels;
    std::vector<std::string> kl(nl.begin() + 1, nl.end());

    // New-basis index 0 is c; index a >= 1 is the (a-1)-th complement vector.
    auto kk = [m](uint32_t a, uint32_t b) { return (a - 1) * uint32_t(m) + (b - 1); };
    std::vector<SparseVec> om(size_t(m) * m), brk(size_t(m) * m), rh(m), th(m);
    for (uint32_t a = 1; a <= uint32_t(m); ++a)
        for (uint32_t b = 1; b <= uint32_t(m); ++b) {
            std::map<uint32_t, Scalar> o, k;
            for (auto& [r, v] : ups.column(a * N + b)) {
                uint32_t u = r / N, w = r % N;
                if (w == 0) {
                    if (u == 0) fail("Upsilon(" + nl[a] + " (x) " + nl[b] + ") has a c (x) c component");
                    k[u - 1] += v;
                } else if (u == 0) {
                    fail("Upsilon(" + nl[a] + " (x) " + nl[b] + ") has a c (x) L+ component");
                } else {
                    o[kk(u, w)] += v;
                }
            }
            om[kk(a, b)] = sv_from_map(o);
            brk[kk(a, b)] = sv_from_map(k);
        }
    for (uint32_t a = 1; a <= uint32_t(m); ++a) {
        std::map<uint32_t, Scalar> t, p;
        for (auto& [r, v] : ups.column(a)) {
            uint32_t u = r / N, w = r % N;
            if (w == 0) {
                if (u == 0) fail("Upsilon(c (x) " + nl[a] + ") has a c (x) c component");
                t[u - 1] += v;
            } else if (u == 0) {
                fail("Upsilon(c (x) " + nl[a] + ") has a c (x) L+ component");
            } else {
                p[kk(u, w)] += v;
            }
        }
        th[a - 1] = sv_from_map(t);
        rh[a - 1] = sv_from_map(p);
    }
    out.omega = Tensor::from_columns(m, 2, 2, om);
    out.rho = Tensor::from_columns(m, 1, 2, rh);
    out.theta = Tensor::from_columns(m, 1, 1, th);
    Tensor bracketK = Tensor::from_columns(m, 2, 1, brk);
    out.bracket = bracketK;

    AxiomReport& rep = out.report;
    // The L+ (x) c component of Upsilon(x (x) y) is [x, y] computed directly.
    {
        std::vector<SparseVec> direct(size_t(m) * m);
        bool clean = true;
        for (uint32_t a = 1; a <= uint32_t(m); ++a)
            for (uint32_t b = 1; b <= uint32_t(m); ++b) {
                std::map<uint32_t, Scalar> d;
                for (auto& [r, v] : br.column(a * N + b)) {
                    if (r == 0) clean = false;
                    else d[r - 1] += v;
                }
                direct[kk(a, b)] = sv_from_map(d);
            }
        rep.add("[L+, L+] in L+", clean);
        rep.check_equal("gen-xy bracket component = [x,y]", bracketK, Tensor::from_columns(m, 2, 1, direct), kl);
        std::vector<SparseVec> cx(m);
        for (uint32_t a = 1; a <= uint32_t(m); ++a) {
            std::map<uint32_t, Scalar> d;
            for (auto& [r, v] : br.column(a))
                if (r != 0) d[r - 1] += v;
            cx[a - 1] = sv_from_map(d);
        }
        rep.check_equal("Theta = [c, .]", out.theta, Tensor::from_columns(m, 1, 1, cx), kl);
    }

    // Rebuild Upsilon in the new basis from (omega, [,], Theta, rho) and Upsilon(x (x) c) = c (x) x.
    {
        std::vector<SparseVec> cols(size_t(N) * N);
        for (uint32_t x = 0; x < uint32_t(N); ++x) cols[x * N] = basis_vec(x);
        for (uint32_t a = 1; a <= uint32_t(m); ++a) {
            std::map<uint32_t, Scalar> t;
            for (auto& [r, v] : out.theta.column(a - 1)) t[(r + 1) * N] += v;
            for (auto& [r, v] : out.rho.column(a - 1)) t[(r / m + 1) * N + r % m + 1] += v;
            cols[a] = sv_from_map(t);
            for (uint32_t b = 1; b <= uint32_t(m); ++b) {
                std::map<uint32_t, Scalar> s;
                for (auto& [r, v] : out.omega.column(kk(a, b))) s[(r / m + 1) * N + r % m + 1] += v;
                for (auto& [r, v] : bracketK.column(kk(a, b))) s[(r + 1) * N] += v;
                cols[a * N + b] = sv_from_map(s);
            }
        }
        rep.check_equal("gen-xy/gen-cx reproduce Upsilon", ups, Tensor::from_columns(N, 2, 2, cols), nl);
    }

    if (m > 0) {
        Scalar s = sv_get(out.theta.column(0), 0);
        if (out.theta == Tensor::identity(m, 1).scaled(s)) {
            out.lambda = s;
            rep.add("Theta scalar", true);
        } else {
            rep.add("Theta scalar", false, "Theta is not a multiple of the identity on L+");
        }
    }

    Tensor idK = Tensor::identity(m, 1);
    Tensor jac_l = compose(bracketK, tensor(idK, bracketK));
    Tensor jac_r = chain({bracketK, tensor(idK, bracketK), tensor(out.omega, idK)}) +
                   chain({bracketK, tensor(bracketK, out.theta)});
    rep.check_equal("Jac-split", jac_l, jac_r, kl);

    if (generalized_jacobi) {
        if (!out.lambda || out.lambda->is_zero()) {
            rep.add("gen-Jacobi", false, "requires Theta = lambda id with lambda != 0");
        } else {
            Tensor A = (Tensor::identity(m, 2) - out.omega).scaled(out.lambda->inverse());
            bool ok = true;
            std::string witness;
            for (auto& v : kernel(A)) {
                SparseVec w = bracketK.apply(v);
                if (!w.empty()) {
                    ok = false;
                    witness = "[,] nonzero on " + vec_label(v, m, 2, kl);
                    break;
                }
            }
            rep.add("gen-Jacobi: ker A in ker[,]", ok, witness);
            rep.check_equal("gen-Jacobi: [,[,]](A (x) id) = [[,],]", chain({bracketK, tensor(idK, bracketK), tensor(A, idK)}),
                            compose(bracketK, tensor(bracketK, idK)), kl);
        }
    }
    return out;
}

}  // namespace qlie
