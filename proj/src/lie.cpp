#include "qlie/lie.hpp"
#include "qlie/linalg.hpp"

namespace qlie {

namespace {

Tensor id1(int n) { return Tensor::identity(n, 1); }

Tensor counit_tensor(int n, const std::function<Scalar(int)>& f) {
    TensorBuilder tb(n, 1, 0);
    for (int i = 0; i < n; ++i) tb.add(0, i, f(i));
    return tb.build();
}

// Checks f(v) = 0 for every v, reporting the first offender.
void check_annihilates(AxiomReport& rep, const std::string& axiom, const Tensor& f, const std::vector<SparseVec>& vs,
                       const std::vector<std::string>& labels) {
    for (auto& v : vs) {
        SparseVec w = f.apply(v);
        if (!w.empty()) {
            std::string s;
            for (auto& [k, c] : v) {
                if (!s.empty()) s += " + ";
                s += "(" + c.str() + ") " + word_label(k, f.dim(), f.in_arity(), labels);
            }
            rep.add(axiom, false, "nonzero on " + s);
            return;
        }
    }
    rep.add(axiom, true);
}

}  // namespace

BraidedLieAlgebra BraidedLieAlgebra::from_structure(std::vector<std::string> labels, Tensor delta, Tensor eps,
                                                    Tensor bracket, Tensor psi) {
    BraidedLieAlgebra L{std::move(labels), std::move(delta), std::move(eps), std::move(bracket), std::move(psi), {}};
    L.ups = canonical_braiding(L.delta, L.bracket, L.psi);
    return L;
}

Tensor canonical_braiding(const Tensor& delta, const Tensor& bracket, const Tensor& psi) {
    Tensor id = id1(delta.dim());
    return chain({tensor(bracket, id), tensor(id, psi), tensor(delta, id)});
}

Scalar counit(const BraidedLieAlgebra& L, const SparseVec& x) {
    SparseVec v = L.eps.apply(x);
    return v.empty() ? Scalar() : v[0].second;
}

SparseVec bracket_of(const Tensor& bracket, const SparseVec& x, const SparseVec& y) {
    uint32_t n = uint32_t(bracket.dim());
    std::map<uint32_t, Scalar> xy;
    for (auto& [i, a] : x)
        for (auto& [j, b] : y) xy[i * n + j] += a * b;
    return bracket.apply(sv_from_map(xy));
}

AxiomReport check_quantum_axioms(const QuantumLieAlgebra& g) {
    AxiomReport rep;
    int n = g.dim();
    Tensor id = id1(n), C = g.bracket, s = g.sigma;
    rep.merge(braid_relation_check(s, "(1) braid relation", g.labels));
    Tensor lhs = compose(C, tensor(id, C));
    Tensor rhs = compose(C, tensor(C, id)) + chain({C, tensor(id, C), tensor(s, id)});
    rep.check_equal("(2) quantum Jacobi", lhs, rhs, g.labels);
    rep.check_equal("(3a) sigma(id(x)C) = (C(x)id)s23 s12", compose(s, tensor(id, C)),
                    chain({tensor(C, id), tensor(id, s), tensor(s, id)}), g.labels);
    rep.check_equal("(3b) bracket is a morphism up to correction",
                    compose(s, tensor(C, id)) - chain({tensor(id, C), tensor(s, id), tensor(id, s)}),
                    compose(tensor(C, id), tensor(id, s)) - chain({s, tensor(id, C), tensor(s, id)}), g.labels);
    Tensor antisym = Tensor::identity(n, 2) - s;
    check_annihilates(rep, "(4) ker(id - sigma) in ker[,]", C, kernel(antisym), g.labels);
    return rep;
}

Tensor extended_sigma(const QuantumLieAlgebra& g) {
    int n = g.dim(), m = n + 1;
    TensorBuilder tb(m, 2, 2);
    for (int z = 0; z < m; ++z) {
        tb.add({z, 0}, {0, z}, Scalar(1));
        if (z != 0) tb.add({0, z}, {z, 0}, Scalar(1));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (auto& [r, v] : g.sigma.column(uint32_t(x * n + y))) {
                auto o = unpack(r, n, 2);
                tb.add({o[0] + 1, o[1] + 1}, {x + 1, y + 1}, v);
            }
            for (auto& [r, v] : g.bracket.column(uint32_t(x * n + y))) tb.add({int(r) + 1, 0}, {x + 1, y + 1}, v);
        }
    return tb.build();
}

BraidedLieAlgebra extend(const QuantumLieAlgebra& g) {
    int n = g.dim(), m = n + 1;
    Tensor ts = extended_sigma(g);
    auto braid = braid_relation_check(ts, "braid relation for the extended braiding");
    if (!braid.all_pass()) throw NotAQuantumLieAlgebra(braid.results()[0].witness);

    Tensor psi_g;
    if (g.psi)
        psi_g = *g.psi;
    else if (!g.delta || g.delta->is_zero())
        psi_g = g.sigma;
    else
        throw BackgroundBraidingRequired("a nonzero delta needs an explicit background braiding");

    std::vector<std::string> labels{"gamma"};
    labels.insert(labels.end(), g.labels.begin(), g.labels.end());

    TensorBuilder d(m, 1, 2), br(m, 2, 1), psi(m, 2, 2);
    d.add({0, 0}, {0}, Scalar(1));
    br.add({0}, {0, 0}, Scalar(1));
    for (int z = 0; z < m; ++z) {
        psi.add({z, 0}, {0, z}, Scalar(1));
        if (z != 0) psi.add({0, z}, {z, 0}, Scalar(1));
    }
    for (int x = 0; x < n; ++x) {
        d.add({x + 1, 0}, {x + 1}, Scalar(1));
        d.add({0, x + 1}, {x + 1}, Scalar(1));
        if (g.delta)
            for (auto& [r, v] : g.delta->column(uint32_t(x))) {
                auto o = unpack(r, n, 2);
                d.add({o[0] + 1, o[1] + 1}, {x + 1}, v);
            }
        br.add({x + 1}, {0, x + 1}, Scalar(1));
        for (int y = 0; y < n; ++y) {
            for (auto& [r, v] : g.bracket.column(uint32_t(x * n + y))) br.add({int(r) + 1}, {x + 1, y + 1}, v);
            for (auto& [r, v] : psi_g.column(uint32_t(x * n + y))) {
                auto o = unpack(r, n, 2);
                psi.add({o[0] + 1, o[1] + 1}, {x + 1, y + 1}, v);
            }
        }
    }
    Tensor eps = counit_tensor(m, [](int i) { return Scalar(i == 0 ? 1 : 0); });
    BraidedLieAlgebra L = BraidedLieAlgebra::from_structure(labels, d.build(), eps, br.build(), psi.build());
    if (L.ups != ts)
        throw BackgroundBraidingRequired("background braiding does not reproduce the extended braiding: " +
                                         first_difference(L.ups, ts, labels).value_or(""));
    return L;
}

AxiomReport check_braided_axioms(const BraidedLieAlgebra& L) {
    AxiomReport rep;
    int n = L.dim();
    const auto& lb = L.labels;
    Tensor id = id1(n), D = L.delta, e = L.eps, C = L.bracket, P = L.psi, U = L.ups;

    rep.check_equal("coassociativity", compose(tensor(D, id), D), compose(tensor(id, D), D), lb);
    rep.check_equal("left counit", compose(tensor(e, id), D), id, lb);
    rep.check_equal("right counit", compose(tensor(id, e), D), id, lb);

    bool invertible = true;
    try {
        inverse(P);
    } catch (const Singular&) {
        invertible = false;
    }
    rep.add("Psi invertible", invertible, "Psi is singular");
    rep.merge(braid_relation_check(P, "Psi braid relation", lb));
    Tensor P12 = tensor(P, id), P23 = tensor(id, P);
    rep.check_equal("Psi natural: (id(x)D)Psi = Psi12 Psi23 (D(x)id)", compose(tensor(id, D), P),
                    chain({P12, P23, tensor(D, id)}), lb);
    rep.check_equal("Psi natural: (D(x)id)Psi = Psi23 Psi12 (id(x)D)", compose(tensor(D, id), P),
                    chain({P23, P12, tensor(id, D)}), lb);
    rep.check_equal("Psi natural: (eps(x)id)Psi = id(x)eps", compose(tensor(e, id), P), tensor(id, e), lb);
    rep.check_equal("Psi natural: (id(x)eps)Psi = eps(x)id", compose(tensor(id, e), P), tensor(e, id), lb);
    rep.check_equal("Psi natural: Psi([,](x)id) = (id(x)[,])Psi12 Psi23", compose(P, tensor(C, id)),
                    chain({tensor(id, C), P12, P23}), lb);
    rep.check_equal("Psi natural: Psi(id(x)[,]) = ([,](x)id)Psi23 Psi12", compose(P, tensor(id, C)),
                    chain({tensor(C, id), P23, P12}), lb);

    rep.check_equal("Upsilon is the canonical braiding", U, canonical_braiding(D, C, P), lb);
    rep.merge(braid_relation_check(U, "Upsilon braid relation", lb));
    // coproduct of the braided tensor product L (x) L
    Tensor DLL = compose(tensor({id, P, id}), tensor(D, D));
    rep.check_equal("Upsilon coalgebra morphism", compose(tensor(U, U), DLL), compose(DLL, U), lb);
    rep.check_equal("(eps(x)id)Upsilon = id(x)eps", compose(tensor(e, id), U), tensor(id, e), lb);
    rep.check_equal("(id(x)eps)Upsilon = [,]", compose(tensor(id, e), U), C, lb);
    {
        auto ker = kernel(e);
        std::vector<SparseVec> kk;
        for (auto& x : ker)
            for (auto& y : ker) {
                std::map<uint32_t, Scalar> m;
                for (auto& [i, a] : x)
                    for (auto& [j, b] : y) m[i * uint32_t(n) + j] += a * b;
                kk.push_back(sv_from_map(m));
            }
        check_annihilates(rep, "Upsilon(ker eps (x) ker eps) in ker eps (x) L", compose(tensor(e, id), U), kk, lb);
    }
    Tensor CC = compose(C, tensor(id, C));
    rep.check_equal("(L1) braided Jacobi", CC, compose(CC, tensor(U, id)), lb);
    rep.check_equal("(L2, reconstructed) Psi Upsilon = (id(x)[,])(D(x)id)", compose(P, U),
                    compose(tensor(id, C), tensor(D, id)), lb);
    rep.check_equal("(L3) D[,] = ([,](x)[,]) D_{L(x)L}", compose(D, C), compose(tensor(C, C), DLL), lb);
    rep.check_equal("(L3) eps[,] = eps(x)eps", compose(e, C), tensor(e, e), lb);
    return rep;
}

Tensor block_flip(int a, int b, const Scalar& s) {
    int n = a + b;
    TensorBuilder tb(n, 2, 2);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool cross = (x < a) != (y < a);
            if (cross) tb.add({y, x}, {x, y}, s);
        }
    return tb.build();
}

BraidedLieAlgebra direct_sum(const BraidedLieAlgebra& L1, const BraidedLieAlgebra& L2, const Tensor& cross12,
                             const Tensor& cross21) {
    int a = L1.dim(), b = L2.dim(), n = a + b;
    if (cross12.dim() != n || cross21.dim() != n) throw DimensionMismatch("cross braidings live on the sum space");
    // Symmetry of the cross braidings on L1 (x) L2 and L2 (x) L1.
    Tensor round = compose(cross21, cross12), round2 = compose(cross12, cross21);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if ((x < a) == (y < a)) continue;
            uint32_t c = uint32_t(x * n + y);
            const Tensor& r = x < a ? round : round2;
            SparseVec expect{{c, Scalar(1)}};
            if (r.column(c) != expect)
                throw CrossBraidingNotSymmetric("cross braidings do not invert each other on " +
                                                word_label(c, n, 2));
        }

    auto shift = [&](const Tensor& t, int off, int arity_in, int arity_out, TensorBuilder& tb) {
        int d = t.dim();
        for (uint32_t c = 0; c < t.cols(); ++c) {
            auto in = unpack(c, d, arity_in);
            for (auto& i : in) i += off;
            for (auto& [r, v] : t.column(c)) {
                auto out = unpack(r, d, arity_out);
                for (auto& o : out) o += off;
                tb.add(out, in, v);
            }
        }
    };
    TensorBuilder D(n, 1, 2), C(n, 2, 1), P(n, 2, 2);
    shift(L1.delta, 0, 1, 2, D);
    shift(L2.delta, a, 1, 2, D);
    shift(L1.bracket, 0, 2, 1, C);
    shift(L2.bracket, a, 2, 1, C);
    shift(L1.psi, 0, 2, 2, P);
    shift(L2.psi, a, 2, 2, P);
    std::vector<Scalar> eps(n);
    for (int i = 0; i < a; ++i) eps[i] = L1.eps.at(0, i);
    for (int i = 0; i < b; ++i) eps[a + i] = L2.eps.at(0, i);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if ((x < a) == (y < a)) continue;
            // [x1, y2] = eps(x1) y2 and [x2, y1] = eps(x2) y1
            C.add({y}, {x, y}, eps[x]);
            const Tensor& cr = x < a ? cross12 : cross21;
            for (auto& [r, v] : cr.column(uint32_t(x * n + y))) P.add(r, uint32_t(x * n + y), v);
        }
    std::vector<std::string> labels = L1.labels;
    labels.insert(labels.end(), L2.labels.begin(), L2.labels.end());
    return BraidedLieAlgebra::from_structure(labels, D.build(), counit_tensor(n, [&](int i) { return eps[i]; }),
                                             C.build(), P.build());
}

BraidedLieAlgebra one_dimensional() {
    TensorBuilder D(1, 1, 2), C(1, 2, 1);
    D.add({0, 0}, {0}, Scalar(1));
    C.add({0}, {0, 0}, Scalar(1));
    return BraidedLieAlgebra::from_structure({"gamma"}, D.build(), counit_tensor(1, [](int) { return Scalar(1); }),
                                             C.build(), Tensor::identity(1, 2));
}

BraidedLieAlgebra trivial_extension(const BraidedLieAlgebra& L) {
    return direct_sum(one_dimensional(), L, block_flip(1, L.dim()), block_flip(1, L.dim()));
}

AxiomReport goodness_check(const BraidedLieAlgebra& L, const SparseVec& unit) {
    AxiomReport rep;
    int n = L.dim();
    const auto& lb = L.labels;
    auto pair = [n](const SparseVec& x, const SparseVec& y) {
        std::map<uint32_t, Scalar> m;
        for (auto& [i, a] : x)
            for (auto& [j, b] : y) m[i * uint32_t(n) + j] += a * b;
        return sv_from_map(m);
    };
    std::string w_unit, w_ups;
    for (int i = 0; i < n; ++i) {
        SparseVec x{{uint32_t(i), Scalar(1)}};
        if (bracket_of(L.bracket, unit, x) != x && w_unit.empty()) w_unit = "[unit, " + lb[i] + "] != " + lb[i];
        if (bracket_of(L.bracket, x, unit) != sv_scale(unit, counit(L, x)) && w_unit.empty())
            w_unit = "[" + lb[i] + ", unit] != eps(" + lb[i] + ") unit";
        if (L.ups.apply(pair(unit, x)) != pair(x, unit) && w_ups.empty())
            w_ups = "Upsilon(unit(x)" + lb[i] + ") != " + lb[i] + "(x)unit";
        if (L.ups.apply(pair(x, unit)) != pair(unit, x) && w_ups.empty())
            w_ups = "Upsilon(" + lb[i] + "(x)unit) != unit(x)" + lb[i];
    }
    rep.add("unital: [unit,x] = x, [x,unit] = eps(x) unit", w_unit.empty(), w_unit);
    rep.add("unital: Upsilon(unit(x)x) = x(x)unit, Upsilon(x(x)unit) = unit(x)x", w_ups.empty(), w_ups);
    rep.add("unit grouplike", L.delta.apply(unit) == pair(unit, unit) && counit(L, unit) == Scalar(1),
            "Delta(unit) != unit(x)unit or eps(unit) != 1");

    // g = ker eps; Upsilon(x(x)y) = sigma(x(x)y) + [x,y](x)unit on g.
    auto g = kernel(L.eps);
    int m = int(g.size());
    std::vector<SparseVec> basis{unit};
    basis.insert(basis.end(), g.begin(), g.end());
    Tensor P = Tensor::from_columns(n, 1, 1, basis);
    Tensor Pinv = inverse(P);
    Tensor Ub = chain({tensor(Pinv, Pinv), L.ups, tensor(P, P)});
    Tensor Cb = chain({Pinv, L.bracket, tensor(P, P)});
    TensorBuilder sig(m, 2, 2), br(m, 2, 1);
    std::string w_split;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            uint32_t col = uint32_t((x + 1) * n + (y + 1));
            for (auto& [r, v] : Ub.column(col)) {
                auto o = unpack(r, n, 2);
                if (o[0] > 0 && o[1] > 0)
                    sig.add({o[0] - 1, o[1] - 1}, {x, y}, v);
                else if (o[1] == 0 && o[0] > 0) {
                    if (Cb.at(uint32_t(o[0]), col) != v && w_split.empty())
                        w_split = "unit component of Upsilon(" + std::to_string(x) + "," + std::to_string(y) +
                                  ") differs from the bracket";
                } else if (w_split.empty())
                    w_split = "Upsilon has a unit(x)g or unit(x)unit component";
            }
            for (auto& [r, v] : Cb.column(col)) {
                if (r == 0) {
                    if (w_split.empty()) w_split = "bracket leaves ker eps";
                    continue;
                }
                br.add({int(r) - 1}, {x, y}, v);
            }
        }
    rep.add("Upsilon = sigma + [,](x)unit on ker eps", w_split.empty(), w_split);
    if (m > 0) {
        Tensor sigma = sig.build(), bracket = br.build();
        Tensor antisym = Tensor::identity(m, 2) - sigma;
        check_annihilates(rep, "good: ker(id - sigma) in ker[,]", bracket, kernel(antisym), {});
    } else {
        rep.add("good: ker(id - sigma) in ker[,]", true);
    }
    return rep;
}

QuantumLieAlgebra classical_sl2() {
    // basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
    TensorBuilder C(3, 2, 1);
    C.add({1}, {0, 1}, Scalar(2));
    C.add({1}, {1, 0}, Scalar(-2));
    C.add({2}, {0, 2}, Scalar(-2));
    C.add({2}, {2, 0}, Scalar(2));
    C.add({0}, {1, 2}, Scalar(1));
    C.add({0}, {2, 1}, Scalar(-1));
    return {{"h", "e", "f"}, Tensor::flip(3), C.build(), std::nullopt, std::nullopt};
}

QuantumLieAlgebra classical_abelian(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return {labels, Tensor::flip(n), Tensor(n, 2, 1), std::nullopt, std::nullopt};
}

QuantumLieAlgebra triangular_qla(const RMatrix& r) {
    int n = r.n(), N = n * n;
    Tensor tau = Tensor::flip(n);
    Tensor R21 = chain({tau, r.R, tau});
    if (compose(R21, r.R) != Tensor::identity(n, 2))
        throw NotTriangular("R21 R != 1: " + first_difference(compose(R21, r.R), Tensor::identity(n, 2)).value_or(""));
    // R^x_y^z_w and (R21)^x_y^z_w
    auto Rv = [&](int x, int y, int z, int w) { return r.R.at({x, z}, {y, w}); };
    auto R21v = [&](int x, int y, int z, int w) { return R21.at({x, z}, {y, w}); };
    auto chi = [n](int i, int j) { return uint32_t(i * n + j); };  // chi_i^j
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) labels.push_back("chi_" + std::to_string(i + 1) + "^" + std::to_string(j + 1));

    // (sigma_i^j_k^l)_b^a_d^c = (R21)^j_B^A_b R^G_i^l_A R^B_d^a_D (R21)^c_G^D_k
    auto sc = [&](int i, int j, int k, int l, int b, int a, int d, int c) {
        Scalar acc;
        for (int A = 0; A < n; ++A)
            for (int B = 0; B < n; ++B) {
                Scalar x = R21v(j, B, A, b);
                if (x.is_zero()) continue;
                for (int G = 0; G < n; ++G) {
                    Scalar y = Rv(G, i, l, A);
                    if (y.is_zero()) continue;
                    for (int D = 0; D < n; ++D) {
                        Scalar z = Rv(B, d, a, D);
                        if (z.is_zero()) continue;
                        acc += x * y * z * R21v(c, G, D, k);
                    }
                }
            }
        return acc;
    };
    TensorBuilder sig(N, 2, 2), br(N, 2, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    uint32_t col = chi(i, j) * N + chi(k, l);
                    // sigma(chi_i^j (x) chi_k^l) = sum (sigma_i^j_k^l)_b^a_d^c chi_a^b (x) chi_c^d
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            for (int c = 0; c < n; ++c)
                                for (int d = 0; d < n; ++d)
                                    sig.add(chi(a, b) * N + chi(c, d), col, sc(i, j, k, l, b, a, d, c));
                    // [chi_i^j, chi_k^l] = delta_k^j chi_i^l - (sigma_i^j_k^l)_r^a_b^r chi_a^b
                    if (k == j) br.add(chi(i, l), col, Scalar(1));
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            for (int rr = 0; rr < n; ++rr) br.add(chi(a, b), col, -sc(i, j, k, l, rr, a, b, rr));
                }
    return {labels, sig.build(), br.build(), std::nullopt, std::nullopt};
}

}  // namespace qlie
