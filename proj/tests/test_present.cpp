#include "doctest.h"
#include "qlie/lie.hpp"
#include "qlie/present.hpp"
#include "qlie/rmatrix.hpp"

using namespace qlie;

namespace {

NCPoly x(int i) { return NCPoly::gen(i); }

std::vector<std::string> names(int n, const std::string& stem = "x") {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(stem + std::to_string(i + 1));
    return v;
}

Presentation polynomial(int n) {
    std::vector<NCPoly> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rels.push_back(x(i) * x(j) - x(j) * x(i));
    return Presentation(names(n), rels);
}

Presentation exterior(int n) {
    std::vector<NCPoly> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rels.push_back(i == j ? x(i) * x(i) : x(i) * x(j) + x(j) * x(i));
    return Presentation(names(n), rels);
}

uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<uint64_t> symmetric_dims(int n, int d_max) {
    std::vector<uint64_t> v;
    for (int d = 0; d <= d_max; ++d) v.push_back(binom(uint64_t(n + d - 1), uint64_t(d)));
    return v;
}

Presentation bmq(int n, const Scalar& q) {
    return enveloping_presentation(matrix_braided_lie(multiparam_R(MultiParams::standard(n, q))));
}

}  // namespace

TEST_CASE("free, polynomial and exterior algebras") {
    Presentation free(names(3), {});
    CHECK(graded_dims(free, 4).values() == std::vector<uint64_t>{1, 3, 9, 27, 81});
    CHECK(graded_dims(polynomial(3), 5).values() == symmetric_dims(3, 5));
    CHECK(graded_dims(polynomial(4), 4).values() == symmetric_dims(4, 4));
    std::vector<uint64_t> ext;
    for (int d = 0; d <= 5; ++d) ext.push_back(binom(4, uint64_t(d)));
    CHECK(graded_dims(exterior(4), 5).values() == ext);
}

TEST_CASE("word-space guard") {
    TruncationOptions opt;
    opt.max_words = 100;
    CHECK_THROWS_AS(graded_dims(Presentation(names(3), {}), 5, opt), DegreeTooLarge);
}

TEST_CASE("adding relations never increases graded dimensions") {
    Presentation p = bmq(2, Scalar::q());
    auto base = graded_dims(p, 4).values();
    Presentation more = p;
    more.relations.push_back(x(0) * x(0));
    auto cut = graded_dims(more, 4).values();
    for (size_t d = 0; d < base.size(); ++d) CHECK(cut[d] <= base[d]);
    CHECK(cut[2] == base[2] - 1);
    Presentation free(p.generators, {});
    auto top = graded_dims(free, 4).values();
    for (size_t d = 0; d < base.size(); ++d) CHECK(base[d] <= top[d]);
}

TEST_CASE("B(sl_q(2)) has the Hilbert series of polynomials in four variables") {
    CHECK(graded_dims(bmq(2, Scalar::q()), 4).values() == symmetric_dims(4, 4));
    CHECK(graded_dims(bmq(2, Scalar::parse("7/5")), 5).values() == symmetric_dims(4, 5));
}

TEST_CASE("B(sl_q(3)) through degree 2 at rational q") {
    for (const char* q : {"7/5", "11/7"}) CHECK(graded_dims(bmq(3, Scalar::parse(q)), 2).values() == symmetric_dims(9, 2));
}

TEST_CASE("quadratic duals") {
    Presentation pd = quadratic_dual(polynomial(3));
    CHECK(same_relations(pd, exterior(3)));
    CHECK(same_relations(quadratic_dual(exterior(3)), polynomial(3)));
    CHECK(pd.generators[0] == "x1*");

    Presentation b = bmq(2, Scalar::q());
    CHECK(same_relations(quadratic_dual(quadratic_dual(b)), b));
    CHECK(graded_dims(quadratic_dual(b), 5).values() == std::vector<uint64_t>{1, 4, 6, 4, 1, 0});

    for (const Presentation& p : {polynomial(3), exterior(4), b, bmq(3, Scalar::parse("7/5")),
                                  Presentation(names(2), {})}) {
        uint64_t N = uint64_t(p.size());
        uint64_t d = graded_dims(p, 2).values()[2], dd = graded_dims(quadratic_dual(p), 2).values()[2];
        CHECK(d + dd == N * N);
    }
}

TEST_CASE("quadratic dual needs homogeneous relations") {
    Presentation p(names(2), {x(0) * x(1) - x(1) * x(0) - x(0)});
    CHECK_THROWS(quadratic_dual(p));
}

TEST_CASE("ideal membership and centrality in the polynomial algebra") {
    Presentation p = polynomial(3);
    CHECK(ideal_member(p, x(0) * x(1) * x(2) - x(2) * x(1) * x(0), 3));
    CHECK_FALSE(ideal_member(p, x(0) * x(1), 3));
    CHECK_FALSE(ideal_member(p, x(0), 3));
    CHECK(is_central(p, x(1)));
    CHECK_FALSE(is_central(exterior(3), x(1)));
}

TEST_CASE("centrality of the quantum trace in B(sl_q(n))") {
    for (int n : {2, 3}) {
        Scalar q = n == 2 ? Scalar::q() : Scalar::parse("7/5");
        Presentation b = bmq(n, q);
        NCPoly utr;
        for (auto& [i, c] : q_trace(n, q)) utr = utr + NCPoly::gen(int(i), c);
        CHECK(is_central(b, utr));
        CHECK_FALSE(is_central(b, x(1)));  // X^1_2
        CHECK_THROWS_AS(central_quotient(b, x(1), Scalar(1)), NotCentral);
    }
}

TEST_CASE("filtered dims of U(sl_2) follow PBW") {
    Presentation U = u_presentation(classical_sl2());
    GradedDims f = filtered_dims(U, 4);
    CHECK(f.values() == symmetric_dims(3, 4));
    CHECK(f.slack >= 0);
}

TEST_CASE("inhomogeneous relations can collapse the algebra") {
    // [x,y] = x and [x,y] = y give x = y, hence [x,y] = 0 and x = 0.
    Presentation p(names(2), {x(0) * x(1) - x(1) * x(0) - x(0), x(0) * x(1) - x(1) * x(0) - x(1)});
    CHECK(ideal_member(p, x(0) - x(1), 2));
    CHECK(ideal_member(p, x(0), 2));
    // x enters the ideal at degree 3 and x^2 only at degree 4, beyond the default slack window.
    CHECK_THROWS_AS(filtered_dims(p, 2), NoStabilization);
    TruncationOptions wide;
    wide.slack_ceiling = 6;
    CHECK(filtered_dims(p, 2, wide).values() == std::vector<uint64_t>{1, 0, 0});
    CHECK_FALSE(ideal_member(Presentation(names(2), {x(0) * x(1) - x(1) * x(0) - x(0)}), x(0), 2));
}

TEST_CASE("Witten relations from the reduced enveloping algebra of sl_q(2)") {
    Scalar q = Scalar::q();
    BraidedLieAlgebra L = matrix_braided_lie(multiparam_R(MultiParams::standard(2, q)));
    Presentation B = enveloping_presentation(L);
    Scalar lambda = Scalar(1) + mu_of(q).pow(2);
    NCPoly utr = NCPoly::gen(0, q.pow(2)) + NCPoly::gen(3, q.pow(4));
    Presentation W = central_quotient(B, utr, counit(L, q_trace(2, q)) * lambda, {x(0) - x(3), x(2), x(1)},
                                      {"h", "X", "Y"});
    auto rep = witten_check(W, q, lambda);
    INFO(rep.text());
    CHECK(rep.all_pass());
    auto lim = witten_classical_limit(W);
    INFO(lim.text());
    CHECK(lim.all_pass());
    CHECK_FALSE(witten_check(W, q, lambda + Scalar(1)).all_pass());
    CHECK(filtered_dims(W, 3).values() == symmetric_dims(3, 3));
}

TEST_CASE("homogenization of sl_q(2) recovers U of its quantum Lie algebra") {
    Scalar q = Scalar::q();
    BraidedLieAlgebra L = matrix_braided_lie(multiparam_R(MultiParams::standard(2, q)));
    SparseVec utr = q_trace(2, q);
    SplitData s = split_decompose(L, split_element(L, utr));
    REQUIRE(s.lambda.has_value());

    // B(L) / <c - lambda> against U(ker eps, omega, lambda [,]).
    NCPoly c;
    for (auto& [i, v] : s.c) c = c + NCPoly::gen(int(i), v);
    std::vector<NCPoly> complement;
    for (size_t k = 1; k < s.basis.size(); ++k) {
        NCPoly e;
        for (auto& [i, v] : s.basis[k]) e = e + NCPoly::gen(int(i), v);
        complement.push_back(e);
    }
    Presentation Bq = central_quotient(enveloping_presentation(L), c, *s.lambda, complement);
    QuantumLieAlgebra g;
    g.labels = std::vector<std::string>(s.labels.begin() + 1, s.labels.end());
    g.sigma = s.omega;
    g.bracket = s.bracket.scaled(*s.lambda);
    Presentation U = u_presentation(g);
    CHECK(same_relations(Bq, U));
    CHECK(filtered_dims(Bq, 3).values() == filtered_dims(U, 3).values());

    // Trivial extension: B(k gamma + L) / <gamma - 1> has the layers of B(L).
    Presentation E = central_quotient(enveloping_presentation(trivial_extension(L)), x(0), Scalar(1));
    CHECK(filtered_dims(E, 3).values() == symmetric_dims(4, 3));
}
