#include "doctest.h"
#include "qlie/rmatrix.hpp"

using namespace qlie;

namespace {

Scalar S(const char* s) { return Scalar::parse(s); }

MultiParams generic3(const Scalar& q) {
    MultiParams p = MultiParams::symbolic(3);
    p.q = q;
    p.r[{1, 2}] = S("2");
    p.r[{1, 3}] = S("3/2");
    p.r[{2, 3}] = S("5/3");
    return p;
}

}  // namespace

TEST_CASE("multiparameter R-matrix entries") {
    Tensor r = multiparam_tensor(MultiParams::standard(2, Scalar::q()));
    Scalar q = Scalar::q(), mu = q - q.inverse();
    TensorBuilder tb(2, 2, 2);
    tb.add({0, 0}, {0, 0}, q);
    tb.add({1, 1}, {1, 1}, q);
    tb.add({0, 1}, {0, 1}, Scalar(1));
    tb.add({1, 0}, {1, 0}, Scalar(1));
    tb.add({0, 1}, {1, 0}, mu);
    CHECK(r == tb.build());

    MultiParams one = MultiParams::symbolic(2);
    one.q = Scalar(1);
    one.r[{1, 2}] = Scalar(1);
    CHECK(multiparam_tensor(one) == Tensor::identity(2, 2));

    // r_ij = q: every off-diagonal M is 1 and L_ij = mu above the diagonal.
    Tensor r3 = multiparam_tensor(MultiParams::standard(3, q));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(r3.at({i, j}, {i, j}) == (i == j ? q : Scalar(1)));
            if (i < j) CHECK(r3.at({i, j}, {j, i}) == mu);
        }

    MultiParams zero = MultiParams::symbolic(2);
    zero.r[{1, 2}] = Scalar();
    CHECK_THROWS_AS(multiparam_tensor(zero), ZeroParameter);
}

TEST_CASE("verify_rmatrix on the multiparameter family") {
    auto sym = verify_rmatrix(multiparam_R(MultiParams::symbolic(2)));
    INFO(sym.text());
    CHECK(sym.all_pass());
    CHECK(sym.results().size() == 7);

    auto std3 = verify_rmatrix(multiparam_R(MultiParams::standard(3, S("7/5"))));
    INFO(std3.text());
    CHECK(std3.all_pass());

    auto gen3 = verify_rmatrix(multiparam_R(generic3(S("7/5"))));
    INFO(gen3.text());
    CHECK(gen3.all_pass());
}

TEST_CASE("verify_rmatrix negative control") {
    Tensor r = multiparam_tensor(MultiParams::standard(2, Scalar::q()));
    TensorBuilder bump(2, 2, 2);
    bump.add({0, 1}, {0, 1}, Scalar(1));
    auto rep = verify_rmatrix(RMatrix::from_tensor(r + bump.build()));
    CHECK_FALSE(rep.passed("Yang-Baxter"));
    CHECK_FALSE(rep.find("Yang-Baxter")->witness.empty());
}

TEST_CASE("flip and identity as R-matrices") {
    CHECK_THROWS_AS(RMatrix::from_tensor(Tensor::flip(2)), Singular);
    RMatrix id = RMatrix::from_tensor(Tensor::identity(2, 2), Scalar(1));
    auto rep = verify_rmatrix(id);
    CHECK(rep.passed("Yang-Baxter"));
    CHECK(rep.passed("second inverse"));
}

TEST_CASE("M-product lemma") {
    auto r2 = verify_M_lemma(MultiParams::symbolic(2));
    INFO(r2.text());
    CHECK(r2.all_pass());
    MultiParams p3 = MultiParams::symbolic(3);
    p3.q = S("7/5");
    auto r3 = verify_M_lemma(p3);
    INFO(r3.text());
    CHECK(r3.all_pass());

    // i = j = k: the delta terms give q + 2/q - (q + 1/q) = 1/q.
    MultiParams p = MultiParams::symbolic(2);
    Scalar lhs = M_entry(p, 1, 1).inverse() * M_entry(p, 1, 1) * M_entry(p, 1, 1).inverse();
    CHECK(lhs == Scalar::q().inverse());
}

TEST_CASE("FRT relations") {
    // R = id: commutativity t^i_j t^k_l = t^k_l t^i_j.
    Presentation comm = frt_relations(RMatrix::from_tensor(Tensor::identity(2, 2), Scalar(1)));
    CHECK(rank_of(comm.relation_vectors()) == 6);
    std::vector<SparseVec> expect;
    WordSpace ws{4, 2};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) expect.push_back(ws.embed(NCPoly::word({a, b}) - NCPoly::word({b, a})));
    CHECK(span_equal(comm.relation_vectors(), expect));

    RMatrix std2 = multiparam_R(MultiParams::standard(2, Scalar::q()));
    Presentation a = frt_relations(std2);
    CHECK(a.homogeneous());
    CHECK(rank_of(a.relation_vectors()) == 6);

    RMatrix scaled = RMatrix::from_tensor(std2.R.scaled(S("q^2+1")));
    CHECK(span_equal(frt_relations(scaled).relation_vectors(), a.relation_vectors()));
}

TEST_CASE("FRT relations of the flip are empty") {
    // The flip is not second-invertible, so build the presentation directly.
    RMatrix f;
    f.R = Tensor::flip(2);
    CHECK(frt_relations(f).relations.empty());
}

TEST_CASE("parse multiparameter spec strings") {
    MultiParams p = parse_multiparams("multiparam:n=3;q=7/5;r12=q;r13=2");
    CHECK(p.n == 3);
    CHECK(p.q == S("7/5"));
    CHECK(p.param(1, 2) == S("7/5"));
    CHECK(p.param(1, 3) == S("2"));
    CHECK(p.param(2, 3) == S("r23"));
    MultiParams s = parse_multiparams("standard:n=2");
    CHECK(s.param(1, 2) == Scalar::q());
    CHECK_THROWS(parse_multiparams("bogus:n=2"));
    CHECK_THROWS(parse_multiparams("multiparam:n=2;r13=1"));
}
