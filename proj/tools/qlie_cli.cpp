// qlie: build, verify and present braided Lie algebras from the command line.
#include "qlie/groups.hpp"
#include "qlie/lie.hpp"
#include "qlie/present.hpp"
#include "qlie/rmatrix.hpp"
#include "qlie/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace qlie;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string verb, target;
    int n = 2;
    std::vector<std::string> params;
    std::string q;
    bool symbolic = false;
    int max_degree = -1;
    int slack = -1;
    std::string format = "text";
};

void progress(const std::string& msg) { std::cerr << "[qlie] " << msg << std::endl; }

// "S3/(12)" -> group and the conjugacy class of the named element.
struct ClassTarget {
    FiniteGroup G;
    std::vector<int> C;
};

ClassTarget parse_class(const std::string& spec) {
    auto slash = spec.find('/');
    if (slash == std::string::npos) throw UsageError("expected <group>/<element>, got '" + spec + "'");
    FiniteGroup G = FiniteGroup::by_name(spec.substr(0, slash));
    int g = G.index_of(spec.substr(slash + 1));
    if (g == G.identity()) throw UsageError("the identity class does not give a calculus");
    for (auto& C : conjugacy_classes(G))
        if (std::find(C.begin(), C.end(), g) != C.end()) return {G, C};
    throw std::logic_error("element outside every class");
}

class Runner {
public:
    explicit Runner(Options o) : o_(std::move(o)) {}

    // Validates everything that does not require computation.
    void validate() {
        static const std::map<std::string, std::vector<std::string>> targets = {
            {"build", {"rmatrix", "sl", "group:", "calculus:", "ext-calculus:"}},
            {"verify", {"rmatrix", "sl", "braided", "split", "witten", "groups:"}},
            {"relations", {"bmq", "frt", "witten", "dual-bmq", "b:", "u:"}},
            {"dims", {"bmq", "witten", "dual-bmq", "b:", "u:"}},
            {"demo", {"s3-zero-divisor"}},
        };
        auto it = targets.find(o_.verb);
        if (it == targets.end()) throw UsageError("unknown verb '" + o_.verb + "'");
        bool known = false;
        for (auto& t : it->second) {
            if (t.back() == ':' ? o_.target.rfind(t, 0) == 0 : o_.target == t) known = true;
        }
        if (!known) throw UsageError("unknown target '" + o_.target + "' for " + o_.verb);
        if (o_.format != "text" && o_.format != "json") throw UsageError("--format must be text or json");
        if (o_.symbolic && !o_.q.empty()) throw UsageError("--symbolic and --q are exclusive");
        if (o_.n < 2 || o_.n > 6) throw UsageError("--n must lie in 2..6");
        if (o_.slack != -1 && o_.slack < 0) throw UsageError("--slack must be nonnegative");
        params_ = multiparams();
        if (o_.target.find(':') != std::string::npos && o_.target.rfind("groups:", 0) != 0 &&
            o_.target.rfind("group:", 0) != 0)
            cls_ = parse_class(o_.target.substr(o_.target.find(':') + 1));
        if (o_.target.rfind("group", 0) == 0) group_ = FiniteGroup::by_name(o_.target.substr(o_.target.find(':') + 1));
    }

    int run() {
        const std::string& v = o_.verb;
        if (v == "build") return build();
        if (v == "verify") return verify();
        if (v == "relations") return relations();
        if (v == "dims") return dims();
        return emit_report(s3_zero_divisor_demo());
    }

private:
    Options o_;
    MultiParams params_;
    std::optional<ClassTarget> cls_;
    std::optional<FiniteGroup> group_;

    MultiParams multiparams() const {
        std::string q;
        if (!o_.q.empty()) q = o_.q;
        else if (!o_.symbolic && o_.n >= 3) q = "7/5";
        std::string spec = (o_.params.empty() ? "standard:n=" : "multiparam:n=") + std::to_string(o_.n);
        if (!q.empty()) spec += ";q=" + q;
        for (auto& kv : o_.params) spec += ";" + kv;
        try {
            return parse_multiparams(spec);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }

    int degree(int fallback) const { return o_.max_degree >= 0 ? o_.max_degree : fallback; }
    TruncationOptions truncation() const {
        TruncationOptions t;
        if (o_.slack >= 0) {
            t.slack_start = o_.slack;
            t.slack_ceiling = std::max(t.slack_ceiling, o_.slack + 2);
        }
        return t;
    }

    RMatrix rmatrix() const {
        progress("building R-matrix, n = " + std::to_string(params_.n) + ", q = " + params_.q.str());
        return multiparam_R(params_);
    }
    BraidedLieAlgebra sl() const {
        RMatrix r = rmatrix();
        progress("building the matrix braided Lie algebra");
        return matrix_braided_lie(r);
    }
    Presentation bmq() const {
        BraidedLieAlgebra L = sl();
        progress("extracting relations of B(L)");
        return enveloping_presentation(L);
    }
    Presentation witten() const {
        BraidedLieAlgebra L = sl();
        if (params_.n != 2) throw UsageError("the Witten presentation needs --n 2");
        Presentation B = enveloping_presentation(L);
        Scalar u = counit(L, q_trace(2, params_.q));
        Scalar lambda = Scalar(1) + mu_of(params_.q).pow(2);
        // Basis h = X^1_1 - X^2_2, X = X^2_1, Y = X^1_2 next to utr.
        NCPoly utr = NCPoly::gen(0, params_.q.pow(2)) + NCPoly::gen(3, params_.q.pow(4));
        return central_quotient(B, utr, u * lambda, {NCPoly::gen(0) - NCPoly::gen(3), NCPoly::gen(2), NCPoly::gen(1)},
                                {"h", "X", "Y"});
    }
    Presentation group_presentation(bool u) const {
        if (u) return u_presentation(quantum_lie_of_calculus(cls_->G, cls_->C));
        return enveloping_presentation(calculus_braided_lie(cls_->G, cls_->C));
    }
    Presentation presentation() const {
        const std::string& t = o_.target;
        if (t == "bmq") return bmq();
        if (t == "dual-bmq") return quadratic_dual(bmq());
        if (t == "witten") return witten();
        if (t == "frt") return frt_relations(rmatrix());
        return group_presentation(t.rfind("u:", 0) == 0);
    }

    void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

    int emit_report(const AxiomReport& rep) {
        if (o_.format == "json") emit(to_json(rep));
        else std::cout << rep.text();
        return rep.all_pass() ? 0 : 1;
    }

    int build() {
        const std::string& t = o_.target;
        if (t == "rmatrix") {
            RMatrix r = rmatrix();
            if (o_.format == "json") emit(to_json(r.R));
            else std::cout << "R-matrix with " << r.R.nnz() << " nonzero entries, n = " << r.n() << "\n";
            return 0;
        }
        if (t.rfind("group:", 0) == 0) {
            if (o_.format == "json") emit(to_json(*group_));
            else
                for (auto& C : conjugacy_classes(*group_)) {
                    for (int g : C) std::cout << group_->labels()[g] << " ";
                    std::cout << "\n";
                }
            return 0;
        }
        BraidedLieAlgebra L = t == "sl" ? sl() : calculus_braided_lie(cls_->G, cls_->C, t.rfind("ext-", 0) == 0);
        if (o_.format == "json") {
            emit(to_json(L));
        } else {
            std::cout << "braided Lie algebra of dimension " << L.dim() << "\n";
            for (int i = 0; i < L.dim(); ++i)
                for (int j = 0; j < L.dim(); ++j) {
                    NCPoly b;
                    for (auto& [r, c] : L.bracket.column(uint32_t(i * L.dim() + j))) b.add({int(r)}, c);
                    if (!b.is_zero())
                        std::cout << "[" << L.labels[i] << ", " << L.labels[j] << "] = " << b.str(L.labels) << "\n";
                }
        }
        return 0;
    }

    int verify() {
        const std::string& t = o_.target;
        AxiomReport rep;
        if (t == "rmatrix") {
            rep.merge(verify_rmatrix(rmatrix()));
            progress("checking the M-lemma");
            rep.merge(verify_M_lemma(params_));
        } else if (t == "sl") {
            BraidedLieAlgebra L = sl();
            progress("checking the relation table");
            rep.merge(verify_relation_table(L, params_));
            progress("checking the bracket tables");
            rep.merge(verify_sl_structure(L, params_));
        } else if (t == "braided") {
            RMatrix r = rmatrix();
            BraidedLieAlgebra L = matrix_braided_lie(r);
            progress("checking the construction");
            rep.merge(verify_matrix_construction(L, r));
            progress("checking the braided Lie axioms");
            rep.merge(check_braided_axioms(L));
        } else if (t == "split") {
            BraidedLieAlgebra L = sl();
            SplitData s = split_decompose(L, split_element(L, q_trace(params_.n, params_.q)));
            rep.merge(s.report);
            Scalar want = Scalar(1) + mu_of(params_.q).pow(2);
            rep.add("lambda = 1+mu^2", s.lambda && *s.lambda == want,
                    s.lambda ? "lambda = " + s.lambda->str() : "Theta is not scalar");
        } else if (t == "witten") {
            Presentation W = witten();
            Scalar lambda = Scalar(1) + mu_of(params_.q).pow(2);
            rep.merge(witten_check(W, params_.q, lambda));
            rep.merge(witten_classical_limit(W));
        } else {
            for (auto& C : conjugacy_classes(*group_)) {
                if (C.front() == group_->identity()) continue;
                std::string tag = "class of " + group_->labels()[C.front()] + ": ";
                progress("checking the " + tag.substr(0, tag.size() - 2));
                rep.merge(check_quantum_axioms(quantum_lie_of_calculus(*group_, C)), tag + "quantum ");
                rep.merge(check_braided_axioms(calculus_braided_lie(*group_, C)), tag);
                BraidedLieAlgebra ext = calculus_braided_lie(*group_, C, true);
                rep.merge(check_braided_axioms(ext), tag + "extension ");
                rep.merge(goodness_check(ext, SparseVec{{0, Scalar(1)}}), tag + "extension ");
            }
        }
        return emit_report(rep);
    }

    int relations() {
        Presentation p = presentation();
        if (o_.format == "json") emit(to_json(p));
        else std::cout << p.str();
        return 0;
    }

    int dims() {
        const std::string& t = o_.target;
        Presentation p = presentation();
        int d = degree(t == "bmq" || t == "dual-bmq" ? (params_.n == 2 ? 4 : 2) : 3);
        progress("computing dimensions through degree " + std::to_string(d));
        GradedDims g = p.homogeneous() ? graded_dims(p, d, truncation()) : filtered_dims(p, d, truncation());
        if (o_.format == "json") {
            emit(to_json(g));
        } else {
            std::string s;
            for (auto x : g.values()) s += (s.empty() ? "" : " ") + std::to_string(x);
            std::cout << s << "\n";
            if (g.slack >= 0) progress("stabilized at slack " + std::to_string(g.slack));
        }
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Braided Lie algebras: build, verify, relations, dims, demo"};
    app.add_option("verb", o.verb, "build | verify | relations | dims | demo")->required();
    app.add_option("target", o.target, "what to act on, e.g. sl, bmq, witten, u:S3/(12)")->required();
    app.add_option("--n", o.n, "matrix size");
    app.add_option("--params", o.params, "multiparameters k=v,... (r12=2,r13=3/2)")->delimiter(',');
    app.add_option("--q", o.q, "rational value for q");
    app.add_flag("--symbolic", o.symbolic, "keep q symbolic");
    app.add_option("--max-degree", o.max_degree, "degree bound for dims");
    app.add_option("--slack", o.slack, "starting slack for inhomogeneous truncation");
    app.add_option("--format", o.format, "text | json");
    app.footer("Environment: QLIE_THREADS sets the number of worker threads.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Runner runner(o);
    try {
        runner.validate();
    } catch (const std::exception& e) {
        std::cerr << "qlie: " << e.what() << "\n";
        return 2;
    }
    try {
        return runner.run();
    } catch (const UsageError& e) {
        std::cerr << "qlie: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qlie: " << e.what() << "\n";
        return 1;
    }
}
