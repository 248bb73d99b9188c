#include "qlie/report.hpp"

namespace qlie {

void AxiomReport::add(const std::string& axiom, bool pass, const std::string& witness) {
    r_.push_back({axiom, pass, pass ? std::string() : witness});
}

void AxiomReport::check_equal(const std::string& axiom, const Tensor& a, const Tensor& b,
                              const std::vector<std::string>& labels) {
    auto w = first_difference(a, b, labels);
    add(axiom, !w, w.value_or(""));
}

void AxiomReport::merge(const AxiomReport& other, const std::string& prefix) {
    for (auto& r : other.r_) r_.push_back({prefix + r.axiom, r.pass, r.witness});
}

bool AxiomReport::all_pass() const {
    for (auto& r : r_)
        if (!r.pass) return false;
    return true;
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
    for (auto& r : r_)
        if (r.axiom == axiom) return &r;
    return nullptr;
}

bool AxiomReport::passed(const std::string& axiom) const {
    auto* r = find(axiom);
    return r && r->pass;
}

std::string AxiomReport::text() const {
    std::string s;
    for (auto& r : r_) {
        s += (r.pass ? "pass  " : "FAIL  ") + r.axiom;
        if (!r.pass && !r.witness.empty()) s += "  [" + r.witness + "]";
        s += "\n";
    }
    return s;
}

AxiomReport braid_relation_check(const Tensor& t, const std::string& axiom,
                                 const std::vector<std::string>& labels) {
    if (t.in_arity() != 2 || t.out_arity() != 2) throw ArityMismatch("braid relation needs a 2 -> 2 map");
    Tensor id = Tensor::identity(t.dim(), 1);
    Tensor t12 = tensor(t, id), t23 = tensor(id, t);
    AxiomReport r;
    r.check_equal(axiom, chain({t12, t23, t12}), chain({t23, t12, t23}), labels);
    return r;
}

}  // namespace qlie
