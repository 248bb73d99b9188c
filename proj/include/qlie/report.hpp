#pragma once

#include "qlie/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlie {

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string witness;  // empty on pass
};

class AxiomReport {
public:
    void add(const std::string& axiom, bool pass, const std::string& witness = {});
    // Records a pass when a == b, otherwise the first differing basis input.
    void check_equal(const std::string& axiom, const Tensor& a, const Tensor& b,
                     const std::vector<std::string>& labels = {});
    void merge(const AxiomReport& other, const std::string& prefix = {});

    bool all_pass() const;
    const std::vector<AxiomResult>& results() const { return r_; }
    const AxiomResult* find(const std::string& axiom) const;
    bool passed(const std::string& axiom) const;
    std::string text() const;

private:
    std::vector<AxiomResult> r_;
};

// (T(x)id)(id(x)T)(T(x)id) = (id(x)T)(T(x)id)(id(x)T) on V^{(x)3}.
AxiomReport braid_relation_check(const Tensor& t, const std::string& axiom = "braid relation",
                                 const std::vector<std::string>& labels = {});

}  // namespace qlie
