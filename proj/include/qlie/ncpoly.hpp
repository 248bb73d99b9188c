#pragma once

#include "qlie/scalar.hpp"
#include "qlie/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace qlie {

using Word = std::vector<int>;

// Degree-lexicographic order on words.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of the free algebra on generators 0..N-1.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(const Scalar& c);
    static NCPoly gen(int i, const Scalar& c = Scalar(1));
    static NCPoly word(const Word& w, const Scalar& c = Scalar(1));

    void add(const Word& w, const Scalar& c);
    const std::map<Word, Scalar, DegLex>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;  // -1 for zero
    NCPoly part(int deg) const;
    Scalar coeff(const Word& w) const;

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const Scalar& c) const;
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    NCPoly map_scalars(const std::function<Scalar(const Scalar&)>& f) const;
    // Substitutes a degree-<=1 image for every generator.
    NCPoly substitute(const std::vector<NCPoly>& images) const;

    std::string str(const std::vector<std::string>& labels) const;

private:
    std::map<Word, Scalar, DegLex> t_;
};

// Vector space T_{<=d} of words of degree <= d over N generators, indexed by degree
// blocks with deg-lex order inside each block.
struct WordSpace {
    int n_gens;
    int max_degree;
    uint64_t offset(int deg) const;
    uint64_t size() const { return offset(max_degree + 1); }
    uint32_t index(const Word& w) const;
    Word word(uint32_t idx) const;
    SparseVec embed(const NCPoly& p) const;
    NCPoly extract(const SparseVec& v) const;
};

}  // namespace qlie
