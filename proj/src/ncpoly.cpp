#include "qlie/ncpoly.hpp"

#include <stdexcept>

namespace qlie {

NCPoly::NCPoly(const Scalar& c) {
    if (!c.is_zero()) t_[{}] = c;
}

NCPoly NCPoly::gen(int i, const Scalar& c) { return word({i}, c); }

NCPoly NCPoly::word(const Word& w, const Scalar& c) {
    NCPoly p;
    p.add(w, c);
    return p;
}

void NCPoly::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

int NCPoly::degree() const { return t_.empty() ? -1 : int(t_.rbegin()->first.size()); }

NCPoly NCPoly::part(int deg) const {
    NCPoly p;
    for (auto& [w, c] : t_)
        if (int(w.size()) == deg) p.t_.emplace(w, c);
    return p;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly p = a;
    for (auto& [w, c] : b.t_) p.add(w, c);
    return p;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly p = a;
    for (auto& [w, c] : b.t_) p.add(w, -c);
    return p;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly p;
    for (auto& [u, c] : a.t_)
        for (auto& [v, d] : b.t_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            p.add(w, c * d);
        }
    return p;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly p;
    if (c.is_zero()) return p;
    for (auto& [w, s] : t_) p.t_.emplace(w, s * c);
    return p;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    for (; i != a.t_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

NCPoly NCPoly::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
    NCPoly p;
    for (auto& [w, s] : t_) p.add(w, f(s));
    return p;
}

NCPoly NCPoly::substitute(const std::vector<NCPoly>& images) const {
    NCPoly out;
    for (auto& [w, c] : t_) {
        NCPoly term(c);
        for (int g : w) term = term * images.at(g);
        out = out + term;
    }
    return out;
}

std::string NCPoly::str(const std::vector<std::string>& labels) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto& [w, c] = *it;
        std::string cs = c.str();
        bool simple = c.is_rational();
        bool neg = simple && c.rational() < 0;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        Scalar a = neg ? -c : c;
        std::string mono;
        for (int g : w) mono += (mono.empty() ? "" : " ") + labels.at(g);
        if (w.empty())
            s += simple ? a.str() : "(" + a.str() + ")";
        else if (a.is_one())
            s += mono;
        else
            s += (simple ? a.str() : "(" + a.str() + ")") + " " + mono;
    }
    return s;
}

uint64_t WordSpace::offset(int deg) const {
    uint64_t off = 0, p = 1;
    for (int e = 0; e < deg; ++e) {
        off += p;
        p *= uint64_t(n_gens);
    }
    return off;
}

uint32_t WordSpace::index(const Word& w) const {
    if (int(w.size()) > max_degree) throw std::out_of_range("word exceeds truncation degree");
    uint64_t p = 0;
    for (int g : w) p = p * uint64_t(n_gens) + uint64_t(g);
    uint64_t idx = offset(int(w.size())) + p;
    if (idx > 0xffffffffull) throw std::overflow_error("word space too large");
    return uint32_t(idx);
}

Word WordSpace::word(uint32_t idx) const {
    int deg = 0;
    while (offset(deg + 1) <= idx) ++deg;
    uint64_t p = idx - offset(deg);
    Word w(deg);
    for (int k = deg - 1; k >= 0; --k) {
        w[k] = int(p % uint64_t(n_gens));
        p /= uint64_t(n_gens);
    }
    return w;
}

SparseVec WordSpace::embed(const NCPoly& p) const {
    std::map<uint32_t, Scalar> m;
    for (auto& [w, c] : p.terms()) m[index(w)] += c;
    return sv_from_map(m);
}

NCPoly WordSpace::extract(const SparseVec& v) const {
    NCPoly p;
    for (auto& [i, c] : v) p.add(word(i), c);
    return p;
}

}  // namespace qlie
