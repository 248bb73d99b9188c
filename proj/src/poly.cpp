#include "qlie/poly.hpp"

#include <algorithm>
#include <cctype>
#include <bit>
#include <stdexcept>

namespace qlie {

int var_q() { return 0; }

int var_r(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j || j > kMaxParamIndex)
        throw std::out_of_range("multiparameter index out of range");
    return 1 + (j - 1) * (j - 2) / 2 + (i - 1);
}

std::string var_name(int v) {
    if (v == 0) return "q";
    for (int j = 2; j <= kMaxParamIndex; ++j)
        for (int i = 1; i < j; ++i)
            if (var_r(i, j) == v) return "r" + std::to_string(i) + std::to_string(j);
    throw std::out_of_range("unknown variable index");
}

int var_lookup(const std::string& name) {
    if (name == "q") return 0;
    if (name.size() == 3 && name[0] == 'r' && std::isdigit(name[1]) && std::isdigit(name[2])) {
        int i = name[1] - '0', j = name[2] - '0';
        if (i >= 1 && j > i && j <= kMaxParamIndex) return var_r(i, j);
    }
    return -1;
}

bool Monomial::is_one() const {
    for (auto x : e)
        if (x) return false;
    return true;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
        uint32_t s = uint32_t(a.e[i]) + b.e[i];
        if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
        m.e[i] = uint16_t(s);
    }
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = uint16_t(a.e[i] - b.e[i]);
    return m;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(a.e[i], b.e[i]);
    return m;
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) t_.emplace_back(Monomial{}, c);
}

Poly Poly::variable(int v, int exponent) {
    Monomial m;
    m.e[v] = uint16_t(exponent);
    return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c) {
    Poly p;
    if (c != 0) p.t_.emplace_back(m, c);
    return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
    Poly p;
    p.t_ = std::move(terms);
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    Poly p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first)
            p.t_.back().second += t.second;
        else {
            if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
    return p;
}

mpq_class Poly::constant_value() const {
    if (t_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return t_[0].second;
}

int Poly::degree(int v) const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, int(t.first.e[v]));
    return d;
}

uint32_t Poly::support() const {
    uint32_t s = 0;
    for (auto& t : t_)
        for (int i = 0; i < kMaxVars; ++i)
            if (t.first.e[i]) s |= 1u << i;
    return s;
}

Monomial Poly::monomial_content() const {
    if (t_.empty()) return {};
    Monomial m = t_[0].first;
    for (auto& t : t_) m = mono_gcd(m, t.first);
    return m;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.t_) t.second = -t.second;
    return p;
}

static Poly merge_add(const Poly& a, const Poly& b, bool subtract) {
    std::vector<Poly::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto i = a.terms().begin(), ie = a.terms().end();
    auto j = b.terms().begin(), je = b.terms().end();
    while (i != ie || j != je) {
        if (j == je || (i != ie && i->first > j->first)) {
            out.push_back(*i++);
        } else if (i == ie || j->first > i->first) {
            out.emplace_back(j->first, subtract ? mpq_class(-j->second) : j->second);
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(i->second - j->second) : mpq_class(i->second + j->second);
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i, ++j;
        }
    }
    return Poly::from_sorted(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge_add(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    return merge_add(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.t_[0].second);
    if (a.is_constant()) return b.scaled(a.t_[0].second);
    std::vector<Poly::Term> out;
    out.reserve(a.t_.size() * b.t_.size());
    for (auto& x : a.t_)
        for (auto& y : b.t_) out.emplace_back(mono_mul(x.first, y.first), x.second * y.second);
    return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Poly p = *this;
    for (auto& t : p.t_) t.second *= c;
    return p;
}

Poly Poly::mul_monomial(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.t_) t.first = mono_mul(t.first, m);
    return p;
}

Poly Poly::div_monomial(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.t_) {
        if (!mono_divides(m, t.first)) throw std::domain_error("monomial does not divide");
        t.first = mono_div(t.first, m);
    }
    return p;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
        if (!(a.t_[i].first == b.t_[i].first) || a.t_[i].second != b.t_[i].second) return false;
    return true;
}

Poly Poly::monic() const {
    if (t_.empty()) return {};
    mpq_class lc = t_[0].second;
    if (lc == 1) return *this;
    return scaled(1 / lc);
}

Poly Poly::primitive_integer() const {
    if (t_.empty()) return {};
    mpz_class l = 1, g = 0;
    for (auto& t : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    for (auto& t : t_) {
        mpz_class v = t.second.get_num() * (l / t.second.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class s(l, g);
    s.canonicalize();
    if (t_[0].second < 0) s = -s;
    return scaled(s);
}

std::vector<Poly> Poly::coeffs_in(int v) const {
    int d = degree(v);
    std::vector<std::vector<Term>> buckets(std::max(d, 0) + 1);
    for (auto& t : t_) {
        Monomial m = t.first;
        int k = m.e[v];
        m.e[v] = 0;
        buckets[k].emplace_back(m, t.second);
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

Poly Poly::from_coeffs_in(int v, const std::vector<Poly>& c) {
    std::vector<Term> terms;
    for (size_t k = 0; k < c.size(); ++k)
        for (auto& t : c[k].terms()) {
            Monomial m = t.first;
            m.e[v] = uint16_t(k);
            terms.emplace_back(m, t.second);
        }
    return from_terms(std::move(terms));
}

static std::string mono_str(const Monomial& m) {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += var_name(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : t_) {
        mpq_class a = abs(c);
        if (c < 0)
            s += "-";
        else if (!first)
            s += "+";
        first = false;
        if (m.is_one()) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += mono_str(m);
        }
    }
    return s;
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    if (b.is_monomial()) return a.div_monomial(b.leading_monomial()).scaled(1 / b.leading_coeff());
    Poly r = a, q;
    std::vector<Poly::Term> qt;
    const Monomial& lb = b.leading_monomial();
    mpq_class lcb_inv = 1 / b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!mono_divides(lb, lr)) throw std::domain_error("inexact polynomial division");
        Poly t = Poly::monomial(mono_div(lr, lb), r.leading_coeff() * lcb_inv);
        qt.push_back(t.terms()[0]);
        r = r - t * b;
    }
    return Poly::from_sorted(std::move(qt));
}

namespace {

using Dense = std::vector<mpz_class>;  // index = degree

void dense_trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void dense_primitive(Dense& a) {
    mpz_class g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return;
    if (a.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Primitive PRS gcd of univariate integer polynomials.
Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a), dense_trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return a;
    dense_primitive(a), dense_primitive(b);
    while (!b.empty()) {
        if (b.size() == 1) return {mpz_class(1)};
        // a := prem(a, b)
        mpz_class lb = b.back();
        while (a.size() >= b.size()) {
            mpz_class la = a.back();
            size_t shift = a.size() - b.size();
            for (auto& c : a) c *= lb;
            for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
            dense_trim(a);
            if (a.empty()) break;
        }
        dense_primitive(a);
        std::swap(a, b);
    }
    return a;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
    auto cs = p.coeffs_in(v);
    Poly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_rec(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

// Pseudo-remainder of a by b viewed as polynomials in v.
Poly prem_in(const Poly& a, const Poly& b, int v) {
    auto bc = b.coeffs_in(v);
    int db = int(bc.size()) - 1;
    const Poly& lb = bc.back();
    Poly r = a;
    while (!r.is_zero()) {
        int dr = r.degree(v);
        if (dr < db) break;
        Poly lr = r.coeffs_in(v).back();
        Poly shifted = b.mul_monomial([&] { Monomial m; m.e[v] = uint16_t(dr - db); return m; }());
        r = r * lb - lr * shifted;
    }
    return r;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);

    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial gm = mono_gcd(ma, mb);
    if (a.is_monomial() || b.is_monomial()) return Poly::monomial(gm, 1);
    Poly x = ma.is_one() ? a : a.div_monomial(ma);
    Poly y = mb.is_one() ? b : b.div_monomial(mb);
    Poly mono = Poly::monomial(gm, 1);
    if (x.is_constant() || y.is_constant()) return mono;

    uint32_t sx = x.support(), sy = y.support();
    if (std::popcount(sx | sy) == 1) {
        int v = std::countr_zero(sx | sy);
        auto to_dense = [v](const Poly& p) {
            Poly pi = p.primitive_integer();
            Dense d(p.degree(v) + 1);
            for (auto& t : pi.terms()) d[t.first.e[v]] = t.second.get_num();
            return d;
        };
        Dense g = dense_gcd(to_dense(x), to_dense(y));
        std::vector<Poly::Term> terms;
        for (size_t k = 0; k < g.size(); ++k)
            if (g[k] != 0) {
                Monomial m;
                m.e[v] = uint16_t(k);
                terms.emplace_back(m, mpq_class(g[k]));
            }
        return (Poly::from_terms(std::move(terms)) * mono).monic();
    }

    // A variable present in only one argument: the gcd divides that argument's content.
    for (int v = 0; v < kMaxVars; ++v) {
        bool inx = sx >> v & 1, iny = sy >> v & 1;
        if (inx && !iny) return (gcd_rec(content_in(x, v), y) * mono).monic();
        if (iny && !inx) return (gcd_rec(x, content_in(y, v)) * mono).monic();
    }

    int v = std::countr_zero(sx);
    Poly cx = content_in(x, v), cy = content_in(y, v);
    Poly gc = gcd_rec(cx, cy);
    Poly px = divexact(x, cx).primitive_integer(), py = divexact(y, cy).primitive_integer();
    if (px.degree(v) < py.degree(v)) std::swap(px, py);
    while (!py.is_zero()) {
        if (py.degree(v) == 0) {
            px = Poly(1);
            break;
        }
        Poly r = prem_in(px, py, v);
        px = std::move(py);
        if (r.is_zero()) break;
        py = divexact(r, content_in(r, v)).primitive_integer();
    }
    if (!px.is_constant()) px = divexact(px, content_in(px, v));
    return (px * gc * mono).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

}  // namespace qlie
