#include "qlie/scalar.hpp"

#include <cctype>
#include <ostream>

namespace qlie {

static std::string join_vars(const std::set<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}

DenominatorVanishes::DenominatorVanishes(std::set<std::string> vars)
    : std::runtime_error("denominator vanishes under substitution of {" + join_vars(vars) + "}"),
      vars_(std::move(vars)) {}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Scalar s;
    if (num.is_zero()) return s;
    if (den.is_constant() && num.is_constant()) {
        s.c_ = num.constant_value() / den.constant_value();
        return s;
    }
    Poly g = gcd(num, den);
    Poly n = g.is_constant() ? num : divexact(num, g);
    Poly d = g.is_constant() ? den : divexact(den, g);
    mpq_class lc = d.leading_coeff();
    if (lc != 1) {
        n = n.scaled(1 / lc);
        d = d.scaled(1 / lc);
    }
    if (d.is_constant() && n.is_constant()) {
        s.c_ = n.constant_value();
        return s;
    }
    s.f_ = std::make_shared<const Frac>(Frac{std::move(n), std::move(d)});
    return s;
}

const mpq_class& Scalar::rational() const {
    if (f_) throw std::logic_error("scalar is not a rational number: " + str());
    return c_;
}

Poly Scalar::num() const { return f_ ? f_->num : Poly(c_); }
Poly Scalar::den() const { return f_ ? f_->den : Poly(1); }

size_t Scalar::weight() const {
    if (!f_) return 1 + mpz_sizeinbase(c_.get_num_mpz_t(), 2) / 64 + mpz_sizeinbase(c_.get_den_mpz_t(), 2) / 64;
    size_t w = 0;
    for (auto* p : {&f_->num, &f_->den})
        for (auto& t : p->terms())
            w += 4 + t.first.total_degree() + mpz_sizeinbase(t.second.get_num_mpz_t(), 2) / 64 +
                 mpz_sizeinbase(t.second.get_den_mpz_t(), 2) / 64;
    return w;
}

Scalar Scalar::operator-() const {
    Scalar s;
    if (!f_) {
        s.c_ = -c_;
        return s;
    }
    s.f_ = std::make_shared<const Frac>(Frac{-f_->num, f_->den});
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!f_) return Scalar(mpq_class(1 / c_));
    return fraction(f_->den, f_->num);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return Scalar(mpq_class(a.c_ + b.c_));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.f_ || !b.f_) {
        const Scalar& f = a.f_ ? a : b;
        const mpq_class& c = a.f_ ? b.c_ : a.c_;
        // gcd(n + c d, d) = gcd(n, d) = 1, so no reduction is needed.
        Scalar s;
        Poly n = f.f_->num + f.f_->den.scaled(c);
        if (n.is_zero()) return s;
        if (f.f_->den.is_constant() && n.is_constant()) return Scalar(n.constant_value());
        s.f_ = std::make_shared<const Scalar::Frac>(Scalar::Frac{std::move(n), f.f_->den});
        return s;
    }
    if (a.f_->den == b.f_->den) return Scalar::fraction(a.f_->num + b.f_->num, a.f_->den);
    Poly g = gcd(a.f_->den, b.f_->den);
    Poly da = divexact(a.f_->den, g), db = divexact(b.f_->den, g);
    return Scalar::fraction(a.f_->num * db + b.f_->num * da, a.f_->den * db);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.f_ && !b.f_) return Scalar(mpq_class(a.c_ * b.c_));
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (!a.f_ || !b.f_) {
        const Scalar& f = a.f_ ? a : b;
        const mpq_class& c = a.f_ ? b.c_ : a.c_;
        if (c == 1) return f;
        Scalar s;
        s.f_ = std::make_shared<const Scalar::Frac>(Scalar::Frac{f.f_->num.scaled(c), f.f_->den});
        return s;
    }
    Poly g1 = gcd(a.f_->num, b.f_->den), g2 = gcd(b.f_->num, a.f_->den);
    Poly n1 = g1.is_constant() ? a.f_->num : divexact(a.f_->num, g1);
    Poly d2 = g1.is_constant() ? b.f_->den : divexact(b.f_->den, g1);
    Poly n2 = g2.is_constant() ? b.f_->num : divexact(b.f_->num, g2);
    Poly d1 = g2.is_constant() ? a.f_->den : divexact(a.f_->den, g2);
    Poly n = n1 * n2, d = d1 * d2;
    mpq_class lc = d.leading_coeff();
    if (lc != 1) {
        n = n.scaled(1 / lc);
        d = d.scaled(1 / lc);
    }
    if (n.is_constant() && d.is_constant()) return Scalar(n.constant_value());
    Scalar s;
    s.f_ = std::make_shared<const Scalar::Frac>(Scalar::Frac{std::move(n), std::move(d)});
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.f_ || !b.f_) return !a.f_ && !b.f_ && a.c_ == b.c_;
    if (a.f_ == b.f_) return true;
    return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

std::string Scalar::str() const {
    if (!f_) return c_.get_str();
    if (f_->den.is_constant()) return f_->num.str();
    return "(" + f_->num.str() + ")/(" + f_->den.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("cannot parse scalar '" + s_ + "': " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Scalar power() {
        Scalar b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("expected exponent");
            long e = std::stol(s_.substr(st, i_ - st));
            if (neg && b.is_zero()) fail("negative power of zero");
            return b.pow(neg ? -e : e);
        }
        return b;
    }
    Scalar atom() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Scalar(mpq_class(mpz_class(s_.substr(st, i_ - st))));
        }
        if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
            size_t st = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::string name = s_.substr(st, i_ - st);
            int v = var_lookup(name);
            if (v < 0) fail("unknown indeterminate '" + name + "'");
            return Scalar::var(v);
        }
        fail("unexpected character");
    }
};

Scalar eval_poly(const Poly& p, const Bindings& b, std::set<std::string>& used) {
    Scalar acc;
    for (auto& [m, c] : p.terms()) {
        Scalar t(c);
        Monomial rest;
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m.e[v]) continue;
            auto it = b.find(v);
            if (it == b.end()) {
                rest.e[v] = m.e[v];
            } else {
                used.insert(var_name(v));
                t *= it->second.pow(m.e[v]);
            }
        }
        if (!rest.is_one()) t *= Scalar::from_poly(Poly::monomial(rest, 1));
        acc += t;
    }
    return acc;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).parse(); }

Scalar specialize(const Scalar& s, const Bindings& b) {
    if (s.is_rational()) return s;
    std::set<std::string> used;
    Scalar d = eval_poly(s.den(), b, used);
    if (d.is_zero()) throw DenominatorVanishes(used);
    return eval_poly(s.num(), b, used) / d;
}

Bindings bindings_by_name(const std::map<std::string, Scalar>& named) {
    Bindings b;
    for (auto& [k, v] : named) {
        int idx = var_lookup(k);
        if (idx < 0) throw std::invalid_argument("unknown indeterminate '" + k + "'");
        b[idx] = v;
    }
    return b;
}

Scalar mu_of(const Scalar& q) { return q - q.inverse(); }

Scalar qint2(const Scalar& q, int a) {
    Scalar q2 = q * q;
    return (Scalar(1) - q2.pow(a)) / (Scalar(1) - q2);
}

MultiParams MultiParams::symbolic(int n) {
    MultiParams p;
    p.n = n;
    p.q = Scalar::q();
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) p.r[{i, j}] = Scalar::r(i, j);
    return p;
}

MultiParams MultiParams::standard(int n, const Scalar& q) {
    MultiParams p;
    p.n = n;
    p.q = q;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) p.r[{i, j}] = q;
    return p;
}

const Scalar& MultiParams::param(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = r.find({i, j});
    if (it == r.end()) throw std::out_of_range("multiparameter r" + std::to_string(i) + std::to_string(j) + " not set");
    return it->second;
}

bool MultiParams::satisfies_column_constraint() const {
    for (int j = 1; j <= n; ++j) {
        Scalar lhs(1), rhs(1);
        for (int i = 1; i < j; ++i) lhs *= param(i, j) / q;
        for (int i = j + 1; i <= n; ++i) rhs *= param(j, i) / q;
        if (lhs != rhs) return false;
    }
    return true;
}

Scalar cocycle(int i, int j, int k, const MultiParams& p, bool inverted) {
    for (int x : {i, j, k})
        if (x < 1 || x > p.n) throw std::out_of_range("cocycle index out of range");
    if (i == j || j == k || i == k) return Scalar();
    int hi = std::max({i, j, k}), lo = std::min({i, j, k}), mid = i + j + k - hi - lo;
    // sigma maps (i,j,k) to (hi,mid,lo); its parity is that of the arrangement (i,j,k)
    // relative to descending order.
    int inversions = (i < j) + (i < k) + (j < k);
    Scalar base = p.q * p.param(lo, hi) / (p.param(mid, hi) * p.param(lo, mid));
    if (inverted) base = base.inverse();
    return inversions % 2 == 0 ? base : base.inverse();
}

}  // namespace qlie
