#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qlie {

// Variable 0 is q; variables 1.. are the multiparameters r_ij (i<j<=6).
constexpr int kMaxVars = 16;
constexpr int kMaxParamIndex = 6;

int var_q();
int var_r(int i, int j);
std::string var_name(int v);
// -1 when the name is not a known indeterminate.
int var_lookup(const std::string& name);

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};

    bool is_one() const;
    int total_degree() const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    // Pure lex, variable 0 most significant.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b.e < a.e; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q, terms sorted by descending lex order.
class Poly {
public:
    using Term = std::pair<Monomial, mpq_class>;

    Poly() = default;
    explicit Poly(const mpq_class& c);
    static Poly variable(int v, int exponent = 1);
    static Poly monomial(const Monomial& m, const mpq_class& c);
    static Poly from_terms(std::vector<Term> terms);
    // Terms already strictly descending with nonzero coefficients.
    static Poly from_sorted(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    bool is_monomial() const { return t_.size() == 1; }
    mpq_class constant_value() const;
    const mpq_class& leading_coeff() const { return t_.front().second; }
    const Monomial& leading_monomial() const { return t_.front().first; }

    int degree(int v) const;
    // Bitmask of variables that occur.
    uint32_t support() const;
    Monomial monomial_content() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const mpq_class& c) const;
    Poly mul_monomial(const Monomial& m) const;
    Poly div_monomial(const Monomial& m) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Leading coefficient becomes 1.
    Poly monic() const;
    // Integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive_integer() const;

    // Coefficients with respect to v: result[k] is the coefficient of v^k.
    std::vector<Poly> coeffs_in(int v) const;
    static Poly from_coeffs_in(int v, const std::vector<Poly>& c);

    std::string str() const;

private:
    std::vector<Term> t_;
};

// Exact quotient; throws std::domain_error when b does not divide a.
Poly divexact(const Poly& a, const Poly& b);
// Monic gcd (gcd(0,0) = 0).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qlie
