#pragma once

#include "qlie/poly.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace qlie {

class DenominatorVanishes : public std::runtime_error {
public:
    explicit DenominatorVanishes(std::set<std::string> vars);
    const std::set<std::string>& variables() const { return vars_; }

private:
    std::set<std::string> vars_;
};

// Element of Q(q, r_ij). Pure rationals are held as an mpq without any polynomial
// storage; everything else is a reduced fraction num/den with den monic in lex order.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : c_(v) {}
    Scalar(const mpq_class& v) : c_(v) {}
    static Scalar fraction(const Poly& num, const Poly& den);
    static Scalar from_poly(const Poly& p) { return fraction(p, Poly(1)); }
    static Scalar var(int v) { return from_poly(Poly::variable(v)); }
    static Scalar q() { return var(var_q()); }
    static Scalar r(int i, int j) { return var(var_r(i, j)); }
    static Scalar parse(const std::string& text);

    bool is_rational() const { return !f_; }
    const mpq_class& rational() const;
    bool is_zero() const { return !f_ && c_ == 0; }
    bool is_one() const { return !f_ && c_ == 1; }
    Poly num() const;
    Poly den() const;
    // Size proxy used for pivot selection.
    size_t weight() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text: "p" when the denominator is 1, "(p)/(d)" otherwise.
    std::string str() const;

private:
    struct Frac {
        Poly num, den;
    };
    mpq_class c_;
    std::shared_ptr<const Frac> f_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Bindings = std::map<int, Scalar>;

Scalar specialize(const Scalar& s, const Bindings& b);
// Bindings keyed by indeterminate name ("q", "r12", ...).
Bindings bindings_by_name(const std::map<std::string, Scalar>& named);

// q, mu = q - 1/q, the q^2-integers [a] = (1 - q^{2a})/(1 - q^2).
Scalar mu_of(const Scalar& q);
Scalar qint2(const Scalar& q, int a);

// Multiparameter data for the SL(n)-type family. r(i,j) for i<j is the stored
// parameter of the sorted pair; formulas access it exactly as written.
struct MultiParams {
    int n = 2;
    Scalar q = Scalar::q();
    std::map<std::pair<int, int>, Scalar> r;

    static MultiParams symbolic(int n);
    static MultiParams standard(int n, const Scalar& q);
    const Scalar& param(int i, int j) const;
    // The constraint prod_{i<j} r_ij/q = prod_{i>j} r_ji/q, column by column.
    bool satisfies_column_constraint() const;
};

// sigma_ijk of the multiparameter family; zero unless i,j,k are distinct.
Scalar cocycle(int i, int j, int k, const MultiParams& p, bool inverted = false);

}  // namespace qlie
