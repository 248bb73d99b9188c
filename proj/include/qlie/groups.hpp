#pragma once

#include "qlie/lie.hpp"
#include "qlie/report.hpp"

#include <string>
#include <vector>

namespace qlie {

class InvalidGroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotAdInvariant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class ContainsIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Multiplication table group; table[a][b] = index of ab. Validated on construction.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table, int identity);

    int order() const { return int(labels_.size()); }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    int index_of(const std::string& label) const;

    static FiniteGroup symmetric(int n);  // n <= 5, elements in cycle notation
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);  // order 2n, rotations r^k and reflections s r^k
    // "S3", "S4", "Z4", "D4", and generally S<n>, Z<n>, D<n>.
    static FiniteGroup by_name(const std::string& name);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int e_;
    std::vector<int> inv_;
};

// Orbits of conjugation, each sorted, ordered by smallest element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);

// L_C on {X_g : g in C}; extended puts X_e first and gives the trivial extension.
BraidedLieAlgebra calculus_braided_lie(const FiniteGroup& G, const std::vector<int>& C, bool extended = false);
// g_C on {x_g = g - e : g in C} with sigma, bracket, delta(x_g) = x_g (x) x_g and Psi = flip.
QuantumLieAlgebra quantum_lie_of_calculus(const FiniteGroup& G, const std::vector<int>& C);

// Transposition class of S3 with X_1, X_2, X_3 = X_(12), X_(13), X_(23).
AxiomReport s3_zero_divisor_demo();

}  // namespace qlie
