#pragma once

// Weyl-group invariants attached to nilpotent orbits: Kac coordinates of
// sigma_f, the class w_f of an irreducible nilpotent and the composite class
// w_f = prod_j w_{f[j]} of a normal form.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilnf/classical.hpp"
#include "nilnf/normal_form.hpp"
#include "nilnf/rootdata.hpp"

namespace nilnf {

/// Integer polynomial, coefficient of x^i at index i, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<long long> coeffs);
    static Polynomial monomial(int degree, long long c = 1);
    /// x^n - 1 divided by phi_d for every proper divisor d of n.
    static Polynomial cyclotomic(int n);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<long long>& coefficients() const { return c_; }
    long long operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    bool is_zero() const { return c_.empty(); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    Polynomial pow(int e) const;

    /// Quotient by a monic divisor when the remainder is zero.
    std::optional<Polynomial> divide_exact(const Polynomial& monic) const;

    /// "x^3+1", "x^2-x+1".
    std::string to_string() const;

private:
    std::vector<long long> c_;
};

/// n -> multiplicity of phi_n.
using CyclotomicFactors = std::map<int, int>;

/// Throws VerificationError if a non-cyclotomic factor remains.
CyclotomicFactors cyclotomic_factor(const Polynomial& p);
Polynomial from_factors(const CyclotomicFactors& f);
/// Descending n, "phi_18*phi_2", "phi_6^4"; "1" when empty.
std::string factors_to_string(const CyclotomicFactors& f);
/// Inverse of factors_to_string.
CyclotomicFactors parse_factors(std::string_view text);
/// lcm of the n with phi_n present: the order of any matrix of finite order
/// with this characteristic polynomial and semisimple action.
int factors_order(const CyclotomicFactors& f);

struct KacData {
    std::vector<int> labels;
    int s0 = 2;
    int modulus = 0;
    bool even = false;
    int order = 0;
    /// For even f: s_0 = 1 followed by labels / 2. Empty otherwise.
    std::vector<int> halved;
};

/// s_0 = 2, m = s_0 + sum a_i s_i, order m/2 for even labels, else m.
/// Throws DomainError for a label outside {0, 1, 2} or a wrong length.
KacData kac_data(SimpleType type, const std::vector<int>& labels);

struct IrreducibleClass {
    NormalFormComponent component;
    /// Simple type of the algebra in which the component is irreducible.
    SimpleType type;
    /// Weighted Dynkin diagram, internal node order.
    std::vector<int> labels;
    /// Halved Kac coordinates, s_0 first, then internal node order.
    std::vector<int> diagram;
    int order = 0;
    Polynomial charpoly;
    CyclotomicFactors factors;
};

/// The A_{2k}, C_k, B_k and D_{2k+2}(a_k) families from closed formulas,
/// exceptional kinds from the embedded catalogue.
IrreducibleClass irreducible_class(const NormalFormComponent& component);

struct ComponentClass {
    NormalFormComponent component;
    int multiplicity = 1;
    int order = 0;
    CyclotomicFactors factors;
};

struct WeylClassInvariant {
    std::vector<ComponentClass> components;
    int total_order = 1;
    /// Characteristic polynomial of w_f on the reflection representation of
    /// the ambient algebra, degree = rank. Classical algebras only.
    std::optional<Polynomial> ambient_charpoly;
};

/// Component data and total order only. Throws DomainError for an empty
/// normal form.
WeylClassInvariant composite_invariant(const NormalForm& nf);

/// Adds the ambient characteristic polynomial from the signed-cycle model of
/// W(A), W(C), W(B), W(D) acting on coordinates:
///   sl: A_{2k} -> (2k+1)-cycle, C_k -> 2k-cycle, over S_N mod the trivial line;
///   sp: C_k -> negative k-cycle, A_{2k} -> positive (2k+1)-cycle;
///   so: B_k -> negative k-cycle, D_{2k+2}(a_k) -> two negative (k+1)-cycles,
///       A_{2k} -> positive (2k+1)-cycle, C_k from (2k,2k) -> two negative
///       k-cycles, C_1 from (3) or (3,1) -> negative 1-cycle each,
///       G_2 from (7) -> x^3+1.
/// Unused coordinates contribute x-1; for so_N with N even an odd number of
/// negative cycles turns one of them into x+1.
WeylClassInvariant composite_invariant(const ClassicalAlgebra& algebra, const Partition& p);

}  // namespace nilnf
