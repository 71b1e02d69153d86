#pragma once

// Exact Chevalley-basis model of a simple Lie algebra, sl2-triple completion
// for nilpotents supported on negative root vectors, and the ad h grading.
//
// Basis layout for a root system with P positive roots and rank r:
//   [0, P)        e_beta     for beta = positive_roots()[k]
//   [P, 2P)       e_{-beta}
//   [2P, 2P + r)  h_i        (simple coroots)
//
// Structure constants follow the standard construction from extraspecial
// pairs: N_{alpha,beta} = +(p+1) on every extraspecial pair, all others
// forced by the Chevalley relations. [e_beta, e_{-beta}] = h_beta (the coroot)
// for beta positive and [h_i, e_gamma] = gamma(h_i) e_gamma.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilnf/rational.hpp"
#include "nilnf/rootdata.hpp"

namespace nilnf {

class ChevalleyAlgebra;

/// Sparse element: basis index -> coefficient, no stored zeros.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const ChevalleyAlgebra* parent) : parent_(parent) {}

    const ChevalleyAlgebra* parent() const { return parent_; }
    const std::map<std::size_t, Rational>& terms() const { return terms_; }

    void add(std::size_t index, const Rational& coeff);
    Rational coefficient(std::size_t index) const;
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.parent_ == b.parent_ && a.terms_ == b.terms_;
    }

private:
    const ChevalleyAlgebra* parent_ = nullptr;
    std::map<std::size_t, Rational> terms_;
};

class ChevalleyAlgebra {
public:
    explicit ChevalleyAlgebra(SimpleType type);

    const RootSystem& roots() const { return roots_; }
    int rank() const { return roots_.rank(); }
    std::size_t num_positive() const { return roots_.num_positive(); }
    std::size_t dimension() const { return 2 * num_positive() + rank(); }

    bool is_cartan(std::size_t index) const { return index >= 2 * num_positive(); }
    /// Signed root of a root-vector basis index.
    Root root_of(std::size_t index) const;

    std::size_t e(std::size_t positive_index) const { return positive_index; }
    std::size_t f(std::size_t positive_index) const { return num_positive() + positive_index; }
    std::size_t h(int i) const { return 2 * num_positive() + static_cast<std::size_t>(i); }
    /// Basis index of e_{-root} for a positive root given by coefficients.
    std::optional<std::size_t> negative_root_vector(const Root& positive) const;

    AlgebraElement zero() const { return AlgebraElement(this); }
    AlgebraElement basis(std::size_t index, const Rational& coeff = 1) const;

    /// Structure constant N_{a,b} for root-vector indices a, b with a+b a root;
    /// 0 otherwise.
    int structure_constant(std::size_t a, std::size_t b) const;

    /// [x_a, x_b] for basis indices, as a sparse list.
    std::vector<std::pair<std::size_t, int>> bracket_basis(std::size_t a, std::size_t b) const;

    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

    /// gamma(h) for the root of basis index `a`, with h given in coroot
    /// coordinates.
    Rational root_value(std::size_t a, const std::vector<Rational>& h_coords) const;

private:
    void build_structure_constants();

    RootSystem roots_;
    std::size_t two_p_ = 0;
    std::map<Root, std::size_t> root_index_;  // all 2P roots
    std::vector<long> sum_;                   // index of a+b, -1 if not a root, -2 if a = -b
    std::vector<int> n_;
};

struct Sl2Triple {
    AlgebraElement e;
    AlgebraElement h;
    AlgebraElement f;
};

struct GradedDecomposition {
    std::map<int, std::size_t> eigen_dims;
    int depth = 0;

    std::size_t dim(int j) const;
};

/// How sl2_complete found e. General means h is not in the Cartan (the
/// support of f is not a pi-system) and came from a full Jacobson-Morozov solve.
enum class CompletionSupport { MirroredSupport, AllPositiveRoots, General };

struct Sl2Completion {
    Sl2Triple triple;
    CompletionSupport support = CompletionSupport::MirroredSupport;
};

/// Completes a nonzero f supported on negative root vectors to an sl2-triple
/// by solving beta(h) = 2 on the support of f jointly with [e, f] = h, first
/// with e on the mirrored support, then on all positive roots, and finally
/// without restricting h to the Cartan. Throws
/// DomainError for f = 0 or f with non-negative-root terms, and
/// VerificationError if neither system is consistent.
Sl2Completion sl2_complete(const AlgebraElement& f);

/// Cartan element h in coroot coordinates; throws if h has non-Cartan terms.
std::vector<Rational> cartan_coordinates(const AlgebraElement& h);

/// ad h eigenspace dimensions. Throws VerificationError for a non-integral
/// eigenvalue and DomainError when h = 0 (depth undefined).
GradedDecomposition grading(const AlgebraElement& h);

/// Grading read off the Jordan blocks of ad f: a block of size s is an sl2
/// module with weights s-1, s-3, ..., 1-s. Needs no h at all.
GradedDecomposition grading_from_nilpotent(const AlgebraElement& f);

/// grading(t.h) when h is in the Cartan, grading_from_nilpotent(t.f) otherwise.
GradedDecomposition grading(const Sl2Triple& t);

/// Every label vector in {0,1,2}^rank whose ad h eigenspace dimensions equal
/// those of `gr`.
std::vector<std::vector<int>> labels_matching(const RootSystem& roots, const GradedDecomposition& gr);

/// Dominant representative of (alpha_i(h)); throws VerificationError if an
/// entry falls outside {0, 1, 2}.
std::vector<int> dynkin_labels(const AlgebraElement& h);

/// True if ad x is nilpotent (checked by repeated application to the basis).
bool is_ad_nilpotent(const AlgebraElement& x);

/// Cached algebra per type (construction of E8 is not free).
std::shared_ptr<const ChevalleyAlgebra> algebra_for(SimpleType type);

}  // namespace nilnf
