#pragma once

// Matrix-level certification for sl_N, sp_N, so_N, independent of the
// partition formulas in classical.hpp: nilpotents are built block by block in
// an explicitly formed space, and depths are read off ad h on an explicit
// basis of the algebra.
//
// Forms. A single block of size n carries the antidiagonal gram
// G[i][n-1-i] = (-1)^i, symmetric for n odd and skew for n even, and the
// lowering Jordan block J_n (J e_i = e_{i+1}) is form-compatible:
//   n = 3:  G = [[0,0,1],[0,-1,0],[1,0,0]].
// A paired block U + U* of size 2n carries [[0, I], [eps I, 0]] (eps = +1 for
// so, -1 for sp) and the nilpotent J_n + (-J_n^T). The so_4 block realizing
// (3,1) as C_1 + C_1 is C^2 (x) C^2 with the product of the two symplectic
// forms, gram antidiag(1, -1, -1, 1), and f = J_2 (x) 1 + 1 (x) J_2.

#include <optional>
#include <string>
#include <vector>

#include "nilnf/classical.hpp"
#include "nilnf/linalg.hpp"
#include "nilnf/normal_form.hpp"

namespace nilnf {

enum class FormKind { None, Symmetric, Skew };

enum class BlockKind { Single, Paired, Tensor31 };

struct FormedBlock {
    BlockKind kind = BlockKind::Single;
    /// Jordan block size n; the block occupies n, 2n or 4 coordinates.
    int size = 1;
    int offset = 0;

    int dimension() const;
};

class FormedSpace {
public:
    FormedSpace() = default;
    /// Lays the blocks out consecutively. Throws DomainError if a block's
    /// form does not have the parity of `kind`.
    FormedSpace(FormKind kind, std::vector<FormedBlock> blocks);

    FormKind kind() const { return kind_; }
    int dimension() const { return n_; }
    const std::vector<FormedBlock>& blocks() const { return blocks_; }
    /// Empty (0 x 0) for FormKind::None.
    const ExactMatrix& gram() const { return gram_; }

    /// trace 0 (None); M^T G + G M = 0 otherwise.
    bool contains(const ExactMatrix& m) const;
    /// Dimension of the algebra: N^2 - 1, N(N-1)/2 or N(N+1)/2.
    std::size_t algebra_dimension() const;

private:
    FormKind kind_ = FormKind::None;
    int n_ = 0;
    std::vector<FormedBlock> blocks_;
    ExactMatrix gram_;
};

FormKind form_kind(Series series);

struct OracleNilpotent {
    FormedSpace space;
    ExactMatrix f;
};

/// Block layout follows classical boxes(): sl gets one Single block per part;
/// sp and so get Single blocks for parts realized alone, Paired blocks for
/// (n, n) boxes, Tensor31 for the so box (3, 1); spare 1's close the layout.
/// Throws DomainError for an invalid partition.
OracleNilpotent nilpotent_from_partition(const ClassicalAlgebra& algebra, const Partition& p);

/// Rank sequence: #parts >= k equals rank M^{k-1} - rank M^k. Throws
/// DomainError if M is not square or not nilpotent.
Partition jordan_type(const ExactMatrix& m);

struct MatrixTriple {
    ExactMatrix e;
    ExactMatrix h;
    ExactMatrix f;
};

/// Per block: h = diag(n-1, n-3, ..., 1-n), e with superdiagonal i(n-i);
/// negated transposes on the U* half of a paired block. Throws DomainError if
/// f is not the standard nilpotent of `space`, VerificationError if a bracket
/// relation or membership fails.
MatrixTriple sl2_complete_matrix(const FormedSpace& space, const ExactMatrix& f);

/// Largest eigenvalue of ad h on an explicit basis of the algebra of `space`
/// (E_ij and E_ii - E_{i+1,i+1} for sl; G^{-1} S with S running over an
/// elementary basis of the (skew)symmetric matrices otherwise). 0 for h = 0.
/// Throws DomainError for non-diagonal h.
int ad_depth(const FormedSpace& space, const ExactMatrix& h);

struct RealizedComponent {
    NormalFormComponent component;
    /// Index into boxes(); spare 1's belong to no box.
    std::size_t box = 0;
    /// The component's matrix and triple in the ambient space.
    MatrixTriple triple;
    /// The box's own formed space and the triple restricted to it.
    FormedSpace local_space;
    MatrixTriple local;
};

struct RealizedNormalForm {
    OracleNilpotent element;
    std::vector<RealizedComponent> components;
};

RealizedNormalForm realize_normal_form(const ClassicalAlgebra& algebra, const Partition& p);

struct NormalFormReport {
    bool components_in_algebra = false;
    bool triples_valid = false;
    bool components_commute = false;
    bool jordan_type_matches = false;
    bool max_depth_is_reduced_depth = false;
    bool component_depths_match = false;
    Partition jordan_type;
    int max_component_depth = 0;
    int reduced_depth = 0;
    /// Oracle ad-depth of each component inside its box.
    std::vector<int> component_depths;
    std::vector<std::string> failures;

    bool all() const {
        return components_in_algebra && triples_valid && components_commute && jordan_type_matches &&
               max_depth_is_reduced_depth && component_depths_match;
    }
};

/// Never throws on a failed certificate; failures are listed in the report.
/// The zero orbit gives an all-true report with no components.
NormalFormReport verify_normal_form(const ClassicalAlgebra& algebra, const Partition& p);

/// Oracle depth of the partition's nilpotent: ad_depth of its completed h.
int oracle_depth(const ClassicalAlgebra& algebra, const Partition& p);

}  // namespace nilnf
