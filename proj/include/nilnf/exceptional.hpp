#pragma once

// Embedded dataset of nilpotent orbits in G_2, F_4, E_6, E_7, E_8: depth,
// representative, normal form, embedding and bush structure per orbit, plus
// the catalogue of irreducible exceptional nilpotents.
//
// Node numbering. Root digit strings use the numbering of rootdata.hpp
// (Bourbaki for F and E, long root first for G_2). The stored weighted Dynkin
// diagrams of the irreducible catalogue list nodes 2 and 1 in swapped
// positions for F_4 and E_n; table_to_internal() undoes that. Stored Kac
// diagrams on the extended graph use extended_node_order().

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nilnf/classical.hpp"
#include "nilnf/liealg.hpp"
#include "nilnf/normal_form.hpp"
#include "nilnf/rootdata.hpp"

namespace nilnf {

bool is_exceptional(SimpleType type);

struct RootTerm {
    Root root;
    int coefficient = 1;
    /// Square-bracket group: one summand f[j] of the normal form.
    int bracket = -1;
    /// Parenthesized group: one root vector of a non-regular subalgebra.
    int paren = -1;
};

struct Representative {
    /// Printed as f': the sum over negative simple roots.
    bool principal = false;
    std::vector<RootTerm> terms;

    /// Grammar: signed terms f_<digits> joined by '+'/'-', groups [..] and
    /// (..), f' for the principal element, optional leading '+'.
    static Representative parse(std::string_view text, int rank);
    /// Appends delta's terms, renumbering its groups after ours.
    Representative plus(const Representative& delta) const;
    std::string to_string() const;
};

enum class BushRole { Leader, Member };

struct OrbitRecord {
    SimpleType type;
    std::string label;
    std::vector<std::string> aliases;
    /// Printed depth; for members the depth of their block.
    int depth = 0;
    BushRole role = BushRole::Leader;
    std::string leader_label;
    /// Full representative (leader's terms first for members).
    Representative representative;
    /// Terms added to the leader's representative; empty for leaders.
    Representative delta_representative;
    /// Full normal form as stored.
    NormalForm normal_form;
    /// Summands added to the leader's normal form; empty for leaders.
    NormalForm delta_normal_form;
    std::string embedding;
    std::string embedding_delta;
    std::vector<std::string> embedding_tags;
    /// Roots of the representative are linearly dependent; final
    /// coefficients come from a search.
    bool dependent_roots = false;
    std::size_t table_row = 0;

    /// Odd depth: nilpotent; leader of even depth: semisimple; member: mixed.
    NilpotentType nilpotent_type() const;
    int reduced_depth() const;
};

struct IrreducibleRecord {
    NormalFormComponent component;
    SimpleType type;
    std::vector<int> printed_diagram;
    /// printed_diagram in internal node order.
    std::vector<int> dynkin_labels;
    int depth = 0;
    int dim_gd = 0;
    std::string zs_action;
    std::vector<int> weyl_diagram;
    int weyl_order = 0;
    std::string charpoly;
};

/// Records of one type in table order. Throws DomainError for a classical type.
const std::vector<OrbitRecord>& records(SimpleType type);
/// All nonzero orbits sorted by depth, then table order.
std::vector<OrbitRecord> enumerate(SimpleType type);
/// Exact label first, then aliases. Throws DomainError naming the nearest
/// labels when nothing matches.
const OrbitRecord& lookup(SimpleType type, std::string_view label);
/// Leader first, then members in table order.
std::vector<OrbitRecord> bush(SimpleType type, std::string_view label);
const std::vector<IrreducibleRecord>& irreducible_records();

/// Case-folded, whitespace/underscore/brace free, Unicode primes and tildes
/// mapped to ASCII ("Ã_1" -> "a~1", "A_1″" -> "a1''").
std::string normalize_label(std::string_view label);

std::vector<int> table_to_internal(SimpleType type, const std::vector<int>& printed);
/// Node (0 = affine node) shown at each position of a stored Kac diagram.
std::vector<int> extended_node_order(SimpleType type);

std::string dataset_sha256();

struct RealizedRepresentative {
    AlgebraElement f;
    Sl2Completion completion;
    GradedDecomposition grading;
    /// Dynkin labels; from h directly when h is in the Cartan, otherwise the
    /// unique label vector with the same ad h eigenspace dimensions (empty if
    /// that is not unique).
    std::vector<int> labels;
    /// Coefficient of each term of the representative, in order.
    std::vector<int> coefficients;
    bool searched = false;
};

/// Builds the record's element, completes it to an sl2-triple and checks the
/// depth. Dependent rows, and rows whose printed coefficients fail, get a
/// coefficient search on the added terms over {+1,-1}, then {+-1,+-2}.
/// Throws VerificationError naming the row when nothing works.
RealizedRepresentative realize_representative(const OrbitRecord& record, const ChevalleyAlgebra& algebra);

}  // namespace nilnf
