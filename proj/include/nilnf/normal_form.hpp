#pragma once

// Normal forms f = sum_j f[j]: multisets of irreducible components from the
// catalogue of irreducible nilpotents, each tagged with its intrinsic depth.

#include <string>
#include <string_view>
#include <vector>

namespace nilnf {

enum class ComponentKind {
    A,   // A_{2k}
    C,   // C_k
    B,   // B_k, k != 3
    Da,  // D_{2k+2}(a_k)
    G2,
    F4,
    F4a2,
    E6a1,
    E7,
    E7a1,
    E7a5,
    E8,
    E8a1,
    E8a2,
    E8a4,
    E8a5,
    E8a6,
    E8a7,
};

struct NormalFormComponent {
    ComponentKind kind = ComponentKind::C;
    /// k for the parameterized kinds, 0 for the exceptional ones.
    int k = 0;
    /// Short-root or prime marking as it appears in a table: "", "~", "'", "''".
    std::string decoration;
    /// Spelling to print instead of label(), when a table uses a synonym
    /// (C_1 printed as A_1). Ignored by comparisons.
    std::string printed;

    int intrinsic_depth() const;
    int rank() const;
    /// Canonical label, e.g. "A_22", "C~_1", "D_16(a_7)", "E_8(a_7)".
    std::string label() const;
    /// Label without decoration and without `printed`.
    std::string base_label() const;

    /// Throws DomainError for an inadmissible parameter (B_3, A_0, ...).
    void validate() const;

    friend bool operator==(const NormalFormComponent& a, const NormalFormComponent& b) {
        return a.kind == b.kind && a.k == b.k && a.decoration == b.decoration;
    }
};

/// Parses a single component name such as "A_22", "A~_2", "D_4(a_1)", "C_1'".
NormalFormComponent parse_component(std::string_view text);

struct NormalFormTerm {
    NormalFormComponent component;
    int multiplicity = 1;
    /// Primes attached to a parenthesized multiple, as in "(3C_1)''".
    std::string group_decoration;
};

enum class RenderStyle {
    /// Equal-depth runs of distinct components are parenthesized:
    /// "...+(2C_2+D_4(a_1))+...".
    GroupEqualDepth,
    /// Terms joined by '+' exactly in stored order.
    AsListed,
};

class NormalForm {
public:
    NormalForm() = default;
    explicit NormalForm(std::vector<NormalFormTerm> terms) : terms_(std::move(terms)) {}

    const std::vector<NormalFormTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Adds `mult` copies, merging with an existing identical term.
    void add(const NormalFormComponent& c, int mult = 1);
    /// Terms of `delta` appended in order (no merging).
    NormalForm plus(const NormalForm& delta) const;

    /// Stable sort: intrinsic depth descending, then C, A, B, D(a), G_2,
    /// exceptional kinds, then parameter descending.
    void sort_canonical();

    int max_depth() const;
    int total_rank() const;

    std::string to_string(RenderStyle style = RenderStyle::AsListed) const;

    /// Multiset equality: ignores order and how multiplicities are split
    /// across terms. Group decorations count as part of the component.
    bool equivalent(const NormalForm& other) const;

private:
    std::vector<NormalFormTerm> terms_;
};

/// Parses "3C_12+4A_22+...", "(2C_2+D_4(a_1))" groups, "(3C_1)''" and a
/// leading '+' (table deltas). Throws DomainError on malformed input.
NormalForm parse_normal_form(std::string_view text);

}  // namespace nilnf
