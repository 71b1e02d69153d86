#pragma once

// Root systems of the simple Lie algebras, built by root-string closure
// from the Cartan matrix.
//
// Node numbering follows Bourbaki for A-F:
//   A_n  1 - 2 - ... - n
//   B_n  1 - ... - (n-1) => n          (alpha_n short)
//   C_n  1 - ... - (n-1) <= n          (alpha_n long)
//   D_n  1 - ... - (n-2) < (n-1), n    (fork at n-2)
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4                (alpha_1, alpha_2 long)
// G_2 is numbered with the long root first (alpha_1 long, alpha_2 short),
// which is the order used by the exceptional orbit tables shipped in data/.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilnf/rational.hpp"

namespace nilnf {

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Throws DomainError unless the rank is admissible for the family.
    void validate() const;
    /// "E8", "B3", ...
    std::string name() const;
    /// Accepts "E8", "E_8", "e8".
    static SimpleType parse(std::string_view text);

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Coefficients in the simple-root basis.
using Root = std::vector<int>;

int height(const Root& root);

class RootSystem {
public:
    explicit RootSystem(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }

    /// cartan()[i][j] = <alpha_i, alpha_j^vee> = alpha_i(h_j).
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    /// Symmetric form on simple roots, normalized so every entry is an integer
    /// and short roots have squared length 2.
    const std::vector<std::vector<int>>& gram() const { return gram_; }

    /// Positive roots ordered by height, then lexicographically descending
    /// (so the simple roots come first, in node order).
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }
    const Root& highest_root() const { return positive_.back(); }
    /// Highest-root coefficients a_1..a_r.
    const std::vector<int>& marks() const { return marks_; }
    int coxeter_number() const;

    /// Index into positive_roots(), if `root` is a positive root.
    std::optional<std::size_t> positive_index(const Root& root) const;
    bool is_root(const Root& root) const;

    int inner(const Root& x, const Root& y) const;
    /// <beta, alpha_i^vee>
    int pairing(const Root& beta, int i) const;
    /// Coroot of `root` in the basis of simple coroots.
    std::vector<int> coroot(const Root& root) const;

    /// Apply simple reflections (acting on the values alpha_i(h)) until every
    /// value is non-negative. Returns the dominant vector and the 1-based
    /// reflection word, in application order.
    std::pair<std::vector<Rational>, std::vector<int>> to_dominant(
        std::vector<Rational> weight) const;
    std::vector<Rational> reflect(std::vector<Rational> weight, int i) const;

private:
    SimpleType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> gram_;
    std::vector<Root> positive_;
    std::map<Root, std::size_t> index_;
    std::vector<int> marks_;
};

}  // namespace nilnf
