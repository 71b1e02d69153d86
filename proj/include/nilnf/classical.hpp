#pragma once

// Nilpotent orbits of sl_N, sp_N, so_N via partitions: parity rules, depth,
// type, bush leaders and normal forms.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilnf/normal_form.hpp"

namespace nilnf {

/// Parts in strictly decreasing order with positive multiplicities.
class Partition {
public:
    Partition() = default;
    /// Any order, repeats allowed; zeros rejected.
    static Partition from_parts(const std::vector<int>& parts);
    static Partition from_multiplicities(std::vector<std::pair<int, int>> parts);
    /// "24^3,23^4,18,1^5", "[5,4,4]", "(5, 4, 4)", "24^{(3)},..." .
    static Partition parse(std::string_view text);

    const std::vector<std::pair<int, int>>& parts() const { return parts_; }
    std::vector<int> expanded() const;
    int size() const;
    int multiplicity(int part) const;
    int largest() const { return parts_.empty() ? 0 : parts_.front().first; }
    bool is_trivial() const { return parts_.empty() || largest() == 1; }

    /// Exponent notation, parts with multiplicity 1 printed bare.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<std::pair<int, int>> parts_;
};

enum class Series { sl, sp, so };

struct ClassicalAlgebra {
    Series series = Series::sl;
    int N = 2;

    /// Throws DomainError: sl needs N >= 2, sp N even >= 2, so N >= 7.
    void validate() const;
    std::string name() const;  // "so_13"
    int rank() const;
    static Series parse_series(std::string_view text);
};

enum class NilpotentType { Semisimple, Nilpotent, Mixed };
std::string to_string(NilpotentType t);

/// nullopt when the partition labels an orbit of `algebra`; otherwise the rule
/// that fails (size mismatch, or the offending part for the parity rule).
std::optional<std::string> validate(const ClassicalAlgebra& algebra, const Partition& p);

/// Throws DomainError with the message of validate().
void require_valid(const ClassicalAlgebra& algebra, const Partition& p);

/// sl, sp: 2p_1 - 2. so: 2p_1 - 2 if r_1 >= 2, else max(2p_1 - 4, p_1 + p_2 - 2).
/// Throws DomainError for the zero orbit.
int depth(const ClassicalAlgebra& algebra, const Partition& p);
NilpotentType classify_type(const ClassicalAlgebra& algebra, const Partition& p);
int reduced_depth(const ClassicalAlgebra& algebra, const Partition& p);

/// True for so partitions with p_1 odd, r_1 = 1, p_2 = p_1 - 1.
bool is_case4(const ClassicalAlgebra& algebra, const Partition& p);

/// The semisimple-type partition of the bush, padded with 1's. Throws
/// DomainError for nilpotent-type (Case 4) input, whose bush is itself.
Partition bush_leader(const ClassicalAlgebra& algebra, const Partition& p);

/// A group of parts realized together, and the irreducible components it
/// contributes: (n) -> A_{n-1} or C_{n/2} in sl; (n, n) -> A_{n-1} in sp/so;
/// (2k, 2k) -> C_k in so; (p, p-2) -> D_{p-1}(a_{(p-3)/2}); (3, 1) -> 2C_1.
struct Box {
    std::vector<int> parts;
    std::vector<NormalFormComponent> components;
};

/// Boxes in the order produced: even parts first (descending), then odd.
/// Parts equal to 1 that are not consumed are omitted.
std::vector<Box> boxes(const ClassicalAlgebra& algebra, const Partition& p);

/// Sum of box components, merged and sorted canonically. Empty for 1^N.
NormalForm normal_form(const ClassicalAlgebra& algebra, const Partition& p);

}  // namespace nilnf
