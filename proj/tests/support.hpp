#pragma once

// Partition generators shared by the unit tests and the acceptance suite.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "nilnf/classical.hpp"

namespace nilnf::testing {

inline void for_each_partition(int n, int max_part, std::vector<int>& cur,
                               const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) {
        visit(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        for_each_partition(n - p, p, cur, visit);
        cur.pop_back();
    }
}

/// Every partition of N that labels an orbit of `algebra`, the zero orbit included.
inline std::vector<Partition> valid_partitions(const ClassicalAlgebra& algebra) {
    std::vector<Partition> out;
    std::vector<int> cur;
    for_each_partition(algebra.N, algebra.N, cur, [&](const std::vector<int>& parts) {
        Partition p = Partition::from_parts(parts);
        if (!validate(algebra, p)) out.push_back(std::move(p));
    });
    return out;
}

inline bool admissible(const ClassicalAlgebra& algebra) {
    switch (algebra.series) {
        case Series::sl: return algebra.N >= 2;
        case Series::sp: return algebra.N >= 2 && algebra.N % 2 == 0;
        case Series::so: return algebra.N >= 7;
    }
    return false;
}

/// Uniform choice of the next part keeps both long and short partitions
/// likely; parity is then repaired by rejection.
inline Partition random_valid_partition(const ClassicalAlgebra& algebra, std::mt19937_64& rng,
                                        bool nonzero = true) {
    for (;;) {
        std::vector<int> parts;
        int left = algebra.N;
        while (left > 0) {
            std::uniform_int_distribution<int> pick(1, left);
            int p = pick(rng);
            // Pairs make the sp/so parity rules pass far more often.
            if (p * 2 <= left && rng() % 2 == 0) {
                parts.push_back(p);
                left -= p;
            }
            parts.push_back(p);
            left -= p;
        }
        Partition p = Partition::from_parts(parts);
        if (validate(algebra, p)) continue;
        if (nonzero && p.is_trivial()) continue;
        return p;
    }
}

}  // namespace nilnf::testing
