// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; the only pinned parameters are the sweep bounds, sample counts and
// seeds below.
//
// Exit status is 0 when every failure is one of kKnownFailures (a failing
// row on that list still prints FAIL); --strict makes any failure fatal.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilnf/error.hpp"
#include "nilnf/exceptional.hpp"
#include "nilnf/matrix_oracle.hpp"
#include "nilnf/weyl.hpp"
#include "support.hpp"

using namespace nilnf;

namespace {

constexpr int kParityExhaustiveN = 20;
constexpr int kParityRandomMaxN = 40;
constexpr int kParitySamplesPerSeries = 1000;
constexpr int kCertifyExhaustiveN = 16;
constexpr int kCertifyRandomMaxN = 30;
constexpr int kCertifySamplesPerSeries = 500;
constexpr int kCharpolyExhaustiveN = 20;
constexpr int kFamilyMaxK = 6;
constexpr std::uint64_t kSeed = 0x6e696c6e66ULL;

/// Rows whose printed data fails a criterion, as "criterion:type:label".
const std::set<std::string> kKnownFailures{"1:F4:F_4(a_3)"};

const std::vector<SimpleType> kExceptional{
    {Family::G, 2}, {Family::F, 4}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;
    std::set<std::string> failures;
};

std::string digits(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += static_cast<char>('0' + x);
    return s;
}

std::vector<ClassicalAlgebra> algebras(int min_n, int max_n) {
    std::vector<ClassicalAlgebra> out;
    for (Series s : {Series::sl, Series::sp, Series::so})
        for (int n = min_n; n <= max_n; ++n)
            if (testing::admissible({s, n})) out.push_back({s, n});
    return out;
}

/// Random admissible algebra of the series with min_n < N <= max_n.
ClassicalAlgebra random_algebra(Series s, int min_n, int max_n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(min_n + 1, max_n);
    for (;;) {
        ClassicalAlgebra g{s, pick(rng)};
        if (testing::admissible(g)) return g;
    }
}

// 1. Depth re-derivation for every exceptional table row.
Outcome table_depths() {
    Outcome o;
    std::size_t rows = 0, ok = 0, searched = 0;
    for (SimpleType t : kExceptional) {
        const ChevalleyAlgebra& g = *algebra_for(t);
        for (const auto& r : records(t)) {
            ++rows;
            try {
                auto rr = realize_representative(r, g);
                if (rr.grading.depth == r.depth) {
                    ++ok;
                    if (rr.searched) ++searched;
                    continue;
                }
                o.details.push_back(t.name() + " " + r.label + ": depth " + std::to_string(rr.grading.depth) +
                                    ", printed " + std::to_string(r.depth));
            } catch (const std::exception& e) {
                o.details.push_back(t.name() + " " + r.label + ": " + e.what());
            }
            o.pass = false;
            o.failures.insert("1:" + t.name() + ":" + r.label);
        }
    }
    o.summary = std::to_string(ok) + "/" + std::to_string(rows) + " rows reproduce the printed depth (" +
                std::to_string(searched) + " needed a coefficient search)";

    if (!o.pass) {
        // Analysis of the F_4(a_3) row: one-root substitutions land in the printed orbit.
        OrbitRecord fixed = lookup({Family::F, 4}, "F_4(a_3)");
        for (auto& term : fixed.representative.terms)
            if (term.root == Root{1, 0, 0, 0}) term.root = Root{1, 1, 1, 0};
        try {
            auto rr = realize_representative(fixed, *algebra_for({Family::F, 4}));
            o.details.push_back("with f_1110 in place of f_1000: depth " + std::to_string(rr.grading.depth) +
                                ", labels " + digits(rr.labels) + " (the F_4(a_3) orbit has labels 0200)");
        } catch (const std::exception& e) {
            o.details.push_back(std::string("substituted F_4(a_3) representative: ") + e.what());
        }
    }
    return o;
}

// 2. Labels and dim g_d of the catalogue rows.
Outcome catalogue_rows() {
    Outcome o;
    int checked = 0;
    for (const auto& ir : irreducible_records()) {
        const OrbitRecord* hit = nullptr;
        for (const auto& r : records(ir.type)) {
            const auto& terms = r.normal_form.terms();
            if (terms.size() == 1 && terms[0].multiplicity == 1 && terms[0].component == ir.component &&
                terms[0].group_decoration.empty())
                hit = &r;
        }
        const std::string name = ir.component.label();
        if (!hit) {
            o.pass = false;
            o.details.push_back(name + ": no table row");
            continue;
        }
        ++checked;
        try {
            auto rr = realize_representative(*hit, *algebra_for(ir.type));
            const std::size_t gd = rr.grading.dim(ir.depth);
            const bool good = rr.grading.depth == ir.depth && rr.labels == ir.dynkin_labels &&
                              gd == static_cast<std::size_t>(ir.dim_gd);
            if (!good) {
                o.pass = false;
                o.details.push_back(name + " (row " + hit->label + "): labels " + digits(rr.labels) + " vs " +
                                    digits(ir.dynkin_labels) + ", dim g_d " + std::to_string(gd) + " vs " +
                                    std::to_string(ir.dim_gd));
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.details.push_back(name + ": " + e.what());
        }
    }
    o.summary = std::to_string(checked) + " catalogue rows: labels (internal node order) and dim g_d";
    return o;
}

// 3. Worked examples.
Outcome worked_examples() {
    Outcome o;
    struct Example {
        Series series;
        const char* partition;
        std::string expected;
    };
    // sl: the even-part and odd-part derivation lines, merged by depth.
    NormalForm sl_expected = parse_normal_form("3C_12+C_9+5C_5+6C_4+C_1");
    const NormalForm sl_odd = parse_normal_form("4A_22+5A_20+4A_12+2A_2");
    for (const auto& t : sl_odd.terms()) sl_expected.add(t.component, t.multiplicity);
    sl_expected.sort_canonical();
    const std::vector<Example> examples{
        {Series::sl, "24^3,23^4,21^5,18,13^4,10^5,8^6,3^2,2,1^5", sl_expected.to_string(RenderStyle::GroupEqualDepth)},
        {Series::sp, "19^8,17^4,12^6,11^10,10^3,6,5^4,2^7,1^2", "4A_18+2A_16+6C_6+5A_10+3C_5+C_3+2A_4+7C_1"},
        {Series::so, "20^4,17^5,15^6,13^4,10^2,9^4,8^2,7^3,5^4,4^4,3^8,2^8,1^6",
         "2C_10+2A_16+D_16(a_7)+2A_14+D_14(a_6)+A_12+B_6+C_5+2A_8+C_4+A_6+D_6(a_2)+A_4+(2C_2+D_4(a_1))+3A_2+6C_1"},
    };
    for (const auto& ex : examples) {
        auto p = Partition::parse(ex.partition);
        ClassicalAlgebra g{ex.series, p.size()};
        const std::string got = normal_form(g, p).to_string(RenderStyle::GroupEqualDepth);
        if (got != ex.expected) {
            o.pass = false;
            o.details.push_back(g.name() + ": got " + got + ", expected " + ex.expected);
        }
    }
    // The printed sl final display disagrees with its own derivation lines in
    // four multiplicities (3A_22, 3A_12, C_5, C_4); it is reported, not matched.
    auto printed = parse_normal_form("3C_12+3A_22+5A_20+C_9+3A_12+C_5+C_4+2A_2+C_1");
    o.details.push_back("sl final display as printed (not matched): " + printed.to_string());
    o.summary = "sl (merged derivation lines), sp and so normal forms match exactly";
    return o;
}

// 4. Nilpotent type <=> odd oracle depth.
Outcome parity_law() {
    Outcome o;
    std::size_t exhaustive = 0, sampled = 0;
    auto check = [&](const ClassicalAlgebra& g, const Partition& p) {
        const bool nilpotent = classify_type(g, p) == NilpotentType::Nilpotent;
        const int d = oracle_depth(g, p);
        if (nilpotent != (d % 2 == 1)) {
            o.pass = false;
            o.details.push_back(g.name() + " " + p.to_string() + ": oracle depth " + std::to_string(d) +
                                ", type " + to_string(classify_type(g, p)));
        }
    };
    for (const auto& g : algebras(2, kParityExhaustiveN))
        for (const auto& p : testing::valid_partitions(g)) {
            if (p.is_trivial()) continue;
            check(g, p);
            ++exhaustive;
        }
    std::mt19937_64 rng(kSeed);
    for (Series s : {Series::sl, Series::sp, Series::so})
        for (int i = 0; i < kParitySamplesPerSeries; ++i) {
            auto g = random_algebra(s, kParityExhaustiveN, kParityRandomMaxN, rng);
            check(g, testing::random_valid_partition(g, rng));
            ++sampled;
        }
    o.summary = std::to_string(exhaustive) + " partitions with N <= " + std::to_string(kParityExhaustiveN) +
                ", " + std::to_string(sampled) + " random with N <= " + std::to_string(kParityRandomMaxN);
    return o;
}

// 5. Matrix certificates of the classical normal forms.
Outcome certificates() {
    Outcome o;
    std::size_t exhaustive = 0, sampled = 0;
    auto check = [&](const ClassicalAlgebra& g, const Partition& p) {
        auto r = verify_normal_form(g, p);
        if (!r.all()) {
            o.pass = false;
            std::string why;
            for (const auto& f : r.failures) why += " [" + f + "]";
            o.details.push_back(g.name() + " " + p.to_string() + ":" + why);
        }
    };
    for (const auto& g : algebras(2, kCertifyExhaustiveN))
        for (const auto& p : testing::valid_partitions(g)) {
            check(g, p);
            ++exhaustive;
        }
    std::mt19937_64 rng(kSeed + 5);
    for (Series s : {Series::sl, Series::sp, Series::so})
        for (int i = 0; i < kCertifySamplesPerSeries; ++i) {
            auto g = random_algebra(s, kCertifyExhaustiveN, kCertifyRandomMaxN, rng);
            check(g, testing::random_valid_partition(g, rng));
            ++sampled;
        }
    o.summary = std::to_string(exhaustive) + " partitions with N <= " + std::to_string(kCertifyExhaustiveN) +
                ", " + std::to_string(sampled) + " random with N <= " + std::to_string(kCertifyRandomMaxN);
    return o;
}

NormalFormComponent family_component(ComponentKind kind, int k) {
    NormalFormComponent c;
    c.kind = kind;
    c.k = k;
    return c;
}

/// Family rows instantiated for k = 1..kFamilyMaxK; B_1 is C_1 and B_3 is
/// never a component.
std::vector<NormalFormComponent> family_rows() {
    std::vector<NormalFormComponent> out;
    for (int k = 1; k <= kFamilyMaxK; ++k) {
        out.push_back(family_component(ComponentKind::A, k));
        out.push_back(family_component(ComponentKind::C, k));
        if (k != 1 && k != 3) out.push_back(family_component(ComponentKind::B, k));
        out.push_back(family_component(ComponentKind::Da, k));
    }
    return out;
}

/// Closed-form order column for the family rows.
int family_order(const NormalFormComponent& c) {
    switch (c.kind) {
        case ComponentKind::A: return 2 * c.k + 1;
        case ComponentKind::C:
        case ComponentKind::B: return 2 * c.k;
        case ComponentKind::Da: return 2 * c.k + 2;
        default: return 0;
    }
}

/// phi_d for d | n with d not dividing m (m = 0: every d | n except 1).
CyclotomicFactors divisor_factors(int n, int m, int power) {
    CyclotomicFactors f;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0 && (m == 0 ? d != 1 : m % d != 0)) f[d] += power;
    return f;
}

/// Closed-form characteristic polynomial column: x^{2k} + ... + 1,
/// x^k + 1 and (x^{k+1} + 1)^2 as cyclotomic factors.
CyclotomicFactors family_factors(const NormalFormComponent& c) {
    switch (c.kind) {
        case ComponentKind::A: return divisor_factors(2 * c.k + 1, 0, 1);
        case ComponentKind::C:
        case ComponentKind::B: return divisor_factors(2 * c.k, c.k, 1);
        case ComponentKind::Da: return divisor_factors(2 * c.k + 2, c.k + 1, 2);
        default: return {};
    }
}

// 6. Order of w_f from the labels.
Outcome weyl_orders() {
    Outcome o;
    int rows = 0;
    for (const auto& ir : irreducible_records()) {
        ++rows;
        auto k = kac_data(ir.type, ir.dynkin_labels);
        std::vector<int> shown;
        if (k.even)
            for (int node : extended_node_order(ir.type)) shown.push_back(k.halved[static_cast<std::size_t>(node)]);
        if (k.order != ir.weyl_order || (k.even && shown != ir.weyl_diagram)) {
            o.pass = false;
            o.details.push_back(ir.component.label() + ": order " + std::to_string(k.order) + " vs " +
                                std::to_string(ir.weyl_order) + ", diagram " + digits(shown) + " vs " +
                                digits(ir.weyl_diagram));
        }
    }
    for (const auto& c : family_rows()) {
        ++rows;
        auto ic = irreducible_class(c);
        auto k = kac_data(ic.type, ic.labels);
        if (k.order != family_order(c)) {
            o.pass = false;
            o.details.push_back(c.label() + ": order " + std::to_string(k.order) + " vs " +
                                std::to_string(family_order(c)));
        }
    }
    o.summary = std::to_string(rows) + " rows (14 exceptional, families for k <= " + std::to_string(kFamilyMaxK) +
                "), m = sum a_i s_i and the halving rule";
    return o;
}

int factor_degree(const CyclotomicFactors& f) {
    int deg = 0;
    for (auto [n, mult] : f) deg += Polynomial::cyclotomic(n).degree() * mult;
    return deg;
}

// 7. Characteristic polynomials.
Outcome charpolys() {
    Outcome o;
    int rows = 0;
    for (const auto& ir : irreducible_records()) {
        ++rows;
        auto printed = parse_factors(ir.charpoly);
        auto ic = irreducible_class(ir.component);
        const bool good = cyclotomic_factor(from_factors(printed)) == printed &&
                          factor_degree(printed) == ir.component.rank() && ic.factors == printed &&
                          factors_order(printed) == ir.weyl_order;
        if (!good) {
            o.pass = false;
            o.details.push_back(ir.component.label() + ": " + ir.charpoly + " has degree " +
                                std::to_string(factor_degree(printed)) + ", rank " +
                                std::to_string(ir.component.rank()));
        }
    }
    for (const auto& c : family_rows()) {
        ++rows;
        auto ic = irreducible_class(c);
        const auto expected = family_factors(c);
        if (ic.factors != expected || ic.charpoly.degree() != c.rank() || from_factors(expected) != ic.charpoly) {
            o.pass = false;
            o.details.push_back(c.label() + ": " + factors_to_string(ic.factors) + " vs " +
                                factors_to_string(expected));
        }
    }
    std::size_t composites = 0;
    for (const auto& g : algebras(2, kCharpolyExhaustiveN))
        for (const auto& p : testing::valid_partitions(g)) {
            if (p.is_trivial()) continue;
            ++composites;
            auto w = composite_invariant(g, p);
            Polynomial product({1});
            for (const auto& c : w.components) product = product * from_factors(c.factors).pow(c.multiplicity);
            const bool good = w.ambient_charpoly && w.ambient_charpoly->degree() == g.rank() &&
                              w.ambient_charpoly->divide_exact(product).has_value();
            if (!good) {
                o.pass = false;
                o.details.push_back(g.name() + " " + p.to_string() + ": ambient " +
                                    (w.ambient_charpoly ? w.ambient_charpoly->to_string() : "-") +
                                    ", components " + product.to_string());
            }
        }
    o.summary = std::to_string(rows) + " catalogue rows factor with degree = rank; " + std::to_string(composites) +
                " classical composites with N <= " + std::to_string(kCharpolyExhaustiveN) +
                " divide the ambient polynomial";
    return o;
}

// 8. Bush members extend their leader.
Outcome bush_coherence() {
    Outcome o;
    int members = 0;
    for (SimpleType t : kExceptional)
        for (const auto& r : records(t)) {
            if (r.role != BushRole::Member) continue;
            ++members;
            const auto& leader = lookup(t, r.leader_label);
            const bool good = r.normal_form.equivalent(leader.normal_form.plus(r.delta_normal_form)) &&
                              r.depth == leader.depth && leader.role == BushRole::Leader;
            if (!good) {
                o.pass = false;
                o.details.push_back(t.name() + " " + r.label + ": " + r.normal_form.to_string() + " vs " +
                                    leader.normal_form.to_string() + " + " + r.delta_normal_form.to_string());
            }
        }
    o.summary = std::to_string(members) + " member rows: normal form = leader + delta, same depth";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool strict = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0) {
            strict = true;
        } else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: nilnf_acceptance [--strict] [--criterion N]\n";
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table depth re-derivation", table_depths},
        {"catalogue labels and dim g_d", catalogue_rows},
        {"worked examples", worked_examples},
        {"parity law", parity_law},
        {"oracle certification of normal forms", certificates},
        {"Weyl order law", weyl_orders},
        {"characteristic polynomials", charpolys},
        {"bush coherence", bush_coherence},
    };

    int failed = 0, ran = 0;
    bool unexpected = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (only != 0 && only != number) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("aborted: ") + e.what();
            unexpected = true;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
             << o.summary << " [" << secs << " s]";
        std::cout << line.str() << "\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
        if (!o.pass) {
            ++failed;
            if (o.failures.empty()) unexpected = true;
            for (const auto& f : o.failures)
                if (!kKnownFailures.count(f)) unexpected = true;
        }
    }
    std::cout << (ran - failed) << "/" << ran << " criteria pass";
    if (failed > 0 && !unexpected) std::cout << "; every failure is a known data erratum";
    std::cout << "\n";
    if (strict) return failed == 0 ? 0 : 1;
    return unexpected ? 1 : 0;
}
