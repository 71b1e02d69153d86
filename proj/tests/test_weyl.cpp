#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nilnf/error.hpp"
#include "nilnf/weyl.hpp"
#include "support.hpp"

using namespace nilnf;

namespace {

int totient(int n) {
    int count = 0;
    for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
    return count;
}

Polynomial x_minus_1() { return Polynomial({-1, 1}); }

CyclotomicFactors factors(std::initializer_list<std::pair<const int, int>> f) { return CyclotomicFactors(f); }

}  // namespace

TEST_CASE("Kac data") {
    auto e8 = kac_data({Family::E, 8}, std::vector<int>(8, 2));
    CHECK(e8.modulus == 60);
    CHECK(e8.even);
    CHECK(e8.order == 30);
    CHECK(e8.halved == std::vector<int>(9, 1));

    auto a7 = kac_data({Family::E, 8}, {0, 0, 0, 0, 2, 0, 0, 0});
    CHECK(a7.modulus == 12);
    CHECK(a7.order == 6);

    for (SimpleType t : {SimpleType{Family::A, 3}, SimpleType{Family::G, 2}, SimpleType{Family::E, 7}}) {
        auto zero = kac_data(t, std::vector<int>(static_cast<std::size_t>(t.rank), 0));
        CHECK(zero.modulus == 2);
        CHECK(zero.order == 1);
    }

    auto odd = kac_data({Family::G, 2}, {1, 0});
    CHECK_FALSE(odd.even);
    CHECK(odd.modulus == 2 + RootSystem({Family::G, 2}).marks()[0]);
    CHECK(odd.order == odd.modulus);
    CHECK(odd.halved.empty());

    CHECK_THROWS_AS(kac_data({Family::G, 2}, {3, 0}), DomainError);
    CHECK_THROWS_AS(kac_data({Family::G, 2}, {2}), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
    for (int n = 1; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(Polynomial::cyclotomic(n).degree() == totient(n));
        Polynomial product({1});
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) product = product * Polynomial::cyclotomic(d);
        CHECK(product == Polynomial::monomial(n) - Polynomial({1}));
    }
    CHECK(Polynomial::cyclotomic(6).to_string() == "x^2-x+1");
}

TEST_CASE("cyclotomic factorization") {
    CHECK(cyclotomic_factor(Polynomial({1, 0, 0, 1})) == factors({{2, 1}, {6, 1}}));
    CHECK(cyclotomic_factor(Polynomial({1, 1, 1, 1, 1})) == factors({{5, 1}}));
    auto e8a7 = Polynomial({1, -1, 1}).pow(4);
    CHECK(cyclotomic_factor(e8a7) == factors({{6, 4}}));
    CHECK(factors_to_string(cyclotomic_factor(e8a7)) == "phi_6^4");
    CHECK(factors_to_string(factors({{18, 1}, {2, 1}})) == "phi_18*phi_2");
    CHECK(parse_factors("phi_18*phi_2") == factors({{18, 1}, {2, 1}}));
    CHECK(factors_order(factors({{18, 1}, {2, 1}})) == 18);
    CHECK(factors_to_string({}) == "1");
    CHECK_THROWS_AS(cyclotomic_factor(Polynomial({2, 0, 1})), VerificationError);

    for (int a = 1; a <= 12; ++a) {
        for (int b = 1; b <= 12; ++b) {
            CyclotomicFactors f{{a, 1}};
            ++f[b];
            CHECK(cyclotomic_factor(from_factors(f)) == f);
        }
    }
}

TEST_CASE("irreducible classes") {
    auto c3 = irreducible_class(parse_component("C_3"));
    CHECK(c3.order == 6);
    CHECK(c3.charpoly.to_string() == "x^3+1");

    auto e8a6 = irreducible_class(parse_component("E_8(a_6)"));
    CHECK(e8a6.order == 10);
    CHECK(e8a6.factors == factors({{10, 2}}));

    auto a2 = irreducible_class(parse_component("A_2"));
    CHECK(a2.order == 3);
    CHECK(a2.charpoly.to_string() == "x^2+x+1");

    auto d4 = irreducible_class(parse_component("D_4(a_1)"));
    CHECK(d4.order == 4);
    CHECK(d4.charpoly == (Polynomial::monomial(2) + Polynomial({1})).pow(2));

    auto c1 = irreducible_class(parse_component("C_1"));
    CHECK(c1.type == SimpleType{Family::A, 1});
    CHECK(c1.charpoly.to_string() == "x+1");

    CHECK(irreducible_class(parse_component("E_7")).factors == factors({{18, 1}, {2, 1}}));
}

TEST_CASE("composite invariants") {
    auto e6 = composite_invariant(parse_normal_form("2A_2+C_1"));
    CHECK(e6.total_order == 6);
    CHECK_FALSE(e6.ambient_charpoly.has_value());
    CHECK_THROWS_AS(composite_invariant(NormalForm{}), DomainError);

    auto sl6 = composite_invariant({Series::sl, 6}, Partition::parse("3,2,1"));
    CHECK(sl6.total_order == 6);
    REQUIRE(sl6.ambient_charpoly.has_value());
    CHECK(*sl6.ambient_charpoly ==
          Polynomial({1, 1, 1}) * Polynomial({1, 1}) * x_minus_1() * x_minus_1());

    auto b4 = composite_invariant({Series::so, 9}, Partition::parse("9"));
    CHECK(b4.ambient_charpoly->to_string() == "x^4+1");
    auto sp6 = composite_invariant({Series::sp, 6}, Partition::parse("6"));
    CHECK(sp6.ambient_charpoly->to_string() == "x^3+1");
    auto sl5 = composite_invariant({Series::sl, 5}, Partition::parse("3,1,1"));
    CHECK(*sl5.ambient_charpoly == Polynomial({1, 1, 1}) * x_minus_1() * x_minus_1());
    auto g2 = composite_invariant({Series::so, 7}, Partition::parse("7"));
    CHECK(g2.ambient_charpoly->to_string() == "x^3+1");
    auto so8 = composite_invariant({Series::so, 8}, Partition::parse("5,1,1,1"));
    CHECK(so8.ambient_charpoly->to_string() == "x^4-1");
}

TEST_CASE("signed-cycle model over all classical partitions with N <= 16") {
    for (Series s : {Series::sl, Series::sp, Series::so}) {
        for (int n = 2; n <= 16; ++n) {
            ClassicalAlgebra g{s, n};
            if (!testing::admissible(g)) continue;
            for (const auto& p : testing::valid_partitions(g)) {
                if (p.is_trivial()) continue;
                CAPTURE(g.name());
                CAPTURE(p.to_string());
                auto w = composite_invariant(g, p);
                REQUIRE(w.ambient_charpoly.has_value());
                const Polynomial& amb = *w.ambient_charpoly;
                CHECK(amb.degree() == g.rank());
                CHECK((amb[0] == 1 || amb[0] == -1));
                Polynomial product({1});
                int lcm = 1;
                for (const auto& c : w.components) {
                    product = product * from_factors(c.factors).pow(c.multiplicity);
                    lcm = std::lcm(lcm, c.order);
                }
                CHECK(amb.divide_exact(product).has_value());
                CHECK(w.total_order == lcm);
                CHECK_NOTHROW(cyclotomic_factor(amb));

                // Reordering the components leaves the invariant unchanged.
                auto terms = normal_form(g, p).terms();
                std::reverse(terms.begin(), terms.end());
                auto reversed = composite_invariant(NormalForm(terms));
                CHECK(reversed.total_order == w.total_order);
            }
        }
    }
}
