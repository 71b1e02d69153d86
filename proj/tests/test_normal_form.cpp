#include <doctest.h>

#include "nilnf/error.hpp"
#include "nilnf/normal_form.hpp"

using namespace nilnf;

TEST_CASE("intrinsic depths of the irreducible catalogue") {
    for (int k = 1; k <= 12; ++k) {
        CAPTURE(k);
        CHECK(NormalFormComponent{ComponentKind::A, k, "", ""}.intrinsic_depth() == 4 * k);
        CHECK(NormalFormComponent{ComponentKind::C, k, "", ""}.intrinsic_depth() == 4 * k - 2);
        CHECK(NormalFormComponent{ComponentKind::Da, k, "", ""}.intrinsic_depth() == 4 * k + 2);
        if (k >= 2 && k != 3) CHECK(NormalFormComponent{ComponentKind::B, k, "", ""}.intrinsic_depth() == 4 * k - 2);
    }
    const std::vector<std::pair<const char*, int>> exceptional{
        {"G_2", 10},     {"F_4", 22},     {"F_4(a_2)", 10}, {"E_6(a_1)", 16}, {"E_7", 34},
        {"E_7(a_1)", 26}, {"E_7(a_5)", 10}, {"E_8", 58},     {"E_8(a_1)", 46}, {"E_8(a_2)", 38},
        {"E_8(a_4)", 28}, {"E_8(a_5)", 22}, {"E_8(a_6)", 18}, {"E_8(a_7)", 10}};
    for (auto [label, d] : exceptional) {
        CAPTURE(label);
        auto c = parse_component(label);
        CHECK(c.intrinsic_depth() == d);
        CHECK(c.label() == label);
    }
}

TEST_CASE("component names outside the catalogue are rejected") {
    for (const char* bad : {"B_3", "B_1", "A_3", "A_0", "D_5(a_1)", "D_4", "E_6", "E_8(a_3)", "C_0", "X_2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_component(bad), DomainError);
    }
}

TEST_CASE("table spellings") {
    auto a1 = parse_component("A_1");
    CHECK(a1.kind == ComponentKind::C);
    CHECK(a1.k == 1);
    CHECK(a1.label() == "A_1");
    CHECK(a1 == parse_component("C_1"));

    auto tilde = parse_component("A~_2");
    CHECK(tilde.decoration == "~");
    CHECK(tilde.label() == "A~_2");
    CHECK_FALSE(tilde == parse_component("A_2"));

    CHECK(parse_component("C_1'").label() == "C_1'");
    CHECK(parse_component("D_4(a_1)").rank() == 4);
    CHECK(parse_component("E_7(a_5)").rank() == 7);
}

TEST_CASE("parse and render") {
    const std::string text = "2C_10+2A_16+D_16(a_7)+(2C_2+D_4(a_1))+3A_2+6C_1";
    auto nf = parse_normal_form(text);
    CHECK(nf.terms().size() == 7);
    CHECK(nf.max_depth() == 38);
    CHECK(nf.total_rank() == 20 + 32 + 16 + 4 + 4 + 6 + 6);
    CHECK(nf.to_string(RenderStyle::GroupEqualDepth) == text);
    CHECK(nf.to_string() == "2C_10+2A_16+D_16(a_7)+2C_2+D_4(a_1)+3A_2+6C_1");
    CHECK(parse_normal_form(nf.to_string()).equivalent(nf));

    auto primed = parse_normal_form("(3C_1)''");
    REQUIRE(primed.terms().size() == 1);
    CHECK(primed.terms()[0].group_decoration == "''");
    CHECK(primed.to_string() == "(3C_1)''");

    CHECK(parse_normal_form("+C_1").terms().size() == 1);
    CHECK_THROWS_AS(parse_normal_form("C_2+"), DomainError);
    CHECK_THROWS_AS(parse_normal_form("(C_2"), DomainError);
    CHECK_THROWS_AS(parse_normal_form("0C_2"), DomainError);
}

TEST_CASE("multiset equality and canonical order") {
    auto a = parse_normal_form("C_1+A_2+C_1");
    auto b = parse_normal_form("A_2+2C_1");
    CHECK(a.equivalent(b));
    CHECK_FALSE(a.equivalent(parse_normal_form("A_2+C_1")));
    CHECK_FALSE(parse_normal_form("(3C_1)''").equivalent(parse_normal_form("3C_1")));

    NormalForm nf;
    nf.add(parse_component("C_1"));
    nf.add(parse_component("D_4(a_1)"));
    nf.add(parse_component("A_2"), 2);
    nf.add(parse_component("C_2"), 2);
    nf.add(parse_component("C_1"));
    nf.sort_canonical();
    CHECK(nf.to_string() == "2C_2+D_4(a_1)+2A_2+2C_1");
    for (std::size_t i = 1; i < nf.terms().size(); ++i)
        CHECK(nf.terms()[i - 1].component.intrinsic_depth() >= nf.terms()[i].component.intrinsic_depth());

    auto sum = parse_normal_form("B_4").plus(parse_normal_form("+C_1'"));
    CHECK(sum.to_string() == "B_4+C_1'");
}
