#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "nilnf/normal_form.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = nilnf::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

/// Value of a "key: value" line of text output.
std::string field(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    return "<missing " + key + ">";
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

const char* const kExSo = "20^4,17^5,15^6,13^4,10^2,9^4,8^2,7^3,5^4,4^4,3^8,2^8,1^6";

}  // namespace

TEST_CASE("normal-form of the orthogonal worked example") {
    auto r = run({"normal-form", "so", "--partition", kExSo});
    CHECK(r.code == nilnf::cli::kOk);
    CHECK(field(r.out, "algebra") == "so_482");
    CHECK(field(r.out, "normal_form") ==
          "2C_10+2A_16+D_16(a_7)+2A_14+D_14(a_6)+A_12+B_6+C_5+2A_8+C_4+A_6+D_6(a_2)+A_4+(2C_2+D_4(a_1))+3A_2+6C_1");
}

TEST_CASE("lookup") {
    auto r = run({"lookup", "E8", "A_4+A_3"});
    CHECK(r.code == nilnf::cli::kOk);
    CHECK(field(r.out, "depth") == "9");
    CHECK(field(r.out, "normal_form") == "A_4+C_2");
    CHECK(field(r.out, "embedding") == "regular + folding of A_3");

    auto miss = run({"lookup", "F4", "F_4(a_5)"});
    CHECK(miss.code == nilnf::cli::kDomainError);
    CHECK(contains(miss.err, "F_4(a_3)"));
}

TEST_CASE("verify") {
    auto sp = run({"verify", "sp", "--partition", "3,3,2"});
    CHECK(sp.code == nilnf::cli::kOk);
    CHECK(field(sp.out, "verified") == "true");
    CHECK(field(sp.out, "components_commute") == "true");

    auto g2 = run({"verify", "G2", "--batch"});
    CHECK(g2.code == nilnf::cli::kOk);

    auto bad = run({"verify", "F4", "F_4(a_3)"});
    CHECK(bad.code == nilnf::cli::kVerificationFailed);
}

TEST_CASE("classify") {
    auto r = run({"classify", "so", "--partition", "5,4,4"});
    CHECK(r.code == nilnf::cli::kOk);
    CHECK(field(r.out, "type") == "nilpotent");
    CHECK(field(r.out, "depth") == "7");
    CHECK(field(r.out, "reduced_depth") == "6");
    CHECK(field(r.out, "bush_leader") == "-");

    auto j = json::parse(run({"classify", "so_13", "-p", "5,4,4", "--json"}).out);
    CHECK(j["schema_version"] == nilnf::cli::kSchemaVersion);
    CHECK(j["command"] == "classify");
    CHECK(j["depth"] == 7);
    CHECK(j["bush_leader"].is_null());

    auto b = run({"classify", "B6", "-p", "7,5,1"});
    CHECK(b.code == nilnf::cli::kOk);
    CHECK(field(b.out, "algebra") == "so_13");
}

TEST_CASE("domain errors") {
    CHECK(run({"classify", "sp", "-p", "3,1"}).code == nilnf::cli::kDomainError);
    CHECK(run({"classify", "so_9", "-p", "3,1"}).code == nilnf::cli::kDomainError);
    CHECK(run({"classify", "so", "-p", "3,1,1"}).code == nilnf::cli::kDomainError);
    CHECK(run({"normal-form", "E9", "A_1"}).code == nilnf::cli::kDomainError);
    CHECK(run({"normal-form", "sl"}).code == nilnf::cli::kDomainError);
    CHECK(run({"frobnicate"}).code == nilnf::cli::kDomainError);
    CHECK(run({"list", "sl"}).code == nilnf::cli::kDomainError);
    CHECK(run({"weyl", "E8", "--labels", "3000000"}).code == nilnf::cli::kDomainError);
}

TEST_CASE("list and bush") {
    auto g2 = run({"list", "G2"});
    CHECK(g2.code == nilnf::cli::kOk);
    CHECK(std::count(g2.out.begin(), g2.out.end(), '\n') == 4);

    auto sp = run({"list", "sp", "--max-N", "4"});
    CHECK(std::count(sp.out.begin(), sp.out.end(), '\n') == 4);

    auto bush = run({"bush", "F4", "B_2", "--json"});
    std::istringstream lines(bush.out);
    std::string line;
    std::vector<std::string> labels;
    while (std::getline(lines, line)) labels.push_back(json::parse(line)["label"]);
    CHECK(labels == std::vector<std::string>{"B_2", "C_3(a_1)"});
}

TEST_CASE("weyl") {
    auto r = run({"weyl", "sl_6", "-p", "3,2,1", "--json"});
    auto j = json::parse(r.out);
    CHECK(j["total_order"] == 6);
    CHECK(j["ambient_charpoly"]["factors"] == "phi_3*phi_2*phi_1^2");

    auto kac = run({"weyl", "E8", "--labels", "00002000"});
    CHECK(field(kac.out, "modulus") == "12");
    CHECK(field(kac.out, "order") == "6");
}

TEST_CASE("text and JSON carry the same normal form") {
    const std::vector<std::vector<std::string>> queries{
        {"normal-form", "so", "-p", kExSo},
        {"normal-form", "sl", "-p", "24^3,23^4,21^5,18,13^4,10^5,8^6,3^2,2,1^5"},
        {"normal-form", "so", "-p", "5,4,4"},
        {"normal-form", "E7", "(3A_1)''"},
        {"normal-form", "E8", "E_8(b_6)"},
        {"normal-form", "F4", "C_3(a_1)"},
    };
    for (auto q : queries) {
        CAPTURE(q[2]);
        auto text = run(q);
        REQUIRE(text.code == nilnf::cli::kOk);
        q.push_back("--json");
        auto j = json::parse(run(q).out);
        CHECK(j["normal_form"]["text"] == field(text.out, "normal_form"));

        std::vector<nilnf::NormalFormTerm> terms;
        for (const auto& c : j["normal_form"]["components"]) {
            nilnf::NormalFormTerm t;
            t.component = nilnf::parse_component(c["label"].get<std::string>());
            t.multiplicity = c["multiplicity"].get<int>();
            // "decoration" carries the component's marking followed by any group primes.
            t.group_decoration = c["decoration"].get<std::string>().substr(t.component.decoration.size());
            terms.push_back(t);
        }
        auto from_text = nilnf::parse_normal_form(field(text.out, "normal_form"));
        CHECK(from_text.equivalent(nilnf::NormalForm(terms)));
    }
}

TEST_CASE("output is deterministic") {
    for (std::vector<std::string> q : {std::vector<std::string>{"list", "E8", "--json"},
                                       std::vector<std::string>{"list", "so", "--max-N", "14"},
                                       std::vector<std::string>{"verify", "so", "-p", "5,3,2,2", "--json"}}) {
        auto a = run(q);
        auto b = run(q);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
