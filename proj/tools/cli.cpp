#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <variant>

#include "nilnf/classical.hpp"
#include "nilnf/error.hpp"
#include "nilnf/exceptional.hpp"
#include "nilnf/liealg.hpp"
#include "nilnf/matrix_oracle.hpp"
#include "nilnf/weyl.hpp"

namespace nilnf::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Queries

struct AlgebraArg {
    std::variant<ClassicalAlgebra, SimpleType> value;
    /// Classical series given without N; N comes from the partition.
    bool n_from_partition = false;

    bool classical() const { return std::holds_alternative<ClassicalAlgebra>(value); }
    const ClassicalAlgebra& cls() const { return std::get<ClassicalAlgebra>(value); }
    const SimpleType& exc() const { return std::get<SimpleType>(value); }
};

// "so", "so_13", "sp8", "sl_5", Bourbaki "B6" / "C4" / "D7" / "A5", "E8".
AlgebraArg parse_algebra(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '_' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    AlgebraArg a;
    if (s.size() >= 2 && (s.rfind("sl", 0) == 0 || s.rfind("sp", 0) == 0 || s.rfind("so", 0) == 0)) {
        ClassicalAlgebra c;
        c.series = ClassicalAlgebra::parse_series(s.substr(0, 2));
        const std::string rest = s.substr(2);
        if (rest.empty()) {
            a.n_from_partition = true;
        } else {
            if (!std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
                rest.size() > 5)
                throw DomainError("cannot parse algebra '" + text + "'");
            c.N = std::stoi(rest);
            c.validate();
        }
        a.value = c;
        return a;
    }
    const SimpleType t = SimpleType::parse(text);
    switch (t.family) {
    case Family::A: a.value = ClassicalAlgebra{Series::sl, t.rank + 1}; break;
    case Family::B: a.value = ClassicalAlgebra{Series::so, 2 * t.rank + 1}; break;
    case Family::C: a.value = ClassicalAlgebra{Series::sp, 2 * t.rank}; break;
    case Family::D: a.value = ClassicalAlgebra{Series::so, 2 * t.rank}; break;
    default: a.value = t; return a;
    }
    a.cls().validate();
    return a;
}

struct Query {
    std::string algebra;
    std::string orbit;
    std::string partition;
    std::string label;
    std::string labels;
    int max_n = 0;
    bool json = false;
    bool batch = false;
};

struct ClassicalOrbit {
    ClassicalAlgebra algebra;
    Partition partition;
};

ClassicalOrbit classical_orbit(const AlgebraArg& a, const Query& q) {
    if (!q.label.empty()) throw DomainError("classical orbits are given by --partition, not --label");
    const std::string text = !q.partition.empty() ? q.partition : q.orbit;
    if (text.empty()) throw DomainError("missing --partition for " + (a.n_from_partition ? std::string("classical algebra") : a.cls().name()));
    ClassicalOrbit o{a.cls(), Partition::parse(text)};
    if (a.n_from_partition) {
        o.algebra.N = o.partition.size();
        o.algebra.validate();
    }
    require_valid(o.algebra, o.partition);
    return o;
}

const OrbitRecord& exceptional_orbit(const AlgebraArg& a, const Query& q) {
    if (!q.partition.empty()) throw DomainError(a.exc().name() + " orbits are given by Bala-Carter label, not --partition");
    const std::string text = !q.label.empty() ? q.label : q.orbit;
    if (text.empty()) throw DomainError("missing orbit label for " + a.exc().name());
    return lookup(a.exc(), text);
}

// ---------------------------------------------------------------------------
// Rendering

class Output {
public:
    Output(std::ostream& out, bool json, std::string command) : out_(out), json_(json), command_(std::move(command)) {}

    /// One record: a text block of "key: value" lines, or one JSON line.
    void record(const std::vector<std::pair<std::string, std::string>>& text, json structured) {
        if (json_) {
            json line;
            line["schema_version"] = kSchemaVersion;
            line["command"] = command_;
            for (auto& [k, v] : structured.items()) line[k] = v;
            out_ << line.dump() << "\n";
            return;
        }
        if (records_++ > 0) out_ << "\n";
        for (const auto& [k, v] : text) out_ << k << ": " << v << "\n";
    }
    /// One compact text line per record in list-style output.
    void line(const std::string& text, json structured) {
        if (json_) {
            record({}, std::move(structured));
            return;
        }
        out_ << text << "\n";
    }

private:
    std::ostream& out_;
    bool json_;
    std::string command_;
    int records_ = 0;
};

json component_json(const NormalFormTerm& t) {
    json c;
    c["label"] = t.component.label();
    c["base"] = t.component.base_label();
    c["multiplicity"] = t.multiplicity;
    c["decoration"] = t.component.decoration + t.group_decoration;
    c["depth"] = t.component.intrinsic_depth();
    c["rank"] = t.component.rank();
    return c;
}

json normal_form_json(const NormalForm& nf, RenderStyle style) {
    json j;
    j["text"] = nf.to_string(style);
    j["components"] = json::array();
    for (const auto& t : nf.terms()) j["components"].push_back(component_json(t));
    return j;
}

std::string labels_string(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += static_cast<char>('0' + x);
    return s;
}

std::string type_name(NilpotentType t) { return to_string(t); }

// ---------------------------------------------------------------------------
// Commands

struct ClassicalFacts {
    int depth;
    int reduced;
    NilpotentType type;
    std::optional<Partition> leader;
    NormalForm nf;
};

ClassicalFacts facts(const ClassicalOrbit& o) {
    if (o.partition.is_trivial()) throw DomainError("the zero orbit 1^" + std::to_string(o.algebra.N) + " has no depth");
    ClassicalFacts f{depth(o.algebra, o.partition), reduced_depth(o.algebra, o.partition),
                     classify_type(o.algebra, o.partition), std::nullopt, normal_form(o.algebra, o.partition)};
    if (!is_case4(o.algebra, o.partition)) f.leader = bush_leader(o.algebra, o.partition);
    return f;
}

int cmd_classify(const AlgebraArg& a, const Query& q, Output& out) {
    if (a.classical()) {
        const auto o = classical_orbit(a, q);
        const auto f = facts(o);
        const std::string leader = f.leader ? f.leader->to_string() : "-";
        out.record({{"algebra", o.algebra.name()},
                    {"partition", o.partition.to_string()},
                    {"depth", std::to_string(f.depth)},
                    {"reduced_depth", std::to_string(f.reduced)},
                    {"type", type_name(f.type)},
                    {"bush_leader", leader},
                    {"normal_form", f.nf.to_string(RenderStyle::GroupEqualDepth)}},
                   {{"algebra", o.algebra.name()},
                    {"partition", o.partition.to_string()},
                    {"depth", f.depth},
                    {"reduced_depth", f.reduced},
                    {"type", type_name(f.type)},
                    {"bush_leader", f.leader ? json(f.leader->to_string()) : json(nullptr)},
                    {"normal_form", normal_form_json(f.nf, RenderStyle::GroupEqualDepth)}});
        return kOk;
    }
    const OrbitRecord& r = exceptional_orbit(a, q);
    out.record({{"algebra", r.type.name()},
                {"label", r.label},
                {"depth", std::to_string(r.depth)},
                {"reduced_depth", std::to_string(r.reduced_depth())},
                {"type", type_name(r.nilpotent_type())},
                {"bush_leader", r.leader_label},
                {"normal_form", r.normal_form.to_string(RenderStyle::AsListed)}},
               {{"algebra", r.type.name()},
                {"label", r.label},
                {"depth", r.depth},
                {"reduced_depth", r.reduced_depth()},
                {"type", type_name(r.nilpotent_type())},
                {"bush_leader", r.leader_label},
                {"normal_form", normal_form_json(r.normal_form, RenderStyle::AsListed)}});
    return kOk;
}

int cmd_normal_form(const AlgebraArg& a, const Query& q, Output& out) {
    if (a.classical()) {
        const auto o = classical_orbit(a, q);
        const NormalForm nf = normal_form(o.algebra, o.partition);
        out.record({{"algebra", o.algebra.name()},
                    {"partition", o.partition.to_string()},
                    {"normal_form", nf.to_string(RenderStyle::GroupEqualDepth)}},
                   {{"algebra", o.algebra.name()},
                    {"partition", o.partition.to_string()},
                    {"normal_form", normal_form_json(nf, RenderStyle::GroupEqualDepth)}});
        return kOk;
    }
    const OrbitRecord& r = exceptional_orbit(a, q);
    out.record({{"algebra", r.type.name()},
                {"label", r.label},
                {"normal_form", r.normal_form.to_string(RenderStyle::AsListed)}},
               {{"algebra", r.type.name()},
                {"label", r.label},
                {"normal_form", normal_form_json(r.normal_form, RenderStyle::AsListed)}});
    return kOk;
}

json record_json(const OrbitRecord& r) {
    json aliases = json::array();
    for (const auto& x : r.aliases) aliases.push_back(x);
    json tags = json::array();
    for (const auto& x : r.embedding_tags) tags.push_back(x);
    return {{"algebra", r.type.name()},
            {"label", r.label},
            {"aliases", aliases},
            {"depth", r.depth},
            {"reduced_depth", r.reduced_depth()},
            {"type", type_name(r.nilpotent_type())},
            {"role", r.role == BushRole::Leader ? "leader" : "member"},
            {"bush_leader", r.leader_label},
            {"representative", r.representative.to_string()},
            {"normal_form", normal_form_json(r.normal_form, RenderStyle::AsListed)},
            {"embedding", r.embedding},
            {"embedding_tags", tags},
            {"dependent_roots", r.dependent_roots}};
}

std::vector<std::pair<std::string, std::string>> record_text(const OrbitRecord& r) {
    std::string aliases;
    for (const auto& x : r.aliases) aliases += (aliases.empty() ? "" : "; ") + x;
    return {{"algebra", r.type.name()},
            {"label", r.label},
            {"aliases", aliases.empty() ? "-" : aliases},
            {"depth", std::to_string(r.depth)},
            {"reduced_depth", std::to_string(r.reduced_depth())},
            {"type", type_name(r.nilpotent_type())},
            {"role", r.role == BushRole::Leader ? "leader" : "member"},
            {"bush_leader", r.leader_label},
            {"representative", r.representative.to_string()},
            {"normal_form", r.normal_form.to_string(RenderStyle::AsListed)},
            {"embedding", r.embedding}};
}

int cmd_lookup(const AlgebraArg& a, const Query& q, Output& out) {
    if (a.classical()) throw DomainError("lookup searches the exceptional tables; use classify for classical algebras");
    const OrbitRecord& r = exceptional_orbit(a, q);
    out.record(record_text(r), record_json(r));
    return kOk;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(Partition::from_parts(cur));
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

constexpr int kMaxEnumerationN = 40;

int cmd_bush(const AlgebraArg& a, const Query& q, Output& out) {
    if (a.classical()) {
        const auto o = classical_orbit(a, q);
        const auto f = facts(o);
        std::vector<Partition> members;
        if (!f.leader) {
            members.push_back(o.partition);
        } else {
            if (o.algebra.N > kMaxEnumerationN)
                throw DomainError("bush enumeration is limited to N <= " + std::to_string(kMaxEnumerationN));
            for (const auto& p : partitions_of(o.algebra.N))
                if (!p.is_trivial() && !validate(o.algebra, p) && !is_case4(o.algebra, p) &&
                    bush_leader(o.algebra, p) == *f.leader)
                    members.push_back(p);
            // Leader first, then members by decreasing depth.
            std::stable_sort(members.begin(), members.end(), [&](const Partition& x, const Partition& y) {
                if ((x == *f.leader) != (y == *f.leader)) return x == *f.leader;
                return depth(o.algebra, x) > depth(o.algebra, y);
            });
        }
        for (const auto& p : members) {
            const ClassicalFacts m = facts({o.algebra, p});
            out.line(o.algebra.name() + " " + p.to_string() + " d=" + std::to_string(m.depth) + " " +
                         type_name(m.type) + " " + m.nf.to_string(RenderStyle::GroupEqualDepth),
                     {{"algebra", o.algebra.name()},
                      {"partition", p.to_string()},
                      {"depth", m.depth},
                      {"type", type_name(m.type)},
                      {"bush_leader", f.leader ? json(f.leader->to_string()) : json(nullptr)},
                      {"normal_form", normal_form_json(m.nf, RenderStyle::GroupEqualDepth)}});
        }
        return kOk;
    }
    const OrbitRecord& r = exceptional_orbit(a, q);
    for (const auto& m : bush(a.exc(), r.label))
        out.line(m.type.name() + " " + m.label + " d=" + std::to_string(m.depth) + " " + type_name(m.nilpotent_type()) +
                     " " + m.normal_form.to_string(RenderStyle::AsListed),
                 record_json(m));
    return kOk;
}

std::string charpoly_text(const Polynomial& p, const CyclotomicFactors& f) {
    return p.to_string() + " = " + factors_to_string(f);
}

int cmd_weyl(const AlgebraArg& a, const Query& q, Output& out) {
    if (!q.labels.empty()) {
        const SimpleType t = a.classical() ? throw DomainError("--labels takes an exceptional type") : a.exc();
        std::vector<int> labels;
        for (char c : q.labels) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("--labels takes a digit string");
            labels.push_back(c - '0');
        }
        const KacData k = kac_data(t, labels);
        out.record({{"algebra", t.name()},
                    {"labels", labels_string(k.labels)},
                    {"s0", std::to_string(k.s0)},
                    {"modulus", std::to_string(k.modulus)},
                    {"even", k.even ? "true" : "false"},
                    {"order", std::to_string(k.order)},
                    {"halved", k.halved.empty() ? "-" : labels_string(k.halved)}},
                   {{"algebra", t.name()},
                    {"labels", labels_string(k.labels)},
                    {"s0", k.s0},
                    {"modulus", k.modulus},
                    {"even", k.even},
                    {"order", k.order},
                    {"halved", k.halved.empty() ? json(nullptr) : json(labels_string(k.halved))}});
        return kOk;
    }
    WeylClassInvariant w;
    std::string algebra, orbit_key, orbit;
    NormalForm nf;
    if (a.classical()) {
        const auto o = classical_orbit(a, q);
        w = composite_invariant(o.algebra, o.partition);
        nf = normal_form(o.algebra, o.partition);
        algebra = o.algebra.name();
        orbit_key = "partition";
        orbit = o.partition.to_string();
    } else {
        const OrbitRecord& r = exceptional_orbit(a, q);
        w = composite_invariant(r.normal_form);
        nf = r.normal_form;
        algebra = r.type.name();
        orbit_key = "label";
        orbit = r.label;
    }
    std::vector<std::pair<std::string, std::string>> text{
        {"algebra", algebra}, {orbit_key, orbit}, {"normal_form", nf.to_string(RenderStyle::AsListed)}};
    json comps = json::array();
    for (const auto& c : w.components) {
        const std::string mult = c.multiplicity > 1 ? std::to_string(c.multiplicity) + " x " : "";
        text.emplace_back("component", mult + c.component.label() + " order " + std::to_string(c.order) +
                                           " charpoly " + factors_to_string(c.factors));
        comps.push_back({{"label", c.component.label()},
                         {"multiplicity", c.multiplicity},
                         {"order", c.order},
                         {"charpoly", factors_to_string(c.factors)},
                         {"charpoly_coefficients", from_factors(c.factors).coefficients()}});
    }
    text.emplace_back("total_order", std::to_string(w.total_order));
    json j{{"algebra", algebra}, {orbit_key, orbit}, {"normal_form", normal_form_json(nf, RenderStyle::AsListed)},
           {"components", comps}, {"total_order", w.total_order}};
    if (w.ambient_charpoly) {
        const auto f = cyclotomic_factor(*w.ambient_charpoly);
        text.emplace_back("ambient_charpoly", charpoly_text(*w.ambient_charpoly, f));
        j["ambient_charpoly"] = {{"coefficients", w.ambient_charpoly->coefficients()},
                                 {"factors", factors_to_string(f)}};
    } else {
        text.emplace_back("ambient_charpoly", "-");
        j["ambient_charpoly"] = nullptr;
    }
    out.record(text, j);
    return kOk;
}

int verify_classical(const ClassicalOrbit& o, Output& out) {
    const NormalFormReport r = verify_normal_form(o.algebra, o.partition);
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    std::string depths;
    for (int d : r.component_depths) depths += (depths.empty() ? "" : ",") + std::to_string(d);
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(f);
    out.record({{"algebra", o.algebra.name()},
                {"partition", o.partition.to_string()},
                {"components_in_algebra", b(r.components_in_algebra)},
                {"triples_valid", b(r.triples_valid)},
                {"components_commute", b(r.components_commute)},
                {"jordan_type_matches", b(r.jordan_type_matches)},
                {"max_depth_is_reduced_depth", b(r.max_depth_is_reduced_depth)},
                {"component_depths_match", b(r.component_depths_match)},
                {"component_depths", depths.empty() ? "-" : depths},
                {"verified", b(r.all())}},
               {{"algebra", o.algebra.name()},
                {"partition", o.partition.to_string()},
                {"components_in_algebra", r.components_in_algebra},
                {"triples_valid", r.triples_valid},
                {"components_commute", r.components_commute},
                {"jordan_type_matches", r.jordan_type_matches},
                {"max_depth_is_reduced_depth", r.max_depth_is_reduced_depth},
                {"component_depths_match", r.component_depths_match},
                {"component_depths", r.component_depths},
                {"failures", failures},
                {"verified", r.all()}});
    return r.all() ? kOk : kVerificationFailed;
}

int verify_exceptional(const OrbitRecord& rec, Output& out) {
    auto g = algebra_for(rec.type);
    std::optional<RealizedRepresentative> rr;
    std::string failure;
    try {
        rr = realize_representative(rec, *g);
    } catch (const VerificationError& e) {
        failure = e.what();
    }
    const bool ok = rr.has_value();
    std::string coeffs;
    if (rr)
        for (int c : rr->coefficients) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
    out.record({{"algebra", rec.type.name()},
                {"label", rec.label},
                {"printed_depth", std::to_string(rec.depth)},
                {"computed_depth", rr ? std::to_string(rr->grading.depth) : "-"},
                {"dim_g_d", rr ? std::to_string(rr->grading.dim(rr->grading.depth)) : "-"},
                {"dynkin_labels", rr && !rr->labels.empty() ? labels_string(rr->labels) : "-"},
                {"coefficients", coeffs.empty() ? "-" : coeffs},
                {"coefficients_searched", rr && rr->searched ? "true" : "false"},
                {"verified", ok ? "true" : "false"},
                {"failure", failure.empty() ? "-" : failure}},
               {{"algebra", rec.type.name()},
                {"label", rec.label},
                {"printed_depth", rec.depth},
                {"computed_depth", rr ? json(rr->grading.depth) : json(nullptr)},
                {"dim_g_d", rr ? json(rr->grading.dim(rr->grading.depth)) : json(nullptr)},
                {"dynkin_labels", rr && !rr->labels.empty() ? json(labels_string(rr->labels)) : json(nullptr)},
                {"coefficients", rr ? json(rr->coefficients) : json(nullptr)},
                {"coefficients_searched", rr && rr->searched},
                {"verified", ok},
                {"failure", failure.empty() ? json(nullptr) : json(failure)}});
    return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const AlgebraArg& a, const Query& q, Output& out) {
    if (q.batch) {
        int rc = kOk;
        if (a.classical()) {
            if (a.n_from_partition) throw DomainError("verify --batch needs an algebra with N, e.g. so_12");
            for (const auto& p : partitions_of(a.cls().N))
                if (!validate(a.cls(), p)) rc = std::max(rc, verify_classical({a.cls(), p}, out));
        } else {
            for (const auto& r : records(a.exc())) rc = std::max(rc, verify_exceptional(r, out));
        }
        return rc;
    }
    if (a.classical()) return verify_classical(classical_orbit(a, q), out);
    return verify_exceptional(exceptional_orbit(a, q), out);
}

int cmd_list(const AlgebraArg& a, const Query& q, Output& out) {
    if (a.classical()) {
        if (q.max_n <= 0) throw DomainError("list for a classical series needs --max-N");
        if (q.max_n > kMaxEnumerationN) throw DomainError("--max-N is limited to " + std::to_string(kMaxEnumerationN));
        const int lo = a.n_from_partition ? 2 : a.cls().N;
        for (int n = lo; n <= q.max_n; ++n) {
            ClassicalAlgebra alg{a.cls().series, n};
            try {
                alg.validate();
            } catch (const DomainError&) {
                continue;
            }
            for (const auto& p : partitions_of(n)) {
                if (p.is_trivial() || validate(alg, p)) continue;
                const ClassicalFacts f = facts({alg, p});
                out.line(alg.name() + " " + p.to_string() + " d=" + std::to_string(f.depth) + " " + type_name(f.type) +
                             " " + f.nf.to_string(RenderStyle::GroupEqualDepth),
                         {{"algebra", alg.name()},
                          {"partition", p.to_string()},
                          {"depth", f.depth},
                          {"reduced_depth", f.reduced},
                          {"type", type_name(f.type)},
                          {"normal_form", normal_form_json(f.nf, RenderStyle::GroupEqualDepth)}});
            }
        }
        return kOk;
    }
    if (q.max_n > 0) throw DomainError("--max-N applies to classical series only");
    for (const auto& r : enumerate(a.exc()))
        out.line(r.type.name() + " " + r.label + " d=" + std::to_string(r.depth) + " " + type_name(r.nilpotent_type()) +
                     " " + r.normal_form.to_string(RenderStyle::AsListed),
                 record_json(r));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nilpotent orbits of simple Lie algebras: depth, type, normal form, bush, Weyl class."};
    app.name("nilnf");
    app.require_subcommand(1);
    Query q;
    using Handler = int (*)(const AlgebraArg&, const Query&, Output&);
    struct Command {
        const char* name;
        const char* help;
        Handler handler;
    };
    const Command commands[] = {
        {"classify", "depth, reduced depth, type and bush leader of an orbit", cmd_classify},
        {"normal-form", "normal form as a sum of irreducible components", cmd_normal_form},
        {"bush", "all orbits sharing the orbit's semisimple part", cmd_bush},
        {"weyl", "Weyl-group class invariants (or Kac data with --labels)", cmd_weyl},
        {"verify", "certify an orbit: matrix oracle (classical) or Chevalley model (exceptional)", cmd_verify},
        {"list", "enumerate orbits (classical series need --max-N)", cmd_list},
        {"lookup", "full dataset record of an exceptional orbit", cmd_lookup},
    };
    std::vector<std::pair<CLI::App*, Handler>> subs;
    for (const auto& c : commands) {
        CLI::App* s = app.add_subcommand(c.name, c.help);
        s->add_option("algebra", q.algebra, "sl, sp, so (N from the partition), so_13, B6, E8, ...")->required();
        if (std::string(c.name) != "list") s->add_option("orbit", q.orbit, "partition or Bala-Carter label");
        if (std::string(c.name) != "lookup" && std::string(c.name) != "list")
            s->add_option("-p,--partition", q.partition, "partition, e.g. \"5,4,4\" or \"24^3,23^4,1^5\"");
        if (std::string(c.name) != "list") s->add_option("-l,--label", q.label, "Bala-Carter label, e.g. \"E_8(a_7)\"");
        if (std::string(c.name) == "list") s->add_option("--max-N", q.max_n, "largest N for classical series");
        if (std::string(c.name) == "weyl") s->add_option("--labels", q.labels, "Dynkin labels for Kac data, e.g. 00002000");
        if (std::string(c.name) == "verify") s->add_flag("--batch", q.batch, "every orbit of the algebra");
        s->add_flag("--json", q.json, "one JSON record per line");
        subs.emplace_back(s, c.handler);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        for (const auto& [s, h] : subs)
            if (s->parsed()) err << "run 'nilnf " << s->get_name() << " --help' for usage\n";
        return kDomainError;
    }
    for (const auto& [s, h] : subs) {
        if (!s->parsed()) continue;
        std::ostringstream buffer;
        Output o(buffer, q.json, s->get_name());
        try {
            const AlgebraArg a = parse_algebra(q.algebra);
            const int rc = h(a, q, o);
            out << buffer.str();
            return rc;
        } catch (const DomainError& e) {
            out << buffer.str();
            err << "error: " << e.what() << "\n";
            return kDomainError;
        } catch (const VerificationError& e) {
            out << buffer.str();
            err << "verification failed: " << e.what() << "\n";
            return kVerificationFailed;
        }
    }
    return kDomainError;
}

}  // namespace nilnf::cli
