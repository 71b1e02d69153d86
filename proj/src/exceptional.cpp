#include "nilnf/exceptional.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "nilnf/dataset.hpp"
#include "nilnf/error.hpp"

namespace nilnf {

bool is_exceptional(SimpleType type) {
    return type.family == Family::E || type.family == Family::F || type.family == Family::G;
}

// ---------------------------------------------------------------------------
// Representatives

Representative Representative::parse(std::string_view text, int rank) {
    Representative rep;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s += c;
    auto fail = [&](const std::string& why) {
        return DomainError("cannot parse representative '" + std::string(text) + "': " + why);
    };
    if (s == "f'" || s == "+f'") {
        rep.principal = true;
        for (int i = 0; i < rank; ++i) {
            Root r(rank, 0);
            r[i] = 1;
            rep.terms.push_back({r, 1, -1, -1});
        }
        return rep;
    }
    int next_bracket = 0, next_paren = 0;
    int bracket = -1, paren = -1;
    int sign = 1;
    bool expect_term = true;
    for (std::size_t pos = 0; pos < s.size();) {
        const char c = s[pos];
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            expect_term = true;
            ++pos;
        } else if (c == '[') {
            if (bracket >= 0 || paren >= 0) throw fail("'[' inside a group");
            bracket = next_bracket++;
            ++pos;
        } else if (c == ']') {
            if (bracket < 0 || paren >= 0) throw fail("unbalanced ']'");
            bracket = -1;
            ++pos;
        } else if (c == '(') {
            if (paren >= 0) throw fail("nested '('");
            paren = next_paren++;
            ++pos;
        } else if (c == ')') {
            if (paren < 0) throw fail("unbalanced ')'");
            paren = -1;
            ++pos;
        } else if (c == 'f') {
            if (!expect_term) throw fail("missing '+' between terms");
            if (pos + 1 >= s.size() || s[pos + 1] != '_') throw fail("expected f_<digits>");
            pos += 2;
            Root r;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) r.push_back(s[pos++] - '0');
            if (static_cast<int>(r.size()) != rank)
                throw fail("root of length " + std::to_string(r.size()) + " in rank " + std::to_string(rank));
            rep.terms.push_back({r, sign, bracket, paren});
            sign = 1;
            expect_term = false;
        } else {
            throw fail(std::string("unexpected '") + c + "'");
        }
    }
    if (bracket >= 0 || paren >= 0) throw fail("unclosed group");
    if (rep.terms.empty()) throw fail("no terms");
    return rep;
}

Representative Representative::plus(const Representative& delta) const {
    Representative out = *this;
    out.principal = principal && delta.terms.empty();
    int b = -1, p = -1;
    for (const auto& t : terms) {
        b = std::max(b, t.bracket);
        p = std::max(p, t.paren);
    }
    for (RootTerm t : delta.terms) {
        if (t.bracket >= 0) t.bracket += b + 1;
        if (t.paren >= 0) t.paren += p + 1;
        out.terms.push_back(std::move(t));
    }
    return out;
}

std::string Representative::to_string() const {
    if (principal && std::all_of(terms.begin(), terms.end(), [](const RootTerm& t) { return t.coefficient == 1; }))
        return "f'";
    std::string out;
    int cur_b = -1, cur_p = -1;
    for (const auto& t : terms) {
        if (cur_p >= 0 && t.paren != cur_p) {
            out += ")";
            cur_p = -1;
        }
        if (cur_b >= 0 && t.bracket != cur_b) {
            out += "]";
            cur_b = -1;
        }
        bool need_sep = !out.empty() && out.back() != '[' && out.back() != '(';
        if (t.bracket >= 0 && t.bracket != cur_b) {
            if (need_sep) out += "+";
            out += "[";
            cur_b = t.bracket;
            need_sep = false;
        }
        if (t.paren >= 0 && t.paren != cur_p) {
            if (need_sep) out += "+";
            out += "(";
            cur_p = t.paren;
            need_sep = false;
        }
        if (t.coefficient < 0) out += "-";
        else if (need_sep) out += "+";
        if (std::abs(t.coefficient) != 1) out += std::to_string(std::abs(t.coefficient));
        out += "f_";
        for (int c : t.root) out += static_cast<char>('0' + c);
    }
    if (cur_p >= 0) out += ")";
    if (cur_b >= 0) out += "]";
    return out;
}

// ---------------------------------------------------------------------------
// Records

NilpotentType OrbitRecord::nilpotent_type() const {
    if (depth % 2 == 1) return NilpotentType::Nilpotent;
    return role == BushRole::Leader ? NilpotentType::Semisimple : NilpotentType::Mixed;
}

int OrbitRecord::reduced_depth() const { return depth % 2 == 1 ? depth - 1 : depth; }

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

std::vector<std::string> data_lines(const char* text) {
    std::vector<std::string> out;
    for (auto& line : split(text, '\n'))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

std::string join_embedding(const std::string& leader, const std::string& delta) {
    if (delta.empty() || delta[0] != '+') return delta == leader ? leader : leader + " + " + delta;
    std::string out = leader;
    for (const auto& part : split(delta.substr(1), '+')) out += " + " + trim(part);
    return out;
}

std::vector<std::string> tags_of(const std::string& embedding) {
    std::vector<std::string> out;
    for (const auto& part : split(embedding, '+'))
        if (!trim(part).empty()) out.push_back(trim(part));
    return out;
}

struct Dataset {
    std::map<std::pair<int, int>, std::vector<OrbitRecord>> by_type;
    std::vector<IrreducibleRecord> irreducible;
};

std::pair<int, int> key(SimpleType t) { return {static_cast<int>(t.family), t.rank}; }

std::vector<int> digits(const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw VerificationError("non-digit in diagram '" + s + "'");
        out.push_back(c - '0');
    }
    return out;
}

Dataset load() {
    Dataset ds;
    std::size_t line_no = 0;
    for (const auto& line : data_lines(dataset::kOrbitsTsv)) {
        ++line_no;
        const auto f = split(line, '\t');
        const std::string where = "orbit dataset record " + std::to_string(line_no);
        if (f.size() != 10) throw VerificationError(where + ": expected 10 fields, got " + std::to_string(f.size()));
        try {
            OrbitRecord r;
            r.type = SimpleType::parse(f[0]);
            r.label = f[1];
            if (f[2] != "-") r.aliases = split(f[2], ';');
            r.role = f[4] == "member" ? BushRole::Member : BushRole::Leader;
            if (f[4] != "member" && f[4] != "leader") throw VerificationError("bad role '" + f[4] + "'");
            auto& list = ds.by_type[key(r.type)];
            r.table_row = list.size();
            const RootSystem roots(r.type);
            if (r.role == BushRole::Leader) {
                r.depth = std::stoi(f[3]);
                r.leader_label = r.label;
                r.representative = Representative::parse(f[5], r.type.rank);
                r.normal_form = parse_normal_form(f[6]);
                r.embedding = f[8];
            } else {
                if (f[3] != "-") throw VerificationError("member rows carry the block depth implicitly");
                auto leader = std::find_if(list.rbegin(), list.rend(),
                                           [](const OrbitRecord& x) { return x.role == BushRole::Leader; });
                if (leader == list.rend()) throw VerificationError("member row before any leader");
                r.depth = leader->depth;
                r.leader_label = leader->label;
                r.delta_representative = Representative::parse(f[5], r.type.rank);
                r.representative = leader->representative.plus(r.delta_representative);
                r.delta_normal_form = parse_normal_form(f[6]);
                r.embedding_delta = f[8];
                r.embedding = join_embedding(leader->embedding, f[8]);
            }
            const NormalForm stored_full = parse_normal_form(f[7]);
            if (r.role == BushRole::Leader && !stored_full.equivalent(r.normal_form))
                throw VerificationError("leader normal form columns disagree");
            r.normal_form = stored_full;
            r.embedding_tags = tags_of(r.embedding);
            r.dependent_roots = f[9] == "dependent";
            for (const auto& t : r.representative.terms)
                if (!roots.positive_index(t.root))
                    throw VerificationError("a term of the representative is not a positive root");
            list.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw VerificationError(where + " (" + f[0] + " " + f[1] + "): " + e.what());
        }
    }
    for (const auto& line : data_lines(dataset::kIrreducibleTsv)) {
        const auto f = split(line, '\t');
        if (f.size() != 9) throw VerificationError("irreducible dataset: expected 9 fields in '" + line + "'");
        IrreducibleRecord r;
        r.component = parse_component(f[0]);
        r.type = SimpleType::parse(f[1]);
        r.printed_diagram = digits(f[2]);
        r.dynkin_labels = table_to_internal(r.type, r.printed_diagram);
        r.depth = std::stoi(f[3]);
        r.dim_gd = std::stoi(f[4]);
        r.zs_action = f[5];
        r.weyl_diagram = digits(f[6]);
        r.weyl_order = std::stoi(f[7]);
        r.charpoly = f[8];
        ds.irreducible.push_back(std::move(r));
    }
    return ds;
}

const Dataset& data() {
    static const Dataset ds = load();
    return ds;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

const std::vector<OrbitRecord>& records(SimpleType type) {
    type.validate();
    if (!is_exceptional(type))
        throw DomainError(type.name() + " is classical; orbits are given by partitions, not the exceptional tables");
    const auto& m = data().by_type;
    auto it = m.find(key(type));
    if (it == m.end()) throw VerificationError("no dataset rows for " + type.name());
    return it->second;
}

std::vector<OrbitRecord> enumerate(SimpleType type) {
    std::vector<OrbitRecord> out = records(type);
    std::stable_sort(out.begin(), out.end(),
                     [](const OrbitRecord& a, const OrbitRecord& b) { return a.depth < b.depth; });
    return out;
}

std::string normalize_label(std::string_view label) {
    std::string s(label);
    auto replace_all = [&](const std::string& from, const std::string& to) {
        for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
            s.replace(pos, from.size(), to);
    };
    replace_all("\xE2\x80\xB3", "''");  // double prime
    replace_all("\xE2\x80\xB2", "'");   // prime
    replace_all("\xE2\x80\x99", "'");   // right single quotation mark
    replace_all("\"", "''");
    replace_all("\xC3\x83", "A~");  // A with tilde
    replace_all("\xCC\x83", "~");   // combining tilde, follows its letter
    for (char letter : std::string("ABCDEFG")) {
        replace_all("\\tilde{" + std::string(1, letter) + "}", std::string(1, letter) + "~");
        replace_all("~" + std::string(1, letter), std::string(1, letter) + "~");
    }
    std::string out;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}') continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

const OrbitRecord& lookup(SimpleType type, std::string_view label) {
    const auto& list = records(type);
    const std::string want = normalize_label(label);
    for (const auto& r : list)
        if (normalize_label(r.label) == want) return r;
    const OrbitRecord* hit = nullptr;
    for (const auto& r : list)
        for (const auto& a : r.aliases)
            if (normalize_label(a) == want) {
                if (hit && hit != &r)
                    throw DomainError("label '" + std::string(label) + "' is an alias of both " + hit->label +
                                      " and " + r.label + " in " + type.name());
                hit = &r;
            }
    if (hit) return *hit;
    std::vector<std::pair<std::size_t, std::string>> near;
    for (const auto& r : list) near.emplace_back(edit_distance(want, normalize_label(r.label)), r.label);
    std::stable_sort(near.begin(), near.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string msg = "unknown orbit label '" + std::string(label) + "' in " + type.name() + "; nearest:";
    for (std::size_t i = 0; i < std::min<std::size_t>(3, near.size()); ++i) msg += " " + near[i].second;
    throw DomainError(msg);
}

std::vector<OrbitRecord> bush(SimpleType type, std::string_view label) {
    const OrbitRecord& r = lookup(type, label);
    std::vector<OrbitRecord> out;
    for (const auto& x : records(type))
        if (x.leader_label == r.leader_label) out.push_back(x);
    return out;
}

const std::vector<IrreducibleRecord>& irreducible_records() { return data().irreducible; }

std::vector<int> table_to_internal(SimpleType type, std::vector<int> const& printed) {
    if (static_cast<int>(printed.size()) != type.rank)
        throw DomainError("diagram length does not match rank of " + type.name());
    std::vector<int> out = printed;
    if (type.family == Family::E || type.family == Family::F) std::swap(out[0], out[1]);
    return out;
}

std::vector<int> extended_node_order(SimpleType type) {
    switch (type.family) {
    case Family::G: return {0, 1, 2};
    case Family::F: return {0, 1, 2, 3, 4};
    case Family::E:
        if (type.rank == 6) return {1, 3, 4, 5, 6, 2, 0};
        if (type.rank == 7) return {0, 1, 3, 4, 5, 6, 7, 2};
        return {0, 8, 7, 6, 5, 4, 3, 1, 2};
    default: throw DomainError("no stored Kac diagrams for " + type.name());
    }
}

std::string dataset_sha256() { return dataset::kOrbitsSha256; }

// ---------------------------------------------------------------------------
// Realization

namespace {

struct Attempt {
    bool ok = false;
    RealizedRepresentative result;
};

Attempt try_coefficients(const OrbitRecord& record, const ChevalleyAlgebra& g, const std::vector<int>& coeffs) {
    Attempt a;
    AlgebraElement f = g.zero();
    const auto& terms = record.representative.terms;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto idx = g.negative_root_vector(terms[i].root);
        if (!idx) throw VerificationError("realize_representative: not a root in " + record.label);
        f.add(*idx, coeffs[i]);
    }
    if (f.is_zero()) return a;
    try {
        Sl2Completion c = sl2_complete(f);
        GradedDecomposition gr = grading(c.triple);
        if (gr.depth != record.depth) return a;
        a.result.f = f;
        a.result.completion = std::move(c);
        a.result.grading = std::move(gr);
        a.result.coefficients = coeffs;
        a.ok = true;
    } catch (const VerificationError&) {
    }
    return a;
}

}  // namespace

RealizedRepresentative realize_representative(const OrbitRecord& record, const ChevalleyAlgebra& g) {
    if (!(g.roots().type().family == record.type.family && g.roots().type().rank == record.type.rank))
        throw DomainError("realize_representative: algebra type does not match record");
    const auto& terms = record.representative.terms;
    std::vector<int> printed;
    for (const auto& t : terms) printed.push_back(t.coefficient);

    Attempt best = try_coefficients(record, g, printed);
    if (!best.ok) {
        // Vary the added terms (for members) or all but the first term.
        const std::size_t first =
            record.role == BushRole::Member ? terms.size() - record.delta_representative.terms.size() : 1;
        const std::size_t n = terms.size() - first;
        for (const std::vector<int>& values : {std::vector<int>{1, -1}, std::vector<int>{1, -1, 2, -2}}) {
            std::vector<std::size_t> digit(n, 0);
            while (!best.ok) {
                std::vector<int> coeffs = printed;
                for (std::size_t i = 0; i < n; ++i) coeffs[first + i] = printed[first + i] * values[digit[i]];
                if (coeffs != printed) best = try_coefficients(record, g, coeffs);
                std::size_t i = 0;
                while (i < n && ++digit[i] == values.size()) digit[i++] = 0;
                if (i == n) break;
            }
            if (best.ok) break;
        }
        if (!best.ok) {
            std::string printed_result;
            try {
                AlgebraElement f = g.zero();
                for (const auto& t : terms) f.add(*g.negative_root_vector(t.root), t.coefficient);
                const Sl2Completion c = sl2_complete(f);
                printed_result = "; the printed coefficients give depth " + std::to_string(grading(c.triple).depth);
                if (c.support != CompletionSupport::General) {
                    printed_result += ", labels ";
                    for (int x : dynkin_labels(c.triple.h)) printed_result += static_cast<char>('0' + x);
                }
            } catch (const VerificationError&) {
            }
            throw VerificationError("realize_representative: no coefficient assignment gives depth " +
                                    std::to_string(record.depth) + " for " + record.type.name() + " " +
                                    record.label + printed_result);
        }
        best.result.searched = true;
    }
    RealizedRepresentative& r = best.result;
    if (r.completion.support != CompletionSupport::General) {
        r.labels = dynkin_labels(r.completion.triple.h);
    } else {
        auto m = labels_matching(g.roots(), r.grading);
        if (m.size() == 1) r.labels = m.front();
    }
    return r;
}

}  // namespace nilnf
