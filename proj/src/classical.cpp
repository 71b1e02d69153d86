#include "nilnf/classical.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "nilnf/error.hpp"

namespace nilnf {

Partition Partition::from_parts(const std::vector<int>& parts) {
    std::map<int, int, std::greater<>> m;
    for (int x : parts) {
        if (x <= 0) throw DomainError("partition parts must be positive, got " + std::to_string(x));
        ++m[x];
    }
    Partition p;
    for (const auto& [part, mult] : m) p.parts_.emplace_back(part, mult);
    return p;
}

Partition Partition::from_multiplicities(std::vector<std::pair<int, int>> parts) {
    std::map<int, int, std::greater<>> m;
    for (const auto& [part, mult] : parts) {
        if (part <= 0 || mult <= 0)
            throw DomainError("partition parts and multiplicities must be positive");
        m[part] += mult;
    }
    Partition p;
    for (const auto& [part, mult] : m) p.parts_.emplace_back(part, mult);
    return p;
}

Partition Partition::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != '{' && c != '}') s += c;
    // Outer brackets.
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')'))) {
        s = s.substr(1, s.size() - 2);
        trim(s);
    }
    if (s.empty()) throw DomainError("empty partition");
    std::vector<std::pair<int, int>> parts;
    std::size_t pos = 0;
    auto read_int = [&](const char* what) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 6)
            throw DomainError("cannot parse partition '" + std::string(text) + "': expected " + what);
        return std::stoi(s.substr(start, pos - start));
    };
    auto skip_space = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    while (true) {
        skip_space();
        const int part = read_int("a part");
        int mult = 1;
        skip_space();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            const bool paren = pos < s.size() && s[pos] == '(';
            if (paren) ++pos;
            mult = read_int("a multiplicity");
            if (paren) {
                if (pos >= s.size() || s[pos] != ')')
                    throw DomainError("cannot parse partition '" + std::string(text) + "': unclosed '('");
                ++pos;
            }
        }
        parts.emplace_back(part, mult);
        skip_space();
        if (pos == s.size()) break;
        if (s[pos] != ',')
            throw DomainError("cannot parse partition '" + std::string(text) + "': unexpected '" +
                              std::string(1, s[pos]) + "'");
        ++pos;
    }
    return from_multiplicities(std::move(parts));
}

std::vector<int> Partition::expanded() const {
    std::vector<int> out;
    for (const auto& [part, mult] : parts_) out.insert(out.end(), mult, part);
    return out;
}

int Partition::size() const {
    int n = 0;
    for (const auto& [part, mult] : parts_) n += part * mult;
    return n;
}

int Partition::multiplicity(int part) const {
    for (const auto& [x, m] : parts_)
        if (x == part) return m;
    return 0;
}

std::string Partition::to_string() const {
    std::string out;
    for (const auto& [part, mult] : parts_) {
        if (!out.empty()) out += ",";
        out += std::to_string(part);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

void ClassicalAlgebra::validate() const {
    switch (series) {
    case Series::sl:
        if (N < 2) throw DomainError("sl_N needs N >= 2");
        break;
    case Series::sp:
        if (N < 2 || N % 2 != 0) throw DomainError("sp_N needs N even and >= 2");
        break;
    case Series::so:
        if (N < 7)
            throw DomainError("so_N needs N >= 7 (so_3 = sp_2, so_4 = 2 sp_2, so_5 = sp_4, so_6 = sl_4)");
        break;
    }
}

std::string ClassicalAlgebra::name() const {
    const char* s = series == Series::sl ? "sl" : series == Series::sp ? "sp" : "so";
    return std::string(s) + "_" + std::to_string(N);
}

int ClassicalAlgebra::rank() const {
    switch (series) {
    case Series::sl: return N - 1;
    case Series::sp: return N / 2;
    case Series::so: return N / 2;
    }
    return 0;
}

Series ClassicalAlgebra::parse_series(std::string_view text) {
    std::string s;
    for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "sl" || s == "a") return Series::sl;
    if (s == "sp" || s == "c") return Series::sp;
    if (s == "so") return Series::so;
    throw DomainError("unknown classical series '" + std::string(text) + "' (expected sl, sp or so)");
}

std::string to_string(NilpotentType t) {
    switch (t) {
    case NilpotentType::Semisimple: return "semisimple";
    case NilpotentType::Nilpotent: return "nilpotent";
    case NilpotentType::Mixed: return "mixed";
    }
    return "";
}

std::optional<std::string> validate(const ClassicalAlgebra& algebra, const Partition& p) {
    if (p.size() != algebra.N)
        return "partition " + p.to_string() + " has size " + std::to_string(p.size()) + ", expected N = " +
               std::to_string(algebra.N);
    for (const auto& [part, mult] : p.parts()) {
        if (algebra.series == Series::sp && part % 2 == 1 && mult % 2 == 1)
            return "symplectic parity rule: odd part " + std::to_string(part) + " has odd multiplicity " +
                   std::to_string(mult);
        if (algebra.series == Series::so && part % 2 == 0 && mult % 2 == 1)
            return "orthogonal parity rule: even part " + std::to_string(part) + " has odd multiplicity " +
                   std::to_string(mult);
    }
    return std::nullopt;
}

void require_valid(const ClassicalAlgebra& algebra, const Partition& p) {
    algebra.validate();
    if (auto v = validate(algebra, p)) throw DomainError(*v);
}

namespace {

void require_nonzero(const ClassicalAlgebra& algebra, const Partition& p) {
    require_valid(algebra, p);
    if (p.is_trivial()) throw DomainError("the zero orbit 1^" + std::to_string(algebra.N) + " has no depth");
}

int second_part(const Partition& p) { return p.parts().size() > 1 ? p.parts()[1].first : 0; }

}  // namespace

int depth(const ClassicalAlgebra& algebra, const Partition& p) {
    require_nonzero(algebra, p);
    const int p1 = p.largest();
    const int r1 = p.parts().front().second;
    if (algebra.series != Series::so || r1 >= 2) return 2 * p1 - 2;
    return std::max(2 * p1 - 4, p1 + second_part(p) - 2);
}

bool is_case4(const ClassicalAlgebra& algebra, const Partition& p) {
    if (algebra.series != Series::so || p.is_trivial()) return false;
    const int p1 = p.largest();
    return p1 % 2 == 1 && p.parts().front().second == 1 && second_part(p) == p1 - 1;
}

Partition bush_leader(const ClassicalAlgebra& algebra, const Partition& p) {
    require_nonzero(algebra, p);
    if (is_case4(algebra, p))
        throw DomainError("partition " + p.to_string() +
                          " is Case 4 (p_1 odd, r_1 = 1, p_2 = p_1 - 1): nilpotent type, its bush is itself");
    const int p1 = p.largest();
    const int r1 = p.parts().front().second;
    std::vector<std::pair<int, int>> leader;
    if (algebra.series != Series::so || p1 % 2 == 0) {
        leader.emplace_back(p1, r1);
    } else if (r1 >= 2) {
        leader.emplace_back(p1, r1 - r1 % 2);
    } else if (second_part(p) == p1 - 2 && p1 >= 5) {
        leader.emplace_back(p1, 1);
        leader.emplace_back(p1 - 2, 1);
    } else {
        leader.emplace_back(p1, 1);
    }
    int used = 0;
    for (const auto& [part, mult] : leader) used += part * mult;
    if (algebra.N > used) leader.emplace_back(1, algebra.N - used);
    return Partition::from_multiplicities(std::move(leader));
}

NilpotentType classify_type(const ClassicalAlgebra& algebra, const Partition& p) {
    require_nonzero(algebra, p);
    if (is_case4(algebra, p)) return NilpotentType::Nilpotent;
    return bush_leader(algebra, p) == p ? NilpotentType::Semisimple : NilpotentType::Mixed;
}

int reduced_depth(const ClassicalAlgebra& algebra, const Partition& p) {
    const int d = depth(algebra, p);
    return classify_type(algebra, p) == NilpotentType::Nilpotent ? d - 1 : d;
}

namespace {

NormalFormComponent comp(ComponentKind kind, int k) {
    NormalFormComponent c;
    c.kind = kind;
    c.k = k;
    return c;
}

// Components of an so_N box made of a single odd part p: B_{(p-1)/2}, with
// G_2 for p = 7 and C_1 (so_3 = sp_2) for p = 3.
NormalFormComponent single_odd(int p) {
    if (p == 3) return comp(ComponentKind::C, 1);
    if (p == 7) return comp(ComponentKind::G2, 0);
    return comp(ComponentKind::B, (p - 1) / 2);
}

std::vector<Box> so_odd_boxes(std::map<int, int, std::greater<>> odd) {
    std::vector<Box> out;
    for (auto it = odd.begin(); it != odd.end(); ++it) {
        const int p = it->first;
        int& r = it->second;
        if (p == 1) break;
        for (; r >= 2; r -= 2) out.push_back({{p, p}, {comp(ComponentKind::A, (p - 1) / 2)}});
        if (r == 0) continue;
        r = 0;
        auto next = std::next(it);
        if (next != odd.end() && next->first == p - 2 && next->second > 0) {
            next->second -= 1;
            if (p == 3)
                out.push_back({{3, 1}, {comp(ComponentKind::C, 1), comp(ComponentKind::C, 1)}});
            else
                out.push_back({{p, p - 2}, {comp(ComponentKind::Da, (p - 3) / 2)}});
        } else {
            out.push_back({{p}, {single_odd(p)}});
        }
    }
    return out;
}

}  // namespace

std::vector<Box> boxes(const ClassicalAlgebra& algebra, const Partition& p) {
    require_valid(algebra, p);
    std::vector<Box> out;
    std::map<int, int, std::greater<>> odd;
    for (const auto& [part, mult] : p.parts()) {
        if (part % 2 == 0) {
            const int k = part / 2;
            if (algebra.series == Series::so)
                for (int i = 0; i < mult / 2; ++i) out.push_back({{part, part}, {comp(ComponentKind::C, k)}});
            else
                for (int i = 0; i < mult; ++i) out.push_back({{part}, {comp(ComponentKind::C, k)}});
        } else {
            odd[part] = mult;
        }
    }
    if (algebra.series == Series::so) {
        auto o = so_odd_boxes(std::move(odd));
        out.insert(out.end(), o.begin(), o.end());
        return out;
    }
    for (const auto& [part, mult] : odd) {
        if (part == 1) continue;
        const auto a = comp(ComponentKind::A, (part - 1) / 2);
        if (algebra.series == Series::sl)
            for (int i = 0; i < mult; ++i) out.push_back({{part}, {a}});
        else
            for (int i = 0; i < mult / 2; ++i) out.push_back({{part, part}, {a}});
    }
    return out;
}

NormalForm normal_form(const ClassicalAlgebra& algebra, const Partition& p) {
    NormalForm nf;
    for (const Box& b : boxes(algebra, p))
        for (const auto& c : b.components) nf.add(c);
    nf.sort_canonical();
    return nf;
}

}  // namespace nilnf
