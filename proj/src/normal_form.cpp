#include "nilnf/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "nilnf/error.hpp"

namespace nilnf {

namespace {

struct ExceptionalName {
    ComponentKind kind;
    const char* label;
    int depth;
    int rank;
};

constexpr ExceptionalName kExceptional[] = {
    {ComponentKind::G2, "G_2", 10, 2},         {ComponentKind::F4, "F_4", 22, 4},
    {ComponentKind::F4a2, "F_4(a_2)", 10, 4},  {ComponentKind::E6a1, "E_6(a_1)", 16, 6},
    {ComponentKind::E7, "E_7", 34, 7},         {ComponentKind::E7a1, "E_7(a_1)", 26, 7},
    {ComponentKind::E7a5, "E_7(a_5)", 10, 7},  {ComponentKind::E8, "E_8", 58, 8},
    {ComponentKind::E8a1, "E_8(a_1)", 46, 8},  {ComponentKind::E8a2, "E_8(a_2)", 38, 8},
    {ComponentKind::E8a4, "E_8(a_4)", 28, 8},  {ComponentKind::E8a5, "E_8(a_5)", 22, 8},
    {ComponentKind::E8a6, "E_8(a_6)", 18, 8},  {ComponentKind::E8a7, "E_8(a_7)", 10, 8},
};

const ExceptionalName* exceptional(ComponentKind k) {
    for (const auto& e : kExceptional)
        if (e.kind == k) return &e;
    return nullptr;
}

int precedence(ComponentKind k) {
    switch (k) {
    case ComponentKind::C: return 0;
    case ComponentKind::A: return 1;
    case ComponentKind::B: return 2;
    case ComponentKind::Da: return 3;
    default: return 4 + static_cast<int>(k);
    }
}

bool is_prime_char(char c) { return c == '\''; }

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s += c;
    return s;
}

std::string render_term(const NormalFormTerm& t) {
    const std::string mult = t.multiplicity > 1 ? std::to_string(t.multiplicity) : "";
    if (!t.group_decoration.empty()) return "(" + mult + t.component.label() + ")" + t.group_decoration;
    return mult + t.component.label();
}

}  // namespace

int NormalFormComponent::intrinsic_depth() const {
    switch (kind) {
    case ComponentKind::A: return 4 * k;
    case ComponentKind::C: return 4 * k - 2;
    case ComponentKind::B: return 4 * k - 2;
    case ComponentKind::Da: return 4 * k + 2;
    default: return exceptional(kind)->depth;
    }
}

int NormalFormComponent::rank() const {
    switch (kind) {
    case ComponentKind::A: return 2 * k;
    case ComponentKind::C: return k;
    case ComponentKind::B: return k;
    case ComponentKind::Da: return 2 * k + 2;
    default: return exceptional(kind)->rank;
    }
}

std::string NormalFormComponent::base_label() const {
    switch (kind) {
    case ComponentKind::A: return "A_" + std::to_string(2 * k);
    case ComponentKind::C: return "C_" + std::to_string(k);
    case ComponentKind::B: return "B_" + std::to_string(k);
    case ComponentKind::Da: return "D_" + std::to_string(2 * k + 2) + "(a_" + std::to_string(k) + ")";
    default: return exceptional(kind)->label;
    }
}

std::string NormalFormComponent::label() const {
    std::string s = printed.empty() ? base_label() : printed;
    if (decoration == "~") return s.substr(0, 1) + "~" + s.substr(1);
    return s + decoration;
}

void NormalFormComponent::validate() const {
    bool ok = true;
    switch (kind) {
    case ComponentKind::A: ok = k >= 1; break;
    case ComponentKind::C: ok = k >= 1; break;
    case ComponentKind::B: ok = k >= 2 && k != 3; break;
    case ComponentKind::Da: ok = k >= 1; break;
    default: ok = k == 0; break;
    }
    if (!ok) throw DomainError("component " + base_label() + " is not in the irreducible catalogue");
}

NormalFormComponent parse_component(std::string_view text) {
    const std::string s = strip(text);
    auto fail = [&](const std::string& why) {
        return DomainError("cannot parse component '" + std::string(text) + "': " + why);
    };
    if (s.empty()) throw fail("empty");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::size_t pos = 1;
    NormalFormComponent c;
    if (pos < s.size() && s[pos] == '~') {
        c.decoration = "~";
        ++pos;
    }
    if (pos < s.size() && s[pos] == '_') ++pos;
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw fail("expected a number");
        if (pos - start > 4) throw fail("number too large");
        return std::stoi(s.substr(start, pos - start));
    };
    const int n = read_int();
    int a = -1;
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        if (pos >= s.size() || std::tolower(static_cast<unsigned char>(s[pos])) != 'a') throw fail("expected (a_m)");
        ++pos;
        if (pos < s.size() && s[pos] == '_') ++pos;
        a = read_int();
        if (pos >= s.size() || s[pos] != ')') throw fail("unclosed (a_m)");
        ++pos;
    }
    std::string primes;
    while (pos < s.size() && is_prime_char(s[pos])) primes += s[pos++];
    if (pos != s.size()) throw fail("trailing characters");
    if (!primes.empty()) {
        if (!c.decoration.empty()) throw fail("both tilde and prime");
        c.decoration = primes;
    }

    switch (letter) {
    case 'A':
        if (a >= 0) throw fail("A has no (a_m) variant");
        if (n == 1) {
            c.kind = ComponentKind::C;
            c.k = 1;
            c.printed = "A_1";
        } else if (n % 2 == 0 && n >= 2) {
            c.kind = ComponentKind::A;
            c.k = n / 2;
        } else {
            throw fail("A_n components need n even");
        }
        break;
    case 'C':
        if (a >= 0) throw fail("C has no (a_m) variant");
        c.kind = ComponentKind::C;
        c.k = n;
        break;
    case 'B':
        if (a >= 0) throw fail("B has no (a_m) variant");
        c.kind = ComponentKind::B;
        c.k = n;
        break;
    case 'D':
        if (a < 1 || n != 2 * a + 2) throw fail("D components have the form D_{2k+2}(a_k)");
        c.kind = ComponentKind::Da;
        c.k = a;
        break;
    default: {
        const std::string base = std::string(1, letter) + "_" + std::to_string(n) +
                                 (a >= 0 ? "(a_" + std::to_string(a) + ")" : "");
        const ExceptionalName* hit = nullptr;
        for (const auto& e : kExceptional)
            if (base == e.label) hit = &e;
        if (!hit) throw fail("not an irreducible component");
        c.kind = hit->kind;
        c.k = 0;
    }
    }
    c.validate();
    return c;
}

void NormalForm::add(const NormalFormComponent& c, int mult) {
    for (auto& t : terms_)
        if (t.component == c && t.group_decoration.empty()) {
            t.multiplicity += mult;
            return;
        }
    terms_.push_back({c, mult, ""});
}

NormalForm NormalForm::plus(const NormalForm& delta) const {
    NormalForm out = *this;
    out.terms_.insert(out.terms_.end(), delta.terms_.begin(), delta.terms_.end());
    return out;
}

void NormalForm::sort_canonical() {
    std::stable_sort(terms_.begin(), terms_.end(), [](const NormalFormTerm& x, const NormalFormTerm& y) {
        const auto& a = x.component;
        const auto& b = y.component;
        if (a.intrinsic_depth() != b.intrinsic_depth()) return a.intrinsic_depth() > b.intrinsic_depth();
        if (precedence(a.kind) != precedence(b.kind)) return precedence(a.kind) < precedence(b.kind);
        return a.k > b.k;
    });
}

int NormalForm::max_depth() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.component.intrinsic_depth());
    return d;
}

int NormalForm::total_rank() const {
    int r = 0;
    for (const auto& t : terms_) r += t.multiplicity * t.component.rank();
    return r;
}

std::string NormalForm::to_string(RenderStyle style) const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        if (style == RenderStyle::GroupEqualDepth)
            while (j < terms_.size() &&
                   terms_[j].component.intrinsic_depth() == terms_[i].component.intrinsic_depth())
                ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += "(";
        for (std::size_t t = i; t < j; ++t) {
            if (t > i) out += "+";
            out += render_term(terms_[t]);
        }
        if (j - i > 1) out += ")";
        i = j;
    }
    return out;
}

bool NormalForm::equivalent(const NormalForm& other) const {
    using Key = std::tuple<int, int, std::string, std::string>;
    auto count = [](const NormalForm& nf) {
        std::map<Key, int> m;
        for (const auto& t : nf.terms_)
            m[{static_cast<int>(t.component.kind), t.component.k, t.component.decoration, t.group_decoration}] +=
                t.multiplicity;
        return m;
    };
    return count(*this) == count(other);
}

namespace {

// Splits at '+' outside parentheses.
std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> parts;
    int level = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++level;
        if (c == ')') --level;
        if (level < 0) throw DomainError("unbalanced ')' in normal form '" + s + "'");
        if (c == '+' && level == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (level != 0) throw DomainError("unbalanced '(' in normal form '" + s + "'");
    parts.push_back(cur);
    return parts;
}

void parse_into(const std::string& s, int outer_mult, std::vector<NormalFormTerm>& out) {
    for (const std::string& part : split_top(s)) {
        if (part.empty()) throw DomainError("empty term in normal form '" + s + "'");
        std::size_t pos = 0;
        while (pos < part.size() && std::isdigit(static_cast<unsigned char>(part[pos]))) ++pos;
        int mult = pos > 0 ? std::stoi(part.substr(0, pos)) : 1;
        if (pos > 0 && mult < 1) throw DomainError("multiplicity must be positive in '" + part + "'");
        mult *= outer_mult;
        if (pos < part.size() && part[pos] == '(') {
            const std::size_t close = part.rfind(')');
            const std::string inner = part.substr(pos + 1, close - pos - 1);
            const std::string deco = part.substr(close + 1);
            if (!std::all_of(deco.begin(), deco.end(), is_prime_char))
                throw DomainError("unexpected text after ')' in '" + part + "'");
            if (deco.empty()) {
                parse_into(inner, mult, out);
            } else {
                std::vector<NormalFormTerm> sub;
                parse_into(inner, mult, sub);
                if (sub.size() != 1) throw DomainError("primes may only decorate a single multiple: '" + part + "'");
                sub[0].group_decoration = deco;
                out.push_back(sub[0]);
            }
        } else {
            out.push_back({parse_component(part.substr(pos)), mult, ""});
        }
    }
}

}  // namespace

NormalForm parse_normal_form(std::string_view text) {
    std::string s = strip(text);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) return NormalForm{};
    std::vector<NormalFormTerm> terms;
    parse_into(s, 1, terms);
    return NormalForm(std::move(terms));
}

}  // namespace nilnf
