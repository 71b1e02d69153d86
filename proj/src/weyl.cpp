#include "nilnf/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nilnf/error.hpp"
#include "nilnf/exceptional.hpp"

namespace nilnf {

// ---------------------------------------------------------------------------
// Polynomials

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw VerificationError("polynomial coefficient overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw VerificationError("polynomial coefficient overflow");
    return r;
}

}  // namespace

Polynomial::Polynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(int degree, long long c) {
    std::vector<long long> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::cyclotomic(int n) {
    if (n < 1) throw DomainError("cyclotomic index must be positive");
    Polynomial p = monomial(n) - monomial(0);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = *p.divide_exact(cyclotomic(d));
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[static_cast<int>(i)], b[static_cast<int>(i)]);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Polynomial({-1}) * b; }

Polynomial Polynomial::pow(int e) const {
    Polynomial r({1});
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& monic) const {
    if (monic.is_zero() || monic.c_.back() != 1) throw DomainError("divide_exact needs a monic divisor");
    if (is_zero()) return Polynomial{};
    if (degree() < monic.degree()) return std::nullopt;
    std::vector<long long> r = c_;
    std::vector<long long> q(static_cast<std::size_t>(degree() - monic.degree()) + 1, 0);
    for (int i = degree(); i >= monic.degree(); --i) {
        const long long lead = r[i];
        if (lead == 0) continue;
        const int shift = i - monic.degree();
        q[shift] = lead;
        for (int j = 0; j <= monic.degree(); ++j) r[shift + j] = checked_add(r[shift + j], -checked_mul(lead, monic.c_[j]));
    }
    if (std::any_of(r.begin(), r.end(), [](long long x) { return x != 0; })) return std::nullopt;
    return Polynomial(std::move(q));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const long long c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        const long long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) out += std::to_string(a);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace

CyclotomicFactors cyclotomic_factor(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    CyclotomicFactors out;
    Polynomial rest = p;
    // phi(n) >= sqrt(n / 2), so n <= 2 deg^2 covers every candidate.
    const int bound = 2 * p.degree() * p.degree() + 2;
    for (int n = 1; n <= bound && rest.degree() > 0; ++n) {
        if (euler_phi(n) > rest.degree()) continue;
        const Polynomial phi = Polynomial::cyclotomic(n);
        while (auto q = rest.divide_exact(phi)) {
            rest = *q;
            ++out[n];
        }
    }
    if (!(rest == Polynomial({1})))
        throw VerificationError("polynomial " + p.to_string() + " is not a product of cyclotomic polynomials");
    return out;
}

Polynomial from_factors(const CyclotomicFactors& f) {
    Polynomial p({1});
    for (const auto& [n, m] : f) p = p * Polynomial::cyclotomic(n).pow(m);
    return p;
}

std::string factors_to_string(const CyclotomicFactors& f) {
    if (f.empty()) return "1";
    std::string out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += "phi_" + std::to_string(it->first);
        if (it->second > 1) out += "^" + std::to_string(it->second);
    }
    return out;
}

CyclotomicFactors parse_factors(std::string_view text) {
    CyclotomicFactors out;
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '{' && c != '}') s += c;
    if (s == "1") return out;
    std::size_t pos = 0;
    auto fail = [&] { return DomainError("cannot parse cyclotomic product '" + std::string(text) + "'"); };
    auto read_int = [&] {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw fail();
        return std::stoi(s.substr(start, pos - start));
    };
    while (pos < s.size()) {
        if (s.compare(pos, 4, "phi_") != 0) throw fail();
        pos += 4;
        const int n = read_int();
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = read_int();
        }
        out[n] += e;
        if (pos < s.size()) {
            if (s[pos] != '*') throw fail();
            ++pos;
        }
    }
    return out;
}

int factors_order(const CyclotomicFactors& f) {
    int r = 1;
    for (const auto& [n, m] : f) r = std::lcm(r, n);
    return r;
}

// ---------------------------------------------------------------------------
// Kac coordinates

KacData kac_data(SimpleType type, const std::vector<int>& labels) {
    type.validate();
    if (static_cast<int>(labels.size()) != type.rank)
        throw DomainError("expected " + std::to_string(type.rank) + " labels for " + type.name() + ", got " +
                          std::to_string(labels.size()));
    for (int s : labels)
        if (s < 0 || s > 2) throw DomainError("Dynkin label " + std::to_string(s) + " outside {0, 1, 2}");
    const RootSystem roots(type);
    KacData k;
    k.labels = labels;
    k.modulus = k.s0;
    for (int i = 0; i < type.rank; ++i) k.modulus += roots.marks()[i] * labels[i];
    k.even = std::all_of(labels.begin(), labels.end(), [](int s) { return s % 2 == 0; });
    k.order = k.even ? k.modulus / 2 : k.modulus;
    if (k.even) {
        k.halved.push_back(1);
        for (int s : labels) k.halved.push_back(s / 2);
    }
    return k;
}

// ---------------------------------------------------------------------------
// Irreducible classes

IrreducibleClass irreducible_class(const NormalFormComponent& component) {
    component.validate();
    IrreducibleClass c;
    c.component = component;
    const int k = component.k;
    switch (component.kind) {
    case ComponentKind::A:
        c.type = {Family::A, 2 * k};
        c.labels.assign(2 * k, 2);
        c.order = 2 * k + 1;
        c.charpoly = Polynomial(std::vector<long long>(2 * k + 1, 1));
        break;
    case ComponentKind::C:
    case ComponentKind::B:
        c.type = k == 1 ? SimpleType{Family::A, 1}
                        : SimpleType{component.kind == ComponentKind::C ? Family::C : Family::B, k};
        c.labels.assign(k, 2);
        c.order = 2 * k;
        c.charpoly = Polynomial::monomial(k) + Polynomial({1});
        break;
    case ComponentKind::Da:
        c.type = {Family::D, 2 * k + 2};
        for (int i = 0; i < 2 * k; ++i) c.labels.push_back(i % 2 == 0 ? 2 : 0);
        c.labels.push_back(2);
        c.labels.push_back(2);
        c.order = 2 * k + 2;
        c.charpoly = (Polynomial::monomial(k + 1) + Polynomial({1})).pow(2);
        break;
    default: {
        const IrreducibleRecord* hit = nullptr;
        for (const auto& r : irreducible_records())
            if (r.component.kind == component.kind) hit = &r;
        if (!hit) throw VerificationError("no catalogue record for " + component.base_label());
        c.type = hit->type;
        c.labels = hit->dynkin_labels;
        c.order = hit->weyl_order;
        c.factors = parse_factors(hit->charpoly);
        c.charpoly = from_factors(c.factors);
        c.diagram = kac_data(c.type, c.labels).halved;
        return c;
    }
    }
    c.factors = cyclotomic_factor(c.charpoly);
    c.diagram = kac_data(c.type, c.labels).halved;
    return c;
}

// ---------------------------------------------------------------------------
// Composite classes

WeylClassInvariant composite_invariant(const NormalForm& nf) {
    if (nf.terms().empty()) throw DomainError("the zero orbit has no normal form components");
    WeylClassInvariant w;
    for (const auto& t : nf.terms()) {
        const IrreducibleClass ic = irreducible_class(t.component);
        w.components.push_back({t.component, t.multiplicity, ic.order, ic.factors});
        w.total_order = std::lcm(w.total_order, ic.order);
    }
    return w;
}

namespace {

struct CycleModel {
    Polynomial poly{{1}};
    int coords = 0;
    int negative_cycles = 0;

    void positive(int len) {
        poly = poly * (Polynomial::monomial(len) - Polynomial({1}));
        coords += len;
    }
    void negative(int len) {
        poly = poly * (Polynomial::monomial(len) + Polynomial({1}));
        coords += len;
        ++negative_cycles;
    }
};

}  // namespace

WeylClassInvariant composite_invariant(const ClassicalAlgebra& algebra, const Partition& p) {
    WeylClassInvariant w = composite_invariant(normal_form(algebra, p));
    CycleModel m;
    for (const Box& b : boxes(algebra, p)) {
        const auto& c = b.components.front();
        switch (algebra.series) {
        case Series::sl:
            m.positive(b.parts.front());
            break;
        case Series::sp:
            if (c.kind == ComponentKind::C) m.negative(c.k);
            else m.positive(2 * c.k + 1);
            break;
        case Series::so:
            switch (c.kind) {
            case ComponentKind::A: m.positive(2 * c.k + 1); break;
            case ComponentKind::B: m.negative(c.k); break;
            case ComponentKind::Da:
                m.negative(c.k + 1);
                m.negative(c.k + 1);
                break;
            case ComponentKind::G2: m.negative(3); break;
            case ComponentKind::C:
                if (b.parts.size() == 2 && b.parts[0] == b.parts[1]) {
                    m.negative(c.k);
                    m.negative(c.k);
                } else {
                    for (std::size_t i = 0; i < b.components.size(); ++i) m.negative(1);
                }
                break;
            default: throw VerificationError("unexpected component in so box");
            }
            break;
        }
    }
    const int coords = algebra.series == Series::sl ? algebra.N : algebra.rank();
    int pad = coords - m.coords;
    if (pad < 0) throw VerificationError("signed-cycle model uses more coordinates than the rank");
    if (algebra.series == Series::so && algebra.N % 2 == 0 && m.negative_cycles % 2 == 1) {
        if (pad == 0) throw VerificationError("no spare coordinate to absorb the sign in W(D)");
        m.negative(1);
        --pad;
    }
    for (int i = 0; i < pad; ++i) m.positive(1);
    Polynomial ambient = m.poly;
    if (algebra.series == Series::sl) ambient = *ambient.divide_exact(Polynomial({-1, 1}));
    w.ambient_charpoly = ambient;
    return w;
}

}  // namespace nilnf
