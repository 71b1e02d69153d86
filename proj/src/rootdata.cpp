#include "nilnf/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nilnf/error.hpp"

namespace nilnf {

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

// Squared lengths and adjacency, scaled so short roots have length 2.
std::vector<std::vector<int>> simple_gram(const SimpleType& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
    switch (t.family) {
    case Family::A:
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 1; i < n; ++i) link(i, i + 1, -1);
        break;
    case Family::B:
        for (int i = 0; i < n; ++i) g[i][i] = 4;
        g[n - 1][n - 1] = 2;
        for (int i = 1; i < n; ++i) link(i, i + 1, -2);
        break;
    case Family::C:
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        g[n - 1][n - 1] = 4;
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
        link(n - 1, n, -2);
        break;
    case Family::D:
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
        link(n - 2, n, -1);
        break;
    case Family::E:
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        link(1, 3, -1);
        link(3, 4, -1);
        link(2, 4, -1);
        for (int i = 4; i < n; ++i) link(i, i + 1, -1);
        break;
    case Family::F:
        g[0][0] = g[1][1] = 4;
        g[2][2] = g[3][3] = 2;
        link(1, 2, -2);
        link(2, 3, -2);
        link(3, 4, -1);
        break;
    case Family::G:
        g[0][0] = 6;
        g[1][1] = 2;
        link(1, 2, -3);
        break;
    }
    return g;
}

}  // namespace

void SimpleType::validate() const {
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw DomainError("inadmissible simple type " + name() +
                          " (ranks: A>=1, B>=2, C>=2, D>=3, E 6-8, F 4, G 2)");
}

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

SimpleType SimpleType::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2) throw DomainError("cannot parse simple type '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const auto pos = std::string_view("ABCDEFG").find(letter);
    if (pos == std::string_view::npos)
        throw DomainError("unknown family in '" + std::string(text) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw DomainError("cannot parse rank in '" + std::string(text) + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) throw DomainError("rank too large in '" + std::string(text) + "'");
    }
    SimpleType t{static_cast<Family>(pos), rank};
    t.validate();
    return t;
}

int height(const Root& root) { return std::accumulate(root.begin(), root.end(), 0); }

RootSystem::RootSystem(SimpleType type) : type_(type) {
    type_.validate();
    const int n = type_.rank;
    gram_ = simple_gram(type_);
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];

    // Closure: beta + alpha_i is a root iff q > 0 where the alpha_i-string
    // through beta is beta - p alpha_i, ..., beta + q alpha_i and
    // p - q = <beta, alpha_i^vee>.
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        layer.push_back(r);
        index_[r] = 0;
    }
    positive_ = layer;
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const Root& beta : layer) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                Root down = beta;
                while (true) {
                    down[i] -= 1;
                    if (index_.count(down)) ++p;
                    else break;
                }
                const int q = p - pairing(beta, i);
                if (q <= 0) continue;
                Root up = beta;
                up[i] += 1;
                if (index_.emplace(up, 0).second) next.push_back(up);
            }
        }
        positive_.insert(positive_.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        const int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;
    marks_ = positive_.back();
    if (positive_.size() > 1 && height(positive_.back()) == height(positive_[positive_.size() - 2]))
        throw VerificationError("highest root is not unique for " + type_.name());
}

int RootSystem::coxeter_number() const {
    return 1 + std::accumulate(marks_.begin(), marks_.end(), 0);
}

std::optional<std::size_t> RootSystem::positive_index(const Root& root) const {
    if (static_cast<int>(root.size()) != rank()) return std::nullopt;
    auto it = index_.find(root);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const Root& root) const {
    if (positive_index(root)) return true;
    Root neg = root;
    for (int& c : neg) c = -c;
    return positive_index(neg).has_value();
}

int RootSystem::inner(const Root& x, const Root& y) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += x[i] * y[j] * gram_[i][j];
    return s;
}

int RootSystem::pairing(const Root& beta, int i) const {
    int s = 0;
    for (int k = 0; k < rank(); ++k) s += beta[k] * cartan_[k][i];
    return s;
}

std::vector<int> RootSystem::coroot(const Root& root) const {
    const int len = inner(root, root);
    std::vector<int> c(rank());
    for (int i = 0; i < rank(); ++i) {
        const int num = root[i] * gram_[i][i];
        if (num % len != 0) throw VerificationError("non-integral coroot coefficient");
        c[i] = num / len;
    }
    return c;
}

std::vector<Rational> RootSystem::reflect(std::vector<Rational> weight, int i) const {
    const Rational li = weight[i];
    for (int k = 0; k < rank(); ++k) weight[k] -= li * cartan_[k][i];
    return weight;
}

std::pair<std::vector<Rational>, std::vector<int>> RootSystem::to_dominant(
    std::vector<Rational> weight) const {
    if (static_cast<int>(weight.size()) != rank())
        throw DomainError("weight length does not match rank of " + type_.name());
    std::vector<int> word;
    while (true) {
        int j = -1;
        for (int k = 0; k < rank(); ++k)
            if (sgn(weight[k]) < 0) {
                j = k;
                break;
            }
        if (j < 0) break;
        weight = reflect(std::move(weight), j);
        word.push_back(j + 1);
    }
    return {std::move(weight), std::move(word)};
}

}  // namespace nilnf
