#include "nilnf/liealg.hpp"

#include <algorithm>
#include <mutex>

#include "nilnf/error.hpp"
#include "nilnf/linalg.hpp"

namespace nilnf {

void AlgebraElement::add(std::size_t index, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational AlgebraElement::coefficient(std::size_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (parent_ == nullptr) parent_ = other.parent_;
    if (other.parent_ != nullptr && other.parent_ != parent_)
        throw DomainError("elements belong to different algebras");
    for (const auto& [k, v] : other.terms_) add(k, v);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    if (parent_ == nullptr) parent_ = other.parent_;
    if (other.parent_ != nullptr && other.parent_ != parent_)
        throw DomainError("elements belong to different algebras");
    for (const auto& [k, v] : other.terms_) add(k, -v);
    return *this;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    if (sgn(s) == 0) {
        a.terms_.clear();
        return a;
    }
    for (auto& [k, v] : a.terms_) v *= s;
    return a;
}

ChevalleyAlgebra::ChevalleyAlgebra(SimpleType type) : roots_(type) {
    const std::size_t p = roots_.num_positive();
    two_p_ = 2 * p;
    for (std::size_t k = 0; k < p; ++k) {
        root_index_[roots_.positive_roots()[k]] = k;
        Root neg = roots_.positive_roots()[k];
        for (int& c : neg) c = -c;
        root_index_[neg] = p + k;
    }
    sum_.assign(two_p_ * two_p_, -1);
    for (std::size_t a = 0; a < two_p_; ++a) {
        const Root ra = root_of(a);
        for (std::size_t b = 0; b < two_p_; ++b) {
            Root s = ra;
            const Root rb = root_of(b);
            bool zero = true;
            for (int i = 0; i < rank(); ++i) {
                s[i] += rb[i];
                zero = zero && s[i] == 0;
            }
            if (zero) {
                sum_[a * two_p_ + b] = -2;
                continue;
            }
            auto it = root_index_.find(s);
            if (it != root_index_.end()) sum_[a * two_p_ + b] = static_cast<long>(it->second);
        }
    }
    build_structure_constants();
}

Root ChevalleyAlgebra::root_of(std::size_t index) const {
    const std::size_t p = num_positive();
    if (index < p) return roots_.positive_roots()[index];
    if (index < 2 * p) {
        Root r = roots_.positive_roots()[index - p];
        for (int& c : r) c = -c;
        return r;
    }
    throw DomainError("basis index is not a root vector");
}

std::optional<std::size_t> ChevalleyAlgebra::negative_root_vector(const Root& positive) const {
    auto k = roots_.positive_index(positive);
    if (!k) return std::nullopt;
    return f(*k);
}

AlgebraElement ChevalleyAlgebra::basis(std::size_t index, const Rational& coeff) const {
    if (index >= dimension()) throw DomainError("basis index out of range");
    AlgebraElement x(this);
    x.add(index, coeff);
    return x;
}

void ChevalleyAlgebra::build_structure_constants() {
    const std::size_t p = num_positive();
    const std::size_t tp = two_p_;
    n_.assign(tp * tp, 0);
    std::vector<char> known(tp * tp, 0);
    auto neg = [&](std::size_t a) { return a < p ? a + p : a - p; };
    auto len = [&](std::size_t a) {
        const Root r = root_of(a);
        return roots_.inner(r, r);
    };
    auto sum = [&](std::size_t a, std::size_t b) { return sum_[a * tp + b]; };

    // N for an arbitrary pair whose sum is a root, reduced to positive pairs
    // with a < b already stored.
    auto general = [&](auto&& self, std::size_t a, std::size_t b) -> int {
        const bool pa = a < p, pb = b < p;
        if (pa && pb) {
            if (a < b) {
                if (!known[a * tp + b])
                    throw VerificationError("structure constant requested before it is known");
                return n_[a * tp + b];
            }
            return -self(self, b, a);
        }
        if (!pa && !pb) return -self(self, neg(a), neg(b));
        if (!pa && pb) return -self(self, b, a);
        // a positive, b negative; zeta = -(a+b), a + b + zeta = 0.
        const std::size_t s = static_cast<std::size_t>(sum(a, b));
        const std::size_t zeta = neg(s);
        int num, den, inner;
        if (zeta < p) {
            // N_{a,b} / (zeta,zeta) = N_{zeta,a} / (b,b)
            inner = self(self, zeta, a);
            num = len(zeta);
            den = len(b);
        } else {
            // N_{a,b} / (zeta,zeta) = N_{b,zeta} / (a,a)
            inner = self(self, b, zeta);
            num = len(zeta);
            den = len(a);
        }
        if ((inner * num) % den != 0) throw VerificationError("non-integral structure constant");
        return inner * num / den;
    };

    auto string_p = [&](std::size_t a, std::size_t b) {
        // largest k with b - k a a root
        const Root ra = root_of(a);
        Root r = root_of(b);
        int k = 0;
        while (true) {
            for (int i = 0; i < rank(); ++i) r[i] -= ra[i];
            if (!roots_.is_root(r)) break;
            ++k;
        }
        return k;
    };

    for (std::size_t xi = 0; xi < p; ++xi) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < xi; ++a) {
            const Root ra = root_of(a);
            Root rb = root_of(xi);
            for (int i = 0; i < rank(); ++i) rb[i] -= ra[i];
            auto bi = roots_.positive_index(rb);
            if (bi && *bi > a) pairs.emplace_back(a, *bi);
        }
        if (pairs.empty()) continue;
        const auto [a1, b1] = pairs.front();
        n_[a1 * tp + b1] = string_p(a1, b1) + 1;
        known[a1 * tp + b1] = 1;
        const int n_extra = n_[a1 * tp + b1];
        const int len_xi = len(xi);
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto [a, b] = pairs[k];
            Rational t = 0;
            if (sum(b, neg(a1)) >= 0) {
                const std::size_t g = static_cast<std::size_t>(sum(b, neg(a1)));
                t += Rational(general(general, b, neg(a1)) * general(general, a, neg(b1))) / len(g);
            }
            if (sum(a, neg(a1)) >= 0) {
                const std::size_t d = static_cast<std::size_t>(sum(a, neg(a1)));
                t += Rational(general(general, neg(a1), a) * general(general, b, neg(b1))) / len(d);
            }
            const Rational value = Rational(len_xi) * t / n_extra;
            if (!is_integral(value)) throw VerificationError("non-integral structure constant");
            n_[a * tp + b] = static_cast<int>(value.get_num().get_si());
            known[a * tp + b] = 1;
        }
    }

    std::vector<int> full(tp * tp, 0);
    for (std::size_t a = 0; a < tp; ++a)
        for (std::size_t b = 0; b < tp; ++b) {
            if (sum(a, b) < 0) continue;
            const int v = general(general, a, b);
            if (std::abs(v) != string_p(a, b) + 1)
                throw VerificationError("structure constant magnitude is not p+1 in " +
                                        roots_.type().name());
            full[a * tp + b] = v;
        }
    n_ = std::move(full);
}

int ChevalleyAlgebra::structure_constant(std::size_t a, std::size_t b) const {
    if (a >= two_p_ || b >= two_p_) return 0;
    return sum_[a * two_p_ + b] >= 0 ? n_[a * two_p_ + b] : 0;
}

std::vector<std::pair<std::size_t, int>> ChevalleyAlgebra::bracket_basis(std::size_t a,
                                                                         std::size_t b) const {
    std::vector<std::pair<std::size_t, int>> out;
    const bool ca = is_cartan(a), cb = is_cartan(b);
    if (ca && cb) return out;
    if (ca) {
        const int v = roots_.pairing(root_of(b), static_cast<int>(a - two_p_));
        if (v != 0) out.emplace_back(b, v);
        return out;
    }
    if (cb) {
        const int v = roots_.pairing(root_of(a), static_cast<int>(b - two_p_));
        if (v != 0) out.emplace_back(a, -v);
        return out;
    }
    const long s = sum_[a * two_p_ + b];
    if (s == -2) {
        const std::size_t p = num_positive();
        const int sign = a < p ? 1 : -1;
        const auto c = roots_.coroot(root_of(a < p ? a : b));
        for (int i = 0; i < rank(); ++i)
            if (c[i] != 0) out.emplace_back(h(i), sign * c[i]);
    } else if (s >= 0) {
        out.emplace_back(static_cast<std::size_t>(s), n_[a * two_p_ + b]);
    }
    return out;
}

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    if ((x.parent() != nullptr && x.parent() != this) || (y.parent() != nullptr && y.parent() != this))
        throw DomainError("bracket of elements from a different algebra");
    AlgebraElement out(this);
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            for (const auto& [c, n] : bracket_basis(a, b)) out.add(c, ca * cb * n);
    return out;
}

Rational ChevalleyAlgebra::root_value(std::size_t a, const std::vector<Rational>& h_coords) const {
    const Root r = root_of(a);
    Rational v = 0;
    for (int i = 0; i < rank(); ++i) v += h_coords[i] * roots_.pairing(r, i);
    return v;
}

std::size_t GradedDecomposition::dim(int j) const {
    auto it = eigen_dims.find(j);
    return it == eigen_dims.end() ? 0 : it->second;
}

std::vector<Rational> cartan_coordinates(const AlgebraElement& h) {
    const ChevalleyAlgebra* g = h.parent();
    if (g == nullptr) throw DomainError("element has no parent algebra");
    std::vector<Rational> c(g->rank());
    for (const auto& [k, v] : h.terms()) {
        if (!g->is_cartan(k)) throw DomainError("element is not in the Cartan subalgebra");
        c[k - 2 * g->num_positive()] = v;
    }
    return c;
}

namespace {

std::optional<Sl2Triple> try_complete(const ChevalleyAlgebra& g, const AlgebraElement& f,
                                      const std::vector<std::size_t>& neg_support,
                                      const std::vector<std::size_t>& e_support) {
    const int r = g.rank();
    const std::size_t unknowns = static_cast<std::size_t>(r) + e_support.size();
    // Rows: one per support root (beta(h) = 2), then one per basis index of
    // [e, f] - h.
    std::map<std::size_t, std::size_t> row_of;
    std::vector<std::map<std::size_t, Rational>> bracket_cols(e_support.size());
    for (std::size_t k = 0; k < e_support.size(); ++k) {
        const AlgebraElement v = g.bracket(g.basis(e_support[k]), f);
        for (const auto& [idx, c] : v.terms()) {
            bracket_cols[k][idx] = c;
            row_of.emplace(idx, 0);
        }
    }
    for (int i = 0; i < r; ++i) row_of.emplace(g.h(i), 0);
    std::size_t next = neg_support.size();
    for (auto& [idx, row] : row_of) row = next++;

    ExactMatrix a(next, unknowns);
    std::vector<Rational> b(next);
    for (std::size_t s = 0; s < neg_support.size(); ++s) {
        const Root beta = g.root_of(neg_support[s] - g.num_positive());
        for (int i = 0; i < r; ++i) a(s, i) = g.roots().pairing(beta, i);
        b[s] = 2;
    }
    for (int i = 0; i < r; ++i) a(row_of[g.h(i)], i) = -1;
    for (std::size_t k = 0; k < e_support.size(); ++k)
        for (const auto& [idx, c] : bracket_cols[k]) a(row_of[idx], r + k) += c;

    auto x = solve(std::move(a), std::move(b));
    if (!x) return std::nullopt;

    std::vector<Rational> hc(x->begin(), x->begin() + r);
    Sl2Triple t{g.zero(), g.zero(), f};
    for (int i = 0; i < r; ++i) t.h.add(g.h(i), hc[i]);
    for (std::size_t k = 0; k < e_support.size(); ++k)
        if (g.root_value(e_support[k], hc) == 2) t.e.add(e_support[k], (*x)[r + k]);

    const bool ok = g.bracket(t.e, t.f) == t.h && g.bracket(t.h, t.e) == Rational(2) * t.e &&
                    g.bracket(t.h, t.f) == Rational(-2) * t.f;
    if (!ok) return std::nullopt;
    return t;
}

// Solves A x = b where column k of A is the sparse vector cols[k].
std::optional<std::vector<Rational>> solve_columns(const std::vector<AlgebraElement>& cols,
                                                   const AlgebraElement& rhs) {
    std::map<std::size_t, std::size_t> row_of;
    for (const auto& c : cols)
        for (const auto& [idx, v] : c.terms()) row_of.emplace(idx, 0);
    for (const auto& [idx, v] : rhs.terms()) row_of.emplace(idx, 0);
    std::size_t next = 0;
    for (auto& [idx, row] : row_of) row = next++;
    ExactMatrix a(next, cols.size());
    std::vector<Rational> b(next);
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (const auto& [idx, v] : cols[k].terms()) a(row_of[idx], k) = v;
    for (const auto& [idx, v] : rhs.terms()) b[row_of[idx]] = v;
    return solve(std::move(a), std::move(b));
}

// Jacobson-Morozov over the whole algebra: any h0 = [e0, f] with
// [h0, f] = -2f extends to a triple, and e then solves the linear system
// [e, f] = h0, [h0, e] = 2e.
std::optional<Sl2Triple> try_complete_general(const ChevalleyAlgebra& g, const AlgebraElement& f) {
    const std::size_t n = g.dimension();
    std::vector<AlgebraElement> cols;
    cols.reserve(n);
    for (std::size_t k = 0; k < n; ++k) cols.push_back(g.bracket(g.bracket(g.basis(k), f), f));
    auto x = solve_columns(cols, Rational(-2) * f);
    if (!x) return std::nullopt;
    AlgebraElement e0 = g.zero();
    for (std::size_t k = 0; k < n; ++k)
        if (sgn((*x)[k]) != 0) e0.add(k, (*x)[k]);
    const AlgebraElement h = g.bracket(e0, f);

    // Stack the two conditions into one system by offsetting the second
    // block's row indices past the basis.
    cols.clear();
    for (std::size_t k = 0; k < n; ++k) {
        AlgebraElement c = g.bracket(g.basis(k), f);
        const AlgebraElement d = g.bracket(h, g.basis(k)) - g.basis(k, 2);
        for (const auto& [idx, v] : d.terms()) c.add(n + idx, v);
        cols.push_back(std::move(c));
    }
    x = solve_columns(cols, h);
    if (!x) return std::nullopt;
    Sl2Triple t{g.zero(), h, f};
    for (std::size_t k = 0; k < n; ++k)
        if (sgn((*x)[k]) != 0) t.e.add(k, (*x)[k]);
    const bool ok = g.bracket(t.e, t.f) == t.h && g.bracket(t.h, t.e) == Rational(2) * t.e &&
                    g.bracket(t.h, t.f) == Rational(-2) * t.f;
    if (!ok) return std::nullopt;
    return t;
}

}  // namespace

Sl2Completion sl2_complete(const AlgebraElement& f) {
    const ChevalleyAlgebra* g = f.parent();
    if (g == nullptr || f.is_zero()) throw DomainError("sl2_complete: f must be a nonzero element");
    const std::size_t p = g->num_positive();
    std::vector<std::size_t> neg_support, mirrored;
    for (const auto& [k, v] : f.terms()) {
        if (k < p || k >= 2 * p)
            throw DomainError("sl2_complete: f must be supported on negative root vectors");
        neg_support.push_back(k);
        mirrored.push_back(k - p);
    }
    if (auto t = try_complete(*g, f, neg_support, mirrored))
        return {std::move(*t), CompletionSupport::MirroredSupport};
    std::vector<std::size_t> all(p);
    for (std::size_t k = 0; k < p; ++k) all[k] = k;
    if (auto t = try_complete(*g, f, neg_support, all))
        return {std::move(*t), CompletionSupport::AllPositiveRoots};
    if (auto t = try_complete_general(*g, f))
        return {std::move(*t), CompletionSupport::General};
    throw VerificationError("sl2_complete: no sl2-triple through f in " + g->roots().type().name() +
                            " (inconsistent linear system)");
}

GradedDecomposition grading(const AlgebraElement& h) {
    const ChevalleyAlgebra* g = h.parent();
    if (g == nullptr) throw DomainError("grading: element has no parent algebra");
    const auto hc = cartan_coordinates(h);
    GradedDecomposition out;
    out.eigen_dims[0] += static_cast<std::size_t>(g->rank());
    for (std::size_t a = 0; a < 2 * g->num_positive(); ++a) {
        const Rational v = g->root_value(a, hc);
        if (!is_integral(v)) throw VerificationError("grading: non-integral ad h eigenvalue " + v.get_str());
        const int j = static_cast<int>(v.get_num().get_si());
        out.eigen_dims[j] += 1;
        out.depth = std::max(out.depth, j);
    }
    if (out.depth == 0) throw DomainError("grading: h = 0 has no depth (zero orbit)");
    return out;
}

std::vector<int> dynkin_labels(const AlgebraElement& h) {
    const ChevalleyAlgebra* g = h.parent();
    if (g == nullptr) throw DomainError("dynkin_labels: element has no parent algebra");
    const auto hc = cartan_coordinates(h);
    std::vector<Rational> values(g->rank());
    for (int i = 0; i < g->rank(); ++i) values[i] = g->root_value(g->e(i), hc);
    const auto [dom, word] = g->roots().to_dominant(values);
    std::vector<int> labels;
    for (const auto& v : dom) {
        if (!is_integral(v) || v < 0 || v > 2)
            throw VerificationError("dynkin_labels: label " + v.get_str() + " outside {0,1,2}");
        labels.push_back(static_cast<int>(v.get_num().get_si()));
    }
    return labels;
}

namespace {

// Echelon basis of the span of sparse vectors: leading index -> vector with
// leading coefficient 1.
std::vector<AlgebraElement> independent_span(const std::vector<AlgebraElement>& vs) {
    std::map<std::size_t, AlgebraElement> pivots;
    for (AlgebraElement v : vs) {
        while (!v.is_zero()) {
            const auto [lead, c] = *v.terms().begin();
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, (1 / c) * v);
                break;
            }
            v -= c * it->second;
        }
    }
    std::vector<AlgebraElement> out;
    for (auto& [k, v] : pivots) out.push_back(std::move(v));
    return out;
}

}  // namespace

GradedDecomposition grading_from_nilpotent(const AlgebraElement& f) {
    const ChevalleyAlgebra* g = f.parent();
    if (g == nullptr || f.is_zero()) throw DomainError("grading_from_nilpotent: f must be nonzero");
    // ranks[k] = rank (ad f)^k; blocks of size >= k+1 number ranks[k] - ranks[k+1].
    std::vector<std::size_t> ranks{g->dimension()};
    std::vector<AlgebraElement> image;
    for (std::size_t k = 0; k < g->dimension(); ++k) image.push_back(g->basis(k));
    while (!image.empty()) {
        if (ranks.size() > g->dimension()) throw DomainError("grading_from_nilpotent: f is not ad-nilpotent");
        std::vector<AlgebraElement> next;
        for (const auto& v : image) next.push_back(g->bracket(f, v));
        image = independent_span(next);
        ranks.push_back(image.size());
    }
    GradedDecomposition out;
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
        const std::size_t at_least = ranks[k] - ranks[k + 1];
        const std::size_t at_least_next = k + 2 < ranks.size() ? ranks[k + 1] - ranks[k + 2] : 0;
        const std::size_t exactly = at_least - at_least_next;  // blocks of size k+1
        if (exactly == 0) continue;
        const int top = static_cast<int>(k);
        for (int w = -top; w <= top; w += 2) out.eigen_dims[w] += exactly;
        out.depth = std::max(out.depth, top);
    }
    if (out.depth == 0) throw DomainError("grading_from_nilpotent: f is central");
    return out;
}

GradedDecomposition grading(const Sl2Triple& t) {
    for (const auto& [k, v] : t.h.terms())
        if (!t.h.parent()->is_cartan(k)) return grading_from_nilpotent(t.f);
    return grading(t.h);
}

std::vector<std::vector<int>> labels_matching(const RootSystem& roots, const GradedDecomposition& gr) {
    const int r = roots.rank();
    std::vector<std::vector<int>> out;
    std::vector<int> s(r, 0);
    while (true) {
        std::map<int, std::size_t> dims{{0, static_cast<std::size_t>(r)}};
        for (const Root& beta : roots.positive_roots()) {
            int v = 0;
            for (int i = 0; i < r; ++i) v += beta[i] * s[i];
            dims[v] += 1;
            dims[-v] += 1;
        }
        if (dims == gr.eigen_dims) out.push_back(s);
        int i = 0;
        while (i < r && s[i] == 2) s[i++] = 0;
        if (i == r) break;
        ++s[i];
    }
    return out;
}

bool is_ad_nilpotent(const AlgebraElement& x) {
    const ChevalleyAlgebra* g = x.parent();
    if (g == nullptr) return true;
    const std::size_t bound = g->dimension();
    for (std::size_t k = 0; k < g->dimension(); ++k) {
        AlgebraElement v = g->basis(k);
        std::size_t steps = 0;
        while (!v.is_zero()) {
            if (++steps > bound) return false;
            v = g->bracket(x, v);
        }
    }
    return true;
}

std::shared_ptr<const ChevalleyAlgebra> algebra_for(SimpleType type) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const ChevalleyAlgebra>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(type.family), type.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto g = std::make_shared<const ChevalleyAlgebra>(type);
    cache.emplace(key, g);
    return g;
}

}  // namespace nilnf
