#include "nilnf/matrix_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nilnf/error.hpp"

namespace nilnf {

int FormedBlock::dimension() const {
    switch (kind) {
    case BlockKind::Single: return size;
    case BlockKind::Paired: return 2 * size;
    case BlockKind::Tensor31: return 4;
    }
    return 0;
}

FormKind form_kind(Series series) {
    switch (series) {
    case Series::sl: return FormKind::None;
    case Series::sp: return FormKind::Skew;
    case Series::so: return FormKind::Symmetric;
    }
    return FormKind::None;
}

FormedSpace::FormedSpace(FormKind kind, std::vector<FormedBlock> blocks) : kind_(kind), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
        if (b.size < 1) throw DomainError("formed block of size < 1");
        b.offset = n_;
        n_ += b.dimension();
    }
    if (kind_ == FormKind::None) {
        for (const auto& b : blocks_)
            if (b.kind != BlockKind::Single) throw DomainError("sl layouts use single blocks only");
        return;
    }
    gram_ = ExactMatrix(n_, n_);
    const int eps = kind_ == FormKind::Symmetric ? 1 : -1;
    for (const auto& b : blocks_) {
        const int o = b.offset;
        switch (b.kind) {
        case BlockKind::Single:
            if ((b.size % 2 == 1) != (kind_ == FormKind::Symmetric))
                throw DomainError("a single block of size " + std::to_string(b.size) +
                                  " carries the wrong kind of form");
            for (int i = 0; i < b.size; ++i) gram_(o + i, o + b.size - 1 - i) = i % 2 == 0 ? 1 : -1;
            break;
        case BlockKind::Paired:
            for (int i = 0; i < b.size; ++i) {
                gram_(o + i, o + b.size + i) = 1;
                gram_(o + b.size + i, o + i) = eps;
            }
            break;
        case BlockKind::Tensor31:
            if (kind_ != FormKind::Symmetric) throw DomainError("the (3,1) tensor block is orthogonal");
            gram_(o, o + 3) = 1;
            gram_(o + 1, o + 2) = -1;
            gram_(o + 2, o + 1) = -1;
            gram_(o + 3, o) = 1;
            break;
        }
    }
}

bool FormedSpace::contains(const ExactMatrix& m) const {
    if (m.rows() != static_cast<std::size_t>(n_) || m.cols() != static_cast<std::size_t>(n_)) return false;
    if (kind_ == FormKind::None) return m.trace() == 0;
    return (m.transpose() * gram_ + gram_ * m).is_zero();
}

std::size_t FormedSpace::algebra_dimension() const {
    const std::size_t n = static_cast<std::size_t>(n_);
    switch (kind_) {
    case FormKind::None: return n * n - 1;
    case FormKind::Symmetric: return n * (n - 1) / 2;
    case FormKind::Skew: return n * (n + 1) / 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Layout

namespace {

constexpr std::size_t kSpare = static_cast<std::size_t>(-1);

struct Layout {
    std::vector<Box> boxes;
    std::vector<FormedBlock> blocks;
    /// Box index of each block, kSpare for spare 1's.
    std::vector<std::size_t> block_box;
};

Layout layout(const ClassicalAlgebra& algebra, const Partition& p) {
    Layout l;
    l.boxes = boxes(algebra, p);
    int used = 0;
    auto add = [&](BlockKind kind, int size, std::size_t box) {
        l.blocks.push_back({kind, size, 0});
        l.block_box.push_back(box);
        used += l.blocks.back().dimension();
    };
    for (std::size_t bi = 0; bi < l.boxes.size(); ++bi) {
        const auto& parts = l.boxes[bi].parts;
        if (parts.size() == 1) {
            add(BlockKind::Single, parts[0], bi);
        } else if (parts[0] == parts[1]) {
            add(BlockKind::Paired, parts[0], bi);
        } else if (parts[0] == 3 && parts[1] == 1) {
            add(BlockKind::Tensor31, 1, bi);
        } else {
            add(BlockKind::Single, parts[0], bi);
            add(BlockKind::Single, parts[1], bi);
        }
    }
    const int spare = algebra.N - used;
    if (algebra.series == Series::sp) {
        if (spare % 2 != 0) throw VerificationError("odd number of spare coordinates in sp layout");
        for (int i = 0; i < spare / 2; ++i) add(BlockKind::Paired, 1, kSpare);
    } else {
        for (int i = 0; i < spare; ++i) add(BlockKind::Single, 1, kSpare);
    }
    return l;
}

// Standard nilpotent and triple of one block, written at the block's offset.
void write_block(const FormedBlock& b, ExactMatrix* e, ExactMatrix* h, ExactMatrix* f) {
    const int o = b.offset;
    const int n = b.size;
    auto single = [&](int off, int sign) {
        for (int i = 0; i < n; ++i) {
            if (h) (*h)(off + i, off + i) = sign * (n - 1 - 2 * i);
            if (i + 1 < n) {
                // sign = -1 is the negated transpose on U*.
                if (f) {
                    if (sign > 0) (*f)(off + i + 1, off + i) = 1;
                    else (*f)(off + i, off + i + 1) = -1;
                }
                if (e) {
                    const int c = (i + 1) * (n - 1 - i);
                    if (sign > 0) (*e)(off + i, off + i + 1) = c;
                    else (*e)(off + i + 1, off + i) = -c;
                }
            }
        }
    };
    switch (b.kind) {
    case BlockKind::Single: single(o, 1); break;
    case BlockKind::Paired:
        single(o, 1);
        single(o + n, -1);
        break;
    case BlockKind::Tensor31:
        if (f) {
            (*f)(o + 2, o) = 1;
            (*f)(o + 3, o + 1) = 1;
            (*f)(o + 1, o) = 1;
            (*f)(o + 3, o + 2) = 1;
        }
        if (e) {
            (*e)(o, o + 2) = 1;
            (*e)(o + 1, o + 3) = 1;
            (*e)(o, o + 1) = 1;
            (*e)(o + 2, o + 3) = 1;
        }
        if (h) {
            (*h)(o, o) = 2;
            (*h)(o + 3, o + 3) = -2;
        }
        break;
    }
}

// The two C_1 triples of a Tensor31 block: J_2 (x) 1 and 1 (x) J_2.
MatrixTriple tensor_factor(int n, int o, int which) {
    MatrixTriple t{ExactMatrix(n, n), ExactMatrix(n, n), ExactMatrix(n, n)};
    const int step = which == 0 ? 2 : 1;
    const int a0 = 0, a1 = which == 0 ? 1 : 2;
    for (int base : {a0, a1}) {
        t.f(o + base + step, o + base) = 1;
        t.e(o + base, o + base + step) = 1;
        t.h(o + base, o + base) = 1;
        t.h(o + base + step, o + base + step) = -1;
    }
    return t;
}

void check_triple(const FormedSpace& space, const MatrixTriple& t, const std::string& what) {
    if (!(commutator(t.h, t.e) == Rational(2) * t.e) || !(commutator(t.h, t.f) == Rational(-2) * t.f) ||
        !(commutator(t.e, t.f) == t.h))
        throw VerificationError(what + ": sl2 bracket relations fail");
    if (!space.contains(t.e) || !space.contains(t.h) || !space.contains(t.f))
        throw VerificationError(what + ": triple leaves the algebra");
}

}  // namespace

OracleNilpotent nilpotent_from_partition(const ClassicalAlgebra& algebra, const Partition& p) {
    require_valid(algebra, p);
    Layout l = layout(algebra, p);
    OracleNilpotent out{FormedSpace(form_kind(algebra.series), l.blocks), ExactMatrix(algebra.N, algebra.N)};
    for (const auto& b : out.space.blocks()) write_block(b, nullptr, nullptr, &out.f);
    return out;
}

Partition jordan_type(const ExactMatrix& m) {
    if (!m.is_square()) throw DomainError("jordan_type needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Partition{};
    std::vector<std::size_t> ranks{n};
    ExactMatrix power = ExactMatrix::identity(n);
    while (ranks.back() > 0) {
        if (ranks.size() > n) throw DomainError("jordan_type: matrix is not nilpotent");
        power = power * m;
        const std::size_t r = rank(power);
        if (r == ranks.back()) throw DomainError("jordan_type: matrix is not nilpotent");
        ranks.push_back(r);
    }
    ranks.push_back(0);
    std::vector<std::pair<int, int>> parts;
    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_next = ranks[k] - ranks[k + 1];
        if (at_least_k > at_least_next)
            parts.emplace_back(static_cast<int>(k), static_cast<int>(at_least_k - at_least_next));
    }
    return Partition::from_multiplicities(std::move(parts));
}

MatrixTriple sl2_complete_matrix(const FormedSpace& space, const ExactMatrix& f) {
    const int n = space.dimension();
    MatrixTriple t{ExactMatrix(n, n), ExactMatrix(n, n), ExactMatrix(n, n)};
    for (const auto& b : space.blocks()) write_block(b, &t.e, &t.h, &t.f);
    if (!(t.f == f)) throw DomainError("sl2_complete_matrix: f is not the standard nilpotent of its formed space");
    check_triple(space, t, "sl2_complete_matrix");
    return t;
}

int ad_depth(const FormedSpace& space, const ExactMatrix& h) {
    const int n = space.dimension();
    if (h.rows() != static_cast<std::size_t>(n) || !h.is_diagonal())
        throw DomainError("ad_depth needs a diagonal h of the space's dimension");
    using Sparse = std::map<std::pair<int, int>, Rational>;
    auto ad = [&](const Sparse& x) {
        Sparse y;
        for (const auto& [ij, v] : x) {
            const Rational c = (h(ij.first, ij.first) - h(ij.second, ij.second)) * v;
            if (sgn(c) != 0) y[ij] = c;
        }
        return y;
    };
    std::vector<Sparse> basis;
    // coords(x)[k] is the coefficient of basis[k] in x; nullopt if x is not in
    // the span.
    std::function<std::optional<std::vector<Rational>>(const Sparse&)> coords;
    // G is monomial: row i has its single entry sign[i] in column col[i].
    std::vector<int> col(n), row_of_col(n);
    std::vector<Rational> sign(n);
    std::vector<std::pair<int, int>> positions;
    // S = G X is skew for so, symmetric for sp.
    const bool skew_s = space.kind() == FormKind::Symmetric;

    if (space.kind() == FormKind::None) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) basis.push_back({{{i, j}, Rational(1)}});
        for (int i = 0; i + 1 < n; ++i) basis.push_back({{{i, i}, Rational(1)}, {{i + 1, i + 1}, Rational(-1)}});
        coords = [&](const Sparse& x) -> std::optional<std::vector<Rational>> {
            std::vector<Rational> c(basis.size());
            std::size_t k = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) {
                        auto it = x.find({i, j});
                        if (it != x.end()) c[k] = it->second;
                        ++k;
                    }
            Rational running = 0, trace = 0;
            for (int i = 0; i < n; ++i) {
                auto it = x.find({i, i});
                if (it != x.end()) running += it->second;
                trace += it != x.end() ? it->second : Rational(0);
                if (i + 1 < n) c[k++] = running;
            }
            if (sgn(trace) != 0) return std::nullopt;
            return c;
        };
    } else {
        const ExactMatrix& g = space.gram();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (sgn(g(i, j)) != 0) {
                    col[i] = j;
                    row_of_col[j] = i;
                    sign[i] = g(i, j);
                }
        // X = G^{-1} S, and G^{-1} = G^T for a signed permutation.
        auto from_s = [&](const Sparse& s) {
            Sparse x;
            for (const auto& [ab, v] : s) {
                const int k = ab.first;  // (G^T)_{i k} = G_{k i}, nonzero for i = col[k]
                x[{col[k], ab.second}] += sign[k] * v;
            }
            return x;
        };
        for (int a = 0; a < n; ++a)
            for (int b = skew_s ? a + 1 : a; b < n; ++b) {
                Sparse s;
                s[{a, b}] = 1;
                if (a != b) s[{b, a}] = skew_s ? -1 : 1;
                basis.push_back(from_s(s));
                positions.emplace_back(a, b);
            }
        coords = [&](const Sparse& x) -> std::optional<std::vector<Rational>> {
            // S = G X: (G X)_{a j} = sign[a] X_{col[a], j}.
            Sparse s;
            for (const auto& [ij, v] : x) s[{row_of_col[ij.first], ij.second}] += sign[row_of_col[ij.first]] * v;
            for (const auto& [ab, v] : s) {
                if (sgn(v) == 0) continue;
                auto it = s.find({ab.second, ab.first});
                const Rational mirror = it == s.end() ? Rational(0) : it->second;
                if (skew_s ? v != -mirror : v != mirror) return std::nullopt;
            }
            std::vector<Rational> c(positions.size());
            for (std::size_t k = 0; k < positions.size(); ++k) {
                auto it = s.find(positions[k]);
                if (it != s.end()) c[k] = it->second;
            }
            return c;
        };
    }

    if (basis.size() != space.algebra_dimension())
        throw VerificationError("ad_depth: basis has the wrong dimension");
    int depth = 0;
    bool any = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto c = coords(ad(basis[k]));
        if (!c) throw VerificationError("ad_depth: [h, x] left the algebra");
        for (std::size_t j = 0; j < c->size(); ++j)
            if (j != k && sgn((*c)[j]) != 0) throw VerificationError("ad_depth: ad h is not diagonal on the basis");
        const Rational& lambda = (*c)[k];
        if (!is_integral(lambda)) throw VerificationError("ad_depth: non-integral eigenvalue");
        const int l = static_cast<int>(lambda.get_num().get_si());
        if (!any || l > depth) depth = l;
        any = true;
    }
    return std::max(depth, 0);
}

RealizedNormalForm realize_normal_form(const ClassicalAlgebra& algebra, const Partition& p) {
    require_valid(algebra, p);
    const Layout l = layout(algebra, p);
    RealizedNormalForm out;
    out.element = nilpotent_from_partition(algebra, p);
    const FormedSpace& space = out.element.space;
    const int n = space.dimension();
    const FormKind kind = space.kind();
    for (std::size_t bi = 0; bi < l.boxes.size(); ++bi) {
        std::vector<FormedBlock> local_blocks;
        std::vector<FormedBlock> ambient_blocks;
        for (std::size_t k = 0; k < l.block_box.size(); ++k)
            if (l.block_box[k] == bi) {
                local_blocks.push_back(l.blocks[k]);
                ambient_blocks.push_back(space.blocks()[k]);
            }
        FormedSpace local(kind, local_blocks);
        const int ln = local.dimension();
        const int offset = ambient_blocks.front().offset;
        auto embed = [&](const ExactMatrix& m) {
            ExactMatrix big(n, n);
            for (int i = 0; i < ln; ++i)
                for (int j = 0; j < ln; ++j) big(offset + i, offset + j) = m(i, j);
            return big;
        };
        const auto& comps = l.boxes[bi].components;
        std::vector<MatrixTriple> locals;
        if (local_blocks.front().kind == BlockKind::Tensor31) {
            locals.push_back(tensor_factor(ln, 0, 0));
            locals.push_back(tensor_factor(ln, 0, 1));
        } else {
            MatrixTriple t{ExactMatrix(ln, ln), ExactMatrix(ln, ln), ExactMatrix(ln, ln)};
            for (const auto& b : local.blocks()) write_block(b, &t.e, &t.h, &t.f);
            locals.push_back(t);
        }
        if (locals.size() != comps.size()) throw VerificationError("box components do not match its realization");
        for (std::size_t c = 0; c < comps.size(); ++c) {
            RealizedComponent rc;
            rc.component = comps[c];
            rc.box = bi;
            rc.local_space = local;
            rc.local = locals[c];
            rc.triple = {embed(locals[c].e), embed(locals[c].h), embed(locals[c].f)};
            out.components.push_back(std::move(rc));
        }
    }
    return out;
}

NormalFormReport verify_normal_form(const ClassicalAlgebra& algebra, const Partition& p) {
    NormalFormReport r;
    require_valid(algebra, p);
    const RealizedNormalForm rn = realize_normal_form(algebra, p);
    const FormedSpace& space = rn.element.space;
    const int n = space.dimension();
    r.components_in_algebra = r.triples_valid = r.components_commute = true;
    r.component_depths_match = true;
    ExactMatrix sum(n, n);
    for (std::size_t i = 0; i < rn.components.size(); ++i) {
        const auto& c = rn.components[i];
        const std::string name = c.component.label();
        const auto& t = c.triple;
        if (!space.contains(t.e) || !space.contains(t.h) || !space.contains(t.f)) {
            r.components_in_algebra = false;
            r.failures.push_back(name + " leaves the algebra");
        }
        if (!(commutator(t.h, t.e) == Rational(2) * t.e) || !(commutator(t.h, t.f) == Rational(-2) * t.f) ||
            !(commutator(t.e, t.f) == t.h)) {
            r.triples_valid = false;
            r.failures.push_back(name + ": sl2 relations fail");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (!commutator(t.f, rn.components[j].triple.f).is_zero()) {
                r.components_commute = false;
                r.failures.push_back(name + " does not commute with " + rn.components[j].component.label());
            }
        const int d = ad_depth(c.local_space, c.local.h);
        r.component_depths.push_back(d);
        if (d != c.component.intrinsic_depth()) {
            r.component_depths_match = false;
            r.failures.push_back(name + ": ad-depth " + std::to_string(d) + " in its box, catalogue depth " +
                                 std::to_string(c.component.intrinsic_depth()));
        }
        r.max_component_depth = std::max(r.max_component_depth, c.component.intrinsic_depth());
        sum = sum + t.f;
    }
    r.jordan_type = jordan_type(sum);
    r.jordan_type_matches = r.jordan_type == p && sum == rn.element.f;
    if (!r.jordan_type_matches) r.failures.push_back("sum of components has Jordan type " + r.jordan_type.to_string());
    if (p.is_trivial()) {
        r.max_depth_is_reduced_depth = rn.components.empty();
    } else {
        r.reduced_depth = reduced_depth(algebra, p);
        r.max_depth_is_reduced_depth = r.max_component_depth == r.reduced_depth;
        if (!r.max_depth_is_reduced_depth)
            r.failures.push_back("max component depth " + std::to_string(r.max_component_depth) +
                                 " differs from reduced depth " + std::to_string(r.reduced_depth));
    }
    return r;
}

int oracle_depth(const ClassicalAlgebra& algebra, const Partition& p) {
    const OracleNilpotent x = nilpotent_from_partition(algebra, p);
    if (x.f.is_zero()) return 0;
    return ad_depth(x.space, sl2_complete_matrix(x.space, x.f).h);
}

}  // namespace nilnf
