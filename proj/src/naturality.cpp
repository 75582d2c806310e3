#include "omr/naturality.hpp"

#include "omr/ideal.hpp"
#include "omr/transforms.hpp"

namespace omr {

MorphismLayout MorphismLayout::make(int dA, int dB, int N) {
    if (dA < 1 || dB < 1 || N < 0) throw std::invalid_argument("bad layout shape");
    MorphismLayout lay{dA, dB, N, {}};
    lay.offsets.assign(static_cast<size_t>(N) + 2, 0);
    size_t total = 0;
    for (int n = 0; n <= N; ++n) {
        size_t block = tensor_space_dim(dA, n) * tensor_space_dim(dB, n);
        if (block > tensor_budget || total > tensor_budget - block)
            throw BudgetError("morphism space exceeds the size guard");
        lay.offsets[static_cast<size_t>(n)] = total;
        total += block;
    }
    lay.offsets[static_cast<size_t>(N) + 1] = total;
    return lay;
}

size_t MorphismLayout::index(int level, const MultiIndex& dst, const MultiIndex& src) const {
    if (level < 0 || level > N) throw std::out_of_range("layout level out of range");
    size_t src_space = tensor_space_dim(dA, level);
    return offsets[static_cast<size_t>(level)] + flat_index(dst, dB) * src_space +
           flat_index(src, dA);
}

std::vector<Rat> MorphismLayout::flatten(const TruncatedMorphism& s) const {
    if (s.src_dim != dA || s.dst_dim != dB || s.level_bound != N)
        throw std::invalid_argument("morphism does not match the layout");
    std::vector<Rat> x(total());
    for (int n = 0; n <= N; ++n)
        for (const auto& [key, v] : s.level(n).entries) x[index(n, key.first, key.second)] = v;
    return x;
}

TruncatedMorphism MorphismLayout::unflatten(const std::vector<Rat>& x) const {
    if (x.size() != total()) throw std::invalid_argument("coordinate vector has wrong size");
    TruncatedMorphism s = TruncatedMorphism::zero(dA, dB, N);
    for (int n = 0; n <= N; ++n) {
        auto srcs = all_indices(dA, n);
        auto dsts = all_indices(dB, n);
        for (const auto& dst : dsts)
            for (const auto& src : srcs) {
                const Rat& v = x[index(n, dst, src)];
                if (!v.is_zero()) s.level(n).entries.emplace(std::pair{dst, src}, v);
            }
    }
    return s;
}

TensorMap discrepancy(const AlgebraSpec& a, const AlgebraSpec& b, const TruncatedMorphism& s,
                      int n) {
    if (s.src_dim != a.dim() || s.dst_dim != b.dim())
        throw std::invalid_argument("morphism shape does not match the algebras");
    if (n < 0 || n + 2 > s.level_bound) throw std::out_of_range("discrepancy level out of range");
    Surjection tau = merge_map(n);
    TensorMap lhs = compose(loday_map(b, tau), s.level(n + 2));
    TensorMap rhs = compose(s.level(n + 1), loday_map(a, tau));
    return lhs - rhs;
}

NaturalityReport is_natural(const AlgebraSpec& a, const AlgebraSpec& b,
                            const TruncatedMorphism& s) {
    if (s.src_dim != a.dim() || s.dst_dim != b.dim())
        throw std::invalid_argument("morphism shape does not match the algebras");
    s.check_shape();
    NaturalityReport r;
    for (int n = 0; n <= s.level_bound; ++n)
        if (!is_equivariant(s.level(n))) r.non_equivariant_levels.push_back(n);
    for (int n = 0; n + 2 <= s.level_bound; ++n)
        if (!discrepancy(a, b, s, n).is_zero()) r.nonzero_discrepancies.push_back(n);
    return r;
}

namespace {

std::vector<Permutation> level_generators(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<int> swap_first(static_cast<size_t>(n));
        for (int t = 1; t <= n; ++t) swap_first[static_cast<size_t>(t) - 1] = t;
        std::swap(swap_first[0], swap_first[1]);
        gens.emplace_back(swap_first);
    }
    if (n >= 3) {
        std::vector<int> cycle(static_cast<size_t>(n));
        for (int t = 1; t <= n; ++t) cycle[static_cast<size_t>(t) - 1] = t % n + 1;
        gens.emplace_back(cycle);
    }
    return gens;
}

MultiIndex permute_index(const Permutation& g, const MultiIndex& idx) {
    Permutation gi = g.inverse();
    MultiIndex moved(idx.size());
    for (int pos = 1; pos <= g.size(); ++pos) moved[static_cast<size_t>(pos) - 1] =
        idx[static_cast<size_t>(gi(pos)) - 1];
    return moved;
}

}  // namespace

SparseSystem naturality_constraints(const AlgebraSpec& a, const AlgebraSpec& b,
                                    const MorphismLayout& layout, bool with_merges) {
    if (layout.dA != a.dim() || layout.dB != b.dim())
        throw std::invalid_argument("layout does not match the algebras");
    SparseSystem sys(static_cast<int>(layout.total()));

    // Equivariance per level: s[beta, alpha] = s[g.beta, g.alpha] on group
    // generators.
    for (int n = 2; n <= layout.N; ++n) {
        auto srcs = all_indices(layout.dA, n);
        auto dsts = all_indices(layout.dB, n);
        for (const auto& g : level_generators(n)) {
            for (const auto& dst : dsts) {
                MultiIndex gdst = permute_index(g, dst);
                for (const auto& src : srcs) {
                    MultiIndex gsrc = permute_index(g, src);
                    size_t lhs = layout.index(n, dst, src);
                    size_t rhs = layout.index(n, gdst, gsrc);
                    if (lhs == rhs) continue;
                    sys.add_row({{static_cast<int>(lhs), Rat(1)}, {static_cast<int>(rhs), Rat(-1)}});
                }
            }
        }
    }

    if (!with_merges) return sys;

    // Merge squares: L_B(tau_n) o s_{n+2} = s_{n+1} o L_A(tau_n).
    for (int n = 0; n + 2 <= layout.N; ++n) {
        TensorMap lb = loday_map(b, merge_map(n));
        TensorMap la = loday_map(a, merge_map(n));
        std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rat>>> lb_rows, la_cols;
        for (const auto& [key, v] : lb.entries) lb_rows[key.first].emplace_back(key.second, v);
        for (const auto& [key, v] : la.entries) la_cols[key.second].emplace_back(key.first, v);

        for (const auto& out : all_indices(layout.dB, n + 1)) {
            auto lbit = lb_rows.find(out);
            for (const auto& in : all_indices(layout.dA, n + 2)) {
                auto lait = la_cols.find(in);
                std::vector<std::pair<int, Rat>> row;
                if (lbit != lb_rows.end())
                    for (const auto& [mid, v] : lbit->second)
                        row.emplace_back(static_cast<int>(layout.index(n + 2, mid, in)), v);
                if (lait != la_cols.end())
                    for (const auto& [mid, v] : lait->second)
                        row.emplace_back(static_cast<int>(layout.index(n + 1, out, mid)), -v);
                if (!row.empty()) sys.add_row(row);
            }
        }
    }
    return sys;
}

namespace {

HomSpaceBasis solve_space(const AlgebraSpec& a, const AlgebraSpec& b, int N, bool with_merges) {
    MorphismLayout layout = MorphismLayout::make(a.dim(), b.dim(), N);
    SparseSystem sys = naturality_constraints(a, b, layout, with_merges);
    EchelonForm ef = echelonize(sys);
    return {layout, ef.nullspace_basis()};
}

}  // namespace

HomSpaceBasis solve_hom_space(const AlgebraSpec& a, const AlgebraSpec& b, int N) {
    return solve_space(a, b, N, true);
}

HomSpaceBasis equivariant_space(const AlgebraSpec& a, const AlgebraSpec& b, int N) {
    return solve_space(a, b, N, false);
}

int sign_for_weight(int m) {
    if (m < 0) throw std::invalid_argument("negative weight");
    return (m / 2) % 2 == 0 ? 1 : -1;
}

TruncatedMorphism counterexample_morphism(int N) {
    TruncatedMorphism s = TruncatedMorphism::zero(2, 2, N);
    for (int n = 0; n <= N; ++n)
        for (const auto& idx : all_indices(2, n)) {
            int weight = 0;
            for (int v : idx) weight += v - 1;
            s.level(n).entries.emplace(std::pair{idx, idx}, Rat(sign_for_weight(weight)));
        }
    return s;
}

PerpReport perp_test(const AlgebraSpec& a, const AlgebraSpec& b, const TruncatedMorphism& s,
                     int N) {
    PolyFunctional xi = morphism_functional(s, N);
    PerpReport r;
    for (const auto& g : truncated_span(a, b, N)) {
        Rat val = xi.apply(g);
        if (!val.is_zero()) {
            r.pass = false;
            r.witness = g;
            r.witness_value = val;
            return r;
        }
    }
    return r;
}

HomSpaceBasis annihilator_space(const AlgebraSpec& a, const AlgebraSpec& b, int N) {
    HomSpaceBasis eq = equivariant_space(a, b, N);
    std::vector<Polynomial> span = truncated_span(a, b, N);
    if (eq.dimension() == 0 || span.empty()) return eq;

    std::vector<PolyFunctional> functionals;
    functionals.reserve(eq.dimension());
    for (size_t k = 0; k < eq.dimension(); ++k)
        functionals.push_back(morphism_functional(eq.morphism(k), N));

    SparseSystem sys(static_cast<int>(eq.dimension()));
    for (const auto& g : span) {
        std::vector<std::pair<int, Rat>> row;
        for (size_t k = 0; k < eq.dimension(); ++k) {
            Rat val = functionals[k].apply(g);
            if (!val.is_zero()) row.emplace_back(static_cast<int>(k), val);
        }
        sys.add_row(row);
    }
    EchelonForm ef = echelonize(sys);

    std::vector<std::vector<Rat>> raw;
    for (const auto& combo : ef.nullspace_basis()) {
        std::vector<Rat> v(eq.layout.total());
        for (size_t k = 0; k < eq.dimension(); ++k) {
            if (combo[k].is_zero()) continue;
            for (size_t t = 0; t < v.size(); ++t) v[t] += combo[k] * eq.vectors[k][t];
        }
        raw.push_back(std::move(v));
    }
    // Canonical echelon basis of the span.
    EchelonForm canon = echelonize_vectors(static_cast<int>(eq.layout.total()), raw);
    std::vector<std::vector<Rat>> vectors;
    for (const auto& row : canon.rows) {
        std::vector<Rat> v(eq.layout.total());
        for (const auto& [c, coef] : row.terms) v[static_cast<size_t>(c)] = coef;
        vectors.push_back(std::move(v));
    }
    return {eq.layout, std::move(vectors)};
}

}  // namespace omr
