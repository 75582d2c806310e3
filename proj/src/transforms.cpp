#include "omr/transforms.hpp"

#include "omr/sparse_solve.hpp"

namespace omr {

Monomial monomial_from_multiset(const MultiIndex& mu, int nvars) {
    Monomial m(nvars);
    for (int v : mu) {
        if (v < 1 || v > nvars) throw std::invalid_argument("multiset entry out of range");
        ++m.exps[static_cast<size_t>(v) - 1];
    }
    return m;
}

MultiIndex multiset_from_monomial(const Monomial& m) {
    MultiIndex mu;
    mu.reserve(static_cast<size_t>(m.degree()));
    for (int v = 0; v < m.nvars(); ++v)
        for (int e = 0; e < m.exps[static_cast<size_t>(v)]; ++e) mu.push_back(v + 1);
    return mu;
}

Rat PolyFunctional::value(const Monomial& m) const {
    if (m.degree() > truncation) throw std::out_of_range("monomial beyond truncation");
    if (m.nvars() != nv) throw std::invalid_argument("variable count mismatch");
    auto it = values.find(m);
    return it == values.end() ? Rat() : it->second;
}

Rat PolyFunctional::apply(const Polynomial& f) const {
    if (f.nv != nv) throw std::invalid_argument("variable count mismatch");
    if (f.degree() > truncation) throw std::out_of_range("polynomial beyond truncation");
    Rat acc;
    for (const auto& [m, c] : f.terms) {
        auto it = values.find(m);
        if (it != values.end()) acc += c * it->second;
    }
    return acc;
}

Rat sym_pairing(const Polynomial& f, const SymTensor& w) {
    if (f.nv != w.dim) throw std::invalid_argument("variable count mismatch");
    if (!f.is_homogeneous() || (!f.is_zero() && f.degree() != w.deg))
        throw std::invalid_argument("pairing requires a homogeneous polynomial of the tensor degree");
    Rat acc;
    for (const auto& [m, c] : f.terms) {
        auto it = w.coords.find(multiset_from_monomial(m));
        if (it != w.coords.end()) acc += c * it->second;
    }
    return acc;
}

PolyFunctional family_functional(const std::vector<SymTensor>& family) {
    if (family.empty()) throw std::invalid_argument("empty family");
    PolyFunctional f;
    f.nv = family[0].dim;
    f.truncation = static_cast<int>(family.size()) - 1;
    for (int n = 0; n <= f.truncation; ++n) {
        const SymTensor& w = family[static_cast<size_t>(n)];
        if (w.dim != f.nv || w.deg != n)
            throw std::invalid_argument("family member " + std::to_string(n) + " has wrong shape");
        for (const auto& [mu, v] : w.coords) f.values.emplace(monomial_from_multiset(mu, f.nv), v);
    }
    return f;
}

TensorMap sym_to_map(const SymTensor& w, int dA, int dB) {
    return kronecker_map(expand(w), dA, dB);
}

bool is_equivariant(const TensorMap& s) {
    if (s.src_deg != s.dst_deg) throw std::invalid_argument("levels must have equal degree");
    int n = s.src_deg;
    if (n <= 1) return true;
    std::vector<Permutation> gens;
    {
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
    for (const auto& g : gens) {
        TensorMap left = compose(permutation_map(g, s.dst_dim), s);
        TensorMap right = compose(s, permutation_map(g, s.src_dim));
        if (!(left == right)) return false;
    }
    return true;
}

SymTensor map_to_sym(const TensorMap& s, int dA, int dB) {
    if (s.src_dim != dA || s.dst_dim != dB)
        throw std::invalid_argument("map is not over the given algebras");
    if (!is_equivariant(s)) throw std::invalid_argument("map is not equivariant");
    int n = s.src_deg;
    int D = dA * dB;
    auto basis = multiset_basis(D, n);
    std::map<MultiIndex, int> column_of;
    for (size_t c = 0; c < basis.size(); ++c) column_of.emplace(basis[c], static_cast<int>(c));

    // One equation per matrix entry: the coordinate at the entry's orbit
    // equals the entry value. Equivariance makes the system consistent.
    std::vector<std::vector<std::pair<int, Rat>>> rows;
    std::vector<Rat> rhs;
    for (const auto& src : all_indices(dA, n)) {
        for (const auto& dst : all_indices(dB, n)) {
            MultiIndex mu(static_cast<size_t>(n));
            for (int t = 0; t < n; ++t)
                mu[static_cast<size_t>(t)] =
                    hom_index(src[static_cast<size_t>(t)], dst[static_cast<size_t>(t)], dB);
            std::sort(mu.begin(), mu.end());
            rows.push_back({{column_of.at(mu), Rat(1)}});
            rhs.push_back(s.entry(dst, src));
        }
    }
    auto [flag, x] = sparse_solve_unique(static_cast<int>(basis.size()), rows, rhs);
    if (flag != 0) throw std::logic_error("map_to_sym: inconsistent or underdetermined system");
    SymTensor w = SymTensor::zero(D, n);
    for (size_t c = 0; c < basis.size(); ++c)
        if (!x[c].is_zero()) w.coords.emplace(basis[c], x[c]);
    return w;
}

PolyFunctional morphism_functional(const TruncatedMorphism& s, int N) {
    if (N < 0 || N > s.level_bound) throw std::out_of_range("truncation beyond the morphism");
    std::vector<SymTensor> family;
    family.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) family.push_back(map_to_sym(s.level(n), s.src_dim, s.dst_dim));
    return family_functional(family);
}

PolyFunctional morphism_functional(const TruncatedMorphism& s) {
    return morphism_functional(s, s.level_bound);
}

std::vector<Rat> hom_values(const RatMat& u) {
    int dB = static_cast<int>(u.rows()), dA = static_cast<int>(u.cols());
    std::vector<Rat> vals;
    vals.reserve(static_cast<size_t>(dA) * dB);
    for (int v = 1; v <= dA * dB; ++v) {
        auto [i, j] = hom_index_split(v, dB);
        vals.push_back(u(static_cast<size_t>(j) - 1, static_cast<size_t>(i) - 1));
    }
    return vals;
}

}  // namespace omr
