#include "omr/loday.hpp"

namespace omr {

TruncatedMorphism TruncatedMorphism::zero(int src_dim, int dst_dim, int level_bound) {
    if (level_bound < 0) throw std::invalid_argument("negative level bound");
    TruncatedMorphism s{src_dim, dst_dim, level_bound, {}};
    s.levels.reserve(static_cast<size_t>(level_bound) + 1);
    for (int n = 0; n <= level_bound; ++n)
        s.levels.push_back(TensorMap::zero(src_dim, n, dst_dim, n));
    return s;
}

const TensorMap& TruncatedMorphism::level(int n) const {
    if (n < 0 || n > level_bound) throw std::out_of_range("morphism level out of range");
    return levels[static_cast<size_t>(n)];
}

TensorMap& TruncatedMorphism::level(int n) {
    if (n < 0 || n > level_bound) throw std::out_of_range("morphism level out of range");
    return levels[static_cast<size_t>(n)];
}

void TruncatedMorphism::check_shape() const {
    if (static_cast<int>(levels.size()) != level_bound + 1)
        throw std::invalid_argument("morphism level count mismatch");
    for (int n = 0; n <= level_bound; ++n) {
        const TensorMap& m = levels[static_cast<size_t>(n)];
        if (m.src_dim != src_dim || m.dst_dim != dst_dim || m.src_deg != n || m.dst_deg != n)
            throw std::invalid_argument("morphism level " + std::to_string(n) + " has wrong shape");
    }
}

TensorMap loday_map(const AlgebraSpec& a, const Surjection& h) {
    int m = h.domain_size(), n = h.codomain_size(), d = a.dim();
    tensor_space_dim(d, m);
    tensor_space_dim(d, n);
    std::vector<std::vector<int>> fibers(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) fibers[static_cast<size_t>(j) - 1] = h.fiber(j);

    TensorMap out = TensorMap::zero(d, m, d, n);
    for (const auto& src : all_indices(d, m)) {
        // y_j = product of the basis factors over the fiber of j.
        std::vector<AlgVector> y(static_cast<size_t>(n));
        bool dead = false;
        for (int j = 1; j <= n && !dead; ++j) {
            std::vector<int> factors;
            factors.reserve(fibers[static_cast<size_t>(j) - 1].size());
            for (int i : fibers[static_cast<size_t>(j) - 1])
                factors.push_back(src[static_cast<size_t>(i) - 1]);
            y[static_cast<size_t>(j) - 1] = a.product_of_basis(factors);
            dead = std::all_of(y[static_cast<size_t>(j) - 1].begin(),
                               y[static_cast<size_t>(j) - 1].end(),
                               [](const Rat& v) { return v.is_zero(); });
        }
        if (dead) continue;
        // Expand y_1 (x) ... (x) y_n over nonzero coordinates.
        MultiIndex dst(static_cast<size_t>(n));
        std::vector<std::vector<int>> nonzero(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            for (int k = 1; k <= d; ++k)
                if (!y[static_cast<size_t>(j)][static_cast<size_t>(k) - 1].is_zero())
                    nonzero[static_cast<size_t>(j)].push_back(k);
        std::vector<size_t> choice(static_cast<size_t>(n), 0);
        while (true) {
            Rat coeff(1);
            for (int j = 0; j < n; ++j) {
                int k = nonzero[static_cast<size_t>(j)][choice[static_cast<size_t>(j)]];
                dst[static_cast<size_t>(j)] = k;
                coeff *= y[static_cast<size_t>(j)][static_cast<size_t>(k) - 1];
            }
            out.add_entry(dst, src, coeff);
            int pos = n - 1;
            while (pos >= 0 &&
                   choice[static_cast<size_t>(pos)] + 1 == nonzero[static_cast<size_t>(pos)].size()) {
                choice[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++choice[static_cast<size_t>(pos)];
        }
    }
    return out;
}

FunctorCheck functor_composition_check(const AlgebraSpec& a, const Surjection& h,
                                       const Surjection& g) {
    TensorMap composite = compose(loday_map(a, h), loday_map(a, g));
    TensorMap direct = loday_map(a, compose(h, g));
    FunctorCheck r;
    if (composite == direct) return r;
    r.pass = false;
    // Walk the union of supports for the first difference.
    auto ic = composite.entries.begin();
    auto id = direct.entries.begin();
    while (ic != composite.entries.end() || id != direct.entries.end()) {
        if (id == direct.entries.end() ||
            (ic != composite.entries.end() && ic->first < id->first)) {
            r.where = ic->first;
            r.composite_value = ic->second;
            return r;
        }
        if (ic == composite.entries.end() || id->first < ic->first) {
            r.where = id->first;
            r.direct_value = id->second;
            return r;
        }
        if (ic->second != id->second) {
            r.where = ic->first;
            r.composite_value = ic->second;
            r.direct_value = id->second;
            return r;
        }
        ++ic;
        ++id;
    }
    return r;
}

TruncatedMorphism induced_morphism(const RatMat& u, int level_bound) {
    int dA = static_cast<int>(u.cols()), dB = static_cast<int>(u.rows());
    TruncatedMorphism s = TruncatedMorphism::zero(dA, dB, level_bound);
    for (int n = 0; n <= level_bound; ++n) s.level(n) = kronecker_power(u, n);
    return s;
}

bool naturality_square_holds(const AlgebraSpec& a, const AlgebraSpec& b,
                             const TruncatedMorphism& s, const Surjection& h) {
    if (a.dim() != s.src_dim || b.dim() != s.dst_dim)
        throw std::invalid_argument("morphism shape does not match the algebras");
    int m = h.domain_size(), n = h.codomain_size();
    if (m > s.level_bound) throw std::out_of_range("surjection domain exceeds level bound");
    TensorMap lhs = compose(loday_map(b, h), s.level(m));
    TensorMap rhs = compose(s.level(n), loday_map(a, h));
    return lhs == rhs;
}

}  // namespace omr
