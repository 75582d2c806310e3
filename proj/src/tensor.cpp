#include "omr/tensor.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omr {

namespace {

void check_index(const MultiIndex& idx, int dim, int deg, const char* role) {
    if (static_cast<int>(idx.size()) != deg)
        throw std::invalid_argument(std::string(role) + " index has wrong degree");
    for (int v : idx)
        if (v < 1 || v > dim)
            throw std::invalid_argument(std::string(role) + " index entry out of range");
}

}  // namespace

size_t tensor_space_dim(int dim, int deg) {
    if (dim < 1 || deg < 0) throw std::invalid_argument("bad tensor space shape");
    size_t n = 1;
    for (int t = 0; t < deg; ++t) {
        n *= static_cast<size_t>(dim);
        if (n > tensor_budget)
            throw BudgetError("tensor space dimension " + std::to_string(dim) + "^" +
                              std::to_string(deg) + " exceeds budget " +
                              std::to_string(tensor_budget));
    }
    return n;
}

std::vector<MultiIndex> all_indices(int dim, int deg) {
    size_t total = tensor_space_dim(dim, deg);
    std::vector<MultiIndex> out;
    out.reserve(total);
    MultiIndex cur(deg, 1);
    for (size_t c = 0; c < total; ++c) {
        out.push_back(cur);
        for (int pos = deg - 1; pos >= 0; --pos) {
            if (cur[pos] < dim) {
                ++cur[pos];
                break;
            }
            cur[pos] = 1;
        }
    }
    return out;
}

size_t flat_index(const MultiIndex& idx, int dim) {
    size_t f = 0;
    for (int v : idx) {
        if (v < 1 || v > dim) throw std::invalid_argument("index entry out of range");
        f = f * static_cast<size_t>(dim) + static_cast<size_t>(v - 1);
    }
    return f;
}

TensorVector TensorVector::basis(int dim, const MultiIndex& idx) {
    TensorVector t{dim, static_cast<int>(idx.size()), {}};
    check_index(idx, dim, t.deg, "basis");
    t.coords.emplace(idx, Rat(1));
    return t;
}

Rat TensorVector::coord(const MultiIndex& idx) const {
    check_index(idx, dim, deg, "coord");
    auto it = coords.find(idx);
    return it == coords.end() ? Rat() : it->second;
}

void TensorVector::add(const MultiIndex& idx, const Rat& v) {
    check_index(idx, dim, deg, "coord");
    if (v.is_zero()) return;
    auto [it, fresh] = coords.emplace(idx, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) coords.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (dim != o.dim || deg != o.deg) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& [idx, v] : o.coords) add(idx, v);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (dim != o.dim || deg != o.deg) throw std::invalid_argument("tensor shape mismatch");
    for (const auto& [idx, v] : o.coords) add(idx, -v);
    return *this;
}

TensorVector& TensorVector::operator*=(const Rat& f) {
    if (f.is_zero()) {
        coords.clear();
        return *this;
    }
    for (auto& [idx, v] : coords) v *= f;
    return *this;
}

TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
    if (a.dim != b.dim) throw std::invalid_argument("tensor factors over different spaces");
    TensorVector out = TensorVector::zero(a.dim, a.deg + b.deg);
    for (const auto& [ia, va] : a.coords)
        for (const auto& [ib, vb] : b.coords) {
            MultiIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add(idx, va * vb);
        }
    return out;
}

TensorVector tensor_power(const TensorVector& a, int r) {
    if (r < 0) throw std::invalid_argument("negative tensor power");
    tensor_space_dim(a.dim, a.deg * r);
    TensorVector out = TensorVector::zero(a.dim, 0);
    out.coords.emplace(MultiIndex{}, Rat(1));
    for (int t = 0; t < r; ++t) out = tensor_product(out, a);
    return out;
}

TensorMap TensorMap::identity(int dim, int deg) {
    TensorMap m = zero(dim, deg, dim, deg);
    for (const auto& idx : all_indices(dim, deg)) m.entries.emplace(std::pair{idx, idx}, Rat(1));
    return m;
}

Rat TensorMap::entry(const MultiIndex& dst, const MultiIndex& src) const {
    check_index(dst, dst_dim, dst_deg, "dst");
    check_index(src, src_dim, src_deg, "src");
    auto it = entries.find({dst, src});
    return it == entries.end() ? Rat() : it->second;
}

void TensorMap::add_entry(const MultiIndex& dst, const MultiIndex& src, const Rat& v) {
    check_index(dst, dst_dim, dst_deg, "dst");
    check_index(src, src_dim, src_deg, "src");
    if (v.is_zero()) return;
    auto [it, fresh] = entries.emplace(std::pair{dst, src}, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) entries.erase(it);
    }
}

TensorVector TensorMap::apply(const TensorVector& v) const {
    if (v.dim != src_dim || v.deg != src_deg) throw std::invalid_argument("apply: shape mismatch");
    TensorVector out = TensorVector::zero(dst_dim, dst_deg);
    for (const auto& [key, c] : entries) {
        auto it = v.coords.find(key.second);
        if (it != v.coords.end()) out.add(key.first, c * it->second);
    }
    return out;
}

TensorMap& TensorMap::operator+=(const TensorMap& o) {
    if (src_dim != o.src_dim || src_deg != o.src_deg || dst_dim != o.dst_dim ||
        dst_deg != o.dst_deg)
        throw std::invalid_argument("map shape mismatch");
    for (const auto& [key, v] : o.entries) add_entry(key.first, key.second, v);
    return *this;
}

TensorMap& TensorMap::operator-=(const TensorMap& o) {
    if (src_dim != o.src_dim || src_deg != o.src_deg || dst_dim != o.dst_dim ||
        dst_deg != o.dst_deg)
        throw std::invalid_argument("map shape mismatch");
    for (const auto& [key, v] : o.entries) add_entry(key.first, key.second, -v);
    return *this;
}

TensorMap& TensorMap::operator*=(const Rat& f) {
    if (f.is_zero()) {
        entries.clear();
        return *this;
    }
    for (auto& [key, v] : entries) v *= f;
    return *this;
}

namespace {

struct Column {
    MultiIndex src;
    std::vector<std::pair<MultiIndex, Rat>> terms;  // (mid index, value)
};

// Bucket g by source index and f by source (= middle) index.
std::vector<Column> columns_of(const TensorMap& g) {
    std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rat>>> buckets;
    for (const auto& [key, v] : g.entries) buckets[key.second].emplace_back(key.first, v);
    std::vector<Column> cols;
    cols.reserve(buckets.size());
    for (auto& [src, terms] : buckets) cols.push_back({src, std::move(terms)});
    return cols;
}

std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rat>>> rows_by_src(const TensorMap& f) {
    std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rat>>> buckets;
    for (const auto& [key, v] : f.entries) buckets[key.second].emplace_back(key.first, v);
    return buckets;
}

std::map<MultiIndex, Rat> compose_column(
    const std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rat>>>& f_by_mid,
    const Column& col) {
    std::map<MultiIndex, Rat> acc;
    for (const auto& [mid, gv] : col.terms) {
        auto it = f_by_mid.find(mid);
        if (it == f_by_mid.end()) continue;
        for (const auto& [dst, fv] : it->second) {
            Rat& slot = acc[dst];
            slot += fv * gv;
            if (slot.is_zero()) acc.erase(dst);
        }
    }
    return acc;
}

void check_composable(const TensorMap& f, const TensorMap& g) {
    if (g.dst_dim != f.src_dim || g.dst_deg != f.src_deg)
        throw std::invalid_argument("compose: middle space mismatch");
}

}  // namespace

TensorMap compose_serial(const TensorMap& f, const TensorMap& g) {
    check_composable(f, g);
    TensorMap out = TensorMap::zero(g.src_dim, g.src_deg, f.dst_dim, f.dst_deg);
    auto f_by_mid = rows_by_src(f);
    for (const auto& col : columns_of(g))
        for (auto& [dst, v] : compose_column(f_by_mid, col))
            out.entries.emplace(std::pair{dst, col.src}, std::move(v));
    return out;
}

TensorMap compose(const TensorMap& f, const TensorMap& g) {
    check_composable(f, g);
    TensorMap out = TensorMap::zero(g.src_dim, g.src_deg, f.dst_dim, f.dst_deg);
    auto f_by_mid = rows_by_src(f);
    auto cols = columns_of(g);
    std::vector<std::map<MultiIndex, Rat>> results(cols.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t c = 0; c < cols.size(); ++c) results[c] = compose_column(f_by_mid, cols[c]);
    // Merge in fixed column order: identical to the serial result.
    for (size_t c = 0; c < cols.size(); ++c)
        for (auto& [dst, v] : results[c])
            out.entries.emplace(std::pair{dst, cols[c].src}, std::move(v));
    return out;
}

TensorMap map_from_matrix(const RatMat& u) {
    if (u.rows() == 0 || u.cols() == 0) throw std::invalid_argument("empty matrix");
    TensorMap m = TensorMap::zero(static_cast<int>(u.cols()), 1, static_cast<int>(u.rows()), 1);
    for (size_t j = 0; j < u.rows(); ++j)
        for (size_t i = 0; i < u.cols(); ++i)
            if (!u(j, i).is_zero())
                m.entries.emplace(
                    std::pair{MultiIndex{static_cast<int>(j) + 1}, MultiIndex{static_cast<int>(i) + 1}},
                    u(j, i));
    return m;
}

TensorMap tensor_product_map(const TensorMap& a, const TensorMap& b) {
    if (a.src_dim != b.src_dim || a.dst_dim != b.dst_dim)
        throw std::invalid_argument("tensor_product_map: factor dims differ");
    TensorMap out = TensorMap::zero(a.src_dim, a.src_deg + b.src_deg, a.dst_dim,
                                    a.dst_deg + b.dst_deg);
    for (const auto& [ka, va] : a.entries)
        for (const auto& [kb, vb] : b.entries) {
            MultiIndex dst = ka.first;
            dst.insert(dst.end(), kb.first.begin(), kb.first.end());
            MultiIndex src = ka.second;
            src.insert(src.end(), kb.second.begin(), kb.second.end());
            out.entries.emplace(std::pair{std::move(dst), std::move(src)}, va * vb);
        }
    return out;
}

TensorMap kronecker_power(const RatMat& u, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    tensor_space_dim(static_cast<int>(u.rows()), n);
    tensor_space_dim(static_cast<int>(u.cols()), n);
    TensorMap out = TensorMap::zero(static_cast<int>(u.cols()), 0, static_cast<int>(u.rows()), 0);
    out.entries.emplace(std::pair{MultiIndex{}, MultiIndex{}}, Rat(1));
    if (n == 0) return out;
    TensorMap step = map_from_matrix(u);
    for (int t = 0; t < n; ++t) out = tensor_product_map(out, step);
    return out;
}

RatMat to_dense(const TensorMap& m) {
    size_t r = tensor_space_dim(m.dst_dim, m.dst_deg);
    size_t c = tensor_space_dim(m.src_dim, m.src_deg);
    RatMat d(r, c);
    for (const auto& [key, v] : m.entries)
        d(flat_index(key.first, m.dst_dim), flat_index(key.second, m.src_dim)) = v;
    return d;
}

bool is_invertible(const TensorMap& m) {
    if (m.src_dim != m.dst_dim || m.src_deg != m.dst_deg) return false;
    RatMat d = to_dense(m);
    return rank(d) == d.rows();
}

TensorVector apply_permutation(const Permutation& g, const TensorVector& t) {
    if (g.size() != t.deg) throw std::invalid_argument("permutation degree mismatch");
    Permutation gi = g.inverse();
    TensorVector out = TensorVector::zero(t.dim, t.deg);
    for (const auto& [idx, v] : t.coords) {
        MultiIndex moved(t.deg);
        for (int pos = 1; pos <= t.deg; ++pos) moved[pos - 1] = idx[gi(pos) - 1];
        out.coords.emplace(std::move(moved), v);
    }
    return out;
}

TensorMap permutation_map(const Permutation& g, int dim) {
    int n = g.size();
    TensorMap m = TensorMap::zero(dim, n, dim, n);
    Permutation gi = g.inverse();
    for (const auto& idx : all_indices(dim, n)) {
        MultiIndex moved(n);
        for (int pos = 1; pos <= n; ++pos) moved[pos - 1] = idx[gi(pos) - 1];
        m.entries.emplace(std::pair{std::move(moved), idx}, Rat(1));
    }
    return m;
}

TensorVector antisymmetrize(int n, const TensorVector& t) {
    if (t.deg != n) throw std::invalid_argument("antisymmetrize: degree mismatch");
    TensorVector out = TensorVector::zero(t.dim, n);
    for (const auto& g : enumerate_permutations(n)) {
        TensorVector gt = apply_permutation(g, t);
        if (g.sign() < 0)
            out -= gt;
        else
            out += gt;
    }
    return out;
}

TensorMap antisymmetrize_map(int dim, int n) {
    TensorMap m = TensorMap::zero(dim, n, dim, n);
    for (const auto& g : enumerate_permutations(n)) {
        TensorMap pg = permutation_map(g, dim);
        if (g.sign() < 0)
            m -= pg;
        else
            m += pg;
    }
    return m;
}

int hom_index(int i, int j, int dB) {
    if (i < 1 || j < 1 || j > dB) throw std::invalid_argument("hom_index out of range");
    return (i - 1) * dB + j;
}

std::pair<int, int> hom_index_split(int v, int dB) {
    if (v < 1 || dB < 1) throw std::invalid_argument("hom_index_split out of range");
    return {(v - 1) / dB + 1, (v - 1) % dB + 1};
}

TensorMap kronecker_map(const TensorVector& w, int dA, int dB) {
    if (w.dim != dA * dB) throw std::invalid_argument("kronecker_map: tensor not over Hom(A,B)");
    TensorMap m = TensorMap::zero(dA, w.deg, dB, w.deg);
    for (const auto& [idx, v] : w.coords) {
        MultiIndex src(w.deg), dst(w.deg);
        for (int t = 0; t < w.deg; ++t) {
            auto [i, j] = hom_index_split(idx[t], dB);
            if (i > dA) throw std::invalid_argument("kronecker_map: index exceeds Hom(A,B)");
            src[t] = i;
            dst[t] = j;
        }
        m.entries.emplace(std::pair{std::move(dst), std::move(src)}, v);
    }
    return m;
}

Rat dual_pairing(const TensorVector& z, const TensorVector& w) {
    if (z.dim != w.dim || z.deg != w.deg) throw std::invalid_argument("pairing shape mismatch");
    Rat acc;
    const auto& small = z.coords.size() <= w.coords.size() ? z : w;
    const auto& big = z.coords.size() <= w.coords.size() ? w : z;
    for (const auto& [idx, v] : small.coords) {
        auto it = big.coords.find(idx);
        if (it != big.coords.end()) acc += v * it->second;
    }
    return acc;
}

}  // namespace omr
