#include "omr/symtensor.hpp"

#include <algorithm>

namespace omr {

namespace {

void check_multiset(const MultiIndex& mu, int dim, int deg) {
    if (static_cast<int>(mu.size()) != deg)
        throw std::invalid_argument("multiset has wrong degree");
    int prev = 1;
    for (int v : mu) {
        if (v < prev || v > dim) throw std::invalid_argument("not a sorted multiset over 1..dim");
        prev = v;
    }
}

}  // namespace

Rat SymTensor::coord(const MultiIndex& multiset) const {
    check_multiset(multiset, dim, deg);
    auto it = coords.find(multiset);
    return it == coords.end() ? Rat() : it->second;
}

void SymTensor::add(const MultiIndex& multiset, const Rat& v) {
    check_multiset(multiset, dim, deg);
    if (v.is_zero()) return;
    auto [it, fresh] = coords.emplace(multiset, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) coords.erase(it);
    }
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
    if (dim != o.dim || deg != o.deg) throw std::invalid_argument("sym tensor shape mismatch");
    for (const auto& [mu, v] : o.coords) add(mu, v);
    return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
    if (dim != o.dim || deg != o.deg) throw std::invalid_argument("sym tensor shape mismatch");
    for (const auto& [mu, v] : o.coords) add(mu, -v);
    return *this;
}

SymTensor& SymTensor::operator*=(const Rat& f) {
    if (f.is_zero()) {
        coords.clear();
        return *this;
    }
    for (auto& [mu, v] : coords) v *= f;
    return *this;
}

std::vector<MultiIndex> multiset_basis(int dim, int deg) {
    if (dim < 1 || deg < 0) throw std::invalid_argument("bad multiset basis shape");
    std::vector<MultiIndex> out;
    MultiIndex cur(deg, 1);
    while (true) {
        out.push_back(cur);
        int pos = deg - 1;
        while (pos >= 0 && cur[pos] == dim) --pos;
        if (pos < 0) break;
        int v = cur[pos] + 1;
        for (int t = pos; t < deg; ++t) cur[t] = v;
    }
    return out;
}

size_t multiset_basis_size(int dim, int deg) {
    // C(dim + deg - 1, deg), exact in mpz then narrowed.
    mpz_class n = 1;
    for (int t = 1; t <= deg; ++t) {
        n *= dim - 1 + t;
        n /= t;  // divides exactly: running value is a binomial coefficient
    }
    if (!n.fits_ulong_p()) throw BudgetError("multiset basis too large");
    return n.get_ui();
}

TensorVector expand(const SymTensor& w) {
    TensorVector out = TensorVector::zero(w.dim, w.deg);
    for (const auto& [mu, v] : w.coords) {
        MultiIndex arr = mu;
        do {
            out.coords.emplace(arr, v);
        } while (std::next_permutation(arr.begin(), arr.end()));
    }
    return out;
}

std::optional<SymTensor> symmetric_from_tensor(const TensorVector& t) {
    SymTensor w = SymTensor::zero(t.dim, t.deg);
    for (const auto& [idx, v] : t.coords) {
        MultiIndex mu = idx;
        std::sort(mu.begin(), mu.end());
        auto [it, fresh] = w.coords.emplace(std::move(mu), v);
        if (!fresh && it->second != v) return std::nullopt;
    }
    // Every arrangement of every recorded multiset must actually be present.
    for (const auto& [mu, v] : w.coords) {
        MultiIndex arr = mu;
        do {
            auto it = t.coords.find(arr);
            if (it == t.coords.end() || it->second != v) return std::nullopt;
        } while (std::next_permutation(arr.begin(), arr.end()));
    }
    return w;
}

SymTensor sym_power(const std::vector<Rat>& u, int n) {
    int dim = static_cast<int>(u.size());
    if (dim < 1) throw std::invalid_argument("empty vector");
    SymTensor w = SymTensor::zero(dim, n);
    for (const auto& mu : multiset_basis(dim, n)) {
        Rat prod(1);
        for (int v : mu) prod *= u[static_cast<size_t>(v) - 1];
        if (!prod.is_zero()) w.coords.emplace(mu, prod);
    }
    return w;
}

}  // namespace omr
