#pragma once

#include <map>
#include <optional>

#include "omr/tensor.hpp"

namespace omr {

/// Element of the symmetric (Sigma_n-invariant) subspace of V^{(x)n},
/// stored on the multiset basis: keys are non-decreasing multi-indices,
/// one coordinate per orbit. No zero coordinates are stored.
struct SymTensor {
    int dim = 1;
    int deg = 0;
    std::map<MultiIndex, Rat> coords;

    static SymTensor zero(int dim, int deg) { return {dim, deg, {}}; }

    Rat coord(const MultiIndex& multiset) const;
    void add(const MultiIndex& multiset, const Rat& v);
    bool is_zero() const { return coords.empty(); }

    SymTensor& operator+=(const SymTensor& o);
    SymTensor& operator-=(const SymTensor& o);
    SymTensor& operator*=(const Rat& f);
    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
    friend bool operator==(const SymTensor& a, const SymTensor& b) = default;
};

/// Size-deg multisets over {1..dim} as sorted multi-indices, lexicographic.
std::vector<MultiIndex> multiset_basis(int dim, int deg);
/// C(dim + deg - 1, deg).
size_t multiset_basis_size(int dim, int deg);

/// Orbit expansion: each multiset coordinate is copied to every distinct
/// arrangement of the multiset.
TensorVector expand(const SymTensor& w);

/// Inverse of expand; nullopt when the input is not constant on orbits.
std::optional<SymTensor> symmetric_from_tensor(const TensorVector& t);

/// u^{(x)n} of a vector u, recorded symmetrically: coordinate at a multiset
/// is the product of the entries of u it selects.
SymTensor sym_power(const std::vector<Rat>& u, int n);

}  // namespace omr
