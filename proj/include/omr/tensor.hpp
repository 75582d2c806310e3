#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omr/matrix.hpp"
#include "omr/rational.hpp"
#include "omr/surjection.hpp"

namespace omr {

/// Basis multi-index for V^{(x)n}: entries in 1..dim, length = degree.
/// The empty index spans the degree-0 space k.
using MultiIndex = std::vector<int>;

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

constexpr size_t tensor_budget = 100000;

/// dim^deg, throwing BudgetError beyond tensor_budget.
size_t tensor_space_dim(int dim, int deg);

/// All multi-indices of the given degree, lexicographic (first factor most
/// significant). Budget-guarded.
std::vector<MultiIndex> all_indices(int dim, int deg);

/// Flat offset of idx in all_indices order.
size_t flat_index(const MultiIndex& idx, int dim);

/// Sparse exact element of V^{(x)deg}, dim = dim V. Zero coordinates are
/// never stored, so map equality is value equality.
struct TensorVector {
    int dim = 1;
    int deg = 0;
    std::map<MultiIndex, Rat> coords;

    static TensorVector zero(int dim, int deg) { return {dim, deg, {}}; }
    static TensorVector basis(int dim, const MultiIndex& idx);

    Rat coord(const MultiIndex& idx) const;
    void add(const MultiIndex& idx, const Rat& v);
    bool is_zero() const { return coords.empty(); }

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const Rat& f);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(const Rat& f, TensorVector t) { return t *= f; }
    friend bool operator==(const TensorVector& a, const TensorVector& b) = default;
};

TensorVector tensor_product(const TensorVector& a, const TensorVector& b);
TensorVector tensor_power(const TensorVector& a, int r);

/// Sparse exact linear map src^{(x)src_deg} -> dst^{(x)dst_deg},
/// entries keyed (dst index, src index).
struct TensorMap {
    int src_dim = 1, src_deg = 0;
    int dst_dim = 1, dst_deg = 0;
    std::map<std::pair<MultiIndex, MultiIndex>, Rat> entries;

    static TensorMap zero(int src_dim, int src_deg, int dst_dim, int dst_deg) {
        return {src_dim, src_deg, dst_dim, dst_deg, {}};
    }
    static TensorMap identity(int dim, int deg);

    Rat entry(const MultiIndex& dst, const MultiIndex& src) const;
    void add_entry(const MultiIndex& dst, const MultiIndex& src, const Rat& v);
    bool is_zero() const { return entries.empty(); }

    TensorVector apply(const TensorVector& v) const;

    TensorMap& operator+=(const TensorMap& o);
    TensorMap& operator-=(const TensorMap& o);
    TensorMap& operator*=(const Rat& f);
    friend TensorMap operator+(TensorMap a, const TensorMap& b) { return a += b; }
    friend TensorMap operator-(TensorMap a, const TensorMap& b) { return a -= b; }
    friend bool operator==(const TensorMap& a, const TensorMap& b) = default;
};

/// f o g. OpenMP over source columns when available; results are identical
/// to compose_serial entry for entry.
TensorMap compose(const TensorMap& f, const TensorMap& g);
/// Reference composition, kept serial for testing and benchmarking.
TensorMap compose_serial(const TensorMap& f, const TensorMap& g);

/// Degree-1 map from a (dim B x dim A) matrix.
TensorMap map_from_matrix(const RatMat& u);
/// Tensor product of maps (degrees add, dims must match factor-wise).
TensorMap tensor_product_map(const TensorMap& a, const TensorMap& b);
/// n-fold Kronecker power of a matrix; n = 0 gives the identity on k.
TensorMap kronecker_power(const RatMat& u, int n);

/// Dense matrix of the map in flat-index coordinates. Budget-guarded.
RatMat to_dense(const TensorMap& m);
bool is_invertible(const TensorMap& m);

/// Left action: new index beta with beta[t] = alpha[g^{-1}(t)].
TensorVector apply_permutation(const Permutation& g, const TensorVector& t);
TensorMap permutation_map(const Permutation& g, int dim);

/// Signed symmetrization sum_{g} sgn(g) g t; degree must equal n.
TensorVector antisymmetrize(int n, const TensorVector& t);
TensorMap antisymmetrize_map(int dim, int n);

/// Coordinates of U = Hom(A,B): pair (i,j) <-> index (i-1)*dB + j, 1-based.
/// Coordinate (i,j) of u is the coefficient of u(e_i) on f_j.
int hom_index(int i, int j, int dB);
std::pair<int, int> hom_index_split(int v, int dB);

/// The equivariant map A^{(x)n} -> B^{(x)n} induced by w in U^{(x)n}
/// (elementary tensors of maps act factor-wise).
TensorMap kronecker_map(const TensorVector& w, int dA, int dB);

/// Full coordinate contraction of z in (U*)^{(x)n} against w in U^{(x)n};
/// covectors are coordinate rows against the same basis.
Rat dual_pairing(const TensorVector& z, const TensorVector& w);

}  // namespace omr
