#pragma once

#include "omr/algebra.hpp"
#include "omr/loday.hpp"
#include "omr/polynomial.hpp"
#include "omr/sparse_solve.hpp"

namespace omr {

/// Flat coordinates for the entries of a truncated morphism: level blocks in
/// order, each block (dst flat index) * src_space_dim + (src flat index).
struct MorphismLayout {
    int dA = 1, dB = 1, N = 0;
    std::vector<size_t> offsets;  // size N+2, last entry = total()

    static MorphismLayout make(int dA, int dB, int N);
    size_t total() const { return offsets.back(); }
    size_t index(int level, const MultiIndex& dst, const MultiIndex& src) const;
    std::vector<Rat> flatten(const TruncatedMorphism& s) const;
    TruncatedMorphism unflatten(const std::vector<Rat>& x) const;
};

/// r_n = L_B(tau_n) o s_{n+2} - s_{n+1} o L_A(tau_n), the obstruction to
/// naturality at the n-th merge map.
TensorMap discrepancy(const AlgebraSpec& a, const AlgebraSpec& b, const TruncatedMorphism& s,
                      int n);

struct NaturalityReport {
    std::vector<int> non_equivariant_levels;
    std::vector<int> nonzero_discrepancies;
    bool pass() const { return non_equivariant_levels.empty() && nonzero_discrepancies.empty(); }
};

/// Equivariance of every level plus vanishing of every in-range discrepancy.
/// Equivalent to naturality at every surjection with domain <= N.
NaturalityReport is_natural(const AlgebraSpec& a, const AlgebraSpec& b,
                            const TruncatedMorphism& s);

struct HomSpaceBasis {
    MorphismLayout layout;
    std::vector<std::vector<Rat>> vectors;

    size_t dimension() const { return vectors.size(); }
    TruncatedMorphism morphism(size_t k) const { return layout.unflatten(vectors.at(k)); }
};

/// The naturality constraint rows (all homogeneous): equivariance for levels
/// <= N and, when with_merges, the merge squares r_n = 0 for n + 2 <= N.
SparseSystem naturality_constraints(const AlgebraSpec& a, const AlgebraSpec& b,
                                    const MorphismLayout& layout, bool with_merges);

/// Exact echelon basis of all truncated morphisms natural up to level N.
HomSpaceBasis solve_hom_space(const AlgebraSpec& a, const AlgebraSpec& b, int N);

/// Same system without the merge squares: all levelwise equivariant families.
HomSpaceBasis equivariant_space(const AlgebraSpec& a, const AlgebraSpec& b, int N);

/// Signs k_m = (-1)^floor(m/2) of the two-dimensional counterexample.
int sign_for_weight(int m);

/// The morphism between the sign-split pair of two-dimensional algebras:
/// diagonal on basis tensors, entry k_w at weight w (number of non-unit
/// factors). Every level is invertible.
TruncatedMorphism counterexample_morphism(int N);

struct PerpReport {
    bool pass = true;
    std::optional<Polynomial> witness;  // spanning polynomial with nonzero value
    Rat witness_value;
};

/// The dual criterion: the functional of s vanishes on the degree-<=N span
/// of the multiplicativity ideal.
PerpReport perp_test(const AlgebraSpec& a, const AlgebraSpec& b, const TruncatedMorphism& s,
                     int N);

/// {equivariant s : functional of s kills the truncated ideal span} as a
/// subspace of the same flat coordinates: the other side of the dual
/// criterion, for space-to-space comparison against solve_hom_space.
HomSpaceBasis annihilator_space(const AlgebraSpec& a, const AlgebraSpec& b, int N);

}  // namespace omr
