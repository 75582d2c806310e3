#pragma once

#include <cstdint>

#include "omr/algebra.hpp"
#include "omr/polynomial.hpp"

namespace omr {

/// Generators of the multiplicativity ideal of a pair (A, B), over the
/// dA*dB variables of Hom(A,B). Identically zero generators are dropped;
/// an empty list is the zero ideal.
struct IdealGens {
    int dA = 1;
    int dB = 1;
    std::vector<Polynomial> gens;

    int nvars() const { return dA * dB; }
};

/// g_{ij}^k = sum_{a,b} cB[a][b][k] l_i^a l_j^b - sum_t cA[i][j][t] l_t^k
/// for i <= j and every k; vanishing exactly on the algebra homomorphisms.
IdealGens multiplicativity_ideal(const AlgebraSpec& a, const AlgebraSpec& b);

/// Every generator times every monomial of degree <= N-2, so products carry
/// total degree <= N. Empty for N <= 1.
std::vector<Polynomial> truncated_span(const AlgebraSpec& a, const AlgebraSpec& b, int N);

/// Dense matrix over F_p, shape (dB x dA): entry (j, i) is the coordinate
/// l_i^j, i.e. the coefficient of u(e_i) on the j-th basis vector of B.
struct FpMat {
    uint32_t p = 2;
    int rows = 0, cols = 0;
    std::vector<uint32_t> vals;  // row-major, each < p

    uint32_t at(int r, int c) const { return vals[static_cast<size_t>(r) * cols + c]; }
    friend bool operator==(const FpMat& a, const FpMat& b) = default;
};

constexpr size_t enumeration_budget = 10000000;

/// Direct check of u(e_i) u(e_k) = u(e_i e_k) on all basis pairs, with the
/// structure constants reduced mod p.
bool is_homomorphism_mod(const AlgebraSpec& a, const AlgebraSpec& b, const FpMat& u);

/// All points of the vanishing set of the multiplicativity ideal over F_p,
/// in ascending coordinate order. Each point is also asserted to pass the
/// direct homomorphism test and vice versa (the two sets provably coincide;
/// a mismatch throws std::logic_error). OpenMP over blocks of the point
/// space with a deterministic merge.
std::vector<FpMat> variety_points(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p);
/// Reference implementation, kept serial for testing and benchmarking.
std::vector<FpMat> variety_points_serial(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p);

/// Brute-force enumeration by the direct homomorphism test only (no
/// polynomials involved) — the independent route for set comparisons.
std::vector<FpMat> homomorphism_points(const AlgebraSpec& a, const AlgebraSpec& b, uint32_t p);

/// Determinant over F_p (square matrices).
Fp det_mod(const FpMat& u);

}  // namespace omr
