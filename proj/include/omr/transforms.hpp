#pragma once

#include "omr/loday.hpp"
#include "omr/polynomial.hpp"
#include "omr/symtensor.hpp"
#include "omr/tensor.hpp"

namespace omr {

/// Degree-n monomials over nvars variables <-> size-n multisets over
/// {1..nvars}: the multiset lists each variable (1-based) with its
/// multiplicity.
Monomial monomial_from_multiset(const MultiIndex& mu, int nvars);
MultiIndex multiset_from_monomial(const Monomial& m);

/// A linear functional on polynomials of degree <= truncation, stored by its
/// values on monomials. The finite stand-in for a functional on all of k[U].
struct PolyFunctional {
    int nv = 0;
    int truncation = 0;
    std::map<Monomial, Rat> values;  // absent monomial = value 0

    Rat value(const Monomial& m) const;
    /// Sum of coefficient * value over the terms of f; f.degree() must not
    /// exceed the truncation.
    Rat apply(const Polynomial& f) const;

    friend bool operator==(const PolyFunctional& a, const PolyFunctional& b) = default;
};

/// Pairing of a homogeneous polynomial of degree n with a symmetric tensor of
/// the same degree: sum over multisets of coefficient * coordinate.
Rat sym_pairing(const Polynomial& f, const SymTensor& w);

/// The functional of a family (W_0 .. W_N) of symmetric tensors over U: its
/// value on a degree-n monomial is the corresponding coordinate of W_n.
PolyFunctional family_functional(const std::vector<SymTensor>& family);

/// The equivariant map A^{(x)n} -> B^{(x)n} carried by a symmetric tensor
/// over U = Hom(A,B).
TensorMap sym_to_map(const SymTensor& w, int dA, int dB);

/// True iff s commutes with the symmetric-group action on both sides
/// (checked on generators, which suffices).
bool is_equivariant(const TensorMap& s);

/// Inverse of sym_to_map, by an explicit linear solve on the multiset basis.
/// Throws std::invalid_argument on non-equivariant input.
SymTensor map_to_sym(const TensorMap& s, int dA, int dB);

/// The functional of a truncated morphism: levels 0..N through map_to_sym,
/// then family_functional. Every level must be equivariant.
PolyFunctional morphism_functional(const TruncatedMorphism& s, int N);
PolyFunctional morphism_functional(const TruncatedMorphism& s);

/// Values of the variables l_i^j at a concrete matrix u (shape dB x dA):
/// variable (i,j) reads entry (j,i). Feed the result to evaluate().
std::vector<Rat> hom_values(const RatMat& u);

}  // namespace omr
