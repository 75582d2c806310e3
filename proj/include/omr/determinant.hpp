#pragma once

#include "omr/algebra.hpp"
#include "omr/loday.hpp"
#include "omr/polynomial.hpp"
#include "omr/symtensor.hpp"
#include "omr/tensor.hpp"

namespace omr {

/// The antisymmetric data of a pair of equal-dimensional algebras: the
/// alternating tensors on both sides, the determinant tensor over
/// U = Hom(A,B), and its polynomial image. All four depend on the declared
/// basis order, so the source algebras are pinned by name.
struct DetData {
    int m = 1;
    std::string src_name, dst_name;
    TensorVector domain_alt;    // alternating sum of the domain basis, degree m
    TensorVector codomain_alt;  // same on the codomain side
    TensorVector det_tensor;    // signed sum of coordinate rows over U, degree m
    Polynomial det_poly;        // its polynomial shadow; evaluates to det u

    void check_pair(const AlgebraSpec& a, const AlgebraSpec& b) const;
};

DetData build_det_data(const AlgebraSpec& a, const AlgebraSpec& b);

struct PairingCheck {
    bool pass = false;
    Rat left, right;
};

/// Identity (asym): the top coordinate of [w] applied to the r-th power of
/// the domain alternating tensor equals the pairing of the r-th power of the
/// determinant tensor with w. w ranges over U^{(x)mr}.
PairingCheck check_asym_pairing(const DetData& dd, const TensorVector& w, int r);

struct SymCheck {
    bool pass = false;
    Rat scalar;  // pairing of det_poly^r with w
    TensorVector left, right;
};

/// Identity (sym): for symmetric w, [w] applied to the r-th power of the
/// domain alternating tensor equals that scalar times the codomain one.
SymCheck check_sym_pairing(const DetData& dd, const SymTensor& w, int r);

struct MorphismCheck {
    bool pass = false;
    Rat scalar;  // functional of s applied to det_poly^r
    TensorVector left, right;
};

/// Identity (sE): s_{mr} applied to the r-th power of the domain alternating
/// tensor equals the functional value times the r-th power of the codomain
/// one. s must be equivariant with levels up to mr.
MorphismCheck check_morphism_identity(const DetData& dd, const TruncatedMorphism& s, int r);

}  // namespace omr
