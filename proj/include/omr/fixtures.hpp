#pragma once

#include "omr/algebra.hpp"

namespace omr {

/// The four standing one- and two-dimensional test algebras. The files in
/// fixtures/ hold the same data; these builders are the in-code source of
/// truth the files are generated from.

/// dim 1, e*e = e (the ground field itself).
AlgebraSpec fixture_idem1();
/// dim 1, e*e = 0.
AlgebraSpec fixture_nil1();
/// dim 2, basis (1, X), X*X = 1.
AlgebraSpec fixture_ax();
/// dim 2, basis (1, Y), Y*Y = -1.
AlgebraSpec fixture_by();

}  // namespace omr
