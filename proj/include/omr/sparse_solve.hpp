#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "omr/rational.hpp"

namespace omr {

/// Sparse row over Q, terms sorted by column index, no zero coefficients.
struct SparseRowQ {
    std::vector<std::pair<int, Rat>> terms;
};

/// Sparse linear system collected row by row. Rows are stored with integer
/// coefficients (denominators cleared, content stripped, leading sign
/// positive), so the elimination below never leaves Z.
class SparseSystem {
public:
    explicit SparseSystem(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    size_t nrows() const { return rows_.size(); }

    /// Terms may arrive unsorted and with repeats; they are merged.
    void add_row(const std::vector<std::pair<int, Rat>>& terms);

    const std::vector<std::vector<std::pair<int, mpz_class>>>& rows() const { return rows_; }

private:
    int ncols_;
    std::vector<std::vector<std::pair<int, mpz_class>>> rows_;
};

/// Reduced echelon form over Q of a sparse system, computed by fraction-free
/// integer elimination with deterministic pivoting: columns left to right,
/// first surviving row claims the pivot.
class EchelonForm {
public:
    int ncols = 0;
    std::vector<int> pivot_cols;    // ascending
    std::vector<SparseRowQ> rows;   // rows[i] has coefficient 1 at pivot_cols[i]

    size_t rank() const { return rows.size(); }
    std::vector<int> free_cols() const;

    /// Nullspace basis, one vector per free column, ascending free-column
    /// order; entry at the free column is 1.
    std::vector<std::vector<Rat>> nullspace_basis() const;

    /// Residual of v after eliminating all pivot columns.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool in_rowspace(const std::vector<Rat>& v) const;
};

EchelonForm echelonize(const SparseSystem& sys);

/// Echelon form of a list of dense vectors taken as rows (span membership
/// tests for solution-space bases).
EchelonForm echelonize_vectors(int ncols, const std::vector<std::vector<Rat>>& vecs);

/// Solves the inhomogeneous system (rows, rhs) when the solution is unique.
/// flags: 0 ok, 1 inconsistent, 2 underdetermined.
std::pair<int, std::vector<Rat>> sparse_solve_unique(
    int ncols,
    const std::vector<std::vector<std::pair<int, Rat>>>& rows,
    const std::vector<Rat>& rhs);

/// Equality of the spans of two vector lists (equal rank plus mutual
/// containment).
bool spans_equal(int ncols, const std::vector<std::vector<Rat>>& a,
                 const std::vector<std::vector<Rat>>& b);

}  // namespace omr
