#pragma once

#include <cstddef>
#include <vector>

#include "omr/rational.hpp"

namespace omr {

/// Dense exact rational matrix. Plain row-echelon machinery; the sparse
/// fraction-free solver in sparse_solve.hpp is the production path for big
/// systems, this one is the small-system workhorse and the independent
/// second elimination route used by the tests.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static RatMat identity(size_t n);

    friend bool operator==(const RatMat& x, const RatMat& y);
    friend RatMat operator*(const RatMat& x, const RatMat& y);
    friend RatMat operator-(const RatMat& x, const RatMat& y);
    bool is_zero() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// In-place reduced row echelon form with deterministic pivoting
/// (columns left to right, first row with a nonzero entry).
/// Returns the pivot columns.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

/// Basis of {x : m x = 0}, one column vector per free column,
/// ordered by free column index.
std::vector<std::vector<Rat>> nullspace(RatMat m);

/// Solves m x = b when the solution exists and is unique.
/// flags: 0 ok, 1 inconsistent, 2 underdetermined.
std::pair<int, std::vector<Rat>> solve_unique(RatMat m, std::vector<Rat> b);

}  // namespace omr
