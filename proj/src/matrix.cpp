#include "omr/matrix.hpp"

#include <stdexcept>

namespace omr {

RatMat RatMat::identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

bool operator==(const RatMat& x, const RatMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
        for (size_t k = 0; k < x.cols_; ++k) {
            const Rat& xv = x(i, k);
            if (xv.is_zero()) continue;
            for (size_t j = 0; j < y.cols_; ++j) r(i, j) += xv * y(k, j);
        }
    return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in difference");
    RatMat r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<size_t> rref(RatMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rat inv = m(row, col).inv();
        for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rat f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(RatMat m) {
    return rref(m).size();
}

std::vector<std::vector<Rat>> nullspace(RatMat m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n);
        v[f] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<int, std::vector<Rat>> solve_unique(RatMat m, std::vector<Rat> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_unique: shape mismatch");
    size_t n = m.cols();
    RatMat aug(m.rows(), n + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return {1, {}};
    if (pivots.size() < n) return {2, {}};
    std::vector<Rat> x(n);
    for (size_t r = 0; r < n; ++r) x[pivots[r]] = aug(r, n);
    return {0, std::move(x)};
}

}  // namespace omr
