#include "omr/algebra.hpp"

#include <stdexcept>

namespace omr {

AlgebraSpec::AlgebraSpec(std::string name, int dim,
                         std::vector<std::vector<std::vector<Rat>>> constants)
    : name_(std::move(name)), dim_(dim), constants_(std::move(constants)) {
    if (dim_ < 1) throw std::invalid_argument("AlgebraSpec: dimension must be >= 1");
    if (constants_.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("AlgebraSpec: malformed constants");
    for (const auto& plane : constants_) {
        if (plane.size() != static_cast<size_t>(dim_))
            throw std::invalid_argument("AlgebraSpec: malformed constants");
        for (const auto& row : plane)
            if (row.size() != static_cast<size_t>(dim_))
                throw std::invalid_argument("AlgebraSpec: malformed constants");
    }
}

ValidationReport AlgebraSpec::validate() const {
    ValidationReport rep;
    for (int i = 1; i <= dim_ && rep.commutative; ++i)
        for (int j = 1; j <= dim_ && rep.commutative; ++j)
            for (int k = 1; k <= dim_; ++k)
                if (!(c(i, j, k) == c(j, i, k))) {
                    rep.commutative = false;
                    rep.commutativity_witness = {i, j};
                    break;
                }
    for (int i = 1; i <= dim_ && rep.associative; ++i)
        for (int j = 1; j <= dim_ && rep.associative; ++j)
            for (int l = 1; l <= dim_ && rep.associative; ++l) {
                // (e_i e_j) e_l vs e_i (e_j e_l), coordinate m
                for (int m = 1; m <= dim_; ++m) {
                    Rat lhs, rhs;
                    for (int k = 1; k <= dim_; ++k) {
                        lhs += c(i, j, k) * c(k, l, m);
                        rhs += c(j, l, k) * c(i, k, m);
                    }
                    if (!(lhs == rhs)) {
                        rep.associative = false;
                        rep.associativity_witness = {i, j, l};
                        break;
                    }
                }
            }
    return rep;
}

AlgVector AlgebraSpec::multiply(const AlgVector& x, const AlgVector& y) const {
    if (x.size() != static_cast<size_t>(dim_) || y.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("AlgebraSpec::multiply: dimension mismatch");
    AlgVector z(dim_);
    for (int i = 1; i <= dim_; ++i) {
        if (x[i - 1].is_zero()) continue;
        for (int j = 1; j <= dim_; ++j) {
            if (y[j - 1].is_zero()) continue;
            Rat f = x[i - 1] * y[j - 1];
            for (int k = 1; k <= dim_; ++k) {
                const Rat& s = c(i, j, k);
                if (!s.is_zero()) z[k - 1] += f * s;
            }
        }
    }
    return z;
}

AlgVector AlgebraSpec::basis_vector(int i) const {
    AlgVector v(dim_);
    v.at(i - 1) = Rat(1);
    return v;
}

AlgVector AlgebraSpec::product_of_basis(const std::vector<int>& factors) const {
    if (factors.empty())
        throw std::invalid_argument("AlgebraSpec::product_of_basis: empty factor list");
    AlgVector acc = basis_vector(factors[0]);
    for (size_t t = 1; t < factors.size(); ++t) acc = multiply(acc, basis_vector(factors[t]));
    return acc;
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.name_ == b.name_ && a.dim_ == b.dim_ && a.constants_ == b.constants_;
}

}  // namespace omr
