#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "omr/rational.hpp"

namespace omr {

using AlgVector = std::vector<Rat>;

struct ValidationReport {
    bool commutative = true;
    bool associative = true;
    /// witness basis pair (i, j) with c[i][j][*] != c[j][i][*]
    std::optional<std::pair<int, int>> commutativity_witness;
    /// witness triple (i, j, l) with (e_i e_j) e_l != e_i (e_j e_l)
    std::optional<std::tuple<int, int, int>> associativity_witness;
    bool pass() const { return commutative && associative; }
};

/// Finite-dimensional commutative associative algebra, not necessarily
/// unital, presented by rational structure constants
/// e_i * e_j = sum_k c[i][j][k] e_k.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, int dim, std::vector<std::vector<std::vector<Rat>>> constants);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    /// 1-based structure constant c[i][j][k].
    const Rat& c(int i, int j, int k) const { return constants_[i - 1][j - 1][k - 1]; }
    const std::vector<std::vector<std::vector<Rat>>>& constants() const { return constants_; }

    ValidationReport validate() const;

    AlgVector multiply(const AlgVector& x, const AlgVector& y) const;
    AlgVector basis_vector(int i) const;
    /// Left-fold product of basis elements (order irrelevant once the axioms
    /// hold); factors must be nonempty.
    AlgVector product_of_basis(const std::vector<int>& factors) const;

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);

private:
    std::string name_;
    int dim_;
    std::vector<std::vector<std::vector<Rat>>> constants_;
};

}  // namespace omr
