#pragma once

#include <compare>
#include <string>
#include <vector>

namespace omr {

/// Exponent vector over a fixed variable list. Variables are indexed 0-based
/// in ascending order (variable 0 is the smallest).
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / by; requires by.divides(*this).
    Monomial divided_by(const Monomial& by) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    /// Structural order (plain lex on exponent vectors), for container keys.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class MonomialOrder {
 public:
    virtual ~MonomialOrder() = default;
    /// <0 if a smaller, 0 if equal, >0 if a larger.
    virtual int cmp(const Monomial& a, const Monomial& b) const = 0;
    virtual std::string name() const = 0;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

/// Graded reverse lexicographic with ascending variable indices: higher total
/// degree wins; on equal degree the first differing exponent (scanning from
/// variable 0) decides, smaller exponent meaning larger monomial.
class GrevlexOrder final : public MonomialOrder {
 public:
    int cmp(const Monomial& a, const Monomial& b) const override;
    std::string name() const override { return "grevlex"; }
};

/// Product order eliminating one variable: its exponent is compared first
/// (larger power = larger monomial), ties fall back to grevlex on the rest.
class EliminationOrder final : public MonomialOrder {
 public:
    explicit EliminationOrder(int eliminated_var) : var_(eliminated_var) {}
    int cmp(const Monomial& a, const Monomial& b) const override;
    std::string name() const override { return "eliminate(" + std::to_string(var_) + ")+grevlex"; }
    int eliminated_var() const { return var_; }

 private:
    int var_;
};

}  // namespace omr
