#pragma once

#include <map>
#include <optional>
#include <string>

#include "omr/monomial.hpp"
#include "omr/primefield.hpp"
#include "omr/rational.hpp"

namespace omr {

/// Exact multivariate polynomial; no zero coefficients are stored, so map
/// equality is value equality. Term keys use the structural Monomial order;
/// an active MonomialOrder is supplied where leading terms matter.
struct Polynomial {
    int nv = 0;
    std::map<Monomial, Rat> terms;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nv(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rat& c);
    /// The variable with 0-based index v.
    static Polynomial variable(int nvars, int v);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rat& f);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rat& f, Polynomial p) { return p *= f; }
    Polynomial pow(int r) const;

    Polynomial homogeneous_part(int d) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
};

/// Largest term under the order; nullptr for the zero polynomial.
const std::pair<const Monomial, Rat>* leading_term(const Polynomial& p, const MonomialOrder& ord);

/// Extend/restrict the variable count (new variables get exponent zero;
/// dropping a variable requires it to be absent from every term).
Polynomial with_nvars(const Polynomial& p, int nvars);

/// Text format over the Hom(A,B) variable grid: terms "c * l[i][j]^e * ...",
/// joined by " + " / " - ", descending grevlex; "0" for the zero polynomial.
/// Variable v (0-based) is l[i][j] with v + 1 = (i-1)*dB + j.
std::string poly_to_string(const Polynomial& p, int dA, int dB);
Polynomial poly_parse(const std::string& text, int dA, int dB);

/// Values indexed by 0-based variable.
Rat evaluate(const Polynomial& p, const std::vector<Rat>& vals);
/// Coefficients reduced mod p; throws if a denominator vanishes mod p.
Fp evaluate_mod(const Polynomial& p, const std::vector<Fp>& vals, uint32_t prime);

Fp reduce_mod(const Rat& x, uint32_t prime);

}  // namespace omr
