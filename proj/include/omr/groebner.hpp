#pragma once

#include <memory>
#include <optional>

#include "omr/polynomial.hpp"

namespace omr {

/// Reduced Groebner basis: monic, mutually reduced, sorted with the largest
/// leading monomial first. The zero ideal has an empty basis.
struct GroebnerBasis {
    int nv = 0;
    std::shared_ptr<const MonomialOrder> order;
    std::vector<Polynomial> polys;

    /// True iff the basis is { nonzero constant }, i.e. the whole ring.
    bool contains_unit() const;
};

/// Buchberger with the product and chain criteria; normal selection strategy
/// (minimal lcm degree, then lexicographic tie-break). Deterministic.
GroebnerBasis buchberger(int nvars, const std::vector<Polynomial>& gens,
                         std::shared_ptr<const MonomialOrder> order);

/// Convenience: grevlex.
GroebnerBasis buchberger(int nvars, const std::vector<Polynomial>& gens);

/// Fully reduced remainder; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// f in the radical of <gens>, decided by the Rabinowitsch trick: adjoin t
/// and test whether <gens, 1 - t f> is the whole ring. f = 0 is always a
/// member.
bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens);

/// Smallest r <= r_max with normal_form(f^r) = 0, if any.
std::optional<int> min_power(const Polynomial& f, const GroebnerBasis& gb, int r_max);

}  // namespace omr
