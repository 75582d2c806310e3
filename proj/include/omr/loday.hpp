#pragma once

#include <optional>

#include "omr/algebra.hpp"
#include "omr/surjection.hpp"
#include "omr/tensor.hpp"

namespace omr {

/// A family of maps s_n : A^{(x)n} -> B^{(x)n} for 0 <= n <= level_bound,
/// the finite stand-in for a morphism of functors.
struct TruncatedMorphism {
    int src_dim = 1;
    int dst_dim = 1;
    int level_bound = 0;
    std::vector<TensorMap> levels;  // levels[n] has degree n on both sides

    static TruncatedMorphism zero(int src_dim, int dst_dim, int level_bound);

    const TensorMap& level(int n) const;
    TensorMap& level(int n);
    /// Shape coherence of every level (dims and degrees).
    void check_shape() const;

    friend bool operator==(const TruncatedMorphism& a, const TruncatedMorphism& b) = default;
};

/// Value of the functor on a surjection h: m -> n: the map
/// A^{(x)m} -> A^{(x)n} sending x_1(x)...(x)x_m to y_1(x)...(x)y_n with
/// y_j the product of the x_i over the fiber of j (empty product = 1 needs
/// a unit, which basis algebras here do not assume: fibers are nonempty
/// because h is surjective).
TensorMap loday_map(const AlgebraSpec& a, const Surjection& h);

struct FunctorCheck {
    bool pass = true;
    // First differing entry when composition fails, with both values.
    std::optional<std::pair<MultiIndex, MultiIndex>> where;
    Rat composite_value;
    Rat direct_value;
};

/// L(h o g) == L(h) o L(g), exact, with a witness entry on failure.
FunctorCheck functor_composition_check(const AlgebraSpec& a, const Surjection& h,
                                       const Surjection& g);

/// The morphism T_u induced by a linear map u (matrix dim B x dim A):
/// level n is the n-th Kronecker power; level 0 is the identity on k.
TruncatedMorphism induced_morphism(const RatMat& u, int level_bound);

/// Both squares of the naturality condition for one surjection:
/// L_B(h) o s_m == s_n o L_A(h).
bool naturality_square_holds(const AlgebraSpec& a, const AlgebraSpec& b,
                             const TruncatedMorphism& s, const Surjection& h);

}  // namespace omr
