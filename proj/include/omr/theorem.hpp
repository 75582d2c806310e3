#pragma once

#include <optional>

#include "omr/determinant.hpp"
#include "omr/groebner.hpp"
#include "omr/ideal.hpp"
#include "omr/loday.hpp"
#include "omr/naturality.hpp"

namespace omr {

struct PrimeEvidence {
    uint32_t p = 2;
    std::vector<FpMat> points;          // the full vanishing set = homomorphism set
    std::vector<uint32_t> determinants; // one per point
    bool some_invertible = false;
};

/// The (sE) contradiction walked through on a supplied morphism: if the
/// morphism is natural, its top-level map kills the r-th power of the
/// alternating tensor, which is nonzero — so no natural morphism can be
/// invertible at that level.
struct ObstructionDemo {
    int r = 1;
    int level = 1;  // m * r
    bool morphism_natural = false;
    std::vector<int> non_invertible_levels;
    Rat functional_value;          // pairing of the morphism functional with det_poly^r
    bool top_level_kills_alt = false;
    bool alt_power_nonzero = false;
};

struct TheoremReport {
    std::string src_name, dst_name;
    int dim = 1;
    int N = 1;
    int r_max = 10;

    GroebnerBasis gb;                  // of the multiplicativity ideal, grevlex
    Polynomial det_poly;
    bool radical = false;              // det_poly in the radical of the ideal
    std::optional<int> power;          // smallest r with det_poly^r in the ideal
    size_t hom_space_dim = 0;          // truncated natural-morphism space at N
    bool level1_forced_zero = false;   // every solution has s_1 = 0
    std::vector<PrimeEvidence> primes;
    bool identity_is_homomorphism = false;  // exact witness when constants agree
    std::optional<ObstructionDemo> obstruction;

    std::string verdict() const;
};

/// The full certificate chain on a pair of equal-dimensional validated
/// algebras. When a morphism is supplied and the radical test holds, the
/// report walks the explicit obstruction.
TheoremReport theorem_report(const AlgebraSpec& a, const AlgebraSpec& b, int N, int r_max,
                             const std::vector<uint32_t>& primes,
                             const std::optional<TruncatedMorphism>& morphism = std::nullopt);

/// Structured report, JSON syntax, all scalars exact; deterministic bytes.
std::string report_json(const TheoremReport& r);
/// Human-readable digest of the same data.
std::string report_summary(const TheoremReport& r);

}  // namespace omr
