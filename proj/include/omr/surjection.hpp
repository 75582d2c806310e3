#pragma once

#include <optional>
#include <string>
#include <vector>

namespace omr {

/// Surjective map {1,...,m} -> {1,...,n}, stored as the image array
/// images[i-1] = h(i). Surjectivity is enforced at construction;
/// m = 0 forces n = 0 (the empty map is the only morphism at 0).
class Surjection {
public:
    Surjection(int codomain_size, std::vector<int> images);

    static Surjection identity(int n);
    int domain_size() const { return static_cast<int>(images_.size()); }
    int codomain_size() const { return codomain_; }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    std::vector<int> fiber(int j) const;  // ascending preimage of j
    bool is_bijective() const { return domain_size() == codomain_; }

    /// "1,1,2" (empty string for the map at 0)
    std::string str() const;
    static Surjection parse(const std::string& s, int codomain_size);
    /// Codomain inferred as max image (0 for the empty string).
    static Surjection parse(const std::string& s);

    friend bool operator==(const Surjection& a, const Surjection& b) = default;

private:
    int codomain_;
    std::vector<int> images_;
};

/// Bijective surjection with sign and inverse.
class Permutation {
public:
    explicit Permutation(const Surjection& s);
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    int sign() const;
    bool is_identity() const;
    Surjection as_surjection() const { return Surjection(size(), images_); }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> images_;
};

/// h after g: (h o g)(i) = h(g(i)). Throws on size mismatch.
Surjection compose(const Surjection& h, const Surjection& g);
Permutation compose(const Permutation& h, const Permutation& g);

/// All surjections m -> n in lexicographic image-array order.
/// Empty when none exist (m < n, or n = 0 < m).
std::vector<Surjection> enumerate_surjections(int m, int n);

std::vector<Permutation> enumerate_permutations(int n);

/// The generator merging the first two elements: n+2 -> n+1,
/// 1,2 -> 1 and i -> i-1 for i > 2.
Surjection merge_map(int n);

/// One factor of a surjection decomposition: either a permutation, or a
/// single-merge map materialized together with its witness
/// factor = outer o merge_map(tau_index) o inner.
struct GeneratorFactor {
    Surjection factor;
    bool is_merge;
    std::optional<Permutation> inner;   // set when is_merge
    std::optional<Permutation> outer;   // set when is_merge
    int tau_index = -1;                 // merge_map index when is_merge
};

/// Factors h into permutations and permutation-conjugated merges so that
/// composing the returned sequence left-to-right (first element applied
/// last) reproduces h exactly. Canonical: fibers ordered by minimal
/// element, first fiber of size >= 2 loses its two smallest elements to a
/// merge; a final non-identity permutation heads the list.
std::vector<GeneratorFactor> decompose(const Surjection& h);

/// Composes a decomposition back into a single surjection.
Surjection recompose(const std::vector<GeneratorFactor>& factors);

}  // namespace omr
