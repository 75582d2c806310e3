#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "omr/determinant.hpp"
#include "omr/fixtures.hpp"
#include "omr/matrix.hpp"
#include "omr/naturality.hpp"
#include "omr/transforms.hpp"

using namespace omr;

namespace {

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

RatMat rnd_mat(std::mt19937& rng, int n) {
    RatMat u(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i, j) = rnd_rat(rng);
    return u;
}

// independent determinant: recursive cofactor expansion along the first row
Rat cofactor_det(const RatMat& u) {
    size_t n = u.rows();
    if (n == 1) return u(0, 0);
    Rat acc;
    for (size_t c = 0; c < n; ++c) {
        RatMat minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = u(i, j);
            }
        Rat term = u(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

AlgebraSpec diag3() {
    std::vector<std::vector<std::vector<Rat>>> c(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    for (int i = 0; i < 3; ++i) c[i][i][i] = Rat(1);
    return AlgebraSpec("diag3", 3, c);
}

TensorVector rnd_tensor(std::mt19937& rng, int dim, int deg, int entries) {
    std::uniform_int_distribution<int> pick(1, dim);
    TensorVector w = TensorVector::zero(dim, deg);
    for (int k = 0; k < entries; ++k) {
        MultiIndex idx(static_cast<size_t>(deg));
        for (auto& v : idx) v = pick(rng);
        w.add(idx, rnd_rat(rng));
    }
    return w;
}

SymTensor rnd_sym(std::mt19937& rng, int dim, int deg) {
    SymTensor w = SymTensor::zero(dim, deg);
    for (const MultiIndex& mu : multiset_basis(dim, deg)) w.add(mu, rnd_rat(rng));
    return w;
}

}  // namespace

TEST_CASE("determinant data in dimension one") {
    DetData dd = build_det_data(fixture_idem1(), fixture_nil1());
    CHECK(dd.m == 1);
    CHECK(dd.src_name == "idem1");
    CHECK(dd.dst_name == "nil1");
    CHECK(dd.domain_alt == TensorVector::basis(1, {1}));
    CHECK(dd.codomain_alt == TensorVector::basis(1, {1}));
    CHECK(dd.det_poly == poly_parse("1 * l[1][1]", 1, 1));
    CHECK(dd.det_tensor == TensorVector::basis(1, {1}));
    dd.check_pair(fixture_idem1(), fixture_nil1());
    CHECK_THROWS_AS(dd.check_pair(fixture_nil1(), fixture_idem1()), std::invalid_argument);
}

TEST_CASE("determinant data in dimension two") {
    DetData dd = build_det_data(fixture_ax(), fixture_by());
    CHECK(dd.m == 2);
    TensorVector e = TensorVector::basis(2, {1, 2}) - TensorVector::basis(2, {2, 1});
    CHECK(dd.domain_alt == e);
    CHECK(dd.codomain_alt == e);
    CHECK(dd.det_poly == poly_parse("1 * l[1][1] * l[2][2] - 1 * l[1][2] * l[2][1]", 2, 2));
    // the tensor is the signed sum over row selections: one term per
    // permutation, so it is supported off the symmetric subspace
    CHECK(dd.det_tensor.dim == 4);
    CHECK(dd.det_tensor.deg == 2);
    CHECK(dd.det_tensor.coord({1, 4}) == Rat(1));   // l_1^1 (x) l_2^2
    CHECK(dd.det_tensor.coord({3, 2}) == Rat(-1));  // l_2^1 (x) l_1^2
    CHECK(dd.det_tensor.coords.size() == 2);

    CHECK_THROWS_AS(build_det_data(fixture_idem1(), fixture_ax()), std::invalid_argument);
}

TEST_CASE("the polynomial evaluates to the determinant") {
    std::mt19937 rng(140);
    std::vector<std::pair<AlgebraSpec, AlgebraSpec>> pairs = {
        {fixture_idem1(), fixture_nil1()},
        {fixture_ax(), fixture_by()},
        {diag3(), diag3()},
    };
    for (const auto& [a, b] : pairs) {
        DetData dd = build_det_data(a, b);
        for (int trial = 0; trial < 20; ++trial) {
            RatMat u = rnd_mat(rng, dd.m);
            CHECK(evaluate(dd.det_poly, hom_values(u)) == cofactor_det(u));
        }
        // pairing the symmetric power of a matrix against the polynomial is
        // another route to the same number
        RatMat u = rnd_mat(rng, dd.m);
        CHECK(sym_pairing(dd.det_poly, sym_power(hom_values(u), dd.m)) == cofactor_det(u));
    }
}

TEST_CASE("alternating tensors and the antisymmetrizer") {
    DetData dd = build_det_data(fixture_ax(), fixture_by());
    // E is fixed by the signed symmetrization and spans its image
    CHECK(antisymmetrize(2, dd.domain_alt) == Rat(2) * dd.domain_alt);
    RatMat dense = to_dense(antisymmetrize_map(2, 2));
    CHECK(rank(dense) == 1);
    // a diagonal tensor dies
    CHECK(antisymmetrize(2, TensorVector::basis(2, {1, 1})).is_zero());
}

TEST_CASE("tensors over U act equivariantly") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        TensorVector w = rnd_tensor(rng, 4, 2, 6);
        Permutation swap(Surjection(2, {2, 1}));
        TensorMap lhs = kronecker_map(apply_permutation(swap, w), 2, 2);
        TensorMap rhs = compose(permutation_map(swap, 2),
                                compose(kronecker_map(w, 2, 2), permutation_map(swap, 2)));
        CHECK(lhs == rhs);  // the swap is its own inverse
    }
}

TEST_CASE("pairing identity on plain tensors") {
    std::mt19937 rng(8128);
    DetData dd = build_det_data(fixture_ax(), fixture_by());
    for (int r = 1; r <= 2; ++r) {
        for (int trial = 0; trial < 5; ++trial) {
            TensorVector w = rnd_tensor(rng, 4, 2 * r, 8);
            PairingCheck pc = check_asym_pairing(dd, w, r);
            CHECK(pc.pass);
            CHECK(pc.left == pc.right);
        }
    }
    DetData one = build_det_data(fixture_idem1(), fixture_nil1());
    for (int trial = 0; trial < 3; ++trial)
        CHECK(check_asym_pairing(one, rnd_tensor(rng, 1, 2, 2), 2).pass);
}

TEST_CASE("pairing identity on symmetric tensors") {
    std::mt19937 rng(31415);
    DetData dd = build_det_data(fixture_ax(), fixture_by());
    for (int r = 1; r <= 2; ++r) {
        for (int trial = 0; trial < 4; ++trial) {
            SymTensor w = rnd_sym(rng, 4, 2 * r);
            SymCheck sc = check_sym_pairing(dd, w, r);
            CHECK(sc.pass);
            CHECK(sc.left == sc.right);
            CHECK(sc.scalar == sym_pairing(dd.det_poly.pow(r), w));
            // the right side really is scalar * F^{(x)r}
            CHECK(sc.right == sc.scalar * tensor_power(dd.codomain_alt, r));
        }
    }
}

TEST_CASE("morphism identity for induced families") {
    std::mt19937 rng(2025);
    DetData dd = build_det_data(fixture_ax(), fixture_ax());
    for (int r = 1; r <= 2; ++r) {
        RatMat u = rnd_mat(rng, 2);
        MorphismCheck mc = check_morphism_identity(dd, induced_morphism(u, 2 * r), r);
        CHECK(mc.pass);
        Rat det = cofactor_det(u);
        Rat expect(1);
        for (int k = 0; k < r; ++k) expect *= det;
        CHECK(mc.scalar == expect);
        CHECK(mc.left == mc.right);
    }
}

TEST_CASE("morphism identity for any equivariant top level") {
    // the identity is a theorem for every equivariant family, not only the
    // multiplicative ones: pin the top level to a random symmetric tensor
    std::mt19937 rng(604);
    DetData dd = build_det_data(fixture_ax(), fixture_by());
    for (int r = 1; r <= 2; ++r) {
        TruncatedMorphism s = TruncatedMorphism::zero(2, 2, 2 * r);
        for (int n = 0; n <= 2 * r; ++n)
            s.level(n) = sym_to_map(rnd_sym(rng, 4, n), 2, 2);
        MorphismCheck mc = check_morphism_identity(dd, s, r);
        CHECK(mc.pass);
        CHECK(mc.left == mc.right);
        PolyFunctional phi = morphism_functional(s, 2 * r);
        CHECK(mc.scalar == phi.apply(dd.det_poly.pow(r)));
    }
}

TEST_CASE("morphism identity values for the sign morphism") {
    DetData dd = build_det_data(fixture_ax(), fixture_by());

    MorphismCheck r1 = check_morphism_identity(dd, counterexample_morphism(2), 1);
    CHECK(r1.pass);
    CHECK(r1.scalar == Rat(1));  // mixed-weight entries carry sign +1

    MorphismCheck r2 = check_morphism_identity(dd, counterexample_morphism(4), 2);
    CHECK(r2.pass);
    CHECK(r2.scalar == Rat(-1));  // the square of the determinant picks up weight 2

    // levels must reach m * r
    CHECK_THROWS_AS(check_morphism_identity(dd, counterexample_morphism(2), 2),
                    std::out_of_range);
}
