#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "omr/fixtures.hpp"
#include "omr/json_io.hpp"
#include "omr/loday.hpp"

using namespace omr;

namespace {

std::vector<AlgebraSpec> fixtures() {
    return {fixture_idem1(), fixture_nil1(), fixture_ax(), fixture_by()};
}

}  // namespace

TEST_CASE("identities go to identities") {
    for (const AlgebraSpec& a : fixtures())
        for (int n = 1; n <= 3; ++n)
            CHECK(loday_map(a, Surjection::identity(n)) == TensorMap::identity(a.dim(), n));
}

TEST_CASE("merge maps multiply along fibers") {
    AlgebraSpec ax = fixture_ax();
    // 2 -> 1: plain multiplication; with basis (1, X) and X^2 = 1 the image
    // of e_{i} (x) e_{j} is e_1 when i == j and e_2 otherwise
    TensorMap mul = loday_map(ax, Surjection(1, {1, 1}));
    CHECK(mul.src_deg == 2);
    CHECK(mul.dst_deg == 1);
    CHECK(mul.entry({1}, {1, 1}) == Rat(1));
    CHECK(mul.entry({1}, {2, 2}) == Rat(1));
    CHECK(mul.entry({2}, {1, 2}) == Rat(1));
    CHECK(mul.entry({2}, {2, 1}) == Rat(1));
    CHECK(mul.entries.size() == 4);

    // 3 -> 2 merging the first two factors: X (x) 1 (x) X -> X (x) X
    TensorMap m = loday_map(ax, Surjection(2, {1, 1, 2}));
    TensorVector v = TensorVector::basis(2, {2, 1, 2});
    CHECK(m.apply(v) == TensorVector::basis(2, {2, 2}));
    // ... and X (x) X (x) X -> 1 (x) X
    CHECK(m.apply(TensorVector::basis(2, {2, 2, 2})) == TensorVector::basis(2, {1, 2}));

    // nilpotent line: e (x) e -> e^2 = 0
    TensorMap nil = loday_map(fixture_nil1(), Surjection(1, {1, 1}));
    CHECK(nil.is_zero());
}

TEST_CASE("bijections act by factor permutation") {
    AlgebraSpec ax = fixture_ax();
    for (const Surjection& g : enumerate_surjections(3, 3)) {
        Permutation p(g);
        CHECK(loday_map(ax, g) == permutation_map(p, ax.dim()));
    }
}

TEST_CASE("functor law on all composable pairs with small domain") {
    int max_domain = 3;
    for (const AlgebraSpec& a : fixtures()) {
        int pairs = 0;
        for (int m = 1; m <= max_domain; ++m)
            for (int k = 1; k <= m; ++k)
                for (const Surjection& g : enumerate_surjections(m, k))
                    for (int n = 1; n <= k; ++n)
                        for (const Surjection& h : enumerate_surjections(k, n)) {
                            FunctorCheck fc = functor_composition_check(a, h, g);
                            CHECK(fc.pass);
                            ++pairs;
                        }
        CHECK(pairs == 1 + 7 + 97);  // composable pairs with domain <= 3
    }
}

TEST_CASE("functor law detects a defective multiplication") {
    // a non-commutative table: e1 e2 = e1 but e2 e1 = 0; swapping before
    // merging then disagrees with merging directly
    std::vector<std::vector<std::vector<Rat>>> c(
        2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    c[0][1][0] = Rat(1);  // e1 e2 = e1
    AlgebraSpec bad("bad", 2, c);
    CHECK_FALSE(bad.validate().commutative);
    Surjection swap(2, {2, 1}), merge(1, {1, 1});
    FunctorCheck fc = functor_composition_check(bad, merge, swap);
    CHECK_FALSE(fc.pass);
    REQUIRE(fc.where.has_value());
    // the witness entry really differs between the two routes
    TensorMap direct = loday_map(bad, compose(merge, swap));
    TensorMap composite = compose(loday_map(bad, merge), loday_map(bad, swap));
    auto [dst, src] = *fc.where;
    CHECK(fc.direct_value == direct.entry(dst, src));
    CHECK(fc.composite_value == composite.entry(dst, src));
    CHECK(fc.direct_value != fc.composite_value);
}

TEST_CASE("induced morphisms stack Kronecker powers") {
    RatMat u(2, 2);
    u(0, 0) = Rat(1);
    u(0, 1) = Rat(2);
    u(1, 0) = Rat(-1, 3);
    u(1, 1) = Rat(0);
    TruncatedMorphism t = induced_morphism(u, 3);
    CHECK(t.src_dim == 2);
    CHECK(t.dst_dim == 2);
    CHECK(t.level_bound == 3);
    t.check_shape();
    for (int n = 0; n <= 3; ++n) CHECK(t.level(n) == kronecker_power(u, n));
    CHECK(t.level(0).entry({}, {}) == Rat(1));

    RatMat rect(2, 1);  // a map from a line into the plane
    rect(0, 0) = Rat(1, 2);
    rect(1, 0) = Rat(1, 2);
    TruncatedMorphism tr = induced_morphism(rect, 2);
    CHECK(tr.src_dim == 1);
    CHECK(tr.dst_dim == 2);
    tr.check_shape();
    CHECK(tr.level(1) == map_from_matrix(rect));
    CHECK(tr.level(2) == kronecker_power(rect, 2));
}

TEST_CASE("naturality squares for induced morphisms") {
    AlgebraSpec a1 = fixture_idem1(), ax = fixture_ax();

    // e -> (1 + X)/2 is idempotent in the plane, hence a homomorphism:
    // T_u is natural at every surjection
    RatMat u(2, 1);
    u(0, 0) = Rat(1, 2);
    u(1, 0) = Rat(1, 2);
    TruncatedMorphism t = induced_morphism(u, 3);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (const Surjection& h : enumerate_surjections(m, n))
                CHECK(naturality_square_holds(a1, ax, t, h));

    // doubling the idempotent line is not multiplicative; the merge square
    // breaks
    RatMat two(1, 1);
    two(0, 0) = Rat(2);
    TruncatedMorphism d = induced_morphism(two, 2);
    CHECK_FALSE(naturality_square_holds(a1, a1, d, Surjection(1, {1, 1})));
    // bijections never see the failure
    CHECK(naturality_square_holds(a1, a1, d, Surjection::identity(2)));

    // the identity on a fixture is natural
    TruncatedMorphism idm = induced_morphism(RatMat::identity(2), 3);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (const Surjection& h : enumerate_surjections(m, n))
                CHECK(naturality_square_holds(ax, ax, idm, h));
}

TEST_CASE("truncated morphism shape and level access") {
    TruncatedMorphism z = TruncatedMorphism::zero(2, 3, 2);
    CHECK(z.levels.size() == 3);
    z.check_shape();
    for (int n = 0; n <= 2; ++n) {
        CHECK(z.level(n).is_zero());
        CHECK(z.level(n).src_deg == n);
        CHECK(z.level(n).dst_deg == n);
        CHECK(z.level(n).src_dim == 2);
        CHECK(z.level(n).dst_dim == 3);
    }
    CHECK_THROWS_AS(z.level(3), std::out_of_range);
    CHECK_THROWS_AS(z.level(-1), std::out_of_range);

    TruncatedMorphism bad = z;
    bad.levels[1] = TensorMap::zero(2, 2, 3, 1);  // wrong source degree
    CHECK_THROWS_AS(bad.check_shape(), std::invalid_argument);
    TruncatedMorphism short_list = z;
    short_list.levels.pop_back();
    CHECK_THROWS_AS(short_list.check_shape(), std::invalid_argument);
}

TEST_CASE("morphism serialization round-trips") {
    RatMat u(2, 2);
    u(0, 0) = Rat(1);
    u(0, 1) = Rat(-3, 7);
    u(1, 0) = Rat(0);
    u(1, 1) = Rat(5, 2);
    TruncatedMorphism t = induced_morphism(u, 3);

    std::string text = morphism_to_json_text(t);
    CHECK(morphism_from_json_text(text) == t);
    CHECK(morphism_to_json_text(morphism_from_json_text(text)) == text);

    std::string path =
        (std::filesystem::temp_directory_path() / "omr_morphism_roundtrip.json").string();
    write_morphism_file(t, path);
    CHECK(read_morphism_file(path) == t);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_morphism_file("/nonexistent/morphism.json"), std::runtime_error);
    CHECK_THROWS_AS(morphism_from_json_text("{}"), std::invalid_argument);
    CHECK_THROWS_AS(morphism_from_json_text("not json"), std::invalid_argument);
}
