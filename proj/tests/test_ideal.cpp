#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "omr/fixtures.hpp"
#include "omr/groebner.hpp"
#include "omr/ideal.hpp"
#include "omr/matrix.hpp"
#include "omr/tensor.hpp"

using namespace omr;

namespace {

std::vector<AlgebraSpec> fixtures() {
    return {fixture_idem1(), fixture_nil1(), fixture_ax(), fixture_by()};
}

struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        if (a.nv != b.nv) return a.nv < b.nv;
        return a.terms < b.terms;
    }
};
using PolyBag = std::multiset<Polynomial, PolyLess>;

// Points as plain value vectors, for order-insensitive set comparison.
std::set<std::vector<uint32_t>> point_set(const std::vector<FpMat>& pts) {
    std::set<std::vector<uint32_t>> s;
    for (const FpMat& m : pts) s.insert(m.vals);
    return s;
}

}  // namespace

TEST_CASE("worked generator sets of the one-dimensional pairs") {
    AlgebraSpec a1 = fixture_idem1(), n1 = fixture_nil1();
    Polynomial l = Polynomial::variable(1, 0);

    IdealGens aa = multiplicativity_ideal(a1, a1);
    CHECK(aa.dA == 1);
    CHECK(aa.dB == 1);
    REQUIRE(aa.gens.size() == 1);
    CHECK(aa.gens[0] == l * l - l);

    REQUIRE(multiplicativity_ideal(a1, n1).gens.size() == 1);
    CHECK(multiplicativity_ideal(a1, n1).gens[0] == -l);
    REQUIRE(multiplicativity_ideal(n1, a1).gens.size() == 1);
    CHECK(multiplicativity_ideal(n1, a1).gens[0] == l * l);
    CHECK(multiplicativity_ideal(n1, n1).gens.empty());
}

TEST_CASE("generators of the two-dimensional pair") {
    IdealGens ideal = multiplicativity_ideal(fixture_ax(), fixture_by());
    CHECK(ideal.nvars() == 4);
    REQUIRE(ideal.gens.size() == 6);
    // (i, j) pairs in order (1,1), (1,2), (2,2); target coordinate k inner
    const char* expected[6] = {
        "1 * l[1][1]^2 - 1 * l[1][2]^2 - 1 * l[1][1]",
        "2 * l[1][1] * l[1][2] - 1 * l[1][2]",
        "1 * l[1][1] * l[2][1] - 1 * l[1][2] * l[2][2] - 1 * l[2][1]",
        "1 * l[1][1] * l[2][2] + 1 * l[1][2] * l[2][1] - 1 * l[2][2]",
        "1 * l[2][1]^2 - 1 * l[2][2]^2 - 1 * l[1][1]",
        "2 * l[2][1] * l[2][2] - 1 * l[1][2]",
    };
    for (int g = 0; g < 6; ++g) CHECK(ideal.gens[g] == poly_parse(expected[g], 2, 2));
}

TEST_CASE("truncated spans") {
    AlgebraSpec a1 = fixture_idem1(), n1 = fixture_nil1();
    Polynomial l = Polynomial::variable(1, 0);

    CHECK(truncated_span(a1, n1, 0).empty());
    CHECK(truncated_span(a1, n1, 1).empty());

    std::vector<Polynomial> s2 = truncated_span(a1, n1, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == -l);

    std::vector<Polynomial> s3 = truncated_span(a1, n1, 3);
    REQUIRE(s3.size() == 2);
    CHECK(std::count(s3.begin(), s3.end(), -l) == 1);
    CHECK(std::count(s3.begin(), s3.end(), -(l * l)) == 1);

    CHECK(truncated_span(n1, n1, 4).empty());  // zero ideal stays zero
}

TEST_CASE("truncated span matches an independent reconstruction") {
    // The list is {g * m : g generator, deg m <= N-2}; rebuild it here from
    // the generators and plain polynomial multiplication.
    for (const AlgebraSpec& a : fixtures()) {
        for (const AlgebraSpec& b : fixtures()) {
            if (a.dim() * b.dim() > 2) continue;  // keep the dense ranks small
            int N = 4;
            int nv = a.dim() * b.dim();
            IdealGens ideal = multiplicativity_ideal(a, b);
            GroebnerBasis gb = buchberger(nv, ideal.gens);
            std::vector<Polynomial> span = truncated_span(a, b, N);

            std::vector<Monomial> mults;  // all monomials of degree <= N-2
            if (nv == 1) {
                for (int d = 0; d <= N - 2; ++d) mults.push_back(Monomial(std::vector<int>{d}));
            } else {
                for (int d0 = 0; d0 <= N - 2; ++d0)
                    for (int d1 = 0; d0 + d1 <= N - 2; ++d1)
                        mults.push_back(Monomial(std::vector<int>{d0, d1}));
            }
            PolyBag expected;
            for (const Polynomial& g : ideal.gens)
                for (const Monomial& m : mults) {
                    Polynomial f(nv);
                    f.add_term(m, Rat(1));
                    expected.insert(g * f);
                }
            CHECK(PolyBag(span.begin(), span.end()) == expected);

            // containment in the ideal, and the degree cap (generators are
            // at most quadratic)
            for (const Polynomial& f : span) {
                CHECK(f.degree() <= N);
                CHECK(normal_form(f, gb).is_zero());
            }
        }
    }
}

TEST_CASE("span rank is bounded by the ideal slice, with equality when it fills it") {
    // rank{g * m} <= dim(I intersect deg<=N) = #monomials - rank{NF(monomial)};
    // for the idempotent line the quadratic generator fills the slice.
    AlgebraSpec a1 = fixture_idem1();
    int N = 4;
    GroebnerBasis gb = buchberger(1, multiplicativity_ideal(a1, a1).gens);
    std::vector<Polynomial> span = truncated_span(a1, a1, N);
    std::vector<Monomial> mons;
    for (int d = 0; d <= N; ++d) mons.push_back(Monomial(std::vector<int>{d}));
    RatMat span_mat(span.size(), mons.size());
    for (size_t r = 0; r < span.size(); ++r)
        for (size_t c = 0; c < mons.size(); ++c) span_mat(r, c) = span[r].coeff(mons[c]);
    RatMat nf_mat(mons.size(), mons.size());
    for (size_t r = 0; r < mons.size(); ++r) {
        Polynomial f(1);
        f.add_term(mons[r], Rat(1));
        Polynomial rem = normal_form(f, gb);
        for (size_t c = 0; c < mons.size(); ++c) nf_mat(r, c) = rem.coeff(mons[c]);
    }
    CHECK(rank(span_mat) == 3);
    CHECK(rank(nf_mat) == 2);  // quotient basis {1, l}
    CHECK(rank(span_mat) == mons.size() - rank(nf_mat));
}

TEST_CASE("variety examples over small prime fields") {
    AlgebraSpec a1 = fixture_idem1(), n1 = fixture_nil1();

    std::vector<FpMat> aa5 = variety_points(a1, a1, 5);
    REQUIRE(aa5.size() == 2);  // l^2 = l: the two idempotent scalars
    CHECK(aa5[0].vals == std::vector<uint32_t>{0});
    CHECK(aa5[1].vals == std::vector<uint32_t>{1});
    for (const FpMat& m : aa5) {
        CHECK(m.p == 5);
        CHECK(m.rows == 1);
        CHECK(m.cols == 1);
    }

    CHECK(variety_points(n1, n1, 3).size() == 3);  // zero ideal: every scalar
    std::vector<FpMat> an7 = variety_points(a1, n1, 7);
    REQUIRE(an7.size() == 1);
    CHECK(an7[0].vals == std::vector<uint32_t>{0});

    // two-dimensional pair: exactly the rank-deficient solutions mod 7
    std::vector<FpMat> xy7 = variety_points(fixture_ax(), fixture_by(), 7);
    CHECK(xy7.size() == 3);
    for (const FpMat& m : xy7) CHECK(det_mod(m).value() == 0);
    // ... and invertible ones exist mod 5, where -1 is a square
    std::vector<FpMat> xy5 = variety_points(fixture_ax(), fixture_by(), 5);
    bool any_invertible = false;
    for (const FpMat& m : xy5) any_invertible |= det_mod(m).value() != 0;
    CHECK(any_invertible);
}

TEST_CASE("polynomial route and direct route enumerate the same set") {
    for (const AlgebraSpec& a : fixtures()) {
        for (const AlgebraSpec& b : fixtures()) {
            if (a.dim() * b.dim() > 4) continue;
            for (uint32_t p : {3u, 5u, 7u}) {
                std::vector<FpMat> via_ideal = variety_points(a, b, p);
                std::vector<FpMat> direct = homomorphism_points(a, b, p);
                CHECK(point_set(via_ideal) == point_set(direct));
                CHECK(via_ideal == variety_points_serial(a, b, p));
            }
        }
    }
}

TEST_CASE("membership agrees with evaluation mod p") {
    AlgebraSpec ax = fixture_ax(), by = fixture_by();
    IdealGens ideal = multiplicativity_ideal(ax, by);
    uint32_t p = 5;
    std::vector<FpMat> pts = variety_points(ax, by, p);
    REQUIRE(!pts.empty());
    for (const FpMat& m : pts) {
        // variable (i, j) is entry (j-1, i-1) of the matrix
        std::vector<Fp> vals;
        for (int i = 0; i < m.cols; ++i)
            for (int j = 0; j < m.rows; ++j) vals.push_back(Fp(m.at(j, i), p));
        for (const Polynomial& g : ideal.gens) CHECK(evaluate_mod(g, vals, p).value() == 0);
        CHECK(is_homomorphism_mod(ax, by, m));
    }
}

TEST_CASE("determinants over F_p") {
    FpMat u;
    u.p = 7;
    u.rows = u.cols = 2;
    u.vals = {1, 2, 3, 4};  // det = -2 = 5 mod 7
    CHECK(det_mod(u).value() == 5);
    u.vals = {2, 4, 1, 2};  // singular
    CHECK(det_mod(u).value() == 0);
    FpMat one;
    one.p = 3;
    one.rows = one.cols = 1;
    one.vals = {2};
    CHECK(det_mod(one).value() == 2);
}

TEST_CASE("enumeration budget is enforced") {
    // a 3-dimensional square pair has 9 variables; 7^9 > 10^7
    std::vector<std::vector<std::vector<Rat>>> c(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    for (int i = 0; i < 3; ++i) c[i][i][i] = Rat(1);
    AlgebraSpec diag("diag3", 3, c);
    REQUIRE(diag.validate().pass());
    CHECK_THROWS_AS(variety_points(diag, diag, 7), BudgetError);
    CHECK_THROWS_AS(homomorphism_points(diag, diag, 7), BudgetError);
}
