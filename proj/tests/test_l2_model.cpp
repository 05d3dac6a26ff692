#include "stratal/chains.hpp"
#include "stratal/complex.hpp"
#include "stratal/corpus.hpp"
#include "stratal/errors.hpp"
#include "stratal/l2_model.hpp"

#include <doctest.h>

using namespace stratal;

namespace {

using V = std::vector<long>;

// Hand evaluation of the cone formula: keep degree i iff 2c*i < c*f + 1.
V cone_by_hand(const V& link, int f, const Rational& c) {
    V out(f + 2, 0);
    for (int i = 0; i <= f; ++i)
        if (2 * c * i < c * f + 1) out[i] = link[i];
    return out;
}

}  // namespace

TEST_CASE("cone formula") {
    CHECK(cone_max_cohomology({1, 0, 1}, 2, 1) == V{1, 0, 0, 0});
    CHECK(cone_max_cohomology({1, 1}, 1, 1) == V{1, 0, 0});
    CHECK(cone_max_cohomology({1, 1}, 1, Rational(1, 2)) == V{1, 1, 0});
    CHECK(cone_max_cohomology({1, 2, 1}, 2, 5) == V{1, 2, 0, 0});
    CHECK(cone_cutoff(2, 1) == Rational(3, 2));
    CHECK(cone_cutoff(2, 5) == Rational(11, 10));
    CHECK_THROWS_AS(cone_max_cohomology({1, 1}, 2, 1), DomainError);

    for (int f = 0; f <= 6; ++f)
        for (const Rational& c : {Rational(1, 9), Rational(1, 4), Rational(1, 2), Rational(1), Rational(3), Rational(7, 2)}) {
            V link(f + 1);
            for (int i = 0; i <= f; ++i) link[i] = i + 1;
            V out = cone_max_cohomology(link, f, c);
            CHECK(out == cone_by_hand(link, f, c));
            for (int i = 0; i <= f; ++i) CHECK(out[i] <= link[i]);
        }
}

TEST_CASE("cone hypothesis reporting") {
    CHECK(cone_hypothesis(2, Rational(1, 2)) == "1");
    CHECK(cone_hypothesis(2, 1) == "2");
    CHECK(cone_hypothesis(3, 2) == "3");
    L2Report r = cone_report({1, 1}, 1, Rational(1, 2));
    CHECK(r.max_betti == V{1, 1, 0});
    REQUIRE(r.cutoff.has_value());
    CHECK(*r.cutoff == Rational(3, 2));
}

TEST_CASE("cylinders") {
    CHECK(cylinder_max_cohomology({1, 2, 1}) == V{1, 2, 1, 0});
    CHECK(cylinder_max_cohomology({1}) == V{1, 0});
    CHECK(cylinder_max_cohomology({1, 0, 1}) == V{1, 0, 1, 0});
}

TEST_CASE("space expressions") {
    SpaceExpr t2 = SpaceExpr::manifold({1, 2, 1});
    SpaceExpr s1 = SpaceExpr::manifold({1, 1});
    CHECK(eval_max(SpaceExpr::cone(1, t2)) == V{1, 2, 0, 0});
    CHECK(eval_max(SpaceExpr::cone(1, SpaceExpr::cone(1, s1))) == V{1, 0, 0, 0});
    CHECK(eval_max(SpaceExpr::cylinder(SpaceExpr::manifold({1, 0, 1}))) == V{1, 0, 1, 0});
    CHECK(eval_max(SpaceExpr::cylinder(SpaceExpr::cone(Rational(1, 2), s1))) == V{1, 1, 0, 0});
    CHECK(SpaceExpr::cone(1, t2).dimension() == 3);
    CHECK_THROWS_AS(SpaceExpr::cone(0, t2), DomainError);
    CHECK_THROWS_AS(SpaceExpr::cone(1, SpaceExpr::cylinder(s1)), DomainError);
    CHECK_THROWS_AS(SpaceExpr::manifold({}), DomainError);
    CHECK_THROWS_AS(SpaceExpr::manifold({1, -1}), DomainError);
    CHECK_FALSE(SpaceExpr::cone(1, t2).describe().empty());
}

TEST_CASE("predictions for the suspended torus") {
    FilteredComplex k = suspension(seven_vertex_torus(), 1, 1);
    L2Report r = theorem_ris_predictions(k);
    CHECK(r.max_betti == V{1, 2, 0, 1});
    REQUIRE(r.min_betti.has_value());
    CHECK(*r.min_betti == V{1, 0, 2, 1});
    CHECK(r.plain_coefficients);
    FredholmIndices ind = fredholm_indices(r.max_betti, *r.min_betti);
    CHECK(ind.ind_max == 0);
    CHECK(ind.ind_min == 0);

    // c = 1/4: p_g = 1 + [[2]] = 2, q_g = -1.
    L2Report quarter = theorem_ris_predictions(suspension(seven_vertex_torus(), Rational(1, 4), Rational(1, 4)));
    CHECK(quarter.p_g->stratum_values().begin()->second == 2);
    CHECK(quarter.q_g->stratum_values().begin()->second == -1);
    CHECK(quarter.max_betti == V{1, 2, 1, 0});
    CHECK(*quarter.min_betti == V{0, 1, 2, 1});
    CHECK_FALSE(quarter.plain_coefficients);
}

TEST_CASE("predictions on manifolds and Hodge star symmetry") {
    for (const auto& k : {tetrahedron_boundary(), seven_vertex_torus(), polygon(5)}) {
        L2Report r = theorem_ris_predictions(k);
        CHECK(r.max_betti == betti(k));
        CHECK(*r.min_betti == betti(k));
    }
    for (const Rational& c : {Rational(1, 5), Rational(1, 2), Rational(1), Rational(3)}) {
        L2Report r = theorem_ris_predictions(suspension(seven_vertex_torus(), c, Rational(2, 3)));
        const int n = 3;
        for (int i = 0; i <= n; ++i) CHECK(r.max_betti[i] == (*r.min_betti)[n - i]);
    }
    FilteredComplex unweighted = load([] {
        SpaceDocument d = cone(polygon(4), 1).to_document();
        d.weights.clear();
        return d;
    }());
    CHECK_THROWS_AS(theorem_ris_predictions(unweighted), ConfigError);
}

TEST_CASE("Fredholm indices") {
    CHECK(fredholm_indices({1, 0, 1}, {1, 0, 1}).ind_max == 2);
    CHECK(fredholm_indices({1, 0, 1}, {1, 0, 1}).ind_min == 2);
    CHECK(fredholm_indices({0, 0}, {0, 0}).ind_max == 0);
    CHECK(fredholm_indices({1, 2, 0, 1}, {1, 0, 2, 1}).ind_min == 0);
    CHECK_THROWS_AS(fredholm_indices({1}, {1, 0}), DomainError);
}

TEST_CASE("local model on simplicial cones") {
    struct Case {
        FilteredComplex link;
        Rational c;
        V expected;
    };
    std::vector<Case> cases = {
        {seven_vertex_torus(), 1, {1, 2, 0, 0}},
        {polygon(6), Rational(1, 2), {1, 1, 0}},
        {polygon(6), 2, {1, 0, 0}},
        {point_pair(), Rational(1, 4), {2, 0}},
        {tetrahedron_boundary(), Rational(1, 4), {1, 0, 1, 0}},
        {tetrahedron_boundary(), 2, {1, 0, 0, 0}},
    };
    for (const auto& tc : cases) {
        LocalModelReport r = local_model_check(tc.link, tc.c);
        CHECK(r.analytic == tc.expected);
        CHECK(r.simplicial == tc.expected);
        CHECK(r.passed);
    }
    // A singular link: the cone over the suspended circle.
    LocalModelReport nested = local_model_check(suspension(polygon(4), 1, 1), 1);
    CHECK(nested.passed);
}
