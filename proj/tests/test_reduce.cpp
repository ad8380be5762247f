// SPDX-License-Identifier: MIT
//
// Unit tests for structural-set validation, branch enumeration and products,
// vertex elimination, sequences of reductions, and the order-independent
// closure form.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "isospec/reduce.hpp"

#include "fixtures.hpp"
#include "random_graphs.hpp"

using namespace isospec;
using fixtures::rat;

TEST_CASE("structural set validation") {
    const WeightedDigraph g = fixtures::digraph5();

    SUBCASE("valid splits") {
        const StructuralSet s = validate_structural(g, {0, 1, 2});
        CHECK(s.keep == std::vector<int>{0, 1, 2});
        CHECK(s.removed == std::vector<int>{3, 4});
        CHECK(validate_structural(g, {0, 1, 2, 3}).removed == std::vector<int>{4});
        // Keeping everything is the identity split.
        CHECK(validate_structural(g, {0, 1, 2, 3, 4}).removed.empty());
        // Duplicates and order are normalized.
        CHECK(validate_structural(g, {2, 0, 1, 2}).keep == std::vector<int>{0, 1, 2});
    }

    SUBCASE("removed set may not contain a cycle") {
        // Vertices 0 and 4 form a 2-cycle.
        CHECK_THROWS_AS(validate_structural(g, {1, 2, 3}), NotStructuralError);
        CHECK_THROWS_WITH_AS(validate_structural(g, {1, 2, 3}),
                             doctest::Contains("induces a cycle"), NotStructuralError);
    }

    SUBCASE("removed loops are fine unless the weight is exactly z") {
        // Loop weights below relative degree 1 are allowed on removed vertices.
        CHECK(validate_structural(fixtures::rational3(), {0, 2}).removed ==
              std::vector<int>{1});
        WeightedDigraph h(2);
        h.set_weight(1, 1, Rational::variable());
        CHECK_THROWS_WITH_AS(validate_structural(h, {0}),
                             doctest::Contains("identically z"), NotStructuralError);
    }

    SUBCASE("degenerate keeps rejected") {
        CHECK_THROWS_AS(validate_structural(g, {}), NotStructuralError);
        CHECK_THROWS_AS(validate_structural(g, {5}), NotStructuralError);
        CHECK_THROWS_AS(validate_structural(g, {-1, 0}), NotStructuralError);
    }
}

TEST_CASE("branch enumeration") {
    const WeightedDigraph g = fixtures::digraph5();
    const StructuralSet s = validate_structural(g, {0, 1, 2});

    SUBCASE("paths through removed interiors, endpoints kept") {
        const auto bs = branches(g, s, 0, 0);
        REQUIRE(bs.size() == 2);
        CHECK(bs[0].vertices == std::vector<int>{0, 4, 0});
        CHECK(bs[1].vertices == std::vector<int>{0, 4, 3, 0});
    }

    SUBCASE("direct edges count as two-vertex branches") {
        const auto bs = branches(g, s, 0, 2);
        REQUIRE(bs.size() == 2);
        CHECK(bs[0].vertices == std::vector<int>{0, 2});
        CHECK(bs[1].vertices == std::vector<int>{0, 4, 2});
    }

    SUBCASE("a loop on a kept vertex is a two-vertex branch") {
        const WeightedDigraph r3 = fixtures::rational3();
        const StructuralSet s2 = validate_structural(r3, {0, 1});
        const auto bs = branches(r3, s2, 0, 0);
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].vertices == std::vector<int>{0, 0});
        CHECK(Rational::approx_equal(branch_product(r3, bs[0]), r3.weight(0, 0)));
    }

    SUBCASE("endpoints must be kept") {
        CHECK_THROWS_AS(branches(g, s, 0, 4), std::invalid_argument);
    }
}

TEST_CASE("branch products") {
    const WeightedDigraph g = fixtures::digraph5();

    SUBCASE("loop-free interiors divide by z") {
        CHECK(Rational::approx_equal(branch_product(g, Branch{{0, 4, 0}}),
                                     rat({1}, {0, 1})));
        CHECK(Rational::approx_equal(branch_product(g, Branch{{0, 4, 3, 0}}),
                                     rat({1}, {0, 0, 1})));
    }

    SUBCASE("interior loop weight shifts the divisor") {
        WeightedDigraph h(3);
        h.set_weight(0, 1, Rational::one());
        h.set_weight(1, 1, Rational::one());
        h.set_weight(1, 2, Rational::one());
        CHECK(Rational::approx_equal(branch_product(h, Branch{{0, 1, 2}}),
                                     rat({1}, {-1, 1})));
    }

    SUBCASE("interior loop identically z is rejected") {
        WeightedDigraph h(3);
        h.set_weight(0, 1, Rational::one());
        h.set_weight(1, 1, Rational::variable());
        h.set_weight(1, 2, Rational::one());
        CHECK_THROWS_AS(branch_product(h, Branch{{0, 1, 2}}), std::domain_error);
    }
}

TEST_CASE("reduction by branch summation") {
    SUBCASE("five-vertex digraph down to three vertices") {
        const ReductionResult r = reduce_over(fixtures::digraph5(), {0, 1, 2});
        CHECK(r.kept == std::vector<int>{0, 1, 2});
        CHECK(fixtures::graphs_equal(r.graph, fixtures::rational3()));
        // Loop-free removed vertices contribute only the origin.
        CHECK(fixtures::values_match(r.exceptional, {0.0}));
        REQUIRE(r.exceptional_polys.size() == 1);
        CHECK(Poly::approx_equal(r.exceptional_polys[0].monic(), Poly{0, 1}));
    }

    SUBCASE("second-stage reduction with rational weights") {
        const ReductionResult r = reduce_over(fixtures::rational3(), {0, 1});
        CHECK(fixtures::graphs_equal(r.graph, fixtures::rational2()));
        CHECK(fixtures::values_match(r.exceptional, {0.0}));
    }

    SUBCASE("keeping every vertex is the identity") {
        const WeightedDigraph g = fixtures::rational3();
        const ReductionResult r = reduce_over(g, {0, 1, 2});
        CHECK(fixtures::graphs_equal(r.graph, g));
        CHECK(r.exceptional.empty());
        CHECK(r.exceptional_polys.empty());
    }

    SUBCASE("edgeless pair reduces to an isolated vertex") {
        const ReductionResult r = reduce_over(WeightedDigraph(2), {0});
        CHECK(r.graph.size() == 1);
        CHECK(r.graph.weight(0, 0).is_zero());
        CHECK(fixtures::values_match(r.exceptional, {0.0}));
    }

    SUBCASE("removed loop weights decide the exceptional set") {
        // Removing the looped vertex of the reduced 3-vertex loop graph: the
        // loop weight (1+z)/z contributes the roots of 1+z-z^2 and of z.
        const ReductionResult r = reduce_over(fixtures::looped3_reduced(), {0, 2});
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        CHECK(fixtures::values_match(r.exceptional, {0.0, 1.0 - phi, phi}, 1e-9));
    }

    SUBCASE("scaled weights") {
        const ReductionResult tail = reduce_over(fixtures::scaled4(), {1, 2, 3});
        CHECK(fixtures::graphs_equal(tail.graph, fixtures::scaled4_reduced_tail()));
        const ReductionResult head = reduce_over(fixtures::scaled4(), {0, 1, 2});
        CHECK(fixtures::graphs_equal(head.graph, fixtures::scaled4_reduced_head()));
    }

    SUBCASE("kite graph tail reduction") {
        const ReductionResult r = reduce_over(fixtures::theta4(), {1, 2, 3});
        CHECK(fixtures::graphs_equal(r.graph, fixtures::theta4_reduced()));
    }

    SUBCASE("two triangles to four vertices") {
        const ReductionResult r = reduce_over(fixtures::bowtie5(), {0, 1, 2, 3});
        CHECK(fixtures::graphs_equal(r.graph, fixtures::bowtie4_reduced()));
    }

    SUBCASE("looped graph keeps its loops through reduction") {
        const ReductionResult r = reduce_over(fixtures::looped6(), {0, 1, 2});
        CHECK(fixtures::graphs_equal(r.graph, fixtures::looped3_reduced()));
        // The removed vertices are loop-free, so only the origin is excluded.
        CHECK(fixtures::values_match(r.exceptional, {0.0}));
    }
}

TEST_CASE("single-vertex elimination") {
    const WeightedDigraph g = fixtures::digraph5();

    SUBCASE("two elimination orders and the direct reduction agree") {
        const ReductionResult a1 = eliminate_vertex(g, 4);
        const ReductionResult a2 = eliminate_vertex(a1.graph, 3);
        const ReductionResult b1 = eliminate_vertex(g, 3);
        const ReductionResult b2 = eliminate_vertex(b1.graph, 3);  // original 4
        const ReductionResult direct = reduce_over(g, {0, 1, 2});
        CHECK(fixtures::graphs_equal(a2.graph, direct.graph));
        CHECK(fixtures::graphs_equal(b2.graph, direct.graph));
    }

    SUBCASE("eliminating from the path graph") {
        const ReductionResult r = eliminate_vertex(fixtures::path3(), 2);
        CHECK(r.kept == std::vector<int>{0, 1});
        CHECK(r.graph.weight(0, 0).is_zero());
        CHECK(Rational::approx_equal(r.graph.weight(1, 1), rat({1}, {0, 1})));
        const ReductionResult r2 = eliminate_vertex(r.graph, 1);
        CHECK(Rational::approx_equal(r2.graph.weight(0, 0), rat({0, 1}, {-1, 0, 1})));
        CHECK(fixtures::values_match(r2.exceptional, {-1.0, 0.0, 1.0}));
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(eliminate_vertex(g, 5), std::out_of_range);
        CHECK_THROWS_AS(eliminate_vertex(WeightedDigraph(1), 0), std::invalid_argument);
        WeightedDigraph h(2);
        h.set_weight(0, 0, Rational::variable());
        CHECK_THROWS_AS(eliminate_vertex(h, 0), NotStructuralError);
    }
}

TEST_CASE("reduction sequences") {
    const WeightedDigraph g = fixtures::digraph5();

    SUBCASE("staged reduction matches the direct one") {
        const ReductionResult staged = reduce_sequence(g, {{0, 1, 2}, {0, 1}});
        const ReductionResult direct = reduce_over(g, {0, 1});
        CHECK(fixtures::graphs_equal(staged.graph, direct.graph));
        CHECK(staged.kept == std::vector<int>{0, 1});
        CHECK(staged.trace.size() == 2);
        CHECK(staged.trace[0] == std::vector<int>{0, 1, 2});
    }

    SUBCASE("exceptional values accumulate across stages") {
        const ReductionResult staged =
            reduce_sequence(fixtures::path3(), {{0, 1}, {0}});
        CHECK(Rational::approx_equal(staged.graph.weight(0, 0),
                                     rat({0, 1}, {-1, 0, 1})));
        CHECK(fixtures::values_match(staged.exceptional, {-1.0, 0.0, 1.0}));
    }

    SUBCASE("keep sets must nest") {
        CHECK_THROWS_WITH_AS(reduce_sequence(g, {{0, 1}, {0, 2}}),
                             doctest::Contains("nested"), NotStructuralError);
        CHECK_THROWS_AS(reduce_sequence(g, {}), std::invalid_argument);
    }
}

TEST_CASE("closure reduction") {
    SUBCASE("matches direct reduction on the staged example") {
        const ReductionResult a = reduce_closure(fixtures::digraph5(), {0, 1});
        const ReductionResult b = reduce_over(fixtures::digraph5(), {0, 1});
        CHECK(fixtures::graphs_equal(a.graph, b.graph));
        CHECK(a.kept == std::vector<int>{0, 1});
    }

    SUBCASE("reaches keeps that are not structural in one step") {
        // Removing {0, 4} at once is invalid (they form a 2-cycle), but
        // one-at-a-time elimination gets there.
        const WeightedDigraph g = fixtures::digraph5();
        CHECK_THROWS_AS(reduce_over(g, {1, 2, 3}), NotStructuralError);
        const ReductionResult r = reduce_closure(g, {1, 2, 3});
        CHECK(r.graph.size() == 3);
        CHECK(r.kept == std::vector<int>{1, 2, 3});
        CHECK(r.graph.is_pi_class());
    }

    SUBCASE("single-vertex closure of the rational 2-graph") {
        const ReductionResult r = reduce_closure(fixtures::rational2(), {0});
        const ReductionResult direct = reduce_over(fixtures::rational2(), {0});
        CHECK(fixtures::graphs_equal(r.graph, direct.graph));
        // Exceptional values: roots of (1+z) - z*z^2 plus the pole at 0.
        REQUIRE(r.exceptional.size() == 4);
        CHECK(fixtures::values_match(
            r.exceptional,
            {0.0, cplx(1.3247179572447460), cplx(-0.66235897862237301, 0.56227951206230210),
             cplx(-0.66235897862237301, -0.56227951206230210)},
            1e-9));
    }

    SUBCASE("requires weights of relative degree at most zero") {
        WeightedDigraph h(2);
        h.set_weight(0, 1, Rational::variable());
        h.set_weight(1, 0, Rational::one());
        CHECK_THROWS_AS(reduce_closure(h, {0}), std::domain_error);
    }
}

TEST_CASE("reduction properties on random graphs") {
    std::mt19937 rng(41);

    SUBCASE("closure equals direct reduction whenever both apply") {
        int checked = 0;
        for (int t = 0; t < 200 && checked < 25; ++t) {
            const WeightedDigraph g = fixtures::random_pi_graph(rng, 5 + t % 3);
            const auto keep = fixtures::random_structural_keep(rng, g);
            if (!keep) continue;
            const ReductionResult direct = reduce_over(g, *keep);
            const ReductionResult closed = reduce_closure(g, *keep);
            CHECK(fixtures::graphs_equal(direct.graph, closed.graph, 1e-7));
            ++checked;
        }
        CHECK(checked == 25);
    }

    SUBCASE("staging through a superset changes nothing") {
        int checked = 0;
        for (int t = 0; t < 300 && checked < 20; ++t) {
            const WeightedDigraph g = fixtures::random_pi_graph(rng, 6);
            const auto keep = fixtures::random_structural_keep(rng, g);
            if (!keep || static_cast<int>(keep->size()) + 2 > g.size()) continue;
            // Larger keep: put one removed vertex back.
            std::vector<int> mid = *keep;
            for (int v = 0; v < g.size(); ++v)
                if (std::find(mid.begin(), mid.end(), v) == mid.end()) {
                    mid.push_back(v);
                    break;
                }
            std::sort(mid.begin(), mid.end());
            try {
                const ReductionResult staged = reduce_sequence(g, {mid, *keep});
                const ReductionResult direct = reduce_over(g, *keep);
                CHECK(fixtures::graphs_equal(staged.graph, direct.graph, 1e-7));
                ++checked;
            } catch (const NotStructuralError&) {
                // The intermediate stage can invalidate the final split
                // (new edges may close a cycle among the removed vertices).
            }
        }
        CHECK(checked >= 10);
    }

    SUBCASE("reduction preserves the closed weight class") {
        int checked = 0;
        for (int t = 0; t < 200 && checked < 25; ++t) {
            const WeightedDigraph g = fixtures::random_pi_graph(rng, 5);
            const auto keep = fixtures::random_structural_keep(rng, g);
            if (!keep) continue;
            CHECK(reduce_over(g, *keep).graph.is_pi_class());
            ++checked;
        }
        CHECK(checked == 25);
    }
}
