#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gonal/divisor.hpp"
#include "gonal/fixtures.hpp"
#include "gonal/gonality.hpp"
#include "gonal/hurwitz.hpp"
#include "support/gen.hpp"
#include "support/morphgen.hpp"

using namespace gonal;
namespace fx = gonal::fixtures;

TEST_CASE("tree enumeration") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        std::vector<WeightedGraph> trees = trees_with_vertices(n);
        CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            CHECK(genus(trees[i]) == 0);
            for (std::size_t j = i + 1; j < trees.size(); ++j)
                CHECK(!are_isomorphic(trees[i], trees[j]));
        }
    }
}

TEST_CASE("two-vertex family gonality") {
    CHECK(is_geometrically_gonal(fx::banana(2), 2));
    // hyperelliptic but not 2-gonal once three or more edges are parallel
    for (int n = 3; n <= 5; ++n) CHECK(!is_geometrically_gonal(fx::banana(n), 2));
    CHECK(is_geometrically_gonal(fx::banana(3), 3));

    CHECK(is_geometrically_gonal(fx::banana(2, 0, 1), 2));
    CHECK(!is_geometrically_gonal(fx::banana(3, 0, 1), 2));
}

TEST_CASE("witnesses revalidate") {
    GonalityReport r = find_harmonic_to_tree(fx::banana(2), 2, MorphismMode::harmonic);
    REQUIRE(r.decision());
    REQUIRE(r.witness.has_value());
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->degree == 2);
    CHECK(r.certificate->non_degenerate);
    CHECK(check_harmonic(*r.witness, 2).harmonic);

    GonalityReport p = find_harmonic_to_tree(fx::pdx(), 3, MorphismMode::harmonic);
    REQUIRE(p.decision());
    CHECK(p.certificate->degree == 3);
    for (const auto& [v, m] : p.certificate->m) CHECK(m >= 1);
    CHECK(check_harmonic(*p.witness, 3).harmonic);
}

TEST_CASE("the two degree-3 showcase graphs split") {
    // 3-gonal but not divisorially 3-gonal
    CHECK(find_harmonic_to_tree(fx::pdx(), 3, MorphismMode::harmonic).decision());
    CHECK(!is_divisorially_gonal(fx::pdx(), 3).gonal);

    // divisorially 3-gonal but not even pseudo-harmonically 3-gonal
    GonalityReport dvx = find_harmonic_to_tree(fx::dvx(), 3, MorphismMode::pseudo_harmonic);
    CHECK(dvx.outcome == GonalityReport::Outcome::not_found);
    CHECK(is_divisorially_gonal(fx::dvx(), 3).gonal);
}

TEST_CASE("low genus runs honestly") {
    // genus <= 1 inputs have no special casing in the search
    CHECK(is_geometrically_gonal(fx::banana(2), 3));
    WeightedGraph edge({{"a", 0}, {"b", 0}}, {{"e", {"a", "b"}}});
    CHECK(is_geometrically_gonal(edge, 2));  // the doubled identity map
    CHECK(is_divisorially_gonal(fx::banana(2), 2).gonal);
}

TEST_CASE("spider is 2-gonal despite its bridges") {
    // the bridge-count obstruction needs stability, which the spider lacks:
    // a path target with one index-2 bridge works
    GonalityReport r = find_harmonic_to_tree(fx::spider(), 2, MorphismMode::harmonic);
    REQUIRE(r.decision());
    CHECK(check_harmonic(*r.witness, 2).harmonic);
    // the stable variant is ruled out for real
    CHECK(!find_harmonic_to_tree(fx::spider_stable(), 2, MorphismMode::harmonic).decision());
}

TEST_CASE("single-vertex graphs") {
    WeightedGraph w2({{"v", 2}}, {});
    CHECK(is_geometrically_gonal(w2, 2));

    // loops go through the loopless model
    WeightedGraph looped({{"v", 1}}, {{"l", {"v", "v"}}});
    CHECK(is_geometrically_gonal(looped, 2));

    // the degree-1 profile cannot close up to positive genus
    GonalitySearchOptions hw;
    hw.hurwitz = true;
    WeightedGraph w1({{"v", 1}}, {});
    CHECK(find_harmonic_to_tree(w1, 1, MorphismMode::harmonic).decision());
    CHECK(!find_harmonic_to_tree(w1, 1, MorphismMode::harmonic, hw).decision());
    GonalityReport hr = find_harmonic_to_tree(w2, 4, MorphismMode::harmonic, hw);
    CHECK(hr.decision());
    CHECK(hr.hurwitz_ok == true);
}

TEST_CASE("two-gonal without being hyperelliptic-compatible") {
    // all-ones weighted triangle: a harmonic degree-2 morphism exists, but
    // every such morphism has a local degree 1 at a positive-weight vertex,
    // so no vertex profile closes up to a genus-1 double cover
    WeightedGraph triangle({{"v0", 1}, {"v1", 1}, {"v2", 1}},
                           {{"e0", {"v0", "v1"}},
                            {"e1", {"v0", "v2"}},
                            {"e2", {"v1", "v2"}}});
    CHECK(find_harmonic_to_tree(triangle, 2, MorphismMode::harmonic).decision());
    GonalitySearchOptions hw;
    hw.hurwitz = true;
    GonalityReport strict = find_harmonic_to_tree(triangle, 2, MorphismMode::harmonic, hw);
    CHECK(strict.outcome == GonalityReport::Outcome::not_found);
}

TEST_CASE("hurwitz flag on the showcase morphism") {
    GonalitySearchOptions hw;
    hw.hurwitz = true;
    GonalityReport r = find_harmonic_to_tree(fx::pdx(), 3, MorphismMode::harmonic, hw);
    CHECK(r.decision());
    CHECK(r.hurwitz_ok == true);
    CHECK(r.vertex_profiles.size() == fx::pdx().vertex_count());
}

TEST_CASE("budget runs out as inconclusive") {
    GonalitySearchOptions tiny;
    tiny.node_budget = 5;
    GonalityReport r = find_harmonic_to_tree(fx::pdx(), 3, MorphismMode::harmonic, tiny);
    CHECK(r.outcome == GonalityReport::Outcome::inconclusive);
    CHECK_THROWS_AS(is_geometrically_gonal(fx::pdx(), 3, tiny), std::runtime_error);
}

TEST_CASE("refinement search") {
    // already divisorially gonal: the identity plan wins
    RefinementReport dvx = find_divisorial_refinement(fx::dvx(), 3, 1, 3);
    CHECK(dvx.found);
    CHECK(dvx.subdivision_total == 0);
    CHECK(dvx.plan.empty());

    // a tree in degree 1: identity plan, any vertex class works
    WeightedGraph path({{"a", 0}, {"b", 0}, {"c", 0}}, {{"e", {"a", "b"}}, {"f", {"b", "c"}}});
    RefinementReport tr = find_divisorial_refinement(path, 1, 1, 2);
    CHECK(tr.found);
    CHECK(tr.subdivision_total == 0);
    REQUIRE(tr.witness.has_value());
    CHECK(tr.witness->degree() == 1);

    CHECK_THROWS_AS(find_divisorial_refinement(path, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("pdx refinement exists at small subdivision budgets") {
    RefinementReport r = find_divisorial_refinement(fx::pdx(), 3, 1, 4);
    REQUIRE(r.found);
    MESSAGE("pdx minimal subdivision total: ", r.subdivision_total);
    REQUIRE(r.refined.has_value());
    REQUIRE(r.witness.has_value());
    CHECK(rank(*r.refined, *r.witness) >= 1);
    CHECK(r.witness->degree() == 3);
    // regression pin: a single midpoint on one middle edge is enough
    CHECK(r.subdivision_total == 1);
    CHECK(r.plan == std::map<std::string, int>{{"b2", 2}});
}

TEST_CASE("random harmonic morphisms never contradict the search") {
    testgen::Rng rng(20250201);
    int found = 0;
    while (found < 80) {
        testgen::GraphParams p;
        p.max_vertices = 5;
        p.max_edges = 7;
        p.allow_loops = false;
        WeightedGraph g = testgen::random_connected_graph(rng, p);
        auto phi = testgen::random_pseudo_harmonic(rng, g);
        if (!phi || !check_harmonic(*phi).harmonic) continue;
        ++found;
        long long d = check_pseudo_harmonic(*phi).certificate->degree;
        // the witness puts a lower bound on what the exhaustive search must find
        CHECK(find_harmonic_to_tree(g, d, MorphismMode::harmonic).decision());
        CHECK(find_harmonic_to_tree(g, d, MorphismMode::pseudo_harmonic).decision());
        // and the generator never uses a tree larger than the search bound
        CHECK(phi->target().vertex_count() <= loopless_model(g).vertex_count());
    }
}
