#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gonal/divisor.hpp"
#include "gonal/fixtures.hpp"
#include "gonal/json_io.hpp"
#include "gonal/intmat.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace gonal;
namespace fx = gonal::fixtures;

namespace {

Divisor dv(std::map<std::string, long long> m) {
    return Divisor(std::move(m));
}

}  // namespace

TEST_CASE("canonical divisor") {
    Divisor k_theta = canonical_divisor(fx::theta());
    CHECK(k_theta == dv({{"v1", 1}, {"v2", 1}}));
    CHECK(k_theta.degree() == 2 * genus(fx::theta()) - 2);

    Divisor k_w = canonical_divisor(fx::banana(2, 0, 1));
    CHECK(k_w.coeff("v1") == 0);
    CHECK(k_w.coeff("v2") == 2);
    CHECK(k_w.degree() == 2);

    WeightedGraph edge({{"a", 0}, {"b", 0}}, {{"e", {"a", "b"}}});
    CHECK(canonical_divisor(edge) == dv({{"a", -1}, {"b", -1}}));
}

TEST_CASE("reduce") {
    WeightedGraph b3 = fx::banana(3);
    CHECK(reduce(b3, dv({{"v1", 2}}), "v1") == dv({{"v1", 2}}));
    CHECK(reduce(b3, dv({{"v1", 3}}), "v2") == dv({{"v2", 3}}));

    Divisor d = dv({{"v1", 5}, {"v2", -2}});
    Divisor r = reduce(b3, d, "v1");
    CHECK(reduce(b3, r, "v1") == r);
    CHECK(r.coeff("v2") >= 0);

    CHECK_THROWS_AS(reduce(b3, d, "zz"), std::invalid_argument);
    CHECK_THROWS_AS(reduce(fx::banana(2, 0, 1), d, "v1"), std::invalid_argument);
    WeightedGraph loop({{"v", 0}}, {{"l", {"v", "v"}}});
    CHECK_THROWS_AS(reduce(loop, Divisor(), "v"), std::invalid_argument);
}

TEST_CASE("equivalence") {
    WeightedGraph b3 = fx::banana(3);
    Divisor d = dv({{"v1", 1}, {"v2", 2}});
    CHECK(is_equivalent(b3, d, d));
    CHECK(is_equivalent(b3, dv({{"v1", 3}}), dv({{"v2", 3}})));
    CHECK(!is_equivalent(b3, dv({{"v1", 1}}), dv({{"v2", 2}})));
    CHECK(!is_equivalent(b3, dv({{"v1", 1}}), dv({{"v2", 1}})));
}

TEST_CASE("rank on the two-vertex family") {
    for (int n = 2; n <= 5; ++n) {
        WeightedGraph g = fx::banana(n);
        CHECK(rank(g, dv({{"v1", 1}, {"v2", 1}})) == 1);
        CHECK(rank(g, dv({{"v1", 2}})) == (n == 2 ? 1 : 0));
    }
    for (int n = 2; n <= 5; ++n) {
        WeightedGraph g = fx::banana(n, 0, 1);
        CHECK(rank(g, dv({{"v1", 2}})) == (n == 2 ? 1 : 0));
        CHECK(rank(g, dv({{"v2", 2}})) == (n == 2 ? 1 : 0));
        CHECK(rank(g, dv({{"v1", 1}, {"v2", 1}})) == 0);
        // the remaining entries live on the weightless model
        WeightedGraph gw = weightless_model(g);
        std::string u = "w:v2:1";
        REQUIRE(gw.vertex_index(u).has_value());
        CHECK(rank(gw, dv({{u, 1}, {"v1", 1}})) == 0);
        CHECK(rank(gw, dv({{u, 1}, {"v2", 1}})) == 0);
        CHECK(rank(gw, dv({{u, 2}})) == (n == 2 ? 1 : 0));
    }
}

TEST_CASE("rank basics") {
    WeightedGraph b3 = fx::banana(3);
    CHECK(rank(b3, Divisor()) == 0);
    CHECK(rank(b3, dv({{"v1", -1}})) == -1);
    CHECK(rank(b3, dv({{"v1", 1}, {"v2", -2}})) == -1);

    // r(K) = g - 1 on a few fixtures of genus >= 1
    for (const WeightedGraph& g :
         {fx::banana(2), fx::theta(), fx::pdx(), fx::banana(2, 0, 1), fx::spider()}) {
        CHECK(rank(g, canonical_divisor(g)) == genus(g) - 1);
    }
}

TEST_CASE("rank agrees across models") {
    testgen::Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        WeightedGraph g = testgen::random_connected_graph(rng);
        Divisor d = testgen::random_divisor(rng, g, -2, 5);
        long long r = rank(g, d);
        CHECK(r == rank(loopless_model(g), d));
        CHECK(r == rank(weightless_model(g), d));
    }
}

TEST_CASE("rank is equivalence-invariant") {
    testgen::Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedGraph g = weightless_model(testgen::random_connected_graph(rng));
        Divisor d = testgen::random_divisor(rng, g, -2, 4);
        // fire a random vertex once
        std::size_t v = rng.uniform(0, static_cast<int>(g.vertex_count()) - 1);
        Divisor fired = d;
        for (auto [e, side] : g.incident(v)) {
            fired.add(g.vertex_id(v), -1);
            fired.add(g.vertex_id(g.end(e, 1 - side)), 1);
        }
        CHECK(is_equivalent(g, d, fired));
        CHECK(rank(g, d) == rank(g, fired));
    }
}

TEST_CASE("jacobian and class enumeration") {
    CHECK(jacobian_order(fx::banana(3)) == 3);
    WeightedGraph tree({{"a", 0}, {"b", 0}, {"c", 0}}, {{"e", {"a", "b"}}, {"f", {"b", "c"}}});
    CHECK(jacobian_order(tree) == 1);
    CHECK(jacobian_order(fx::pdx()) == 18);

    std::vector<PicardClass> classes = enumerate_classes(fx::banana(3), 2);
    CHECK(classes.size() == 3);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CHECK(classes[i].representative.degree() == 2);
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK(!is_equivalent(fx::banana(3), classes[i].representative,
                                 classes[j].representative));
    }

    CHECK_THROWS_AS(enumerate_classes(fx::banana(3), 0, 2), EnumerationCapExceeded);

    testgen::Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        WeightedGraph g = testgen::random_connected_graph(rng);
        CHECK(static_cast<long long>(enumerate_classes(g, trial % 3).size()) ==
              jacobian_order(g));
    }
}

TEST_CASE("jacobian order agrees with the integer form of the Laplacian") {
    testgen::Rng rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedGraph g = weightless_model(testgen::random_connected_graph(rng));
        std::size_t n = g.vertex_count();
        IntMat lap(n, std::vector<long long>(n, 0));
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            std::size_t a = g.end(e, 0), b = g.end(e, 1);
            if (a == b) continue;
            ++lap[a][a];
            ++lap[b][b];
            --lap[a][b];
            --lap[b][a];
        }
        IntDiagonalization diag = diagonalize(lap);
        long long product = 1;
        for (long long d : diag.diag)
            if (d != 0) product *= std::llabs(d);
        CHECK(product == jacobian_order(g));
    }
}

TEST_CASE("W_r_d and divisorial gonality") {
    std::vector<PicardClass> w12 = W_r_d(fx::banana(3), 2, 1);
    REQUIRE(w12.size() == 1);
    CHECK(is_equivalent(fx::banana(3), w12[0].representative, dv({{"v1", 1}, {"v2", 1}})));

    GonalWitness dvx3 = is_divisorially_gonal(fx::dvx(), 3);
    CHECK(dvx3.gonal);
    REQUIRE(dvx3.witness.has_value());
    CHECK(is_equivalent(fx::dvx(), *dvx3.witness, dv({{"v1", 3}})));

    CHECK(!is_divisorially_gonal(fx::pdx(), 3).gonal);

    // the chain of equivalences behind the witness
    WeightedGraph dvx = fx::dvx();
    CHECK(is_equivalent(dvx, dv({{"v1", 3}}), dv({{"v2", 3}})));
    CHECK(is_equivalent(dvx, dv({{"v2", 3}}), dv({{"v2", -1}, {"v0", 2}, {"v3", 2}})));
    CHECK(is_equivalent(dvx, dv({{"v3", 3}}), dv({{"v0", 1}, {"v2", 1}, {"v3", 1}})));
    CHECK(is_equivalent(dvx, dv({{"v3", 3}}), dv({{"v4", 3}})));

    // genus <= 1 graphs admit gonal divisors in every degree >= g+1
    CHECK(is_divisorially_gonal(fx::banana(2), 2).gonal);
    WeightedGraph single({{"a", 0}}, {});
    CHECK(is_divisorially_gonal(single, 1).gonal);
}

TEST_CASE("Riemann-Roch") {
    testgen::Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = testgen::random_connected_graph(rng);
        long long gen = genus(g);
        Divisor k = canonical_divisor(g);
        Divisor d = testgen::random_divisor(rng, g, -3, 2 * gen + 2);
        RankEngine engine(g);
        CHECK(engine.rank(d) - engine.rank(k - d) == d.degree() - gen + 1);
    }
}

TEST_CASE("rank oracle spot checks") {
    testgen::Rng rng(555);
    int done = 0;
    while (done < 15) {
        testgen::GraphParams p;
        p.max_vertices = 4;
        p.max_edges = 6;
        p.max_total_weight = 1;
        WeightedGraph g = testgen::random_connected_graph(rng, p);
        if (jacobian_order(g) > 200) continue;
        testgen::OracleRank oracle(g);
        RankEngine engine(g);
        for (int i = 0; i < 3; ++i) {
            Divisor d = testgen::random_divisor(rng, g, -2, 4);
            CHECK(engine.rank(d) == oracle.rank(d));
        }
        ++done;
    }
}

TEST_CASE("divisor json") {
    Divisor d = dv({{"v1", 1}, {"v2", -2}});
    std::string text = divisor_to_json(d);
    CHECK(text == R"({"coeffs":{"v1":1,"v2":-2}})");
    CHECK(parse_divisor(text).divisor == d);
    CHECK_THROWS_AS(parse_divisor(R"({"coeffs":{"v":1.5}})"), ParseError);
    DivisorFile with_graph =
        parse_divisor(R"({"graph":{"vertices":[{"id":"a"}]},"coeffs":{"a":2}})");
    CHECK(with_graph.graph.has_value());
}
