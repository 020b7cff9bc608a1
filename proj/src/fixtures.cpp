#include "gonal/fixtures.hpp"

#include <stdexcept>

namespace gonal {
namespace fixtures {

WeightedGraph banana(int n, int w1, int w2) {
    if (n < 1) throw std::invalid_argument("banana needs at least one edge");
    std::vector<VertexSpec> vs{{"v1", w1}, {"v2", w2}};
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i)
        es.push_back(EdgeSpec{"e" + std::to_string(i), {"v1", "v2"}});
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph theta() {
    return banana(3);
}

WeightedGraph pdx() {
    std::vector<VertexSpec> vs{{"v1", 0}, {"v2", 0}, {"v3", 0}, {"v4", 0}};
    std::vector<EdgeSpec> es{
        {"a1", {"v1", "v2"}}, {"a2", {"v1", "v2"}}, {"a3", {"v1", "v2"}},
        {"b1", {"v2", "v3"}}, {"b2", {"v2", "v3"}},
        {"c1", {"v3", "v4"}}, {"c2", {"v3", "v4"}}, {"c3", {"v3", "v4"}},
    };
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph dvx() {
    std::vector<VertexSpec> vs{{"v0", 0}, {"v1", 0}, {"v2", 0}, {"v3", 0}, {"v4", 0}};
    std::vector<EdgeSpec> es{
        {"a1", {"v1", "v2"}}, {"a2", {"v1", "v2"}}, {"a3", {"v1", "v2"}},
        {"e0", {"v2", "v3"}}, {"e2", {"v2", "v0"}}, {"e3", {"v0", "v3"}},
        {"c1", {"v3", "v4"}}, {"c2", {"v3", "v4"}}, {"c3", {"v3", "v4"}},
    };
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph spider() {
    std::vector<VertexSpec> vs{{"c", 0}, {"x1", 1}, {"x2", 1}, {"x3", 1}};
    std::vector<EdgeSpec> es{{"b1", {"c", "x1"}}, {"b2", {"c", "x2"}}, {"b3", {"c", "x3"}}};
    return WeightedGraph(std::move(vs), std::move(es));
}

WeightedGraph spider_stable() {
    std::vector<VertexSpec> vs{{"c", 0}, {"x1", 1}, {"x2", 1}, {"x3", 1}};
    std::vector<EdgeSpec> es{{"b1", {"c", "x1"}}, {"b2", {"c", "x2"}}, {"b3", {"c", "x3"}},
                             {"l1", {"x1", "x1"}}, {"l2", {"x2", "x2"}}, {"l3", {"x3", "x3"}}};
    return WeightedGraph(std::move(vs), std::move(es));
}

IndexedMorphism pdx_morphism() {
    std::vector<VertexSpec> tvs{{"t1", 0}, {"t2", 0}, {"t3", 0}, {"t4", 0}};
    std::vector<EdgeSpec> tes{{"f1", {"t1", "t2"}}, {"f2", {"t2", "t3"}}, {"f3", {"t3", "t4"}}};
    std::map<std::string, std::string> vmap{
        {"v1", "t1"}, {"v2", "t2"}, {"v3", "t3"}, {"v4", "t4"}};
    std::vector<MorphismEdge> edges{
        {"a1", EdgeAction::map_to, "f1", 1}, {"a2", EdgeAction::map_to, "f1", 1},
        {"a3", EdgeAction::map_to, "f1", 1}, {"b1", EdgeAction::map_to, "f2", 2},
        {"b2", EdgeAction::map_to, "f2", 1}, {"c1", EdgeAction::map_to, "f3", 1},
        {"c2", EdgeAction::map_to, "f3", 1}, {"c3", EdgeAction::map_to, "f3", 1},
    };
    return IndexedMorphism(pdx(), WeightedGraph(std::move(tvs), std::move(tes)), std::move(vmap),
                           std::move(edges));
}

IndexedMorphism banana2_morphism() {
    std::vector<VertexSpec> tvs{{"u1", 0}, {"u2", 0}};
    std::vector<EdgeSpec> tes{{"f", {"u1", "u2"}}};
    std::map<std::string, std::string> vmap{{"v1", "u1"}, {"v2", "u2"}};
    std::vector<MorphismEdge> edges{{"e1", EdgeAction::map_to, "f", 1},
                                    {"e2", EdgeAction::map_to, "f", 1}};
    return IndexedMorphism(banana(2), WeightedGraph(std::move(tvs), std::move(tes)),
                           std::move(vmap), std::move(edges));
}

IndexedMorphism triangle_morphism() {
    std::vector<VertexSpec> svs{{"v1", 0}, {"v2", 0}, {"v3", 0}};
    std::vector<EdgeSpec> ses{{"d12", {"v1", "v2"}}, {"d13", {"v1", "v3"}}, {"d23", {"v2", "v3"}}};
    std::vector<VertexSpec> tvs{{"u1", 0}, {"u2", 0}};
    std::vector<EdgeSpec> tes{{"f", {"u1", "u2"}}};
    std::map<std::string, std::string> vmap{{"v1", "u1"}, {"v2", "u1"}, {"v3", "u2"}};
    std::vector<MorphismEdge> edges{{"d12", EdgeAction::contract, "", 0},
                                    {"d13", EdgeAction::map_to, "f", 1},
                                    {"d23", EdgeAction::map_to, "f", 1}};
    return IndexedMorphism(WeightedGraph(std::move(svs), std::move(ses)),
                           WeightedGraph(std::move(tvs), std::move(tes)), std::move(vmap),
                           std::move(edges));
}

std::vector<std::string> names() {
    return {"banana2", "banana3", "banana4", "banana5", "theta",
            "banana2-w01", "banana3-w01", "pdx", "dvx", "spider", "spider-stable"};
}

WeightedGraph by_name(const std::string& name) {
    if (name == "banana2") return banana(2);
    if (name == "banana3") return banana(3);
    if (name == "banana4") return banana(4);
    if (name == "banana5") return banana(5);
    if (name == "theta") return theta();
    if (name == "banana2-w01") return banana(2, 0, 1);
    if (name == "banana3-w01") return banana(3, 0, 1);
    if (name == "pdx") return pdx();
    if (name == "dvx") return dvx();
    if (name == "spider") return spider();
    if (name == "spider-stable") return spider_stable();
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace fixtures
}  // namespace gonal
