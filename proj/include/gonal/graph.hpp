#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gonal {

struct VertexSpec {
    std::string id;
    int weight = 0;
};

struct EdgeSpec {
    std::string id;
    std::array<std::string, 2> ends;
};

struct LegSpec {
    std::string id;
    std::string vertex;
};

// Raw half-edge table. This is the low-level form in which a graph may be
// handed to validation: the involution is explicit and may be broken.
struct HalfEdgeTable {
    struct HalfEdge {
        std::string id;
        std::string partner;
        std::string endpoint;
    };
    std::vector<VertexSpec> vertices;
    std::vector<HalfEdge> half_edges;
    std::vector<LegSpec> legs;
};

std::vector<std::string> validate(const HalfEdgeTable& table);

// Connected multigraph with non-negative integer vertex weights and optional
// legs. Edges are stored as ordered pairs of endpoints; the two sides of an
// edge are its half-edges, so the involution is fixed-point-free by
// construction. Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges,
                  std::vector<LegSpec> legs = {});

    static WeightedGraph from_half_edges(const HalfEdgeTable& table);

    const std::vector<VertexSpec>& vertices() const { return vertices_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<LegSpec>& legs() const { return legs_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<std::size_t> vertex_index(std::string_view id) const;
    std::optional<std::size_t> edge_index(std::string_view id) const;
    std::size_t require_vertex(std::string_view id) const;

    int weight(std::size_t v) const { return vertices_[v].weight; }
    const std::string& vertex_id(std::size_t v) const { return vertices_[v].id; }
    std::size_t end(std::size_t e, int side) const;
    bool is_loop(std::size_t e) const;

    // Incident half-edges as (edge index, side) pairs; a loop appears twice.
    const std::vector<std::pair<std::size_t, int>>& incident(std::size_t v) const {
        return incident_[v];
    }
    int leg_count_at(std::size_t v) const { return leg_count_[v]; }
    int valency(std::size_t v) const;       // half-edges plus legs
    int edge_valency(std::size_t v) const;  // half-edges only
    int loop_count_at(std::size_t v) const;
    bool has_loops() const;
    bool has_legs() const { return !legs_.empty(); }

    bool connected() const;
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
    void require_valid() const;

    long long total_weight() const;

private:
    std::vector<VertexSpec> vertices_;
    std::vector<EdgeSpec> edges_;
    std::vector<LegSpec> legs_;
    std::map<std::string, std::size_t, std::less<>> vertex_index_;
    std::map<std::string, std::size_t, std::less<>> edge_index_;
    std::vector<std::vector<std::pair<std::size_t, int>>> incident_;
    std::vector<int> leg_count_;
};

long long genus(const WeightedGraph& g);
int valency(const WeightedGraph& g, const std::string& vertex);

// Structural transformations. Original vertex and edge identifiers survive
// unchanged; inserted pieces get deterministic prefixed names so outputs are
// byte-for-byte reproducible.
WeightedGraph loopless_model(const WeightedGraph& g);
WeightedGraph weightless_model(const WeightedGraph& g);
WeightedGraph refine(const WeightedGraph& g, const std::map<std::string, int>& plan);
WeightedGraph stabilize(const WeightedGraph& g);
WeightedGraph contract_bridges(const WeightedGraph& g);
WeightedGraph contract_edges(const WeightedGraph& g, const std::set<std::string>& edge_ids);

std::vector<std::string> bridges(const WeightedGraph& g);
bool is_2_edge_connected(const WeightedGraph& g);
bool is_stable(const WeightedGraph& g);
bool is_semistable(const WeightedGraph& g);

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace gonal
