#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gonal/divisor.hpp"
#include "gonal/graph.hpp"
#include "gonal/hurwitz.hpp"

namespace gonal {

enum class EdgeAction { contract, map_to };

struct MorphismEdge {
    std::string id;          // source edge
    EdgeAction action = EdgeAction::contract;
    std::string target_edge;  // meaningful for map_to
    int index = 0;            // 0 iff contracted
};

// Indexed morphism between loopless weighted graphs: a vertex map, a per-edge
// contract-or-map decision and a positive index on every mapped edge.
class IndexedMorphism {
public:
    IndexedMorphism(WeightedGraph source, WeightedGraph target,
                    std::map<std::string, std::string> vertex_map,
                    std::vector<MorphismEdge> edges);

    const WeightedGraph& source() const { return source_; }
    const WeightedGraph& target() const { return target_; }
    const std::map<std::string, std::string>& vertex_map() const { return vertex_map_; }
    const std::vector<MorphismEdge>& edge_data() const { return edges_; }

    const std::string& image_of(const std::string& v) const;
    const MorphismEdge& edge_entry(const std::string& source_edge) const;
    bool is_simple() const;  // every index <= 1

private:
    WeightedGraph source_, target_;
    std::map<std::string, std::string> vertex_map_;
    std::vector<MorphismEdge> edges_;  // aligned with source edge order
};

struct HarmonicCertificate {
    std::map<std::string, long long> m;  // per source vertex
    long long degree = 0;
    bool non_degenerate = false;
    bool simple = false;
};

struct PseudoHarmonicReport {
    std::optional<HarmonicCertificate> certificate;
    std::vector<std::string> failures;
    bool ok() const { return certificate.has_value(); }
};

// Checks Eq.-style balance at every vertex and the degree consistency across
// target edges and target vertices. `degree_hint` settles the one case the
// data cannot: a single-vertex source over a single-vertex target (no edge
// constraints exist, so any positive degree is admissible); elsewhere a hint
// is verified against the derived degree.
PseudoHarmonicReport check_pseudo_harmonic(const IndexedMorphism& phi,
                                           std::optional<long long> degree_hint = std::nullopt);

struct HarmonicCheck {
    bool harmonic = false;
    Divisor slack;  // per-vertex Riemann-Hurwitz slack; equals the ramification divisor
};
HarmonicCheck check_harmonic(const IndexedMorphism& phi,
                             std::optional<long long> degree_hint = std::nullopt);

Divisor pullback(const IndexedMorphism& phi, const Divisor& on_target,
                 std::optional<long long> degree_hint = std::nullopt);
Divisor ramification_divisor(const IndexedMorphism& phi,
                             std::optional<long long> degree_hint = std::nullopt);

PartitionSet vertex_partition_set(const IndexedMorphism& phi, const std::string& vertex,
                                  std::optional<long long> degree_hint = std::nullopt);

// Resolves contracted edges into honest edge fibers over new target leaves,
// preserving degree and stable equivalence of the source.
IndexedMorphism homomorphize(const IndexedMorphism& phi,
                             std::optional<long long> degree_hint = std::nullopt);

}  // namespace gonal
