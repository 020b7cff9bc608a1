#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gonal/divisor.hpp"
#include "gonal/graph.hpp"
#include "gonal/morphism.hpp"

namespace gonal {

enum class MorphismMode { harmonic, pseudo_harmonic };

struct GonalitySearchOptions {
    long long node_budget = 20000000;
    bool hurwitz = false;     // require every vertex profile to close to a Hurwitz set
    int hurwitz_degree_cap = 8;
};

struct GonalityReport {
    enum class Outcome { found, not_found, inconclusive };
    Outcome outcome = Outcome::not_found;
    std::optional<IndexedMorphism> witness;
    std::optional<HarmonicCertificate> certificate;
    std::optional<bool> hurwitz_ok;
    std::map<std::string, PartitionSet> vertex_profiles;  // for a found witness
    long long nodes_explored = 0;
    long long trees_tried = 0;
    bool decision() const { return outcome == Outcome::found; }
};

// Exhaustive search for a non-degenerate degree-d morphism onto a tree, over
// trees with at most |V(G0)| vertices, all compatible vertex maps and all
// index vectors. Loops are handled through the loopless model first.
GonalityReport find_harmonic_to_tree(const WeightedGraph& g, long long d, MorphismMode mode,
                                     const GonalitySearchOptions& opts = {});

// Convenience wrapper in harmonic mode; throws on an inconclusive budget.
bool is_geometrically_gonal(const WeightedGraph& g, long long d,
                            const GonalitySearchOptions& opts = {});

struct RefinementReport {
    bool found = false;
    std::map<std::string, int> plan;  // edge -> number of segments
    int subdivision_total = 0;        // vertices inserted by the plan
    std::optional<WeightedGraph> refined;
    std::optional<Divisor> witness;   // on the weightless model of the refinement
};

// Smallest-first scan over subdivision plans with per-edge segment counts up
// to max_subdiv, returning the first refinement whose W^r_d is nonempty.
RefinementReport find_divisorial_refinement(const WeightedGraph& g, long long d, long long r,
                                            int max_subdiv, long long cap = 1000000);

// All trees on n vertices up to isomorphism, deterministically ordered.
std::vector<WeightedGraph> trees_with_vertices(int n);

}  // namespace gonal
