#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gonal/divisor.hpp"
#include "gonal/gonality.hpp"
#include "gonal/graph.hpp"
#include "gonal/morphism.hpp"

namespace gonal {

// Order-<=2 automorphism given by its vertex and edge images. A fixed edge
// whose endpoints are swapped is "inverted"; the quotient collapses it.
struct GraphInvolution {
    std::map<std::string, std::string> vertex_image;
    std::map<std::string, std::string> edge_image;
};

std::vector<std::string> validate_involution(const WeightedGraph& g, const GraphInvolution& iota);
bool is_inverted(const WeightedGraph& g, const GraphInvolution& iota, const std::string& edge);

// Orbit graph: vertices are vertex orbits, non-inverted edge orbits descend,
// inverted fixed edges collapse. Quotient weights are never read downstream
// (only tree-ness is) and are set to zero.
WeightedGraph quotient(const WeightedGraph& g, const GraphInvolution& iota);

struct InvolutionSearch {
    std::optional<GraphInvolution> involution;
    int certificates_found = 0;  // tree-quotient involutions seen in the full scan
    std::optional<IndexedMorphism> quotient_morphism;  // emitted when |V| >= 3
};

// Exhaustive scan over involutions fixing every positive-weight vertex, on a
// loopless 2-edge-connected graph of genus >= 2.
InvolutionSearch find_hyperelliptic_involution(const WeightedGraph& g);

struct HyperellipticResult {
    bool hyperelliptic = false;
    std::string method;  // "genus<=1", "divisorial", "divisorial+involution"
    std::optional<Divisor> witness;  // rank-1 degree-2 class on the weightless model
    std::optional<GraphInvolution> involution;  // on the bridge-contracted loopless model
};

// Divisorial test (the defining one), cross-certified by the involution
// search whenever its preconditions hold. Disagreement is an internal error.
HyperellipticResult is_hyperelliptic(const WeightedGraph& g);

// Closed form for loopless 2-edge-connected two-vertex graphs of genus >= 2.
bool two_vertex_classification(const WeightedGraph& g);

struct BridgeConditionReport {
    bool ok = true;
    std::vector<std::string> violators;  // vertices with more than 2w(v)+2 bridges
};
BridgeConditionReport bridge_condition(const WeightedGraph& g);

struct CurveLocusReport {
    bool in_locus = false;  // hyperelliptic and bridge condition
    bool hyperelliptic = false;
    bool bridge_ok = false;
    std::vector<std::string> violators;
    std::optional<bool> two_gonal;    // geometric degree-2 check, when conclusive
    std::optional<bool> consistent;   // two_gonal == in_locus; only asserted for |V| != 2
};

CurveLocusReport stable_curve_hyperelliptic_locus(const WeightedGraph& g,
                                                  const GonalitySearchOptions& opts = {});

}  // namespace gonal
