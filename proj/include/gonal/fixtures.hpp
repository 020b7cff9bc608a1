#pragma once

#include <string>
#include <vector>

#include "gonal/graph.hpp"
#include "gonal/morphism.hpp"

namespace gonal {
namespace fixtures {

// Two vertices joined by n parallel edges (optionally weighted).
WeightedGraph banana(int n, int w1 = 0, int w2 = 0);
// Theta graph: banana(3).
WeightedGraph theta();
// Chain of parallel classes 3-2-3 on four vertices, genus 5.
WeightedGraph pdx();
// Triple edge, a triangle through an extra vertex, triple edge; genus 5.
WeightedGraph dvx();
// Weight-zero center with three bridges to weight-one tips; genus 3, not stable.
WeightedGraph spider();
// Spider with a loop on every tip, which makes it stable; genus 6.
WeightedGraph spider_stable();

// Degree-3 morphism from pdx onto a 4-vertex path, one index-2 middle edge.
IndexedMorphism pdx_morphism();
// Degree-2 morphism from banana(2) onto a single edge.
IndexedMorphism banana2_morphism();
// Triangle onto an edge with one contracted side.
IndexedMorphism triangle_morphism();

std::vector<std::string> names();
WeightedGraph by_name(const std::string& name);

}  // namespace fixtures
}  // namespace gonal
