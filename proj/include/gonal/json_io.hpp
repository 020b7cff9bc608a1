#pragma once

#include <map>
#include <optional>
#include <string>

#include "gonal/divisor.hpp"
#include "gonal/graph.hpp"
#include "gonal/hurwitz.hpp"
#include "gonal/morphism.hpp"

namespace gonal {

// Parse errors carry the byte offset reported by the JSON parser plus a note
// on which reference failed to resolve.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WeightedGraph parse_graph(const std::string& text);
std::string graph_to_json(const WeightedGraph& g);

struct DivisorFile {
    Divisor divisor;
    std::optional<WeightedGraph> graph;    // present when "graph" is inline
    std::optional<std::string> graph_ref;  // present when "graph" is an id
};
DivisorFile parse_divisor(const std::string& text);
std::string divisor_to_json(const Divisor& d);

IndexedMorphism parse_morphism(const std::string& text);
std::string morphism_to_json(const IndexedMorphism& phi);

PartitionSet parse_partition_set(const std::string& text);
std::string partition_set_to_json(const PartitionSet& p);

std::map<std::string, int> parse_refinement_plan(const std::string& text);

}  // namespace gonal
