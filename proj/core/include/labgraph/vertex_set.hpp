#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "labgraph/graph.hpp"

namespace labgraph {

// Subset of E^0 as a bitset over the graph's frozen (sorted) vertex order.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

VertexSet EmptySet(const DirectedGraph& graph);
VertexSet FullSet(const DirectedGraph& graph);
// Throws Error(kInvalidArgument) on unknown ids.
VertexSet MakeVertexSet(const DirectedGraph& graph, const std::vector<std::string>& ids);
std::vector<std::string> VertexSetIds(const DirectedGraph& graph, const VertexSet& set);
// "{v,w}" with ids in vertex order; "{}" for the empty set.
std::string FormatVertexSet(const DirectedGraph& graph, const VertexSet& set);

// Deterministic order used for printing collections: compare the ascending
// lists of member indices lexicographically, so {v} < {v,w} < {w}.
struct CanonicalSetLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const;
};

}  // namespace labgraph
