#pragma once

#include <cstddef>
#include <random>

#include "labgraph/action.hpp"
#include "labgraph/labeled_graph.hpp"
#include "labgraph/skew_product.hpp"

namespace labgraph::testing {

struct RandomGraphShape {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 10;
  std::size_t max_letters = 3;
};

// Vertices "v0".., edges "e0".., letters "a".."z". Loops and parallel edges
// occur; the graph need not be valid.
LabeledGraph RandomLabeledGraph(std::mt19937_64& rng, const RandomGraphShape& shape = {});

// Like RandomLabeledGraph but every vertex emits and receives an edge.
LabeledGraph RandomValidLabeledGraph(std::mt19937_64& rng, const RandomGraphShape& shape = {});

// Cyclic groups of order 1..4 or the symmetric group on three points.
Group RandomFiniteGroup(std::mt19937_64& rng);

// Skew product with label-consistent c and d over a random valid base.
SkewSpec RandomLabelConsistentSkew(std::mt19937_64& rng, const Group& group, const RandomGraphShape& shape = {});

// Translation action on a finite skew product with every id renamed at
// random, given as explicit per-element maps: a free action that has a
// fundamental domain but carries no coordinates.
LabeledGraphAction ScrambledTranslationAction(std::mt19937_64& rng, const SkewSpec& spec);

}  // namespace labgraph::testing
