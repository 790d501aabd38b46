#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "labgraph/labeled_graph.hpp"

namespace labgraph {

using IdMap = std::map<std::string, std::string>;

// phi = (phi^0, phi^1, phi^A) between two labeled graphs, keyed by id.
struct LabeledGraphMorphism {
  IdMap vertex_map;
  IdMap edge_map;
  IdMap alphabet_map;

  bool operator==(const LabeledGraphMorphism&) const = default;
};

// kPartial is used for windowed materializations of infinite graphs: maps
// may omit items whose image falls outside the window, and laws are only
// checked where every participating image is defined.
enum class MapDomain { kTotal, kPartial };

struct MorphismReport {
  bool is_morphism = false;
  bool is_isomorphism = false;
  bool injective = false;
  bool surjective = false;
  bool partial = false;
  std::size_t checked_edges = 0;
  std::size_t skipped_edges = 0;
  // First violated condition with its witness.
  std::optional<std::string> failure;
};

MorphismReport VerifyMorphism(const LabeledGraph& source, const LabeledGraph& target,
                              const LabeledGraphMorphism& m,
                              MapDomain domain = MapDomain::kTotal);

LabeledGraphMorphism IdentityMorphism(const LabeledGraph& lg);

// outer after inner. Items whose image is undefined at either stage are
// dropped, so composing partial maps yields a partial map.
LabeledGraphMorphism Compose(const LabeledGraphMorphism& outer, const LabeledGraphMorphism& inner);

// Throws Error(kInvalidArgument) if some component is not injective.
LabeledGraphMorphism Inverse(const LabeledGraphMorphism& m);

// Composite f after g of two automorphisms of lg. Throws
// Error(kNotAnAutomorphism) naming the factor that fails verification.
LabeledGraphMorphism ComposeAutomorphisms(const LabeledGraph& lg, const LabeledGraphMorphism& f,
                                          const LabeledGraphMorphism& g);

}  // namespace labgraph
