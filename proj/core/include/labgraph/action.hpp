#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "labgraph/group.hpp"
#include "labgraph/labeled_graph.hpp"
#include "labgraph/morphism.hpp"

namespace labgraph {

// Position of a skew-product item: (base item, group element).
struct Coordinate {
  std::string base;
  Element g = 0;
  bool operator==(const Coordinate&) const = default;
};

struct SkewCoordinates {
  std::map<std::string, Coordinate> vertex;
  std::map<std::string, Coordinate> edge;
  std::map<std::string, Coordinate> letter;
};

// A homomorphism from a group into labeled graph automorphisms, stored as
// one (vertex, edge, alphabet) triple per element in scope.
//
// Finite groups carry a total triple for every element. Actions of the
// integers exist only as windowed views of a skew presentation: scope is a
// finite range of translations and every map is partial (items translated
// out of the materialized window have no image).
class LabeledGraphAction {
 public:
  static LabeledGraphAction FromElements(Group group, LabeledGraph graph,
                                         std::map<Element, LabeledGraphMorphism> maps);
  // Extends generator triples to the whole (finite) group by composition
  // along a breadth-first word search. Throws Error(kInvalidArgument) when
  // the generators do not reach every element.
  static LabeledGraphAction FromGenerators(Group group, LabeledGraph graph,
                                           const std::vector<std::pair<Element, LabeledGraphMorphism>>& generators);
  // Translation action on a skew presentation. `window` is set for
  // materializations of the integers and makes every map partial.
  static LabeledGraphAction FromSkew(Group group, LabeledGraph graph,
                                     std::map<Element, LabeledGraphMorphism> maps, SkewCoordinates coords,
                                     std::optional<Window> window, std::set<std::string> interior);

  const Group& group() const { return group_; }
  const LabeledGraph& graph() const { return graph_; }
  const std::vector<Element>& scope() const { return scope_; }
  bool windowed() const { return window_.has_value(); }
  const std::optional<Window>& window() const { return window_; }
  const std::optional<SkewCoordinates>& coordinates() const { return coords_; }

  bool in_scope(Element g) const { return maps_.contains(g); }
  // Throws Error(kInvalidArgument) for elements outside scope.
  const LabeledGraphMorphism& maps(Element g) const;

  std::optional<std::string> apply_vertex(Element g, const std::string& v) const;
  std::optional<std::string> apply_edge(Element g, const std::string& e) const;
  std::optional<std::string> apply_letter(Element g, const std::string& a) const;

  // Vertices whose incident edges are all materialized. Every vertex for
  // unwindowed actions.
  const std::set<std::string>& interior_vertices() const { return interior_; }

 private:
  Group group_;
  LabeledGraph graph_;
  std::map<Element, LabeledGraphMorphism> maps_;
  std::vector<Element> scope_;
  std::optional<Window> window_;
  std::optional<SkewCoordinates> coords_;
  std::set<std::string> interior_;
};

struct ActionReport {
  bool ok = true;
  bool windowed = false;  // "verified on window" rather than globally
  std::size_t elements_checked = 0;
  std::size_t products_checked = 0;
  std::vector<std::string> failures;
};

// Each triple is an automorphism (partial bijection on windows), the
// identity acts trivially, and triple(gh) = triple(g) o triple(h).
ActionReport VerifyAction(const LabeledGraphAction& action);

struct FreeResult {
  bool free = true;
  std::string element;  // formatted group element
  std::string item;     // the fixed vertex or letter
  bool fixed_letter = false;
};

// Trivial vertex stabilizers and trivial alphabet stabilizers.
FreeResult IsFree(const LabeledGraphAction& action);

struct Orbits {
  std::map<std::string, std::string> vertex;  // item -> orbit id
  std::map<std::string, std::string> edge;
  std::map<std::string, std::string> letter;
};

// Orbit ids are the least member id, except for skew presentations where
// every member shares its base coordinate and the orbit is named by it.
Orbits ComputeOrbits(const LabeledGraphAction& action);

struct QuotientLabeledGraph {
  LabeledGraph graph;
  LabeledGraphMorphism projection;
  Orbits orbits;
};

// Orbit graph with orbit labeling. Well-definedness of r, s and L/G is
// re-verified; inconsistent action data raises Error(kWellDefinedness).
QuotientLabeledGraph Quotient(const LabeledGraphAction& action);

struct LiftingResult {
  bool holds = true;
  std::string vertex;  // upstairs vertex u
  std::string edge;    // downstairs edge e with s(e) = p(u)
  std::size_t lifts = 0;
};

// Unique path lifting of p: source -> target, checked at every source vertex
// in `at` (all source vertices when empty).
LiftingResult HasUniquePathLifting(const LabeledGraph& source, const LabeledGraph& target,
                                   const LabeledGraphMorphism& p, const std::set<std::string>& at = {});

struct DomainViolation {
  enum class Clause { kTransversal, kRange, kSource };
  Clause clause = Clause::kTransversal;
  std::string detail;
  std::string edge1;
  std::string edge2;
  std::string label1;
  std::string label2;
};

struct FundamentalDomainResult {
  bool holds = true;
  // At most one violation per clause, in the order transversal, (a), (b).
  std::vector<DomainViolation> violations;

  const DomainViolation* find(DomainViolation::Clause clause) const;
};

std::string_view ClauseName(DomainViolation::Clause clause);

FundamentalDomainResult IsFundamentalDomain(const LabeledGraphAction& action,
                                            const std::vector<std::string>& domain);

struct DomainSearch {
  std::optional<std::vector<std::string>> domain;
  std::size_t candidates_tried = 0;
  std::size_t search_space = 0;
};

inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;

// First transversal, in odometer order over sorted orbits and sorted
// interior members, that is a fundamental domain. Throws
// Error(kSearchSpaceExceeded) when the product of orbit sizes exceeds cap.
DomainSearch FindFundamentalDomain(const LabeledGraphAction& action,
                                   std::size_t cap = kDefaultCandidateCap);

using Cocycle = std::map<std::string, Element>;  // edge id -> element
using LetterCocycle = std::map<std::string, Element>;  // letter id -> element

struct LabelConsistency {
  bool consistent = true;
  LetterCocycle factoring;  // C with c = C o L, when consistent
  std::string edge1;
  std::string edge2;
};

// Throws Error(kInvalidArgument) when c is not total on edges.
LabelConsistency IsLabelConsistent(const LabeledGraph& lg, const Cocycle& c);

}  // namespace labgraph
