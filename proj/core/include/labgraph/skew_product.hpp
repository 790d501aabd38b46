#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "labgraph/action.hpp"
#include "labgraph/group.hpp"
#include "labgraph/labeled_graph.hpp"
#include "labgraph/morphism.hpp"

namespace labgraph {

// Base labeled graph with edge cocycles c (ranges) and d (labels). This is
// the authoritative form of a skew product; materializations are views.
class SkewSpec {
 public:
  SkewSpec() = default;
  // Throws Error(kInvalidArgument) when c or d is not total on base edges,
  // mentions unknown edges, or takes values outside the group.
  SkewSpec(LabeledGraph base, Group group, Cocycle c, Cocycle d);
  // d(e) = identity for every edge.
  static SkewSpec WithUnitLabels(LabeledGraph base, Group group, Cocycle c);

  const LabeledGraph& base() const { return base_; }
  const Group& group() const { return group_; }
  const Cocycle& c() const { return c_; }
  const Cocycle& d() const { return d_; }
  const LabelConsistency& c_consistency() const { return c_consistency_; }
  const LabelConsistency& d_consistency() const { return d_consistency_; }
  bool unit_labels() const;

 private:
  LabeledGraph base_;
  Group group_;
  Cocycle c_;
  Cocycle d_;
  LabelConsistency c_consistency_;
  LabelConsistency d_consistency_;
};

// "(x,g)" with g in the group's text form.
std::string SkewId(const Group& group, const std::string& base, Element g);

struct SkewLabeledGraph {
  SkewSpec spec;
  std::optional<Window> window;  // empty for finite groups: all of G
  LabeledGraph graph;
  SkewCoordinates coords;
  // Ranges of edges leaving the window; they carry no out-edges.
  std::set<std::string> escape_vertices;
  std::set<std::string> boundary_edges;
  // Window vertices whose in-edges and out-edges are all materialized.
  std::set<std::string> interior;

  std::optional<std::string> find_vertex(const std::string& base, Element g) const;
  std::optional<std::string> find_edge(const std::string& base, Element g) const;
  std::optional<std::string> find_letter(const std::string& base, Element g) const;
};

// Vertices E^0 x W, edges E^1 x W with src(e,g) = (s(e),g),
// dst(e,g) = (r(e), g c(e)) and label (L(e), g d(e)). A window is required
// for the integers and rejected for finite groups (Error(kInvalidArgument)).
SkewLabeledGraph SkewProduct(const SkewSpec& spec, std::optional<Window> window = std::nullopt);

// g -> tau_g with tau_g(x,h) = (x,gh) on vertices, edges and letters. For a
// window the scope is [-span, span] (default: the window width) and items
// translated out of the materialization have no image.
LabeledGraphAction LeftTranslation(const SkewLabeledGraph& skew, std::optional<Element> span = std::nullopt);

// Product of c along the path (identity for the empty path).
Element PathCocycle(const SkewSpec& spec, const Path& path);

// mu_g = (mu_1, g)(mu_2, g c(mu_1)) ... as a path of the materialization.
// Throws Error(kOutOfWindow) when some lifted edge is not materialized and
// Error(kInvalidArgument) when mu is not a base path.
Path LiftPath(const SkewLabeledGraph& skew, const Path& mu, Element g);

// (beta, g) = (beta_1, g)(beta_2, g C(beta_1)) ... as (letter, element)
// pairs. Requires c label consistent and d = 1 (Error(kPrecondition)) and
// beta in L^+(E) (Error(kNotALabeledPath)).
std::vector<Coordinate> IdentifyLabeledPath(const SkewSpec& spec, const Word& beta, Element g);

// The materialization's word for a list of skew letters. Throws
// Error(kOutOfWindow) for letters outside the materialized alphabet.
Word SkewWord(const SkewLabeledGraph& skew, const std::vector<Coordinate>& letters);

struct SkewRange {
  VertexSet base_range;
  Element g = 0;
};

// r(beta, g) = r(beta) x {g C(beta)}; same preconditions as
// IdentifyLabeledPath.
SkewRange LabeledRange(const SkewSpec& spec, const Word& beta, Element g);

struct EquivarianceReport {
  bool equivariant = true;
  std::size_t checked = 0;
  std::optional<std::string> failure;
};

// phi o tau_h = alpha_h o phi for every h in both scopes, wherever every
// side is defined.
EquivarianceReport CheckEquivariance(const LabeledGraphAction& from, const LabeledGraphAction& to,
                                     const LabeledGraphMorphism& phi);

struct RelabelResult {
  LabeledGraphMorphism iso;
  MorphismReport morphism;
  EquivarianceReport equivariance;
  bool verified = false;
};

// Identity on vertices and edges, (a,g) -> (a, g D1(a)^-1 D2(a)) on
// letters. Both materializations must share base, group, c and window;
// both d must be label consistent (Error(kPrecondition)).
RelabelResult RelabelIso(const SkewLabeledGraph& first, const SkewLabeledGraph& second);

}  // namespace labgraph
