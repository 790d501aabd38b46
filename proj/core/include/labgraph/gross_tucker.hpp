#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "labgraph/action.hpp"
#include "labgraph/morphism.hpp"
#include "labgraph/skew_product.hpp"

namespace labgraph {

// Sections of the quotient projection, keyed by orbit id.
struct SectionPack {
  IdMap eta0;  // orbit vertex -> vertex
  IdMap eta1;  // orbit edge -> edge; derived from eta0 when empty
  IdMap etaA;  // orbit letter -> letter; least member when empty
};

// The unique eta1 with s(eta1(Ge)) = eta0(s(Ge)), by lifting each orbit
// edge at eta0 of its source. Throws Error(kLiftFailure) when a lift is
// missing or not unique, and Error(kInvalidArgument) when eta0 is not a
// section.
IdMap DeriveEta1(const LabeledGraphAction& action, const IdMap& eta0);

// Least member of every letter orbit.
IdMap DefaultEtaA(const LabeledGraphAction& action);

struct DerivedCocycles {
  Cocycle c;
  Cocycle d;
};

// c(Ge): the unique h with alpha_h eta0(r(Ge)) = r(eta1(Ge)).
// d(Ge): the unique k with alpha_k etaA(Ge's label orbit) = L(eta1(Ge)).
// Throws Error(kNonFreeWitness) when no unique element exists. Missing
// eta1/etaA entries are filled as in Reconstruct.
DerivedCocycles DeriveCocycles(const LabeledGraphAction& action, const SectionPack& pack);

struct Reconstruction {
  QuotientLabeledGraph quotient;
  SectionPack sections;
  SkewSpec spec;
  SkewLabeledGraph skew;
  // From the skew product over the quotient onto the acted-on graph.
  LabeledGraphMorphism iso;
  MorphismReport morphism;
  EquivarianceReport equivariance;
  // Fundamental domain used by the label-consistent variant.
  std::vector<std::string> domain;
};

// Skew product over the quotient with derived (c, d) and the map
// (Gx, g) -> alpha_g eta(Gx) on every carrier, verified as an equivariant
// isomorphism. Integer actions are reconstructed on a window wide enough to
// cover the acted-on materialization and verified there. Throws
// Error(kNonFreeWitness) for non-free actions and Error(kVerificationFailure)
// naming the failing law.
Reconstruction Reconstruct(const LabeledGraphAction& action, SectionPack pack);

// Reconstruct with eta0 mapping every orbit into a fundamental domain, so
// that c and d are label consistent. The domain is searched when not
// supplied. Throws Error(kNoFundamentalDomain) when none exists or the
// supplied one fails, and Error(kLabelConsistencyViolation) if a derived
// cocycle does not factor through the labeling.
Reconstruction ReconstructLabelConsistent(const LabeledGraphAction& action,
                                          const std::optional<std::vector<std::string>>& domain = std::nullopt,
                                          const IdMap& etaA = {}, std::size_t cap = kDefaultCandidateCap);

}  // namespace labgraph
