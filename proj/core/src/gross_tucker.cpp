#include "labgraph/gross_tucker.hpp"

#include <algorithm>
#include <limits>

#include "labgraph/error.hpp"

namespace labgraph {

namespace {

enum class Carrier { kVertex, kEdge, kLetter };

const char* CarrierName(Carrier k) {
  switch (k) {
    case Carrier::kVertex: return "vertex";
    case Carrier::kEdge: return "edge";
    case Carrier::kLetter: return "letter";
  }
  return "?";
}

// alpha_g on the acted-on graph. Windowed actions translate by coordinate
// arithmetic, so elements outside the translation scope still apply.
class Translator {
 public:
  explicit Translator(const LabeledGraphAction& action) : action_(action) {
    if (const auto& coords = action.coordinates()) {
      for (const auto& [id, c] : coords->vertex) index_[0].emplace(std::make_pair(c.base, c.g), id);
      for (const auto& [id, c] : coords->edge) index_[1].emplace(std::make_pair(c.base, c.g), id);
      for (const auto& [id, c] : coords->letter) index_[2].emplace(std::make_pair(c.base, c.g), id);
    }
  }

  std::optional<std::string> apply(Carrier k, Element g, const std::string& x) const {
    if (!action_.windowed()) {
      switch (k) {
        case Carrier::kVertex: return action_.apply_vertex(g, x);
        case Carrier::kEdge: return action_.apply_edge(g, x);
        case Carrier::kLetter: return action_.apply_letter(g, x);
      }
    }
    const Coordinate& c = coordinate(k, x);
    const auto& index = index_[static_cast<int>(k)];
    auto it = index.find({c.base, action_.group().op(g, c.g)});
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // The unique h with alpha_h(from) = to.
  Element solve(Carrier k, const std::string& from, const std::string& to) const {
    const Group& G = action_.group();
    if (action_.coordinates()) {
      const Coordinate& cf = coordinate(k, from);
      const Coordinate& ct = coordinate(k, to);
      const Element h = G.op(ct.g, G.inv(cf.g));
      if (cf.base != ct.base || apply(k, h, from) != to) {
        throw Error(ErrorCode::kNonFreeWitness, std::string("no element moves ") + CarrierName(k) + " '" + from +
                                                    "' to '" + to + "'");
      }
      return h;
    }
    std::vector<Element> found;
    for (Element h : action_.scope()) {
      if (apply(k, h, from) == to) found.push_back(h);
    }
    if (found.size() != 1) {
      throw Error(ErrorCode::kNonFreeWitness, std::to_string(found.size()) + " elements move " + CarrierName(k) +
                                                  " '" + from + "' to '" + to + "'");
    }
    return found.front();
  }

  const Coordinate& coordinate(Carrier k, const std::string& x) const {
    const auto& coords = *action_.coordinates();
    const auto& map = k == Carrier::kVertex ? coords.vertex : k == Carrier::kEdge ? coords.edge : coords.letter;
    auto it = map.find(x);
    if (it == map.end()) {
      throw Error(ErrorCode::kInvalidArgument, std::string("unknown ") + CarrierName(k) + " '" + x + "'");
    }
    return it->second;
  }

 private:
  const LabeledGraphAction& action_;
  std::map<std::pair<std::string, Element>, std::string> index_[3];
};

void RequireFree(const LabeledGraphAction& action) {
  FreeResult free = IsFree(action);
  if (!free.free) {
    throw Error(ErrorCode::kNonFreeWitness, "element " + free.element + " fixes " +
                                                (free.fixed_letter ? "letter '" : "vertex '") + free.item + "'");
  }
}

std::set<std::string> OrbitIds(const std::map<std::string, std::string>& orbit_of) {
  std::set<std::string> out;
  for (const auto& [x, orbit] : orbit_of) out.insert(orbit);
  return out;
}

void CheckSection(const std::map<std::string, std::string>& orbit_of, const IdMap& eta, const char* name) {
  const std::set<std::string> orbits = OrbitIds(orbit_of);
  for (const auto& [orbit, x] : eta) {
    if (!orbits.contains(orbit)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(name) + " mentions unknown orbit '" + orbit + "'");
    }
    auto it = orbit_of.find(x);
    if (it == orbit_of.end() || it->second != orbit) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " sends orbit '" + orbit + "' to '" + x + "', which is not a member");
    }
  }
  for (const auto& orbit : orbits) {
    if (!eta.contains(orbit)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(name) + " has no value on orbit '" + orbit + "'");
    }
  }
}

IdMap Eta1(const LabeledGraphAction& action, const Orbits& orbits, const IdMap& eta0) {
  CheckSection(orbits.vertex, eta0, "eta0");
  const DirectedGraph& g = action.graph().graph();
  std::map<std::string, std::string> source_orbit;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    source_orbit.emplace(orbits.edge.at(g.edge_id(e)), orbits.vertex.at(g.vertex_id(g.src(e))));
  }
  IdMap eta1;
  for (const auto& [edge_orbit, vertex_orbit] : source_orbit) {
    const std::string& start = eta0.at(vertex_orbit);
    std::vector<std::string> lifts;
    for (EdgeIndex e : g.out_edges(g.vertex(start))) {
      if (orbits.edge.at(g.edge_id(e)) == edge_orbit) lifts.push_back(g.edge_id(e));
    }
    if (lifts.size() != 1) {
      throw Error(ErrorCode::kLiftFailure, "orbit edge '" + edge_orbit + "' has " + std::to_string(lifts.size()) +
                                               " lifts at '" + start + "'");
    }
    eta1.emplace(edge_orbit, lifts.front());
  }
  return eta1;
}

IdMap LeastMembers(const std::map<std::string, std::string>& orbit_of) {
  IdMap out;
  for (const auto& [x, orbit] : orbit_of) out.emplace(orbit, x);  // map order: first is least
  return out;
}

SectionPack Complete(const LabeledGraphAction& action, const Orbits& orbits, SectionPack pack) {
  IdMap derived = Eta1(action, orbits, pack.eta0);
  if (!pack.eta1.empty() && pack.eta1 != derived) {
    for (const auto& [orbit, e] : derived) {
      auto it = pack.eta1.find(orbit);
      if (it == pack.eta1.end() || it->second != e) {
        throw Error(ErrorCode::kLiftFailure, "supplied eta1 at orbit '" + orbit + "' is not the lift '" + e +
                                                 "' at eta0 of its source");
      }
    }
    throw Error(ErrorCode::kLiftFailure, "supplied eta1 mentions unknown orbit edges");
  }
  pack.eta1 = std::move(derived);
  if (pack.etaA.empty()) pack.etaA = LeastMembers(orbits.letter);
  CheckSection(orbits.letter, pack.etaA, "etaA");
  return pack;
}

DerivedCocycles Solve(const LabeledGraphAction& action, const Orbits& orbits, const SectionPack& pack) {
  const LabeledGraph& lg = action.graph();
  const DirectedGraph& g = lg.graph();
  const Translator alpha(action);
  DerivedCocycles out;
  for (const auto& [orbit, lift] : pack.eta1) {
    const EdgeIndex e = g.edge(lift);
    const std::string& range = g.vertex_id(g.dst(e));
    out.c.emplace(orbit, alpha.solve(Carrier::kVertex, pack.eta0.at(orbits.vertex.at(range)), range));
    const std::string& label = lg.label_id(e);
    out.d.emplace(orbit, alpha.solve(Carrier::kLetter, pack.etaA.at(orbits.letter.at(label)), label));
  }
  return out;
}

std::optional<Window> ReconstructionWindow(const LabeledGraphAction& action, const SectionPack& pack) {
  if (!action.windowed()) return std::nullopt;
  const SkewCoordinates& coords = *action.coordinates();
  Element lo = std::numeric_limits<Element>::max(), hi = std::numeric_limits<Element>::min();
  for (const auto* map : {&coords.vertex, &coords.edge, &coords.letter}) {
    for (const auto& [id, c] : *map) {
      lo = std::min(lo, c.g);
      hi = std::max(hi, c.g);
    }
  }
  Element klo = std::numeric_limits<Element>::max(), khi = std::numeric_limits<Element>::min();
  auto extend = [&](const IdMap& eta, const std::map<std::string, Coordinate>& at) {
    for (const auto& [orbit, x] : eta) {
      klo = std::min(klo, at.at(x).g);
      khi = std::max(khi, at.at(x).g);
    }
  };
  extend(pack.eta0, coords.vertex);
  extend(pack.eta1, coords.edge);
  extend(pack.etaA, coords.letter);
  return MakeWindow(lo - khi, hi - klo);
}

}  // namespace

IdMap DeriveEta1(const LabeledGraphAction& action, const IdMap& eta0) {
  return Eta1(action, ComputeOrbits(action), eta0);
}

IdMap DefaultEtaA(const LabeledGraphAction& action) { return LeastMembers(ComputeOrbits(action).letter); }

DerivedCocycles DeriveCocycles(const LabeledGraphAction& action, const SectionPack& pack) {
  const Orbits orbits = ComputeOrbits(action);
  return Solve(action, orbits, Complete(action, orbits, pack));
}

Reconstruction Reconstruct(const LabeledGraphAction& action, SectionPack pack) {
  RequireFree(action);
  Reconstruction out;
  out.quotient = Quotient(action);
  const Orbits& orbits = out.quotient.orbits;
  out.sections = Complete(action, orbits, std::move(pack));
  DerivedCocycles cd = Solve(action, orbits, out.sections);
  out.spec = SkewSpec(out.quotient.graph, action.group(), std::move(cd.c), std::move(cd.d));
  out.skew = SkewProduct(out.spec, ReconstructionWindow(action, out.sections));

  const Translator alpha(action);
  auto image = [&](Carrier k, const IdMap& eta, const Coordinate& at) {
    return alpha.apply(k, at.g, eta.at(at.base));
  };
  for (const auto& [id, at] : out.skew.coords.vertex) {
    if (auto to = image(Carrier::kVertex, out.sections.eta0, at)) out.iso.vertex_map.emplace(id, *to);
  }
  for (const auto& [id, at] : out.skew.coords.edge) {
    if (auto to = image(Carrier::kEdge, out.sections.eta1, at)) out.iso.edge_map.emplace(id, *to);
  }
  for (const auto& [id, at] : out.skew.coords.letter) {
    if (auto to = image(Carrier::kLetter, out.sections.etaA, at)) out.iso.alphabet_map.emplace(id, *to);
  }

  out.morphism = VerifyMorphism(out.skew.graph, action.graph(), out.iso,
                                action.windowed() ? MapDomain::kPartial : MapDomain::kTotal);
  if (!out.morphism.is_isomorphism) {
    throw Error(ErrorCode::kVerificationFailure,
                "reconstruction map is not an isomorphism: " +
                    out.morphism.failure.value_or(!out.morphism.injective ? "not injective" : "not surjective"));
  }
  std::optional<Element> span;
  if (action.windowed()) {
    span = 0;
    for (Element h : action.scope()) span = std::max(*span, h < 0 ? -h : h);
  }
  out.equivariance = CheckEquivariance(LeftTranslation(out.skew, span), action, out.iso);
  if (!out.equivariance.equivariant) {
    throw Error(ErrorCode::kVerificationFailure, *out.equivariance.failure);
  }
  return out;
}

Reconstruction ReconstructLabelConsistent(const LabeledGraphAction& action,
                                          const std::optional<std::vector<std::string>>& domain,
                                          const IdMap& etaA, std::size_t cap) {
  RequireFree(action);
  std::vector<std::string> T;
  if (domain) {
    FundamentalDomainResult check = IsFundamentalDomain(action, *domain);
    if (!check.holds) {
      const DomainViolation& v = check.violations.front();
      std::string message = "supplied set fails clause " + std::string(ClauseName(v.clause)) + ": " + v.detail;
      if (!v.edge1.empty()) {
        message += " ('" + v.edge1 + "' labeled '" + v.label1 + "' vs '" + v.edge2 + "' labeled '" + v.label2 + "')";
      }
      throw Error(ErrorCode::kNoFundamentalDomain, message);
    }
    T = *domain;
  } else {
    DomainSearch search = FindFundamentalDomain(action, cap);
    if (!search.domain) {
      throw Error(ErrorCode::kNoFundamentalDomain,
                  "no transversal among " + std::to_string(search.search_space) + " candidates is a fundamental domain");
    }
    T = *search.domain;
  }
  const Orbits orbits = ComputeOrbits(action);
  SectionPack pack;
  for (const auto& t : T) pack.eta0.emplace(orbits.vertex.at(t), t);
  pack.etaA = etaA;
  Reconstruction out = Reconstruct(action, std::move(pack));
  out.domain = std::move(T);
  for (const auto& [name, lc] : {std::pair{"c", &out.spec.c_consistency()}, std::pair{"d", &out.spec.d_consistency()}}) {
    if (!lc->consistent) {
      std::string dump;
      for (const auto& [orbit, x] : out.sections.eta0) dump += " eta0(" + orbit + ")=" + x;
      for (const auto& [orbit, x] : out.sections.eta1) dump += " eta1(" + orbit + ")=" + x;
      throw Error(ErrorCode::kLabelConsistencyViolation,
                  std::string("derived ") + name + " differs on edges '" + lc->edge1 + "' and '" + lc->edge2 +
                      "' with equal labels under a fundamental domain;" + dump);
    }
  }
  return out;
}

}  // namespace labgraph
