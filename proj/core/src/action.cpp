#include "labgraph/action.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "labgraph/error.hpp"

namespace labgraph {

namespace {

std::set<std::string> AllVertices(const LabeledGraph& lg) {
  return {lg.graph().vertices().begin(), lg.graph().vertices().end()};
}

std::optional<std::string> Apply(const IdMap& map, const std::string& key) {
  auto it = map.find(key);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace

LabeledGraphAction LabeledGraphAction::FromElements(Group group, LabeledGraph graph,
                                                    std::map<Element, LabeledGraphMorphism> maps) {
  if (!group.is_finite()) {
    throw Error(ErrorCode::kInvalidArgument,
                "explicit actions require a finite group; give integer actions as skew presentations");
  }
  for (Element g : group.elements()) {
    if (!maps.contains(g)) {
      throw Error(ErrorCode::kInvalidArgument, "no maps given for element " + group.format(g));
    }
  }
  for (const auto& [g, m] : maps) {
    if (!group.contains(g)) throw Error(ErrorCode::kInvalidArgument, "maps given for a non-element");
  }
  LabeledGraphAction a;
  a.interior_ = AllVertices(graph);
  a.group_ = std::move(group);
  a.graph_ = std::move(graph);
  a.maps_ = std::move(maps);
  for (const auto& [g, m] : a.maps_) a.scope_.push_back(g);
  return a;
}

LabeledGraphAction LabeledGraphAction::FromGenerators(
    Group group, LabeledGraph graph, const std::vector<std::pair<Element, LabeledGraphMorphism>>& generators) {
  if (!group.is_finite()) {
    throw Error(ErrorCode::kInvalidArgument,
                "explicit actions require a finite group; give integer actions as skew presentations");
  }
  std::map<Element, LabeledGraphMorphism> maps;
  maps.emplace(group.identity(), IdentityMorphism(graph));
  std::deque<Element> queue{group.identity()};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (const auto& [s, ms] : generators) {
      if (!group.contains(s)) throw Error(ErrorCode::kInvalidArgument, "generator is not a group element");
      const Element sx = group.op(s, x);
      if (maps.contains(sx)) continue;
      maps.emplace(sx, Compose(ms, maps.at(x)));
      queue.push_back(sx);
    }
  }
  if (maps.size() != group.order()) {
    throw Error(ErrorCode::kInvalidArgument, "generators reach " + std::to_string(maps.size()) + " of " +
                                                 std::to_string(group.order()) + " group elements");
  }
  return FromElements(std::move(group), std::move(graph), std::move(maps));
}

LabeledGraphAction LabeledGraphAction::FromSkew(Group group, LabeledGraph graph,
                                                std::map<Element, LabeledGraphMorphism> maps,
                                                SkewCoordinates coords, std::optional<Window> window,
                                                std::set<std::string> interior) {
  LabeledGraphAction a;
  a.group_ = std::move(group);
  a.graph_ = std::move(graph);
  a.maps_ = std::move(maps);
  for (const auto& [g, m] : a.maps_) a.scope_.push_back(g);
  a.window_ = window;
  a.coords_ = std::move(coords);
  a.interior_ = window ? std::move(interior) : AllVertices(a.graph_);
  return a;
}

const LabeledGraphMorphism& LabeledGraphAction::maps(Element g) const {
  auto it = maps_.find(g);
  if (it == maps_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "element " + group_.format(g) + " is outside the action scope");
  }
  return it->second;
}

std::optional<std::string> LabeledGraphAction::apply_vertex(Element g, const std::string& v) const {
  auto it = maps_.find(g);
  return it == maps_.end() ? std::nullopt : Apply(it->second.vertex_map, v);
}

std::optional<std::string> LabeledGraphAction::apply_edge(Element g, const std::string& e) const {
  auto it = maps_.find(g);
  return it == maps_.end() ? std::nullopt : Apply(it->second.edge_map, e);
}

std::optional<std::string> LabeledGraphAction::apply_letter(Element g, const std::string& a) const {
  auto it = maps_.find(g);
  return it == maps_.end() ? std::nullopt : Apply(it->second.alphabet_map, a);
}

ActionReport VerifyAction(const LabeledGraphAction& action) {
  constexpr std::size_t kMaxFailures = 10;
  ActionReport report;
  report.windowed = action.windowed();
  const Group& G = action.group();
  const MapDomain domain = action.windowed() ? MapDomain::kPartial : MapDomain::kTotal;
  auto fail = [&](std::string msg) {
    report.ok = false;
    if (report.failures.size() < kMaxFailures) report.failures.push_back(std::move(msg));
  };

  if (!action.in_scope(G.identity())) {
    fail("identity element has no maps");
  } else if (action.maps(G.identity()) != IdentityMorphism(action.graph())) {
    fail("identity element does not act as the identity");
  }

  for (Element g : action.scope()) {
    ++report.elements_checked;
    MorphismReport m = VerifyMorphism(action.graph(), action.graph(), action.maps(g), domain);
    if (!m.is_morphism) {
      fail("element " + G.format(g) + ": " + m.failure.value_or("not a morphism"));
    } else if (!m.injective) {
      fail("element " + G.format(g) + ": maps are not injective");
    } else if (!action.windowed() && !m.surjective) {
      fail("element " + G.format(g) + ": maps are not surjective");
    }
  }

  using Carrier = const IdMap LabeledGraphMorphism::*;
  const std::pair<const char*, Carrier> carriers[] = {{"vertex", &LabeledGraphMorphism::vertex_map},
                                                      {"edge", &LabeledGraphMorphism::edge_map},
                                                      {"letter", &LabeledGraphMorphism::alphabet_map}};
  for (Element g : action.scope()) {
    for (Element h : action.scope()) {
      const Element gh = G.op(g, h);
      if (!action.in_scope(gh)) continue;
      ++report.products_checked;
      const auto& mg = action.maps(g);
      const auto& mh = action.maps(h);
      const auto& mgh = action.maps(gh);
      for (const auto& [name, member] : carriers) {
        for (const auto& [x, y] : mh.*member) {
          auto z = Apply(mg.*member, y);
          if (!z) continue;
          auto direct = Apply(mgh.*member, x);
          if (!direct || *direct != *z) {
            fail(std::string("homomorphism law fails: ") + name + " '" + x + "' under " + G.format(g) +
                 "*" + G.format(h) + " gives '" + direct.value_or("<undefined>") + "' but composite gives '" +
                 *z + "'");
          }
        }
      }
    }
  }
  return report;
}

FreeResult IsFree(const LabeledGraphAction& action) {
  const Group& G = action.group();
  for (Element g : action.scope()) {
    if (g == G.identity()) continue;
    const auto& m = action.maps(g);
    for (const auto& [x, y] : m.vertex_map) {
      if (x == y) return {false, G.format(g), x, false};
    }
    for (const auto& [x, y] : m.alphabet_map) {
      if (x == y) return {false, G.format(g), x, true};
    }
  }
  return {};
}

namespace {

class UnionFind {
 public:
  void add(const std::string& x) { parent_.emplace(x, x); }
  std::string find(const std::string& x) {
    std::string root = x;
    while (parent_.at(root) != root) root = parent_.at(root);
    std::string cur = x;
    while (parent_.at(cur) != root) {
      std::string next = parent_.at(cur);
      parent_[cur] = root;
      cur = next;
    }
    return root;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // Keep the lexicographically least id as root.
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

 private:
  std::map<std::string, std::string> parent_;
};

std::map<std::string, std::string> OrbitsOf(const LabeledGraphAction& action, const std::vector<std::string>& items,
                                            const IdMap LabeledGraphMorphism::*member,
                                            const std::map<std::string, Coordinate>* coords) {
  UnionFind uf;
  for (const auto& x : items) uf.add(x);
  for (Element g : action.scope()) {
    for (const auto& [x, y] : action.maps(g).*member) uf.unite(x, y);
  }
  std::map<std::string, std::string> root_name;
  if (coords != nullptr) {
    // Named by the shared base coordinate when the orbit has one.
    std::map<std::string, std::set<std::string>> bases;
    for (const auto& x : items) {
      auto it = coords->find(x);
      bases[uf.find(x)].insert(it == coords->end() ? std::string() : it->second.base);
    }
    std::set<std::string> used;
    bool unique = true;
    for (const auto& [root, b] : bases) {
      if (b.size() != 1 || b.begin()->empty() || !used.insert(*b.begin()).second) unique = false;
    }
    if (unique) {
      for (const auto& [root, b] : bases) root_name.emplace(root, *b.begin());
    }
  }
  std::map<std::string, std::string> out;
  for (const auto& x : items) {
    const std::string root = uf.find(x);
    auto it = root_name.find(root);
    out.emplace(x, it == root_name.end() ? root : it->second);
  }
  return out;
}

}  // namespace

Orbits ComputeOrbits(const LabeledGraphAction& action) {
  const LabeledGraph& lg = action.graph();
  std::vector<std::string> edges;
  for (const auto& e : lg.graph().edges()) edges.push_back(e.id);
  const auto& coords = action.coordinates();
  Orbits o;
  o.vertex = OrbitsOf(action, lg.graph().vertices(), &LabeledGraphMorphism::vertex_map,
                      coords ? &coords->vertex : nullptr);
  o.edge = OrbitsOf(action, edges, &LabeledGraphMorphism::edge_map, coords ? &coords->edge : nullptr);
  o.letter = OrbitsOf(action, lg.alphabet(), &LabeledGraphMorphism::alphabet_map,
                      coords ? &coords->letter : nullptr);
  return o;
}

QuotientLabeledGraph Quotient(const LabeledGraphAction& action) {
  const LabeledGraph& lg = action.graph();
  const DirectedGraph& g = lg.graph();
  QuotientLabeledGraph out;
  out.orbits = ComputeOrbits(action);
  const Orbits& o = out.orbits;

  struct OrbitEdge {
    std::string member;
    std::string src;
    std::string dst;
    std::string label;
  };
  std::map<std::string, OrbitEdge> orbit_edges;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const std::string& id = g.edge_id(e);
    OrbitEdge here{id, o.vertex.at(g.vertex_id(g.src(e))), o.vertex.at(g.vertex_id(g.dst(e))),
                   o.letter.at(lg.label_id(e))};
    auto [it, inserted] = orbit_edges.emplace(o.edge.at(id), here);
    if (inserted) continue;
    const OrbitEdge& first = it->second;
    auto clash = [&](const char* what, const std::string& a, const std::string& b) {
      throw Error(ErrorCode::kWellDefinedness, std::string(what) + " not well defined on edge orbit '" +
                                                   it->first + "': edges '" + first.member + "' and '" + id +
                                                   "' give '" + a + "' and '" + b + "'");
    };
    if (first.src != here.src) clash("source", first.src, here.src);
    if (first.dst != here.dst) clash("range", first.dst, here.dst);
    if (first.label != here.label) clash("label", first.label, here.label);
  }

  std::set<std::string> vertex_orbits;
  for (const auto& [v, orbit] : o.vertex) vertex_orbits.insert(orbit);
  std::vector<LabeledEdge> edges;
  for (const auto& [orbit, rec] : orbit_edges) edges.push_back({orbit, rec.src, rec.dst, rec.label});
  out.graph = LabeledGraph::FromEdges({vertex_orbits.begin(), vertex_orbits.end()}, edges);

  out.projection.vertex_map = o.vertex;
  out.projection.edge_map = o.edge;
  out.projection.alphabet_map = o.letter;
  MorphismReport check = VerifyMorphism(lg, out.graph, out.projection);
  if (!check.is_morphism || !check.surjective) {
    throw Error(ErrorCode::kWellDefinedness,
                "quotient projection is not a surjective morphism: " + check.failure.value_or("not surjective"));
  }
  return out;
}

LiftingResult HasUniquePathLifting(const LabeledGraph& source, const LabeledGraph& target,
                                   const LabeledGraphMorphism& p, const std::set<std::string>& at) {
  const DirectedGraph& sg = source.graph();
  const DirectedGraph& tg = target.graph();
  for (VertexIndex u = 0; u < sg.num_vertices(); ++u) {
    const std::string& uid = sg.vertex_id(u);
    if (!at.empty() && !at.contains(uid)) continue;
    auto pu = Apply(p.vertex_map, uid);
    if (!pu) throw Error(ErrorCode::kInvalidArgument, "projection undefined at vertex '" + uid + "'");
    std::map<std::string, std::size_t> lifts;
    for (EdgeIndex f : sg.out_edges(u)) {
      if (auto image = Apply(p.edge_map, sg.edge_id(f))) ++lifts[*image];
    }
    for (EdgeIndex e : tg.out_edges(tg.vertex(*pu))) {
      const std::size_t count = lifts[tg.edge_id(e)];
      if (count != 1) return {false, uid, tg.edge_id(e), count};
    }
  }
  return {};
}

const DomainViolation* FundamentalDomainResult::find(DomainViolation::Clause clause) const {
  for (const auto& v : violations) {
    if (v.clause == clause) return &v;
  }
  return nullptr;
}

std::string_view ClauseName(DomainViolation::Clause clause) {
  switch (clause) {
    case DomainViolation::Clause::kTransversal: return "transversal";
    case DomainViolation::Clause::kRange: return "(a) range";
    case DomainViolation::Clause::kSource: return "(b) source";
  }
  return "?";
}

namespace {

FundamentalDomainResult CheckDomain(const LabeledGraphAction& action, const Orbits& orbits,
                                    const std::set<std::string>& T) {
  const LabeledGraph& lg = action.graph();
  const DirectedGraph& g = lg.graph();
  FundamentalDomainResult result;

  std::map<std::string, std::vector<std::string>> reps;
  for (const auto& [v, orbit] : orbits.vertex) reps[orbit];
  std::string problem;
  for (const auto& t : T) {
    if (!g.find_vertex(t)) {
      problem = "'" + t + "' is not a vertex";
      break;
    }
    if (!action.interior_vertices().contains(t)) {
      problem = "'" + t + "' lies outside the window interior";
      break;
    }
    reps[orbits.vertex.at(t)].push_back(t);
  }
  if (problem.empty()) {
    for (const auto& [orbit, members] : reps) {
      if (members.size() != 1) {
        problem = "orbit '" + orbit + "' has " + std::to_string(members.size()) + " representatives";
        break;
      }
    }
  }
  if (!problem.empty()) {
    result.violations.push_back({DomainViolation::Clause::kTransversal, problem, "", "", "", ""});
  }

  auto scan = [&](DomainViolation::Clause clause, const std::function<VertexIndex(EdgeIndex)>& end) {
    std::map<std::string, EdgeIndex> first_in_orbit;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!T.contains(g.vertex_id(end(e)))) continue;
      const std::string& orbit = orbits.letter.at(lg.label_id(e));
      auto [it, inserted] = first_in_orbit.emplace(orbit, e);
      if (!inserted && lg.label(it->second) != lg.label(e)) {
        result.violations.push_back({clause, "edges with labels in one orbit carry different labels",
                                     g.edge_id(e), g.edge_id(it->second), lg.label_id(e),
                                     lg.label_id(it->second)});
        return;
      }
    }
  };
  scan(DomainViolation::Clause::kRange, [&](EdgeIndex e) { return g.dst(e); });
  scan(DomainViolation::Clause::kSource, [&](EdgeIndex e) { return g.src(e); });
  result.holds = result.violations.empty();
  return result;
}

}  // namespace

FundamentalDomainResult IsFundamentalDomain(const LabeledGraphAction& action,
                                            const std::vector<std::string>& domain) {
  return CheckDomain(action, ComputeOrbits(action), {domain.begin(), domain.end()});
}

DomainSearch FindFundamentalDomain(const LabeledGraphAction& action, std::size_t cap) {
  const Orbits orbits = ComputeOrbits(action);
  std::map<std::string, std::vector<std::string>> candidates;
  for (const auto& [v, orbit] : orbits.vertex) {
    auto& list = candidates[orbit];
    if (action.interior_vertices().contains(v)) list.push_back(v);
  }
  DomainSearch search;
  std::vector<const std::vector<std::string>*> slots;
  std::size_t space = 1;
  for (const auto& [orbit, list] : candidates) {
    if (list.empty()) {
      search.search_space = 0;
      return search;
    }
    if (space > cap / list.size() + 1 || space * list.size() > cap) {
      throw Error(ErrorCode::kSearchSpaceExceeded,
                  "transversal search space exceeds the cap of " + std::to_string(cap) + " candidates");
    }
    space *= list.size();
    slots.push_back(&list);
  }
  search.search_space = space;
  std::vector<std::size_t> odometer(slots.size(), 0);
  while (true) {
    std::set<std::string> T;
    for (std::size_t i = 0; i < slots.size(); ++i) T.insert((*slots[i])[odometer[i]]);
    ++search.candidates_tried;
    if (CheckDomain(action, orbits, T).holds) {
      search.domain = std::vector<std::string>(T.begin(), T.end());
      return search;
    }
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++odometer[i] < slots[i]->size()) break;
      odometer[i] = 0;
      if (i == 0) return search;
    }
    if (slots.empty()) return search;
  }
}

LabelConsistency IsLabelConsistent(const LabeledGraph& lg, const Cocycle& c) {
  const DirectedGraph& g = lg.graph();
  LabelConsistency out;
  std::map<std::string, EdgeIndex> witness;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    auto it = c.find(g.edge_id(e));
    if (it == c.end()) {
      throw Error(ErrorCode::kInvalidArgument, "cocycle has no value on edge '" + g.edge_id(e) + "'");
    }
    const std::string& letter = lg.label_id(e);
    auto [fit, inserted] = out.factoring.emplace(letter, it->second);
    if (inserted) {
      witness.emplace(letter, e);
    } else if (fit->second != it->second) {
      return {false, {}, g.edge_id(witness.at(letter)), g.edge_id(e)};
    }
  }
  return out;
}

}  // namespace labgraph
