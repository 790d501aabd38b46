#include "labgraph/skew_product.hpp"

#include <algorithm>

#include "labgraph/error.hpp"

namespace labgraph {

namespace {

void CheckCocycle(const LabeledGraph& base, const Group& group, const Cocycle& map, const char* name) {
  const DirectedGraph& g = base.graph();
  for (const auto& [edge, value] : map) {
    if (!g.find_edge(edge)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(name) + " mentions unknown edge '" + edge + "'");
    }
    if (!group.contains(value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + "('" + edge + "') is not a group element");
    }
  }
  for (const auto& e : g.edges()) {
    if (!map.contains(e.id)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(name) + " has no value on edge '" + e.id + "'");
    }
  }
}

std::vector<Element> Columns(const Group& group, const std::optional<Window>& window) {
  if (!window) return group.elements();
  std::vector<Element> out;
  for (Element g = window->lo; g <= window->hi; ++g) out.push_back(g);
  return out;
}

bool SameLabeledGraph(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.graph().vertices() != b.graph().vertices() || a.alphabet() != b.alphabet()) return false;
  if (a.graph().edges() != b.graph().edges()) return false;
  for (EdgeIndex e = 0; e < a.graph().num_edges(); ++e) {
    if (a.label(e) != b.label(e)) return false;
  }
  return true;
}

void RequireUnitConsistent(const SkewSpec& spec) {
  if (!spec.c_consistency().consistent) {
    throw Error(ErrorCode::kPrecondition, "cocycle c is not label consistent: edges '" +
                                              spec.c_consistency().edge1 + "' and '" +
                                              spec.c_consistency().edge2 + "' share a label");
  }
  if (!spec.unit_labels()) {
    throw Error(ErrorCode::kPrecondition, "label cocycle d is not identically the identity");
  }
}

}  // namespace

SkewSpec::SkewSpec(LabeledGraph base, Group group, Cocycle c, Cocycle d)
    : base_(std::move(base)), group_(std::move(group)), c_(std::move(c)), d_(std::move(d)) {
  CheckCocycle(base_, group_, c_, "c");
  CheckCocycle(base_, group_, d_, "d");
  c_consistency_ = IsLabelConsistent(base_, c_);
  d_consistency_ = IsLabelConsistent(base_, d_);
}

SkewSpec SkewSpec::WithUnitLabels(LabeledGraph base, Group group, Cocycle c) {
  Cocycle d;
  for (const auto& e : base.graph().edges()) d.emplace(e.id, group.identity());
  return SkewSpec(std::move(base), std::move(group), std::move(c), std::move(d));
}

bool SkewSpec::unit_labels() const {
  return std::all_of(d_.begin(), d_.end(), [&](const auto& kv) { return kv.second == group_.identity(); });
}

std::string SkewId(const Group& group, const std::string& base, Element g) {
  return "(" + base + "," + group.format(g) + ")";
}

std::optional<std::string> SkewLabeledGraph::find_vertex(const std::string& base, Element g) const {
  if (!spec.group().contains(g)) return std::nullopt;
  std::string id = SkewId(spec.group(), base, g);
  if (!graph.graph().find_vertex(id)) return std::nullopt;
  return id;
}

std::optional<std::string> SkewLabeledGraph::find_edge(const std::string& base, Element g) const {
  if (!spec.group().contains(g)) return std::nullopt;
  std::string id = SkewId(spec.group(), base, g);
  if (!graph.graph().find_edge(id)) return std::nullopt;
  return id;
}

std::optional<std::string> SkewLabeledGraph::find_letter(const std::string& base, Element g) const {
  if (!spec.group().contains(g)) return std::nullopt;
  std::string id = SkewId(spec.group(), base, g);
  if (!graph.find_letter(id)) return std::nullopt;
  return id;
}

SkewLabeledGraph SkewProduct(const SkewSpec& spec, std::optional<Window> window) {
  const Group& G = spec.group();
  const LabeledGraph& base = spec.base();
  const DirectedGraph& bg = base.graph();
  if (!G.is_finite() && !window) {
    throw Error(ErrorCode::kInvalidArgument, "a window is required to materialize a skew product over the integers");
  }
  if (G.is_finite() && window) {
    throw Error(ErrorCode::kInvalidArgument, "windows apply only to skew products over the integers");
  }
  SkewLabeledGraph out;
  out.spec = spec;
  out.window = window;

  const std::vector<Element> columns = Columns(G, window);
  std::vector<std::string> vertices;
  for (Element g : columns) {
    for (const auto& x : bg.vertices()) {
      std::string id = SkewId(G, x, g);
      out.coords.vertex.emplace(id, Coordinate{x, g});
      vertices.push_back(std::move(id));
    }
  }
  std::vector<LabeledEdge> edges;
  for (Element g : columns) {
    for (EdgeIndex e = 0; e < bg.num_edges(); ++e) {
      const std::string& eid = bg.edge_id(e);
      const Element to = G.op(g, spec.c().at(eid));
      const Element tag = G.op(g, spec.d().at(eid));
      LabeledEdge le{SkewId(G, eid, g), SkewId(G, bg.vertex_id(bg.src(e)), g),
                     SkewId(G, bg.vertex_id(bg.dst(e)), to), SkewId(G, base.label_id(e), tag)};
      if (window && !window->contains(to)) {
        out.boundary_edges.insert(le.id);
        if (out.escape_vertices.insert(le.dst).second) {
          out.coords.vertex.emplace(le.dst, Coordinate{bg.vertex_id(bg.dst(e)), to});
          vertices.push_back(le.dst);
        }
      }
      out.coords.edge.emplace(le.id, Coordinate{eid, g});
      out.coords.letter.emplace(le.label, Coordinate{base.label_id(e), tag});
      edges.push_back(std::move(le));
    }
  }
  out.graph = LabeledGraph::FromEdges(std::move(vertices), edges);

  for (Element g : columns) {
    for (VertexIndex x = 0; x < bg.num_vertices(); ++x) {
      bool inside = true;
      if (window) {
        for (EdgeIndex e : bg.in_edges(x)) {
          if (!window->contains(G.op(g, G.inv(spec.c().at(bg.edge_id(e)))))) inside = false;
        }
      }
      if (inside) out.interior.insert(SkewId(G, bg.vertex_id(x), g));
    }
  }
  return out;
}

LabeledGraphAction LeftTranslation(const SkewLabeledGraph& skew, std::optional<Element> span) {
  const Group& G = skew.spec.group();
  std::vector<Element> scope;
  if (skew.window) {
    const Element width = span.value_or(skew.window->hi - skew.window->lo);
    if (width < 0) throw Error(ErrorCode::kInvalidArgument, "translation span must be non-negative");
    for (Element h = -width; h <= width; ++h) scope.push_back(h);
  } else {
    scope = G.elements();
  }
  const DirectedGraph& g = skew.graph.graph();
  std::map<Element, LabeledGraphMorphism> maps;
  for (Element h : scope) {
    LabeledGraphMorphism m;
    for (const auto& [id, at] : skew.coords.vertex) {
      std::string to = SkewId(G, at.base, G.op(h, at.g));
      if (g.find_vertex(to)) m.vertex_map.emplace(id, std::move(to));
    }
    for (const auto& [id, at] : skew.coords.edge) {
      std::string to = SkewId(G, at.base, G.op(h, at.g));
      if (g.find_edge(to)) m.edge_map.emplace(id, std::move(to));
    }
    for (const auto& [id, at] : skew.coords.letter) {
      std::string to = SkewId(G, at.base, G.op(h, at.g));
      if (skew.graph.find_letter(to)) m.alphabet_map.emplace(id, std::move(to));
    }
    maps.emplace(h, std::move(m));
  }
  return LabeledGraphAction::FromSkew(G, skew.graph, std::move(maps), skew.coords, skew.window, skew.interior);
}

Element PathCocycle(const SkewSpec& spec, const Path& path) {
  const Group& G = spec.group();
  Element acc = G.identity();
  for (EdgeIndex e : path.edges) acc = G.op(acc, spec.c().at(spec.base().graph().edge_id(e)));
  return acc;
}

Path LiftPath(const SkewLabeledGraph& skew, const Path& mu, Element g) {
  const Group& G = skew.spec.group();
  const DirectedGraph& bg = skew.spec.base().graph();
  if (!G.contains(g)) throw Error(ErrorCode::kInvalidArgument, "lift element is not a group element");
  for (EdgeIndex e : mu.edges) {
    if (e >= bg.num_edges()) throw Error(ErrorCode::kInvalidArgument, "path mentions an unknown edge");
  }
  if (!IsComposable(bg, mu)) throw Error(ErrorCode::kInvalidArgument, "edges do not compose to a path");
  Path out;
  Element at = g;
  for (EdgeIndex e : mu.edges) {
    const std::string& eid = bg.edge_id(e);
    auto id = skew.find_edge(eid, at);
    if (!id) {
      throw Error(ErrorCode::kOutOfWindow, "lifted edge " + SkewId(G, eid, at) + " is not materialized");
    }
    out.edges.push_back(skew.graph.graph().edge(*id));
    at = G.op(at, skew.spec.c().at(eid));
  }
  return out;
}

std::vector<Coordinate> IdentifyLabeledPath(const SkewSpec& spec, const Word& beta, Element g) {
  RequireUnitConsistent(spec);
  const Group& G = spec.group();
  if (!G.contains(g)) throw Error(ErrorCode::kInvalidArgument, "element is not a group element");
  if (beta.empty() || Representatives(spec.base(), beta).empty()) {
    throw Error(ErrorCode::kNotALabeledPath, "'" + FormatWord(spec.base(), beta) + "' is not a labeled path");
  }
  std::vector<Coordinate> out;
  Element at = g;
  for (LetterIndex a : beta) {
    const std::string& letter = spec.base().letter_id(a);
    out.push_back({letter, at});
    at = G.op(at, spec.c_consistency().factoring.at(letter));
  }
  return out;
}

Word SkewWord(const SkewLabeledGraph& skew, const std::vector<Coordinate>& letters) {
  Word out;
  for (const auto& [base, g] : letters) {
    auto id = skew.find_letter(base, g);
    if (!id) {
      throw Error(ErrorCode::kOutOfWindow,
                  "letter " + SkewId(skew.spec.group(), base, g) + " is not in the materialized alphabet");
    }
    out.push_back(skew.graph.letter(*id));
  }
  return out;
}

SkewRange LabeledRange(const SkewSpec& spec, const Word& beta, Element g) {
  const auto letters = IdentifyLabeledPath(spec, beta, g);
  const Group& G = spec.group();
  Element at = g;
  for (const auto& l : letters) at = G.op(at, spec.c_consistency().factoring.at(l.base));
  return {RangeAndSource(spec.base(), beta).range, at};
}

EquivarianceReport CheckEquivariance(const LabeledGraphAction& from, const LabeledGraphAction& to,
                                     const LabeledGraphMorphism& phi) {
  EquivarianceReport report;
  const Group& G = from.group();
  using Carrier = const IdMap LabeledGraphMorphism::*;
  const std::pair<const char*, Carrier> carriers[] = {{"vertex", &LabeledGraphMorphism::vertex_map},
                                                      {"edge", &LabeledGraphMorphism::edge_map},
                                                      {"letter", &LabeledGraphMorphism::alphabet_map}};
  for (Element h : from.scope()) {
    if (!to.in_scope(h)) continue;
    const auto& tau = from.maps(h);
    const auto& alpha = to.maps(h);
    for (const auto& [name, member] : carriers) {
      for (const auto& [x, phix] : phi.*member) {
        auto tx = (tau.*member).find(x);
        auto ax = (alpha.*member).find(phix);
        if (tx == (tau.*member).end() || ax == (alpha.*member).end()) continue;
        auto lhs = (phi.*member).find(tx->second);
        if (lhs == (phi.*member).end()) continue;
        ++report.checked;
        if (lhs->second != ax->second) {
          report.equivariant = false;
          report.failure = std::string("equivariance fails at ") + name + " '" + x + "' for element " +
                           G.format(h) + ": phi(tau(x)) = '" + lhs->second + "' but alpha(phi(x)) = '" +
                           ax->second + "'";
          return report;
        }
      }
    }
  }
  return report;
}

RelabelResult RelabelIso(const SkewLabeledGraph& first, const SkewLabeledGraph& second) {
  const SkewSpec& s1 = first.spec;
  const SkewSpec& s2 = second.spec;
  if (!(s1.group() == s2.group()) || !SameLabeledGraph(s1.base(), s2.base()) || s1.c() != s2.c() ||
      first.window != second.window) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling needs the same base, group, c and window");
  }
  for (const auto* s : {&s1, &s2}) {
    if (!s->d_consistency().consistent) {
      throw Error(ErrorCode::kPrecondition, std::string(s == &s1 ? "first" : "second") +
                                                " label cocycle is not label consistent: edges '" +
                                                s->d_consistency().edge1 + "' and '" + s->d_consistency().edge2 +
                                                "' share a label");
    }
  }
  const Group& G = s1.group();
  RelabelResult out;
  for (const auto& v : first.graph.graph().vertices()) out.iso.vertex_map.emplace(v, v);
  for (const auto& e : first.graph.graph().edges()) out.iso.edge_map.emplace(e.id, e.id);
  for (const auto& [id, at] : first.coords.letter) {
    const Element shift = G.op(G.inv(s1.d_consistency().factoring.at(at.base)),
                               s2.d_consistency().factoring.at(at.base));
    if (auto to = second.find_letter(at.base, G.op(at.g, shift))) out.iso.alphabet_map.emplace(id, *to);
  }
  out.morphism = VerifyMorphism(first.graph, second.graph, out.iso,
                                first.window ? MapDomain::kPartial : MapDomain::kTotal);
  out.equivariance = CheckEquivariance(LeftTranslation(first), LeftTranslation(second), out.iso);
  out.verified = out.morphism.is_isomorphism && out.equivariance.equivariant;
  return out;
}

}  // namespace labgraph
