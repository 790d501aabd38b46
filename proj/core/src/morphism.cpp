#include "labgraph/morphism.hpp"

#include <set>

#include "labgraph/error.hpp"

namespace labgraph {

namespace {

struct CarrierCheck {
  bool injective = true;
  bool surjective = true;
  std::optional<std::string> failure;
};

template <typename Contains>
CarrierCheck CheckCarrier(const char* name, const std::vector<std::string>& source_items,
                          const std::vector<std::string>& target_items, const IdMap& map,
                          Contains target_contains, bool total) {
  CarrierCheck out;
  std::set<std::string> source_set(source_items.begin(), source_items.end());
  for (const auto& [from, to] : map) {
    if (!source_set.contains(from)) {
      out.failure = std::string(name) + " map mentions unknown source item '" + from + "'";
      return out;
    }
    if (!target_contains(to)) {
      out.failure = std::string(name) + " map sends '" + from + "' to unknown target item '" + to + "'";
      return out;
    }
  }
  if (total) {
    for (const auto& item : source_items) {
      if (!map.contains(item)) {
        out.failure = std::string(name) + " map is not total: '" + item + "' has no image";
        return out;
      }
    }
  }
  std::map<std::string, std::string> preimage;
  for (const auto& [from, to] : map) {
    auto [it, inserted] = preimage.emplace(to, from);
    if (!inserted) out.injective = false;
  }
  for (const auto& item : target_items) {
    if (!preimage.contains(item)) {
      out.surjective = false;
      break;
    }
  }
  return out;
}

const std::string* Lookup(const IdMap& map, const std::string& key) {
  auto it = map.find(key);
  return it == map.end() ? nullptr : &it->second;
}

}  // namespace

MorphismReport VerifyMorphism(const LabeledGraph& source, const LabeledGraph& target,
                              const LabeledGraphMorphism& m, MapDomain domain) {
  MorphismReport report;
  report.partial = domain == MapDomain::kPartial;
  const bool total = domain == MapDomain::kTotal;
  const DirectedGraph& sg = source.graph();
  const DirectedGraph& tg = target.graph();

  std::vector<std::string> source_edges, target_edges;
  for (const auto& e : sg.edges()) source_edges.push_back(e.id);
  for (const auto& e : tg.edges()) target_edges.push_back(e.id);

  auto v = CheckCarrier("vertex", sg.vertices(), tg.vertices(), m.vertex_map,
                        [&](const std::string& id) { return tg.find_vertex(id).has_value(); }, total);
  auto e = CheckCarrier("edge", source_edges, target_edges, m.edge_map,
                        [&](const std::string& id) { return tg.find_edge(id).has_value(); }, total);
  auto a = CheckCarrier("alphabet", source.alphabet(), target.alphabet(), m.alphabet_map,
                        [&](const std::string& id) { return target.find_letter(id).has_value(); }, total);
  for (const auto* c : {&v, &e, &a}) {
    if (c->failure) {
      report.failure = c->failure;
      return report;
    }
  }
  report.injective = v.injective && e.injective && a.injective;
  report.surjective = v.surjective && e.surjective && a.surjective;

  for (EdgeIndex edge = 0; edge < sg.num_edges(); ++edge) {
    const std::string& id = sg.edge_id(edge);
    const std::string* image = Lookup(m.edge_map, id);
    if (image == nullptr) {
      ++report.skipped_edges;
      continue;
    }
    const EdgeIndex te = tg.edge(*image);
    const std::string* s_img = Lookup(m.vertex_map, sg.vertex_id(sg.src(edge)));
    const std::string* r_img = Lookup(m.vertex_map, sg.vertex_id(sg.dst(edge)));
    const std::string* l_img = Lookup(m.alphabet_map, source.label_id(edge));
    if (s_img == nullptr || r_img == nullptr || l_img == nullptr) {
      ++report.skipped_edges;
    } else {
      ++report.checked_edges;
    }
    if (s_img != nullptr && *s_img != tg.vertex_id(tg.src(te))) {
      report.failure = "source law fails at edge '" + id + "': phi(s(e)) = '" + *s_img +
                       "' but s(phi(e)) = '" + tg.vertex_id(tg.src(te)) + "'";
      return report;
    }
    if (r_img != nullptr && *r_img != tg.vertex_id(tg.dst(te))) {
      report.failure = "range law fails at edge '" + id + "': phi(r(e)) = '" + *r_img +
                       "' but r(phi(e)) = '" + tg.vertex_id(tg.dst(te)) + "'";
      return report;
    }
    if (l_img != nullptr && *l_img != target.label_id(te)) {
      report.failure = "label compatibility fails at edge '" + id + "': phi(L(e)) = '" + *l_img +
                       "' but M(phi(e)) = '" + target.label_id(te) + "'";
      return report;
    }
  }
  report.is_morphism = true;
  report.is_isomorphism = report.injective && report.surjective;
  return report;
}

LabeledGraphMorphism IdentityMorphism(const LabeledGraph& lg) {
  LabeledGraphMorphism m;
  for (const auto& v : lg.graph().vertices()) m.vertex_map.emplace(v, v);
  for (const auto& e : lg.graph().edges()) m.edge_map.emplace(e.id, e.id);
  for (const auto& a : lg.alphabet()) m.alphabet_map.emplace(a, a);
  return m;
}

namespace {
IdMap ComposeMaps(const IdMap& outer, const IdMap& inner) {
  IdMap out;
  for (const auto& [from, mid] : inner) {
    if (auto it = outer.find(mid); it != outer.end()) out.emplace(from, it->second);
  }
  return out;
}

IdMap InvertMap(const IdMap& map, const char* name) {
  IdMap out;
  for (const auto& [from, to] : map) {
    if (!out.emplace(to, from).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " map is not injective at '" + to + "'");
    }
  }
  return out;
}
}  // namespace

LabeledGraphMorphism Compose(const LabeledGraphMorphism& outer, const LabeledGraphMorphism& inner) {
  return {ComposeMaps(outer.vertex_map, inner.vertex_map), ComposeMaps(outer.edge_map, inner.edge_map),
          ComposeMaps(outer.alphabet_map, inner.alphabet_map)};
}

LabeledGraphMorphism Inverse(const LabeledGraphMorphism& m) {
  return {InvertMap(m.vertex_map, "vertex"), InvertMap(m.edge_map, "edge"),
          InvertMap(m.alphabet_map, "alphabet")};
}

LabeledGraphMorphism ComposeAutomorphisms(const LabeledGraph& lg, const LabeledGraphMorphism& f,
                                          const LabeledGraphMorphism& g) {
  using Named = std::pair<const char*, const LabeledGraphMorphism*>;
  for (const auto& [name, m] : {Named{"f", &f}, Named{"g", &g}}) {
    auto report = VerifyMorphism(lg, lg, *m);
    if (!report.is_isomorphism) {
      throw Error(ErrorCode::kNotAnAutomorphism,
                  std::string(name) + " is not an automorphism" +
                      (report.failure ? ": " + *report.failure : ": not bijective"));
    }
  }
  return Compose(f, g);
}

}  // namespace labgraph
