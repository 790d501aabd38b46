#include "labgraph/io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "labgraph/error.hpp"

namespace labgraph {

using nlohmann::json;

namespace {

constexpr const char* kKindNames[] = {"graph", "action", "skew-spec", "section-pack", "morphism", "domain"};

[[noreturn]] void SchemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, path + ": " + what);
}

std::string Field(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& RequireObject(const json& j, const std::string& path, std::initializer_list<const char*> required,
                          std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) SchemaError(path, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) SchemaError(Field(path, key), "missing required field");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) SchemaError(Field(path, key), "unknown field");
  }
  return j;
}

std::string GetString(const json& j, const std::string& path) {
  if (!j.is_string()) SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t GetInt(const json& j, const std::string& path) {
  if (!j.is_number_integer()) SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::string> GetStrings(const json& j, const std::string& path) {
  if (!j.is_array()) SchemaError(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(GetString(j[i], Item(path, i)));
  return out;
}

std::vector<int> GetInts(const json& j, const std::string& path) {
  if (!j.is_array()) SchemaError(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<int>(GetInt(j[i], Item(path, i))));
  return out;
}

IdMap GetIdMap(const json& j, const std::string& path) {
  if (!j.is_object()) SchemaError(path, "expected an object");
  IdMap out;
  for (const auto& [key, value] : j.items()) out.emplace(key, GetString(value, Field(path, key)));
  return out;
}

// Library errors raised while building a value are reported at its path.
template <typename F>
auto AtPath(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    SchemaError(path, e.what());
  }
}

LabeledGraph GraphFrom(const json& j, const std::string& path) {
  RequireObject(j, path, {"vertices", "edges"}, {"alphabet"});
  const auto vertices = GetStrings(j["vertices"], Field(path, "vertices"));
  const std::set<std::string> known(vertices.begin(), vertices.end());
  if (known.size() != vertices.size()) SchemaError(Field(path, "vertices"), "duplicate vertex id");
  const json& edges = j["edges"];
  const std::string epath = Field(path, "edges");
  if (!edges.is_array()) SchemaError(epath, "expected an array");
  std::vector<LabeledEdge> out;
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = Item(epath, i);
    RequireObject(edges[i], p, {"id", "src", "dst", "label"});
    LabeledEdge e{GetString(edges[i]["id"], Field(p, "id")), GetString(edges[i]["src"], Field(p, "src")),
                  GetString(edges[i]["dst"], Field(p, "dst")), GetString(edges[i]["label"], Field(p, "label"))};
    if (!edge_ids.insert(e.id).second) SchemaError(Field(p, "id"), "duplicate edge id '" + e.id + "'");
    if (!known.contains(e.src)) SchemaError(Field(p, "src"), "unknown vertex '" + e.src + "'");
    if (!known.contains(e.dst)) SchemaError(Field(p, "dst"), "unknown vertex '" + e.dst + "'");
    out.push_back(std::move(e));
  }
  std::vector<std::string> alphabet;
  if (j.contains("alphabet")) alphabet = GetStrings(j["alphabet"], Field(path, "alphabet"));
  return AtPath(path, [&] { return LabeledGraph::FromEdges(vertices, out, alphabet); });
}

json GraphTo(const LabeledGraph& lg) {
  json vertices = lg.graph().vertices();
  json edges = json::array();
  for (const auto& e : lg.labeled_edges()) {
    edges.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}, {"label", e.label}});
  }
  return {{"vertices", vertices}, {"edges", edges}, {"alphabet", lg.alphabet()}};
}

Group GroupFrom(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind")) SchemaError(Field(path, "kind"), "missing required field");
  const std::string kind = GetString(j["kind"], Field(path, "kind"));
  if (kind == "integers") {
    RequireObject(j, path, {"kind"});
    return Group::Integers();
  }
  if (kind == "cyclic") {
    RequireObject(j, path, {"kind", "order"});
    const auto n = GetInt(j["order"], Field(path, "order"));
    return AtPath(Field(path, "order"), [&] { return Group::Cyclic(static_cast<int>(n)); });
  }
  if (kind == "table") {
    RequireObject(j, path, {"kind", "table"});
    const std::string tpath = Field(path, "table");
    if (!j["table"].is_array()) SchemaError(tpath, "expected an array");
    std::vector<std::vector<int>> table;
    for (std::size_t i = 0; i < j["table"].size(); ++i) table.push_back(GetInts(j["table"][i], Item(tpath, i)));
    return AtPath(tpath, [&] { return Group::FromTable(std::move(table)); });
  }
  if (kind == "permutations") {
    RequireObject(j, path, {"kind", "generators"});
    const std::string gpath = Field(path, "generators");
    if (!j["generators"].is_array()) SchemaError(gpath, "expected an array");
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 0; i < j["generators"].size(); ++i) gens.push_back(GetInts(j["generators"][i], Item(gpath, i)));
    return AtPath(gpath, [&] { return Group::FromPermutations(std::move(gens)); });
  }
  SchemaError(Field(path, "kind"), "unknown group kind '" + kind + "'");
}

json GroupTo(const Group& g) {
  switch (g.kind()) {
    case GroupKind::kIntegers: return {{"kind", "integers"}};
    case GroupKind::kCyclic: return {{"kind", "cyclic"}, {"order", g.modulus()}};
    case GroupKind::kTable: return {{"kind", "table"}, {"table", g.table()}};
    case GroupKind::kPermutation: return {{"kind", "permutations"}, {"generators", g.generators()}};
  }
  return {};
}

Element ElementFrom(const Group& g, const json& j, const std::string& path) {
  if (g.kind() == GroupKind::kPermutation) {
    const auto image = GetInts(j, path);
    std::string text = "[";
    for (std::size_t i = 0; i < image.size(); ++i) text += (i > 0 ? "," : "") + std::to_string(image[i]);
    return AtPath(path, [&] { return g.parse(text + "]"); });
  }
  const auto value = GetInt(j, path);
  if (!g.contains(value)) SchemaError(path, "not a group element");
  return value;
}

json ElementTo(const Group& g, Element a) {
  if (g.kind() == GroupKind::kPermutation) return g.permutations().at(static_cast<std::size_t>(a));
  return a;
}

Cocycle CocycleFrom(const Group& g, const json& j, const std::string& path) {
  if (!j.is_object()) SchemaError(path, "expected an object");
  Cocycle out;
  for (const auto& [key, value] : j.items()) out.emplace(key, ElementFrom(g, value, Field(path, key)));
  return out;
}

json CocycleTo(const Group& g, const Cocycle& c) {
  json out = json::object();
  for (const auto& [edge, value] : c) out[edge] = ElementTo(g, value);
  return out;
}

LabeledGraphMorphism MorphismFrom(const json& j, const std::string& path) {
  RequireObject(j, path, {"vertex_map", "edge_map", "alphabet_map"});
  return {GetIdMap(j["vertex_map"], Field(path, "vertex_map")), GetIdMap(j["edge_map"], Field(path, "edge_map")),
          GetIdMap(j["alphabet_map"], Field(path, "alphabet_map"))};
}

json MorphismTo(const LabeledGraphMorphism& m) {
  return {{"vertex_map", m.vertex_map}, {"edge_map", m.edge_map}, {"alphabet_map", m.alphabet_map}};
}

SkewSpec SkewFrom(const json& j, const std::string& path) {
  RequireObject(j, path, {"base", "group", "c", "d"});
  LabeledGraph base = GraphFrom(j["base"], Field(path, "base"));
  Group group = GroupFrom(j["group"], Field(path, "group"));
  Cocycle c = CocycleFrom(group, j["c"], Field(path, "c"));
  Cocycle d = CocycleFrom(group, j["d"], Field(path, "d"));
  using Named = std::pair<const char*, const Cocycle*>;
  for (const auto& [name, map] : {Named{"c", &c}, Named{"d", &d}}) {
    for (const auto& [edge, value] : *map) {
      if (!base.graph().find_edge(edge)) SchemaError(Field(Field(path, name), edge), "unknown edge");
    }
    for (const auto& e : base.graph().edges()) {
      if (!map->contains(e.id)) SchemaError(Field(Field(path, name), e.id), "missing value");
    }
  }
  return AtPath(path, [&] { return SkewSpec(std::move(base), std::move(group), std::move(c), std::move(d)); });
}

json SkewTo(const SkewSpec& s) {
  return {{"base", GraphTo(s.base())},
          {"group", GroupTo(s.group())},
          {"c", CocycleTo(s.group(), s.c())},
          {"d", CocycleTo(s.group(), s.d())}};
}

ActionSource ActionFrom(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("skew")) {
    RequireObject(j, path, {"skew"});
    ActionSource out;
    out.skew = SkewFrom(j["skew"], Field(path, "skew"));
    out.group = out.skew->group();
    out.graph = out.skew->base();
    return out;
  }
  const bool by_generators = j.is_object() && j.contains("generators");
  const char* list = by_generators ? "generators" : "elements";
  RequireObject(j, path, {"group", "graph", list});
  ActionSource out;
  out.by_generators = by_generators;
  out.group = GroupFrom(j["group"], Field(path, "group"));
  out.graph = GraphFrom(j["graph"], Field(path, "graph"));
  const std::string lpath = Field(path, list);
  if (!j[list].is_array()) SchemaError(lpath, "expected an array");
  for (std::size_t i = 0; i < j[list].size(); ++i) {
    const std::string p = Item(lpath, i);
    const json& entry = j[list][i];
    RequireObject(entry, p, {"element", "vertex_map", "edge_map", "alphabet_map"});
    const Element g = ElementFrom(out.group, entry["element"], Field(p, "element"));
    json maps = entry;
    maps.erase("element");
    out.maps.emplace_back(g, MorphismFrom(maps, p));
  }
  return out;
}

json ActionTo(const ActionSource& a) {
  if (a.skew) return {{"skew", SkewTo(*a.skew)}};
  json list = json::array();
  auto sorted = a.maps;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [g, m] : sorted) {
    json entry = MorphismTo(m);
    entry["element"] = ElementTo(a.group, g);
    list.push_back(std::move(entry));
  }
  return {{"group", GroupTo(a.group)}, {"graph", GraphTo(a.graph)}, {a.by_generators ? "generators" : "elements", list}};
}

SectionPack SectionsFrom(const json& j, const std::string& path) {
  RequireObject(j, path, {"eta0"}, {"eta1", "etaA"});
  SectionPack out;
  out.eta0 = GetIdMap(j["eta0"], Field(path, "eta0"));
  if (j.contains("eta1")) out.eta1 = GetIdMap(j["eta1"], Field(path, "eta1"));
  if (j.contains("etaA")) out.etaA = GetIdMap(j["etaA"], Field(path, "etaA"));
  return out;
}

json SectionsTo(const SectionPack& s) {
  json out = {{"eta0", s.eta0}};
  if (!s.eta1.empty()) out["eta1"] = s.eta1;
  if (!s.etaA.empty()) out["etaA"] = s.etaA;
  return out;
}

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string_view DocumentKindName(DocumentKind kind) { return kKindNames[static_cast<int>(kind)]; }

Document ParseDocument(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = LineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
  RequireObject(j, "", {"format_version", "kind", "payload"});
  const auto version = GetInt(j["format_version"], "format_version");
  if (version != kFormatVersion) SchemaError("format_version", "unsupported version " + std::to_string(version));
  const std::string kind = GetString(j["kind"], "kind");
  const json& p = j["payload"];
  if (kind == "graph") return {GraphFrom(p, "payload")};
  if (kind == "action") return {ActionFrom(p, "payload")};
  if (kind == "skew-spec") return {SkewFrom(p, "payload")};
  if (kind == "section-pack") return {SectionsFrom(p, "payload")};
  if (kind == "morphism") return {MorphismFrom(p, "payload")};
  if (kind == "domain") {
    RequireObject(p, "payload", {"vertices"});
    return {DomainSet{GetStrings(p["vertices"], "payload.vertices")}};
  }
  SchemaError("kind", "unknown document kind '" + kind + "'");
}

Document ReadDocument(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseDocument(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + std::string(e.what()).substr(ErrorCodeName(e.code()).size() + 2));
  }
}

std::string SerializeDocument(const Document& doc) {
  json payload = std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LabeledGraph>) return GraphTo(p);
        if constexpr (std::is_same_v<T, ActionSource>) return ActionTo(p);
        if constexpr (std::is_same_v<T, SkewSpec>) return SkewTo(p);
        if constexpr (std::is_same_v<T, SectionPack>) return SectionsTo(p);
        if constexpr (std::is_same_v<T, LabeledGraphMorphism>) return MorphismTo(p);
        if constexpr (std::is_same_v<T, DomainSet>) {
          auto sorted = p.vertices;
          std::sort(sorted.begin(), sorted.end());
          return {{"vertices", sorted}};
        }
      },
      doc.payload);
  json j = {{"format_version", kFormatVersion}, {"kind", DocumentKindName(doc.kind())}, {"payload", payload}};
  return j.dump(2) + "\n";
}

namespace {
template <typename T>
const T& As(const Document& doc, DocumentKind kind) {
  if (doc.kind() != kind) {
    SchemaError("kind", "expected a " + std::string(DocumentKindName(kind)) + " document, got " +
                            std::string(DocumentKindName(doc.kind())));
  }
  return std::get<T>(doc.payload);
}
}  // namespace

const LabeledGraph& AsGraph(const Document& doc) { return As<LabeledGraph>(doc, DocumentKind::kGraph); }
const ActionSource& AsAction(const Document& doc) { return As<ActionSource>(doc, DocumentKind::kAction); }
const SkewSpec& AsSkewSpec(const Document& doc) { return As<SkewSpec>(doc, DocumentKind::kSkewSpec); }
const SectionPack& AsSectionPack(const Document& doc) { return As<SectionPack>(doc, DocumentKind::kSectionPack); }
const LabeledGraphMorphism& AsMorphism(const Document& doc) {
  return As<LabeledGraphMorphism>(doc, DocumentKind::kMorphism);
}
const DomainSet& AsDomain(const Document& doc) { return As<DomainSet>(doc, DocumentKind::kDomain); }

MaterializedAction BuildAction(const ActionSource& source, const std::optional<Window>& window) {
  if (source.skew) {
    SkewLabeledGraph skew = SkewProduct(*source.skew, window);
    LabeledGraphAction action = LeftTranslation(skew);
    return {std::move(action), std::move(skew)};
  }
  if (window) throw Error(ErrorCode::kInvalidArgument, "windows apply only to skew-presented integer actions");
  if (source.by_generators) {
    return {LabeledGraphAction::FromGenerators(source.group, source.graph, source.maps), std::nullopt};
  }
  std::map<Element, LabeledGraphMorphism> maps;
  for (const auto& [g, m] : source.maps) {
    if (!maps.emplace(g, m).second) {
      throw Error(ErrorCode::kInvalidArgument, "element " + source.group.format(g) + " listed twice");
    }
  }
  return {LabeledGraphAction::FromElements(source.group, source.graph, std::move(maps)), std::nullopt};
}

}  // namespace labgraph
