#include "labgraph/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "labgraph/error.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

namespace labgraph {
namespace {

const std::filesystem::path kFixtures = LABGRAPH_FIXTURE_DIR;

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Envelope(const std::string& kind, const std::string& payload) {
  return R"({"format_version": 1, "kind": ")" + kind + R"(", "payload": )" + payload + "}";
}

ErrorCode CodeOf(const std::string& text) {
  try {
    ParseDocument(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kInvalidArgument;
}

std::string MessageOf(const std::string& text) {
  try {
    ParseDocument(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(FixtureFilesTest, RoundTripByteIdentical) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = Slurp(entry.path());
    EXPECT_EQ(SerializeDocument(ParseDocument(text)), text) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 10u);
}

TEST(FixtureFilesTest, MatchInMemoryFixtures) {
  const auto fish = AsGraph(ReadDocument(kFixtures / "fish.json"));
  EXPECT_EQ(fish.labeled_edges(), testing::Fish().labeled_edges());
  EXPECT_EQ(fish.graph().vertices(), testing::Fish().graph().vertices());
  EXPECT_EQ(SerializeDocument({testing::SkewZ()}), Slurp(kFixtures / "skewz.json"));
  EXPECT_EQ(SerializeDocument({testing::Nofd()}), Slurp(kFixtures / "nofd.json"));
  EXPECT_EQ(SerializeDocument({testing::Fdok()}), Slurp(kFixtures / "fdok.json"));
  EXPECT_EQ(SerializeDocument({testing::ShiftedSections()}), Slurp(kFixtures / "shifted-sections.json"));
  EXPECT_EQ(SerializeDocument({DomainSet{testing::NofdDomain()}}), Slurp(kFixtures / "nofd-domain.json"));
}

TEST(FixtureFilesTest, SkewZParsesWithoutWindow) {
  const auto spec = AsSkewSpec(ReadDocument(kFixtures / "skewz.json"));
  EXPECT_EQ(spec.group(), Group::Integers());
  for (const auto& [e, v] : spec.c()) EXPECT_EQ(v, 1) << e;
  for (const auto& [e, v] : spec.d()) EXPECT_EQ(v, 0) << e;
}

TEST(FixtureFilesTest, ExplicitActionMatchesTranslation) {
  const auto m = BuildAction(AsAction(ReadDocument(kFixtures / "fdok-explicit.json")), std::nullopt);
  const auto tau = LeftTranslation(SkewProduct(testing::Fdok()));
  EXPECT_EQ(m.action.graph().labeled_edges(), tau.graph().labeled_edges());
  for (Element g : {0, 1}) EXPECT_EQ(m.action.maps(g), tau.maps(g));
  EXPECT_THROW(BuildAction(AsAction(ReadDocument(kFixtures / "fdok-explicit.json")), Window{0, 1}), Error);
}

TEST(ParseTest, UnknownVertexReportsEdgePath) {
  const std::string text = Envelope("graph", R"({"vertices": ["v"], "edges": [
      {"id": "e", "src": "v", "dst": "v", "label": "a"},
      {"id": "f", "src": "v", "dst": "v", "label": "a"},
      {"id": "g", "src": "x", "dst": "v", "label": "a"}]})");
  EXPECT_EQ(CodeOf(text), ErrorCode::kSchemaError);
  EXPECT_NE(MessageOf(text).find("payload.edges[2].src"), std::string::npos) << MessageOf(text);
}

TEST(ParseTest, MalformedJsonReportsLineAndColumn) {
  const std::string text = "{\n  \"format_version\": 1,\n  \"kind\": \"graph\"\n  \"payload\": {}\n}";
  EXPECT_EQ(CodeOf(text), ErrorCode::kParseError);
  EXPECT_NE(MessageOf(text).find("line 4"), std::string::npos) << MessageOf(text);
  EXPECT_NE(MessageOf(text).find("column"), std::string::npos);
}

TEST(ParseTest, RejectsUnknownFields) {
  const std::string text = Envelope("graph", R"({"vertices": ["v"], "edges": [
      {"id": "e", "src": "v", "dst": "v", "label": "a", "weight": 2}]})");
  EXPECT_EQ(CodeOf(text), ErrorCode::kSchemaError);
  EXPECT_NE(MessageOf(text).find("payload.edges[0].weight"), std::string::npos) << MessageOf(text);
  EXPECT_EQ(CodeOf(R"({"format_version": 1, "kind": "graph", "payload": {"vertices": [], "edges": []}, "x": 1})"),
            ErrorCode::kSchemaError);
}

TEST(ParseTest, RejectsBadEnvelope) {
  EXPECT_EQ(CodeOf(R"({"format_version": 2, "kind": "graph", "payload": {"vertices": [], "edges": []}})"),
            ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf(R"({"format_version": 1, "kind": "matrix", "payload": {}})"), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf(R"({"format_version": 1, "kind": "graph"})"), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf("[]"), ErrorCode::kSchemaError);
}

TEST(ParseTest, RejectsBadCocycles) {
  const std::string base = R"({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "v", "label": "a"}]})";
  const auto skew = [&](const std::string& group, const std::string& c, const std::string& d = R"({"e": 0})") {
    return Envelope("skew-spec",
                    R"({"base": )" + base + R"(, "group": )" + group + R"(, "c": )" + c + R"(, "d": )" + d + "}");
  };
  EXPECT_NO_THROW(ParseDocument(skew(R"({"kind": "integers"})", R"({"e": -3})")));
  EXPECT_EQ(CodeOf(skew(R"({"kind": "cyclic", "order": 3})", R"({"e": 3})")), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf(skew(R"({"kind": "integers"})", R"({"f": 1})")), ErrorCode::kSchemaError);
  EXPECT_EQ(CodeOf(skew(R"({"kind": "integers"})", R"({"e": "1"})")), ErrorCode::kSchemaError);
  EXPECT_NO_THROW(ParseDocument(skew(R"({"kind": "permutations", "generators": [[1, 0]]})", R"({"e": [1, 0]})", R"({"e": [0, 1]})")));
  EXPECT_EQ(CodeOf(skew(R"({"kind": "permutations", "generators": [[1, 0, 2]]})", R"({"e": [0, 2, 1]})", R"({"e": [0, 1, 2]})")),
            ErrorCode::kSchemaError);
}

TEST(ParseTest, WrongKindAccessor) {
  const auto doc = ReadDocument(kFixtures / "fish.json");
  EXPECT_EQ(doc.kind(), DocumentKind::kGraph);
  try {
    AsSkewSpec(doc);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
  }
  EXPECT_THROW(ReadDocument(kFixtures / "missing.json"), Error);
}

Group RandomGroup(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return Group::Integers();
    case 1: return Group::FromTable({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    case 2: return Group::FromPermutations({{1, 0, 2}, {1, 2, 0}});
    default: return testing::RandomFiniteGroup(rng);
  }
}

Element RandomElement(std::mt19937_64& rng, const Group& g) {
  if (!g.is_finite()) return static_cast<Element>(rng() % 21) - 10;
  return g.elements()[rng() % g.order()];
}

IdMap RandomIdMap(std::mt19937_64& rng) {
  IdMap m;
  const std::size_t n = rng() % 5;
  for (std::size_t i = 0; i < n; ++i) m.emplace("k" + std::to_string(rng() % 9), "(x," + std::to_string(rng() % 9) + ")");
  return m;
}

Document RandomDocument(std::mt19937_64& rng) {
  const LabeledGraph lg = testing::RandomLabeledGraph(rng);
  switch (rng() % 6) {
    case 0: return {lg};
    case 1: {
      const Group g = RandomGroup(rng);
      Cocycle c, d;
      for (const auto& e : lg.graph().edges()) {
        c.emplace(e.id, RandomElement(rng, g));
        d.emplace(e.id, RandomElement(rng, g));
      }
      return {SkewSpec(lg, g, c, d)};
    }
    case 2: {
      SectionPack pack{RandomIdMap(rng), RandomIdMap(rng), RandomIdMap(rng)};
      if (pack.eta0.empty()) pack.eta0 = {{"v", "(v,0)"}};
      return {pack};
    }
    case 3: return {LabeledGraphMorphism{RandomIdMap(rng), RandomIdMap(rng), RandomIdMap(rng)}};
    case 4: {
      std::vector<std::string> vertices = lg.graph().vertices();
      std::sort(vertices.begin(), vertices.end());
      return {DomainSet{vertices}};
    }
    default: {
      ActionSource a;
      a.group = Group::Cyclic(2);
      a.graph = lg;
      a.by_generators = rng() % 2 == 0;
      a.maps.emplace_back(a.by_generators ? 1 : 0, IdentityMorphism(lg));
      return {a};
    }
  }
}

TEST(RandomDocumentsTest, RoundTrip) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 500; ++i) {
    const Document doc = RandomDocument(rng);
    const std::string text = SerializeDocument(doc);
    const Document back = ParseDocument(text);
    ASSERT_EQ(back.kind(), doc.kind()) << text;
    EXPECT_EQ(SerializeDocument(back), text);
    if (doc.kind() == DocumentKind::kGraph) {
      EXPECT_EQ(AsGraph(back).labeled_edges(), AsGraph(doc).labeled_edges());
      EXPECT_EQ(AsGraph(back).alphabet(), AsGraph(doc).alphabet());
    }
    if (doc.kind() == DocumentKind::kSkewSpec) {
      EXPECT_EQ(AsSkewSpec(back).group(), AsSkewSpec(doc).group());
      EXPECT_EQ(AsSkewSpec(back).c(), AsSkewSpec(doc).c());
      EXPECT_EQ(AsSkewSpec(back).d(), AsSkewSpec(doc).d());
    }
    if (doc.kind() == DocumentKind::kMorphism) EXPECT_EQ(AsMorphism(back), AsMorphism(doc));
  }
}

}  // namespace
}  // namespace labgraph
