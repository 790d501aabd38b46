#include "labgraph/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "labgraph/error.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

namespace labgraph {
namespace {

using testing::Fish;

std::vector<std::string> EdgeWords(const DirectedGraph& g, const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    std::string word;
    for (EdgeIndex e : p.edges) word += g.edge_id(e);
    out.push_back(word);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sum of the entries of the n-th power of the edge-count matrix.
std::uint64_t AdjacencyPathCount(const DirectedGraph& g, int n) {
  const std::size_t k = g.num_vertices();
  std::vector<std::vector<std::uint64_t>> a(k, std::vector<std::uint64_t>(k, 0));
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) ++a[g.src(e)][g.dst(e)];
  auto power = a;
  for (int step = 1; step < n; ++step) {
    std::vector<std::vector<std::uint64_t>> next(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) next[i][j] += power[i][l] * a[l][j];
    power = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& row : power)
    for (auto x : row) total += x;
  return total;
}

TEST(DirectedGraphTest, RejectsDanglingEndpoint) {
  try {
    DirectedGraph({"v"}, {{"e", "v", "w"}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGraph);
  }
}

TEST(DirectedGraphTest, RejectsDuplicateIds) {
  EXPECT_THROW(DirectedGraph({"v", "v"}, {}), Error);
  EXPECT_THROW(DirectedGraph({"v"}, {{"e", "v", "v"}, {"e", "v", "v"}}), Error);
}

TEST(DirectedGraphTest, AllowsLoopsAndParallelEdges) {
  DirectedGraph g({"v", "w"}, {{"a", "v", "w"}, {"b", "v", "w"}, {"c", "w", "w"}});
  EXPECT_EQ(g.out_edges(g.vertex("v")).size(), 2u);
  EXPECT_EQ(g.in_edges(g.vertex("w")).size(), 3u);
}

TEST(ValidateTest, FishIsValid) {
  const auto report = Validate(Fish().graph());
  EXPECT_TRUE(report.valid);
  ASSERT_EQ(report.vertices.size(), 2u);
  EXPECT_EQ(report.vertices[0].vertex, "v");
  EXPECT_EQ(report.vertices[0].in_degree, 2u);
  EXPECT_EQ(report.vertices[0].out_degree, 2u);
  EXPECT_EQ(report.vertices[1].in_degree, 1u);
  EXPECT_EQ(report.vertices[1].out_degree, 1u);
}

TEST(ValidateTest, LonelyVertexIsInvalid) {
  const auto report = Validate(DirectedGraph({"v"}, {}));
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.sinks(), std::vector<std::string>{"v"});
  EXPECT_EQ(report.sources(), std::vector<std::string>{"v"});
}

TEST(ValidateTest, SingleLoopIsValid) { EXPECT_TRUE(Validate(DirectedGraph({"v"}, {{"e", "v", "v"}})).valid); }

TEST(ValidateTest, AddingEdgesRepairsFlags) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lg = testing::RandomLabeledGraph(rng);
    const DirectedGraph& g = lg.graph();
    std::vector<EdgeRecord> edges = g.edges();
    const auto before = Validate(g);
    edges.push_back({"extra", g.vertex_id(0), g.vertex_id(g.num_vertices() - 1)});
    const auto after = Validate(DirectedGraph(g.vertices(), edges));
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      EXPECT_LE(before.vertices[v].receives, after.vertices[v].receives);
      EXPECT_LE(before.vertices[v].emits, after.vertices[v].emits);
    }
  }
}

TEST(PathsOfLengthTest, FishSmallLengths) {
  const auto lg = Fish();
  const DirectedGraph& g = lg.graph();
  EXPECT_EQ(EdgeWords(g, PathsOfLength(g, 1)), (std::vector<std::string>{"e", "f", "g"}));
  EXPECT_EQ(EdgeWords(g, PathsOfLength(g, 2)), (std::vector<std::string>{"ee", "ef", "fg", "ge", "gf"}));
  EXPECT_EQ(PathsOfLength(g, 3).size(), 8u);
}

TEST(PathsOfLengthTest, RejectsLengthZero) {
  try {
    PathsOfLength(Fish().graph(), 0);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(PathsOfLengthTest, EveryPathComposes) {
  const auto lg = testing::Fish4();
  const DirectedGraph& g = lg.graph();
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : PathsOfLength(g, n)) {
      EXPECT_EQ(p.length(), static_cast<std::size_t>(n));
      EXPECT_TRUE(IsComposable(g, p));
    }
  }
}

TEST(PathsOfLengthTest, CountsMatchAdjacencyPowers) {
  std::vector<DirectedGraph> graphs{Fish().graph(), testing::Fish4().graph(),
                                    testing::ComplementWitness().graph()};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) graphs.push_back(testing::RandomLabeledGraph(rng).graph());
  for (const auto& g : graphs) {
    for (int n = 1; n <= 6; ++n) {
      const auto paths = PathsOfLength(g, n);
      ASSERT_EQ(paths.size(), AdjacencyPathCount(g, n)) << "n=" << n;
      if (n < 6) {
        std::size_t extended = 0;
        for (const auto& p : paths) extended += g.out_edges(PathRange(g, p)).size();
        EXPECT_EQ(extended, PathsOfLength(g, n + 1).size());
      }
    }
  }
}

}  // namespace
}  // namespace labgraph
