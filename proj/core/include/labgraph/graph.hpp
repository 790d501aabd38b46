#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace labgraph {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct EdgeRecord {
  std::string id;
  std::string src;
  std::string dst;

  auto operator<=>(const EdgeRecord&) const = default;
};

// Finite directed multigraph. Vertices and edges are kept sorted by id, so
// indices follow the lexicographic order of ids and iteration is
// deterministic. Parallel edges and loops are allowed.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  // Throws Error(kInvalidGraph) on duplicate ids or dangling endpoints.
  DirectedGraph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  const std::string& vertex_id(VertexIndex v) const { return vertices_[v]; }
  const std::string& edge_id(EdgeIndex e) const { return edges_[e].id; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  // Throwing lookups (kInvalidArgument) for ids that must exist.
  VertexIndex vertex(std::string_view id) const;
  EdgeIndex edge(std::string_view id) const;

  VertexIndex src(EdgeIndex e) const { return src_[e]; }
  VertexIndex dst(EdgeIndex e) const { return dst_[e]; }

  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_[v]; }

 private:
  std::vector<std::string> vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<VertexIndex> src_;
  std::vector<VertexIndex> dst_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

// A nonempty sequence of composable edges.
struct Path {
  std::vector<EdgeIndex> edges;

  std::size_t length() const { return edges.size(); }
  auto operator<=>(const Path&) const = default;
};

VertexIndex PathSource(const DirectedGraph& graph, const Path& path);
VertexIndex PathRange(const DirectedGraph& graph, const Path& path);
bool IsComposable(const DirectedGraph& graph, const Path& path);

struct VertexValidity {
  std::string vertex;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  bool receives = false;  // r^{-1}(v) nonempty
  bool emits = false;     // s^{-1}(v) nonempty (and finite)
};

struct ValidityReport {
  bool valid = false;
  std::vector<VertexValidity> vertices;

  std::vector<std::string> sinks() const;
  std::vector<std::string> sources() const;
};

// Row-finite and essential: every vertex receives an edge and emits at
// least one (finitely many) edges.
ValidityReport Validate(const DirectedGraph& graph);

// Throws Error(kInvalidGraph) naming the failing vertices when the graph is
// not row-finite and essential. `context` prefixes the message.
void RequireValid(const DirectedGraph& graph, std::string_view context);

// All paths of length n >= 1 in lexicographic order of edge-index sequences.
std::vector<Path> PathsOfLength(const DirectedGraph& graph, int n);

}  // namespace labgraph
