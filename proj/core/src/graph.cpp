#include "labgraph/graph.hpp"

#include <algorithm>

#include "labgraph/error.hpp"

namespace labgraph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInvalidGraph: return "INVALID_GRAPH";
    case ErrorCode::kNotALabeledPath: return "NOT_A_LABELED_PATH";
    case ErrorCode::kNotAnAutomorphism: return "NOT_AN_AUTOMORPHISM";
    case ErrorCode::kNotAMember: return "NOT_A_MEMBER";
    case ErrorCode::kAxiomFailure: return "AXIOM_FAILURE";
    case ErrorCode::kOutOfWindow: return "OUT_OF_WINDOW";
    case ErrorCode::kWellDefinedness: return "WELL_DEFINEDNESS";
    case ErrorCode::kSearchSpaceExceeded: return "SEARCH_SPACE_EXCEEDED";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kLiftFailure: return "LIFT_FAILURE";
    case ErrorCode::kNonFreeWitness: return "NON_FREE_WITNESS";
    case ErrorCode::kNoFundamentalDomain: return "NO_FUNDAMENTAL_DOMAIN";
    case ErrorCode::kLabelConsistencyViolation: return "LABEL_CONSISTENCY_VIOLATION";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kSchemaError: return "SCHEMA_ERROR";
    case ErrorCode::kVerificationFailure: return "VERIFICATION_FAILURE";
  }
  return "UNKNOWN";
}

DirectedGraph::DirectedGraph(std::vector<std::string> vertices,
                             std::vector<EdgeRecord> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
      dup != vertices_.end()) {
    throw Error(ErrorCode::kInvalidGraph, "duplicate vertex id '" + *dup + "'");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].id == edges_[i].id) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate edge id '" + edges_[i].id + "'");
    }
  }
  for (VertexIndex v = 0; v < vertices_.size(); ++v) vertex_lookup_.emplace(vertices_[v], v);
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const EdgeRecord& rec = edges_[e];
    auto s = find_vertex(rec.src);
    auto d = find_vertex(rec.dst);
    if (!s) throw Error(ErrorCode::kInvalidGraph, "edge '" + rec.id + "' has unknown src '" + rec.src + "'");
    if (!d) throw Error(ErrorCode::kInvalidGraph, "edge '" + rec.id + "' has unknown dst '" + rec.dst + "'");
    edge_lookup_.emplace(rec.id, e);
    src_.push_back(*s);
    dst_.push_back(*d);
    out_[*s].push_back(e);
    in_[*d].push_back(e);
  }
}

std::optional<VertexIndex> DirectedGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> DirectedGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex DirectedGraph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorCode::kInvalidArgument, "unknown vertex '" + std::string(id) + "'");
}

EdgeIndex DirectedGraph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error(ErrorCode::kInvalidArgument, "unknown edge '" + std::string(id) + "'");
}

VertexIndex PathSource(const DirectedGraph& graph, const Path& path) {
  return graph.src(path.edges.front());
}

VertexIndex PathRange(const DirectedGraph& graph, const Path& path) {
  return graph.dst(path.edges.back());
}

bool IsComposable(const DirectedGraph& graph, const Path& path) {
  if (path.edges.empty()) return false;
  for (std::size_t k = 0; k + 1 < path.edges.size(); ++k) {
    if (graph.dst(path.edges[k]) != graph.src(path.edges[k + 1])) return false;
  }
  return true;
}

std::vector<std::string> ValidityReport::sinks() const {
  std::vector<std::string> out;
  for (const auto& v : vertices) {
    if (!v.emits) out.push_back(v.vertex);
  }
  return out;
}

std::vector<std::string> ValidityReport::sources() const {
  std::vector<std::string> out;
  for (const auto& v : vertices) {
    if (!v.receives) out.push_back(v.vertex);
  }
  return out;
}

ValidityReport Validate(const DirectedGraph& graph) {
  ValidityReport report;
  report.valid = true;
  for (VertexIndex v = 0; v < graph.num_vertices(); ++v) {
    VertexValidity row;
    row.vertex = graph.vertex_id(v);
    row.in_degree = graph.in_edges(v).size();
    row.out_degree = graph.out_edges(v).size();
    row.receives = row.in_degree > 0;
    row.emits = row.out_degree > 0;
    report.valid = report.valid && row.receives && row.emits;
    report.vertices.push_back(std::move(row));
  }
  return report;
}

void RequireValid(const DirectedGraph& graph, std::string_view context) {
  ValidityReport report = Validate(graph);
  if (report.valid) return;
  std::string msg(context);
  msg += ": graph is not row-finite and essential;";
  for (const auto& s : report.sinks()) msg += " sink '" + s + "'";
  for (const auto& s : report.sources()) msg += " source-less '" + s + "'";
  throw Error(ErrorCode::kInvalidGraph, msg);
}

std::vector<Path> PathsOfLength(const DirectedGraph& graph, int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "path length must be >= 1, got " + std::to_string(n));
  }
  std::vector<Path> frontier;
  for (EdgeIndex e = 0; e < graph.num_edges(); ++e) frontier.push_back(Path{{e}});
  for (int len = 1; len < n; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (EdgeIndex e : graph.out_edges(PathRange(graph, p))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

}  // namespace labgraph
