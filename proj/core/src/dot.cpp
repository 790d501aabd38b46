#include "labgraph/dot.hpp"

#include <map>
#include <sstream>

namespace labgraph {

namespace {

std::string Quote(const std::string& id) {
  std::string out = "\"";
  for (char ch : id) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

void WriteEdges(std::ostream& os, const LabeledGraph& lg) {
  const DirectedGraph& g = lg.graph();
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    os << "  " << Quote(g.vertex_id(g.src(e))) << " -> " << Quote(g.vertex_id(g.dst(e)))
       << " [label=" << Quote(lg.label_id(e)) << ", tooltip=" << Quote(g.edge_id(e)) << "];\n";
  }
}

}  // namespace

std::string ExportDot(const LabeledGraph& lg) {
  std::ostringstream os;
  os << "digraph labeled_graph {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& v : lg.graph().vertices()) os << "  " << Quote(v) << ";\n";
  WriteEdges(os, lg);
  os << "}\n";
  return os.str();
}

std::string ExportDot(const SkewLabeledGraph& skew) {
  std::ostringstream os;
  os << "digraph skew_product {\n  rankdir=LR;\n  newrank=true;\n  node [shape=box];\n";
  std::map<Element, std::vector<std::string>> columns;
  for (const auto& [id, at] : skew.coords.vertex) columns[at.g].push_back(id);
  const auto& rows = skew.spec.base().graph().vertices();
  for (const auto& [g, ids] : columns) {
    os << "  { rank=same;";
    for (const auto& row : rows) {
      const std::string id = SkewId(skew.spec.group(), row, g);
      if (skew.coords.vertex.contains(id)) {
        os << " " << Quote(id);
        if (skew.escape_vertices.contains(id)) os << " [style=dashed]";
        os << ";";
      }
    }
    os << " }\n";
  }
  // Invisible chains keep the base rows in order within each column.
  for (const auto& [g, ids] : columns) {
    std::string prev;
    for (const auto& row : rows) {
      const std::string id = SkewId(skew.spec.group(), row, g);
      if (!skew.coords.vertex.contains(id)) continue;
      if (!prev.empty()) os << "  " << Quote(prev) << " -> " << Quote(id) << " [style=invis];\n";
      prev = id;
    }
  }
  WriteEdges(os, skew.graph);
  os << "}\n";
  return os.str();
}

}  // namespace labgraph
