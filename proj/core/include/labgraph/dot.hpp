#pragma once

#include <string>

#include "labgraph/labeled_graph.hpp"
#include "labgraph/skew_product.hpp"

namespace labgraph {

std::string ExportDot(const LabeledGraph& lg);

// One column per group element, base vertices in a fixed row order.
// Escape vertices beyond the window are drawn dashed.
std::string ExportDot(const SkewLabeledGraph& skew);

}  // namespace labgraph
