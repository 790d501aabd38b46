#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "labgraph/action.hpp"
#include "labgraph/gross_tucker.hpp"
#include "labgraph/group.hpp"
#include "labgraph/labeled_graph.hpp"
#include "labgraph/morphism.hpp"
#include "labgraph/skew_product.hpp"

namespace labgraph {

inline constexpr int kFormatVersion = 1;

enum class DocumentKind { kGraph, kAction, kSkewSpec, kSectionPack, kMorphism, kDomain };

std::string_view DocumentKindName(DocumentKind kind);

// A group action as written in a file: explicit triples for a finite group
// (per generator or per element), or the translation action of a skew
// product.
struct ActionSource {
  Group group;
  LabeledGraph graph;
  bool by_generators = true;
  std::vector<std::pair<Element, LabeledGraphMorphism>> maps;
  std::optional<SkewSpec> skew;
};

struct DomainSet {
  std::vector<std::string> vertices;
};

using Payload = std::variant<LabeledGraph, ActionSource, SkewSpec, SectionPack, LabeledGraphMorphism, DomainSet>;

struct Document {
  Payload payload;
  DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
};

// Strict parse: unknown or missing fields and dangling references raise
// Error(kSchemaError) with the field path; malformed JSON raises
// Error(kParseError) with line and column.
Document ParseDocument(std::string_view text);
Document ReadDocument(const std::filesystem::path& path);

// Sorted keys, sorted items, two-space indent, trailing newline.
std::string SerializeDocument(const Document& doc);

// The payload of the expected kind, or Error(kSchemaError).
const LabeledGraph& AsGraph(const Document& doc);
const ActionSource& AsAction(const Document& doc);
const SkewSpec& AsSkewSpec(const Document& doc);
const SectionPack& AsSectionPack(const Document& doc);
const LabeledGraphMorphism& AsMorphism(const Document& doc);
const DomainSet& AsDomain(const Document& doc);

// The acted-on materialization together with the action. Skew sources
// over the integers need a window; explicit sources reject one.
struct MaterializedAction {
  LabeledGraphAction action;
  std::optional<SkewLabeledGraph> skew;
};

MaterializedAction BuildAction(const ActionSource& source, const std::optional<Window>& window);

}  // namespace labgraph
