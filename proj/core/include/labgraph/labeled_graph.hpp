#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "labgraph/graph.hpp"
#include "labgraph/vertex_set.hpp"

namespace labgraph {

using LetterIndex = std::size_t;

// A labeled path is a plain letter sequence; whether it lies in L^+(E) is
// decided lazily through its representatives.
using Word = std::vector<LetterIndex>;

struct LabeledEdge {
  std::string id;
  std::string src;
  std::string dst;
  std::string label;

  bool operator==(const LabeledEdge&) const = default;
};

// A directed graph with a total labeling of its edges. The alphabet is
// always the image of the labeling: letters that label no edge are dropped
// at construction and recorded in dropped_letters().
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(DirectedGraph graph, const std::map<std::string, std::string>& labeling,
               const std::vector<std::string>& alphabet = {});

  static LabeledGraph FromEdges(std::vector<std::string> vertices,
                                const std::vector<LabeledEdge>& edges,
                                const std::vector<std::string>& alphabet = {});

  const DirectedGraph& graph() const { return graph_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t num_letters() const { return alphabet_.size(); }
  const std::vector<std::string>& dropped_letters() const { return dropped_; }

  LetterIndex label(EdgeIndex e) const { return labels_[e]; }
  const std::string& label_id(EdgeIndex e) const { return alphabet_[labels_[e]]; }
  const std::string& letter_id(LetterIndex a) const { return alphabet_[a]; }
  std::optional<LetterIndex> find_letter(std::string_view id) const;
  LetterIndex letter(std::string_view id) const;

  // r({v}, a) for a single vertex and letter.
  const VertexSet& successors(VertexIndex v, LetterIndex a) const;

  std::vector<LabeledEdge> labeled_edges() const;

 private:
  DirectedGraph graph_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> dropped_;
  std::vector<LetterIndex> labels_;
  // Per letter, the emitting vertices in index order with their successors.
  std::vector<std::vector<std::pair<VertexIndex, VertexSet>>> successors_;
  VertexSet no_successors_;
};

Word LabelOf(const LabeledGraph& lg, const Path& path);
// Throws Error(kInvalidArgument) on unknown letters.
Word MakeWord(const LabeledGraph& lg, const std::vector<std::string>& letters);
// Letters concatenated when the alphabet is single-character, "."-joined
// otherwise.
std::string FormatWord(const LabeledGraph& lg, const Word& word);
// Accepts "a,b,c" or, for single-character alphabets, "abc".
Word ParseWord(const LabeledGraph& lg, std::string_view text);

// L(E^n): labels of all length-n paths, duplicates collapsed.
std::set<Word> LabeledPaths(const LabeledGraph& lg, int n);

// All paths lambda with L(lambda) = word; empty iff word is not in L^+(E).
std::vector<Path> Representatives(const LabeledGraph& lg, const Word& word);

VertexSet RelativeRangeStep(const LabeledGraph& lg, const VertexSet& from, LetterIndex a);
// r(A, beta), computed letter by letter.
VertexSet RelativeRange(const LabeledGraph& lg, const VertexSet& from, const Word& word);

struct RangeAndSourceResult {
  VertexSet range;
  VertexSet source;
};

// (r(beta), s(beta)); throws Error(kNotALabeledPath) when beta has no
// representative.
RangeAndSourceResult RangeAndSource(const LabeledGraph& lg, const Word& word);

// L^n_A: length-n labeled paths whose source meets A.
std::set<Word> LabelSet(const LabeledGraph& lg, const VertexSet& from, int n);

struct LeftResolvingResult {
  bool holds = true;
  // On failure: a vertex receiving two distinct edges with the same label.
  std::string vertex;
  std::string edge1;
  std::string edge2;
};

LeftResolvingResult IsLeftResolving(const LabeledGraph& lg);

struct WeakResolvingResult {
  bool holds = true;
  // Fast check witness: letter a and vertices u1 != u2 with
  // r({u1},a) and r({u2},a) sharing `common`.
  std::string letter;
  std::string vertex1;
  std::string vertex2;
  std::string common;
};

// Singleton disjointness: for every letter a and distinct u, v the sets
// r({u},a) and r({v},a) are disjoint.
WeakResolvingResult IsWeaklyLeftResolving(const LabeledGraph& lg);

struct WeakResolvingBruteResult {
  bool holds = true;
  VertexSet a;
  VertexSet b;
  Word word;
};

// Definition-level check over all subset pairs A, B and every represented
// word of length <= max_len. Limited to 16 vertices (kSearchSpaceExceeded).
WeakResolvingBruteResult IsWeaklyLeftResolvingBruteForce(const LabeledGraph& lg, int max_len);

}  // namespace labgraph
