#include "labgraph/labeled_graph.hpp"

#include <algorithm>
#include <cstdint>

#include "labgraph/error.hpp"

namespace labgraph {

VertexSet EmptySet(const DirectedGraph& graph) { return VertexSet(graph.num_vertices()); }

VertexSet FullSet(const DirectedGraph& graph) {
  VertexSet s(graph.num_vertices());
  s.set();
  return s;
}

VertexSet MakeVertexSet(const DirectedGraph& graph, const std::vector<std::string>& ids) {
  VertexSet s = EmptySet(graph);
  for (const auto& id : ids) s.set(graph.vertex(id));
  return s;
}

std::vector<std::string> VertexSetIds(const DirectedGraph& graph, const VertexSet& set) {
  std::vector<std::string> out;
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) {
    out.push_back(graph.vertex_id(i));
  }
  return out;
}

std::string FormatVertexSet(const DirectedGraph& graph, const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : VertexSetIds(graph, set)) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

bool CanonicalSetLess::operator()(const VertexSet& a, const VertexSet& b) const {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != VertexSet::npos && j != VertexSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == VertexSet::npos && j != VertexSet::npos;
}

LabeledGraph::LabeledGraph(DirectedGraph graph, const std::map<std::string, std::string>& labeling,
                           const std::vector<std::string>& alphabet)
    : graph_(std::move(graph)) {
  std::set<std::string> image;
  for (const auto& rec : graph_.edges()) {
    auto it = labeling.find(rec.id);
    if (it == labeling.end()) {
      throw Error(ErrorCode::kInvalidGraph, "labeling is not total: edge '" + rec.id + "' has no label");
    }
    image.insert(it->second);
  }
  for (const auto& [edge, letter] : labeling) {
    if (!graph_.find_edge(edge)) {
      throw Error(ErrorCode::kInvalidGraph, "labeling mentions unknown edge '" + edge + "'");
    }
  }
  std::set<std::string> declared(alphabet.begin(), alphabet.end());
  for (const auto& letter : declared) {
    if (!image.contains(letter)) dropped_.push_back(letter);
  }
  alphabet_.assign(image.begin(), image.end());
  labels_.reserve(graph_.num_edges());
  for (const auto& rec : graph_.edges()) {
    labels_.push_back(static_cast<LetterIndex>(
        std::lower_bound(alphabet_.begin(), alphabet_.end(), labeling.at(rec.id)) - alphabet_.begin()));
  }
  no_successors_ = EmptySet(graph_);
  std::vector<std::map<VertexIndex, VertexSet>> table(alphabet_.size());
  for (EdgeIndex e = 0; e < graph_.num_edges(); ++e) {
    auto [it, fresh] = table[labels_[e]].try_emplace(graph_.src(e), no_successors_);
    it->second.set(graph_.dst(e));
  }
  successors_.resize(alphabet_.size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (auto& [v, set] : table[a]) successors_[a].emplace_back(v, std::move(set));
  }
}

const VertexSet& LabeledGraph::successors(VertexIndex v, LetterIndex a) const {
  const auto& row = successors_[a];
  auto it = std::lower_bound(row.begin(), row.end(), v, [](const auto& entry, VertexIndex x) { return entry.first < x; });
  if (it == row.end() || it->first != v) return no_successors_;
  return it->second;
}

LabeledGraph LabeledGraph::FromEdges(std::vector<std::string> vertices,
                                     const std::vector<LabeledEdge>& edges,
                                     const std::vector<std::string>& alphabet) {
  std::vector<EdgeRecord> records;
  std::map<std::string, std::string> labeling;
  for (const auto& e : edges) {
    records.push_back({e.id, e.src, e.dst});
    if (!labeling.emplace(e.id, e.label).second) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate edge id '" + e.id + "'");
    }
  }
  return LabeledGraph(DirectedGraph(std::move(vertices), std::move(records)), labeling, alphabet);
}

std::optional<LetterIndex> LabeledGraph::find_letter(std::string_view id) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), id);
  if (it == alphabet_.end() || *it != id) return std::nullopt;
  return static_cast<LetterIndex>(it - alphabet_.begin());
}

LetterIndex LabeledGraph::letter(std::string_view id) const {
  if (auto a = find_letter(id)) return *a;
  throw Error(ErrorCode::kInvalidArgument, "unknown letter '" + std::string(id) + "'");
}

std::vector<LabeledEdge> LabeledGraph::labeled_edges() const {
  std::vector<LabeledEdge> out;
  for (EdgeIndex e = 0; e < graph_.num_edges(); ++e) {
    const auto& rec = graph_.edges()[e];
    out.push_back({rec.id, rec.src, rec.dst, label_id(e)});
  }
  return out;
}

Word LabelOf(const LabeledGraph& lg, const Path& path) {
  Word w;
  w.reserve(path.edges.size());
  for (EdgeIndex e : path.edges) w.push_back(lg.label(e));
  return w;
}

Word MakeWord(const LabeledGraph& lg, const std::vector<std::string>& letters) {
  Word w;
  for (const auto& l : letters) w.push_back(lg.letter(l));
  return w;
}

namespace {
bool SingleCharAlphabet(const LabeledGraph& lg) {
  return std::all_of(lg.alphabet().begin(), lg.alphabet().end(),
                     [](const std::string& s) { return s.size() == 1; });
}
}  // namespace

std::string FormatWord(const LabeledGraph& lg, const Word& word) {
  const bool compact = SingleCharAlphabet(lg);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !compact) out += ".";
    out += lg.letter_id(word[i]);
  }
  return out;
}

Word ParseWord(const LabeledGraph& lg, std::string_view text) {
  std::vector<std::string> letters;
  if (text.find(',') != std::string_view::npos || !SingleCharAlphabet(lg)) {
    std::size_t start = 0;
    const char sep = text.find(',') != std::string_view::npos ? ',' : '.';
    while (start <= text.size()) {
      auto end = text.find(sep, start);
      if (end == std::string_view::npos) end = text.size();
      letters.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  } else {
    for (char c : text) letters.emplace_back(1, c);
  }
  if (letters.empty() || (letters.size() == 1 && letters[0].empty())) {
    throw Error(ErrorCode::kInvalidArgument, "labeled paths must be nonempty");
  }
  return MakeWord(lg, letters);
}

std::set<Word> LabeledPaths(const LabeledGraph& lg, int n) {
  std::set<Word> out;
  for (const Path& p : PathsOfLength(lg.graph(), n)) out.insert(LabelOf(lg, p));
  return out;
}

std::vector<Path> Representatives(const LabeledGraph& lg, const Word& word) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "labeled paths must be nonempty");
  const DirectedGraph& g = lg.graph();
  std::vector<Path> frontier;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (lg.label(e) == word[0]) frontier.push_back(Path{{e}});
  }
  for (std::size_t k = 1; k < word.size() && !frontier.empty(); ++k) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (EdgeIndex e : g.out_edges(PathRange(g, p))) {
        if (lg.label(e) != word[k]) continue;
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

VertexSet RelativeRangeStep(const LabeledGraph& lg, const VertexSet& from, LetterIndex a) {
  VertexSet out = EmptySet(lg.graph());
  for (auto v = from.find_first(); v != VertexSet::npos; v = from.find_next(v)) {
    out |= lg.successors(v, a);
  }
  return out;
}

VertexSet RelativeRange(const LabeledGraph& lg, const VertexSet& from, const Word& word) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "labeled paths must be nonempty");
  VertexSet current = from;
  for (LetterIndex a : word) {
    current = RelativeRangeStep(lg, current, a);
    if (current.none()) break;
  }
  return current;
}

RangeAndSourceResult RangeAndSource(const LabeledGraph& lg, const Word& word) {
  RangeAndSourceResult out{EmptySet(lg.graph()), EmptySet(lg.graph())};
  const auto reps = Representatives(lg, word);
  if (reps.empty()) {
    throw Error(ErrorCode::kNotALabeledPath, "'" + FormatWord(lg, word) + "' has no representative");
  }
  for (const Path& p : reps) {
    out.range.set(PathRange(lg.graph(), p));
    out.source.set(PathSource(lg.graph(), p));
  }
  return out;
}

std::set<Word> LabelSet(const LabeledGraph& lg, const VertexSet& from, int n) {
  std::set<Word> out;
  for (const Path& p : PathsOfLength(lg.graph(), n)) {
    if (from.test(PathSource(lg.graph(), p))) out.insert(LabelOf(lg, p));
  }
  return out;
}

LeftResolvingResult IsLeftResolving(const LabeledGraph& lg) {
  const DirectedGraph& g = lg.graph();
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    std::map<LetterIndex, EdgeIndex> seen;
    for (EdgeIndex e : g.in_edges(v)) {
      auto [it, inserted] = seen.emplace(lg.label(e), e);
      if (!inserted) {
        return {false, g.vertex_id(v), g.edge_id(it->second), g.edge_id(e)};
      }
    }
  }
  return {};
}

WeakResolvingResult IsWeaklyLeftResolving(const LabeledGraph& lg) {
  const DirectedGraph& g = lg.graph();
  for (LetterIndex a = 0; a < lg.num_letters(); ++a) {
    for (VertexIndex u = 0; u < g.num_vertices(); ++u) {
      for (VertexIndex v = u + 1; v < g.num_vertices(); ++v) {
        VertexSet common = lg.successors(u, a) & lg.successors(v, a);
        if (common.any()) {
          return {false, lg.letter_id(a), g.vertex_id(u), g.vertex_id(v),
                  g.vertex_id(common.find_first())};
        }
      }
    }
  }
  return {};
}

WeakResolvingBruteResult IsWeaklyLeftResolvingBruteForce(const LabeledGraph& lg, int max_len) {
  const DirectedGraph& g = lg.graph();
  const std::size_t n = g.num_vertices();
  if (n > 16) {
    throw Error(ErrorCode::kSearchSpaceExceeded, "brute-force check limited to 16 vertices");
  }
  using Mask = std::uint32_t;
  const std::size_t subsets = std::size_t{1} << n;
  // step[a][v] = r({v}, a) as a mask.
  std::vector<std::vector<Mask>> step(lg.num_letters(), std::vector<Mask>(n, 0));
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    step[lg.label(e)][g.src(e)] |= Mask{1} << g.dst(e);
  }
  auto to_set = [&](Mask m) {
    VertexSet s = EmptySet(g);
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (Mask{1} << i)) s.set(i);
    }
    return s;
  };
  // Depth-first over words; table[A] = r(A, word).
  struct Frame {
    Word word;
    std::vector<Mask> table;
  };
  std::vector<Mask> identity(subsets);
  for (std::size_t A = 0; A < subsets; ++A) identity[A] = static_cast<Mask>(A);
  std::vector<Frame> stack;
  stack.push_back({{}, identity});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(frame.word.size()) >= max_len) continue;
    for (LetterIndex a = 0; a < lg.num_letters(); ++a) {
      std::vector<Mask> next(subsets, 0);
      for (std::size_t A = 1; A < subsets; ++A) {
        const Mask prev = frame.table[A];
        Mask acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (prev & (Mask{1} << i)) acc |= step[a][i];
        }
        next[A] = acc;
      }
      Word word = frame.word;
      word.push_back(a);
      if (next[subsets - 1] == 0) continue;  // not in L^+(E); so is every extension
      for (std::size_t A = 0; A < subsets; ++A) {
        for (std::size_t B = A + 1; B < subsets; ++B) {
          if (next[A & B] != (next[A] & next[B])) {
            return {false, to_set(static_cast<Mask>(A)), to_set(static_cast<Mask>(B)), word};
          }
        }
      }
      stack.push_back({std::move(word), std::move(next)});
    }
  }
  return {true, EmptySet(g), EmptySet(g), {}};
}

}  // namespace labgraph
