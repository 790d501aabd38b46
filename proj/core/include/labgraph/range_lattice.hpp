#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "labgraph/labeled_graph.hpp"

namespace labgraph {

struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

// Derivation tree of a collection member. Leaves are generator ranges r(a);
// relative-range nodes extend them letter by letter.
struct SetExpr {
  enum class Kind { kRange, kRelativeRange, kIntersect, kUnion, kMinus };
  Kind kind = Kind::kRange;
  LetterIndex letter = 0;  // kRange, kRelativeRange
  SetExprPtr lhs;          // kRelativeRange operand; binary left
  SetExprPtr rhs;          // binary right

  static SetExprPtr Range(LetterIndex a);
  static SetExprPtr RelativeRange(SetExprPtr of, LetterIndex a);
  static SetExprPtr Binary(Kind kind, SetExprPtr lhs, SetExprPtr rhs);
};

VertexSet Evaluate(const LabeledGraph& lg, const SetExpr& expr);
std::string FormatExpr(const LabeledGraph& lg, const SetExpr& expr);

// A finite family of nonempty vertex sets with one derivation per member.
// The empty set is never stored: p_empty = 0 is a convention, not a member.
struct SetCollection {
  std::vector<VertexSet> members;  // CanonicalSetLess order
  std::map<VertexSet, SetExprPtr, CanonicalSetLess> derivations;
  bool closed_under_complements = false;
  // How many closure steps produced the empty set (dropped, not stored).
  std::size_t empty_results = 0;

  bool contains(const VertexSet& s) const { return derivations.contains(s); }
  std::size_t size() const { return members.size(); }
};

struct LatticeOptions {
  // When set, the worklist is processed in a pseudo-random order.
  std::optional<std::uint64_t> shuffle_seed;
};

// E^{0,-}: least family containing every r(beta), closed under relative
// ranges and finite intersections and unions.
SetCollection SmallestAccommodating(const LabeledGraph& lg, const LatticeOptions& options = {});

// E(r, L): the input closure extended by A \ B for A strictly containing B.
SetCollection RelativeComplementClosure(const LabeledGraph& lg, const SetCollection& col,
                                        const LatticeOptions& options = {});

struct ClosureFlags {
  bool relative_ranges = true;
  bool intersections = true;
  bool unions = true;
  bool complements = true;
  bool contains_ranges = true;
};

// Re-checks closure of the stored members directly, ignoring derivations.
ClosureFlags CheckClosure(const LabeledGraph& lg, const SetCollection& col);

// Every distinct nonempty range r(beta) with its shortest (then
// lexicographically least) witnessing word, in discovery order.
std::vector<std::pair<Word, VertexSet>> DistinctRanges(const LabeledGraph& lg);

// r(alpha) \ r(beta); `negative` absent means the bare range r(alpha).
struct NormalFactor {
  Word positive;
  std::optional<Word> negative;
  bool proper = true;  // r(alpha) strictly contains r(beta)
};

// Union over terms of the intersection of each term's factors.
struct NormalForm {
  std::vector<std::vector<NormalFactor>> terms;
};

// Rewrites the stored derivation of A into union-of-intersections form.
// Throws Error(kNotAMember) if A is not in col and Error(kPrecondition)
// when lg is not weakly left-resolving (relative ranges then do not
// distribute over intersections and differences).
NormalForm NormalFormOf(const LabeledGraph& lg, const SetCollection& col, const VertexSet& A);
VertexSet EvaluateNormalForm(const LabeledGraph& lg, const NormalForm& nf);
std::string FormatNormalForm(const LabeledGraph& lg, const NormalForm& nf);

struct MemberReport {
  VertexSet set;
  std::size_t emitted_letters = 0;  // |L^1_A|
  bool ck4_partition = true;
};

struct LabeledSpaceReport {
  bool weakly_left_resolving = false;
  bool set_finite = true;
  std::string empty_set_convention;
  ClosureFlags closure;
  std::size_t distinct_ranges = 0;
  std::size_t disjoint_range_pairs = 0;  // CK1a: pairs with r(beta) and r(omega) disjoint
  bool ck1b = true;
  std::optional<std::string> ck1b_failure;
  bool ck4 = true;
  std::vector<MemberReport> members;
};

LabeledSpaceReport MakeLabeledSpaceReport(const LabeledGraph& lg, const SetCollection& col);

}  // namespace labgraph
