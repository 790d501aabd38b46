#include "labgraph/range_lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "labgraph/error.hpp"

namespace labgraph {

SetExprPtr SetExpr::Range(LetterIndex a) {
  auto e = std::make_shared<SetExpr>();
  e->kind = Kind::kRange;
  e->letter = a;
  return e;
}

SetExprPtr SetExpr::RelativeRange(SetExprPtr of, LetterIndex a) {
  auto e = std::make_shared<SetExpr>();
  e->kind = Kind::kRelativeRange;
  e->letter = a;
  e->lhs = std::move(of);
  return e;
}

SetExprPtr SetExpr::Binary(Kind kind, SetExprPtr lhs, SetExprPtr rhs) {
  auto e = std::make_shared<SetExpr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

VertexSet Evaluate(const LabeledGraph& lg, const SetExpr& expr) {
  switch (expr.kind) {
    case SetExpr::Kind::kRange:
      return RelativeRangeStep(lg, FullSet(lg.graph()), expr.letter);
    case SetExpr::Kind::kRelativeRange:
      return RelativeRangeStep(lg, Evaluate(lg, *expr.lhs), expr.letter);
    case SetExpr::Kind::kIntersect:
      return Evaluate(lg, *expr.lhs) & Evaluate(lg, *expr.rhs);
    case SetExpr::Kind::kUnion:
      return Evaluate(lg, *expr.lhs) | Evaluate(lg, *expr.rhs);
    case SetExpr::Kind::kMinus:
      return Evaluate(lg, *expr.lhs) - Evaluate(lg, *expr.rhs);
  }
  return EmptySet(lg.graph());
}

namespace {

// Returns the word if expr is a pure chain r(a) -> r(ab) -> ...
std::optional<Word> AsRangeWord(const SetExpr& expr) {
  if (expr.kind == SetExpr::Kind::kRange) return Word{expr.letter};
  if (expr.kind == SetExpr::Kind::kRelativeRange) {
    if (auto w = AsRangeWord(*expr.lhs)) {
      w->push_back(expr.letter);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string FormatExpr(const LabeledGraph& lg, const SetExpr& expr) {
  if (auto w = AsRangeWord(expr)) return "r(" + FormatWord(lg, *w) + ")";
  switch (expr.kind) {
    case SetExpr::Kind::kRelativeRange:
      return "r(" + FormatExpr(lg, *expr.lhs) + ", " + lg.letter_id(expr.letter) + ")";
    case SetExpr::Kind::kIntersect:
      return "(" + FormatExpr(lg, *expr.lhs) + " & " + FormatExpr(lg, *expr.rhs) + ")";
    case SetExpr::Kind::kUnion:
      return "(" + FormatExpr(lg, *expr.lhs) + " | " + FormatExpr(lg, *expr.rhs) + ")";
    case SetExpr::Kind::kMinus:
      return "(" + FormatExpr(lg, *expr.lhs) + " \\ " + FormatExpr(lg, *expr.rhs) + ")";
    case SetExpr::Kind::kRange:
      break;
  }
  return "?";
}

namespace {

bool StrictSuperset(const VertexSet& a, const VertexSet& b) {
  return b.is_proper_subset_of(a);
}

// Worklist closure. Every pair of members is combined exactly when the
// later of the two is popped, so the result is closed once the queue empties.
class Closure {
 public:
  Closure(const LabeledGraph& lg, bool complements, const LatticeOptions& options)
      : lg_(lg), complements_(complements) {
    if (options.shuffle_seed) rng_.emplace(*options.shuffle_seed);
  }

  void Offer(const VertexSet& s, const std::function<SetExprPtr()>& derive) {
    if (s.none()) {
      ++col_.empty_results;
      return;
    }
    if (col_.derivations.contains(s)) return;
    col_.derivations.emplace(s, derive());
    order_.push_back(s);
    queue_.push_back(s);
  }

  SetCollection Run() {
    while (!queue_.empty()) {
      std::size_t pick = 0;
      if (rng_) pick = std::uniform_int_distribution<std::size_t>(0, queue_.size() - 1)(*rng_);
      VertexSet x = queue_[pick];
      queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(pick));
      const SetExprPtr dx = col_.derivations.at(x);

      std::vector<LetterIndex> letters(lg_.num_letters());
      for (LetterIndex a = 0; a < letters.size(); ++a) letters[a] = a;
      if (rng_) std::shuffle(letters.begin(), letters.end(), *rng_);
      for (LetterIndex a : letters) {
        Offer(RelativeRangeStep(lg_, x, a), [&] { return SetExpr::RelativeRange(dx, a); });
      }
      // Snapshot: members discovered from here on will meet x when popped.
      const std::vector<VertexSet> others = order_;
      for (const VertexSet& y : others) {
        const SetExprPtr dy = col_.derivations.at(y);
        Offer(x & y, [&] { return SetExpr::Binary(SetExpr::Kind::kIntersect, dx, dy); });
        Offer(x | y, [&] { return SetExpr::Binary(SetExpr::Kind::kUnion, dx, dy); });
        if (complements_) {
          if (StrictSuperset(x, y)) {
            Offer(x - y, [&] { return SetExpr::Binary(SetExpr::Kind::kMinus, dx, dy); });
          } else if (StrictSuperset(y, x)) {
            Offer(y - x, [&] { return SetExpr::Binary(SetExpr::Kind::kMinus, dy, dx); });
          }
        }
      }
    }
    col_.members.assign(order_.begin(), order_.end());
    std::sort(col_.members.begin(), col_.members.end(), CanonicalSetLess{});
    col_.closed_under_complements = true;
    for (const VertexSet& x : col_.members) {
      for (const VertexSet& y : col_.members) {
        if (StrictSuperset(x, y) && !col_.contains(x - y)) col_.closed_under_complements = false;
      }
    }
    return std::move(col_);
  }

 private:
  const LabeledGraph& lg_;
  bool complements_;
  std::optional<std::mt19937_64> rng_;
  SetCollection col_;
  std::vector<VertexSet> order_;
  std::deque<VertexSet> queue_;
};

}  // namespace

SetCollection SmallestAccommodating(const LabeledGraph& lg, const LatticeOptions& options) {
  Closure closure(lg, /*complements=*/false, options);
  // r(beta a) = r(r(beta), a): the generator ranges r(a) plus closure under
  // single-letter relative ranges produce every r(beta).
  for (LetterIndex a = 0; a < lg.num_letters(); ++a) {
    closure.Offer(RelativeRangeStep(lg, FullSet(lg.graph()), a), [a] { return SetExpr::Range(a); });
  }
  return closure.Run();
}

SetCollection RelativeComplementClosure(const LabeledGraph& lg, const SetCollection& col,
                                        const LatticeOptions& options) {
  Closure closure(lg, /*complements=*/true, options);
  for (const VertexSet& m : col.members) {
    closure.Offer(m, [&] { return col.derivations.at(m); });
  }
  SetCollection out = closure.Run();
  out.empty_results += col.empty_results;
  return out;
}

std::vector<std::pair<Word, VertexSet>> DistinctRanges(const LabeledGraph& lg) {
  std::vector<std::pair<Word, VertexSet>> out;
  std::set<VertexSet, CanonicalSetLess> seen;
  std::deque<std::pair<Word, VertexSet>> queue;
  for (LetterIndex a = 0; a < lg.num_letters(); ++a) {
    VertexSet s = RelativeRangeStep(lg, FullSet(lg.graph()), a);
    if (s.any() && seen.insert(s).second) queue.emplace_back(Word{a}, s);
  }
  while (!queue.empty()) {
    auto [word, set] = queue.front();
    queue.pop_front();
    out.emplace_back(word, set);
    for (LetterIndex a = 0; a < lg.num_letters(); ++a) {
      VertexSet next = RelativeRangeStep(lg, set, a);
      if (next.any() && seen.insert(next).second) {
        Word w = word;
        w.push_back(a);
        queue.emplace_back(std::move(w), std::move(next));
      }
    }
  }
  return out;
}

ClosureFlags CheckClosure(const LabeledGraph& lg, const SetCollection& col) {
  ClosureFlags flags;
  for (const auto& [word, range] : DistinctRanges(lg)) {
    if (!col.contains(range)) flags.contains_ranges = false;
  }
  for (const VertexSet& x : col.members) {
    for (LetterIndex a = 0; a < lg.num_letters(); ++a) {
      VertexSet r = RelativeRangeStep(lg, x, a);
      if (r.any() && !col.contains(r)) flags.relative_ranges = false;
    }
    for (const VertexSet& y : col.members) {
      VertexSet meet = x & y;
      if (meet.any() && !col.contains(meet)) flags.intersections = false;
      if (!col.contains(x | y)) flags.unions = false;
      if (StrictSuperset(x, y) && !col.contains(x - y)) flags.complements = false;
    }
  }
  return flags;
}

namespace {

// Boolean formula over range leaves r(word).
struct Formula {
  enum class Kind { kLeaf, kAnd, kOr, kMinus };
  Kind kind = Kind::kLeaf;
  Word word;
  std::shared_ptr<const Formula> lhs;
  std::shared_ptr<const Formula> rhs;
};
using FormulaPtr = std::shared_ptr<const Formula>;

FormulaPtr Leaf(Word w) {
  auto f = std::make_shared<Formula>();
  f->word = std::move(w);
  return f;
}

FormulaPtr Node(Formula::Kind kind, FormulaPtr lhs, FormulaPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

// r(X, a) pushed through the formula. Valid for unions always and for
// intersections and differences when singleton a-successors are disjoint.
FormulaPtr PushRange(const FormulaPtr& f, LetterIndex a) {
  if (f->kind == Formula::Kind::kLeaf) {
    Word w = f->word;
    w.push_back(a);
    return Leaf(std::move(w));
  }
  return Node(f->kind, PushRange(f->lhs, a), PushRange(f->rhs, a));
}

FormulaPtr Rewrite(const SetExpr& expr) {
  switch (expr.kind) {
    case SetExpr::Kind::kRange:
      return Leaf(Word{expr.letter});
    case SetExpr::Kind::kRelativeRange:
      return PushRange(Rewrite(*expr.lhs), expr.letter);
    case SetExpr::Kind::kIntersect:
      return Node(Formula::Kind::kAnd, Rewrite(*expr.lhs), Rewrite(*expr.rhs));
    case SetExpr::Kind::kUnion:
      return Node(Formula::Kind::kOr, Rewrite(*expr.lhs), Rewrite(*expr.rhs));
    case SetExpr::Kind::kMinus:
      return Node(Formula::Kind::kMinus, Rewrite(*expr.lhs), Rewrite(*expr.rhs));
  }
  return nullptr;
}

struct Conjunct {
  std::set<Word> positive;
  std::set<Word> negative;
  auto operator<=>(const Conjunct&) const = default;
};
using Dnf = std::set<Conjunct>;

bool Contradictory(const Conjunct& c) {
  for (const Word& w : c.positive) {
    if (c.negative.contains(w)) return true;
  }
  return false;
}

Dnf And(const Dnf& x, const Dnf& y) {
  Dnf out;
  for (const Conjunct& a : x) {
    for (const Conjunct& b : y) {
      Conjunct c = a;
      c.positive.insert(b.positive.begin(), b.positive.end());
      c.negative.insert(b.negative.begin(), b.negative.end());
      if (!Contradictory(c)) out.insert(std::move(c));
    }
  }
  return out;
}

// De Morgan: not(OR_j AND_i lit) = AND_j OR_i not(lit).
Dnf Not(const Dnf& x) {
  Dnf out;
  out.insert(Conjunct{});  // true
  for (const Conjunct& c : x) {
    Dnf alternatives;
    for (const Word& w : c.positive) alternatives.insert(Conjunct{{}, {w}});
    for (const Word& w : c.negative) alternatives.insert(Conjunct{{w}, {}});
    out = And(out, alternatives);
  }
  return out;
}

Dnf ToDnf(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::kLeaf:
      return Dnf{Conjunct{{f.word}, {}}};
    case Formula::Kind::kAnd:
      return And(ToDnf(*f.lhs), ToDnf(*f.rhs));
    case Formula::Kind::kOr: {
      Dnf out = ToDnf(*f.lhs);
      Dnf rhs = ToDnf(*f.rhs);
      out.insert(rhs.begin(), rhs.end());
      return out;
    }
    case Formula::Kind::kMinus:
      return And(ToDnf(*f.lhs), Not(ToDnf(*f.rhs)));
  }
  return {};
}

VertexSet RangeOf(const LabeledGraph& lg, const Word& w) {
  return RelativeRange(lg, FullSet(lg.graph()), w);
}

}  // namespace

NormalForm NormalFormOf(const LabeledGraph& lg, const SetCollection& col, const VertexSet& A) {
  auto it = col.derivations.find(A);
  if (it == col.derivations.end()) {
    throw Error(ErrorCode::kNotAMember, FormatVertexSet(lg.graph(), A) + " is not in the collection");
  }
  if (!IsWeaklyLeftResolving(lg).holds) {
    throw Error(ErrorCode::kPrecondition, "normal form requires a weakly left-resolving labeled graph");
  }
  // Canonical word per distinct range: the shortest one.
  std::map<VertexSet, Word, CanonicalSetLess> shortest;
  for (const auto& [word, range] : DistinctRanges(lg)) shortest.emplace(range, word);
  if (auto direct = shortest.find(A); direct != shortest.end()) {
    return NormalForm{{{NormalFactor{direct->second, std::nullopt, true}}}};
  }
  auto canonical = [&](const Word& w) {
    auto found = shortest.find(RangeOf(lg, w));
    return found == shortest.end() ? w : found->second;
  };

  NormalForm nf;
  for (const Conjunct& raw : ToDnf(*Rewrite(*it->second))) {
    Conjunct c;
    for (const Word& w : raw.positive) c.positive.insert(canonical(w));
    for (const Word& w : raw.negative) c.negative.insert(canonical(w));
    if (Contradictory(c)) continue;
    if (c.positive.empty()) {
      throw Error(ErrorCode::kPrecondition, "derivation produced a term without a positive range");
    }
    std::vector<NormalFactor> term;
    std::set<Word> unused = c.positive;
    for (const Word& neg : c.negative) {
      const VertexSet rn = RangeOf(lg, neg);
      // Prefer a positive range strictly containing the subtracted one.
      const Word* chosen = &*c.positive.begin();
      for (const Word& pos : c.positive) {
        if (StrictSuperset(RangeOf(lg, pos), rn)) {
          chosen = &pos;
          break;
        }
      }
      term.push_back({*chosen, neg, StrictSuperset(RangeOf(lg, *chosen), rn)});
      unused.erase(*chosen);
    }
    for (const Word& pos : unused) term.push_back({pos, std::nullopt, true});
    VertexSet value = FullSet(lg.graph());
    for (const auto& f : term) {
      VertexSet fv = RangeOf(lg, f.positive);
      if (f.negative) fv -= RangeOf(lg, *f.negative);
      value &= fv;
    }
    if (value.any()) nf.terms.push_back(std::move(term));
  }
  return nf;
}

VertexSet EvaluateNormalForm(const LabeledGraph& lg, const NormalForm& nf) {
  VertexSet out = EmptySet(lg.graph());
  for (const auto& term : nf.terms) {
    VertexSet value = FullSet(lg.graph());
    for (const auto& f : term) {
      VertexSet fv = RangeOf(lg, f.positive);
      if (f.negative) fv -= RangeOf(lg, *f.negative);
      value &= fv;
    }
    out |= value;
  }
  return out;
}

std::string FormatNormalForm(const LabeledGraph& lg, const NormalForm& nf) {
  std::string out;
  for (std::size_t j = 0; j < nf.terms.size(); ++j) {
    if (j > 0) out += " | ";
    const auto& term = nf.terms[j];
    if (nf.terms.size() > 1 && term.size() > 1) out += "(";
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (i > 0) out += " & ";
      const auto& f = term[i];
      if (f.negative) {
        out += "(r(" + FormatWord(lg, f.positive) + ") \\ r(" + FormatWord(lg, *f.negative) + "))";
      } else {
        out += "r(" + FormatWord(lg, f.positive) + ")";
      }
    }
    if (nf.terms.size() > 1 && term.size() > 1) out += ")";
  }
  return out.empty() ? "{}" : out;
}

LabeledSpaceReport MakeLabeledSpaceReport(const LabeledGraph& lg, const SetCollection& col) {
  const DirectedGraph& g = lg.graph();
  LabeledSpaceReport report;
  report.weakly_left_resolving = IsWeaklyLeftResolving(lg).holds;
  report.empty_set_convention = "empty set excluded from collections (p_empty = 0)";
  report.closure = CheckClosure(lg, col);

  const auto ranges = DistinctRanges(lg);
  report.distinct_ranges = ranges.size();
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t j = i; j < ranges.size(); ++j) {
      const VertexSet& x = ranges[i].second;
      const VertexSet& y = ranges[j].second;
      if (!x.intersects(y)) ++report.disjoint_range_pairs;
      auto fail = [&](const std::string& what) {
        if (!report.ck1b_failure) {
          report.ck1b_failure = what + " for r(" + FormatWord(lg, ranges[i].first) + "), r(" +
                                FormatWord(lg, ranges[j].first) + ")";
        }
        report.ck1b = false;
      };
      if ((x & y).any() && !col.contains(x & y)) fail("intersection missing");
      if (!col.contains(x | y)) fail("union missing");
      if (col.closed_under_complements) {
        if (StrictSuperset(x, y) && !col.contains(x - y)) fail("relative complement missing");
        if (StrictSuperset(y, x) && !col.contains(y - x)) fail("relative complement missing");
      }
    }
  }

  for (const VertexSet& A : col.members) {
    MemberReport row;
    row.set = A;
    std::set<LetterIndex> emitted;
    // Letter fibers by direct edge scan: targets of a-labeled edges leaving A.
    std::vector<VertexSet> fibers(lg.num_letters(), EmptySet(g));
    VertexSet covered = EmptySet(g);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (!A.test(g.src(e))) continue;
      emitted.insert(lg.label(e));
      fibers[lg.label(e)].set(g.dst(e));
      covered.set(g.src(e));
    }
    row.emitted_letters = emitted.size();
    row.ck4_partition = covered == A;
    for (LetterIndex a : emitted) {
      if (RelativeRangeStep(lg, A, a) != fibers[a]) row.ck4_partition = false;
    }
    report.ck4 = report.ck4 && row.ck4_partition;
    report.members.push_back(std::move(row));
  }
  return report;
}

}  // namespace labgraph
