#include "labgraph/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "labgraph/error.hpp"

namespace labgraph {

Window MakeWindow(Element lo, Element hi) {
  if (lo > hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "window lower bound " + std::to_string(lo) + " exceeds upper bound " + std::to_string(hi));
  }
  return Window{lo, hi};
}

Group Group::Integers() { return Group{}; }

Group Group::Cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic group order must be >= 1");
  Group g;
  g.kind_ = GroupKind::kCyclic;
  g.modulus_ = n;
  g.identity_ = 0;
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table_[a][b] = (a + b) % n;
  }
  for (int a = 0; a < n; ++a) g.inverse_.push_back((n - a) % n);
  return g;
}

Group Group::FromTable(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::kAxiomFailure, "empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw Error(ErrorCode::kAxiomFailure, "table row " + std::to_string(a) + " has wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        throw Error(ErrorCode::kAxiomFailure, "closure fails: " + std::to_string(a) + "*" +
                                                  std::to_string(b) + " is not an element");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::kAxiomFailure, "associativity fails at (" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::kAxiomFailure, "no identity element");
  Group g;
  g.kind_ = GroupKind::kTable;
  g.identity_ = identity;
  for (int a = 0; a < n; ++a) {
    int inverse = -1;
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) inverse = b;
    }
    if (inverse < 0) throw Error(ErrorCode::kAxiomFailure, "element " + std::to_string(a) + " has no inverse");
    g.inverse_.push_back(inverse);
  }
  g.table_ = std::move(table);
  return g;
}

Group Group::FromPermutations(std::vector<std::vector<int>> generators) {
  if (generators.empty()) throw Error(ErrorCode::kInvalidArgument, "permutation group needs a generator");
  const std::size_t degree = generators.front().size();
  for (const auto& p : generators) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = p.size() == degree;
    for (std::size_t i = 0; is_perm && i < degree; ++i) is_perm = sorted[i] == static_cast<int>(i);
    if (!is_perm) throw Error(ErrorCode::kAxiomFailure, "generator is not a permutation of 0..degree-1");
  }
  // (p*q)(i) = p(q(i)): apply q first.
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
  };
  std::vector<int> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& s : generators) {
        auto q = compose(s, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  Group g;
  g.kind_ = GroupKind::kPermutation;
  g.perms_.assign(seen.begin(), seen.end());
  g.generators_ = std::move(generators);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < g.perms_.size(); ++i) index.emplace(g.perms_[i], static_cast<int>(i));
  const std::size_t n = g.perms_.size();
  g.table_.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table_[a][b] = index.at(compose(g.perms_[a], g.perms_[b]));
  }
  g.identity_ = index.at(id);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[a][b] == g.identity_) g.inverse_.push_back(static_cast<Element>(b));
    }
  }
  return g;
}

std::size_t Group::order() const {
  if (!is_finite()) throw Error(ErrorCode::kInvalidArgument, "the integers have no finite order");
  return table_.size();
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out(order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Element>(i);
  return out;
}

bool Group::contains(Element a) const {
  if (!is_finite()) return true;
  return a >= 0 && a < static_cast<Element>(table_.size());
}

Element Group::op(Element a, Element b) const {
  if (!is_finite()) return a + b;
  if (!contains(a) || !contains(b)) {
    throw Error(ErrorCode::kInvalidArgument, "element outside the group");
  }
  return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Element Group::inv(Element a) const {
  if (!is_finite()) return -a;
  if (!contains(a)) throw Error(ErrorCode::kInvalidArgument, "element outside the group");
  return inverse_[static_cast<std::size_t>(a)];
}

std::string Group::format(Element a) const {
  if (kind_ != GroupKind::kPermutation) return std::to_string(a);
  const auto& p = perms_.at(static_cast<std::size_t>(a));
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

Element Group::parse(const std::string& text) const {
  if (kind_ == GroupKind::kPermutation) {
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      if (format(static_cast<Element>(i)) == text) return static_cast<Element>(i);
    }
    throw Error(ErrorCode::kInvalidArgument, "'" + text + "' is not an element of the permutation group");
  }
  std::size_t used = 0;
  Element value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !contains(value)) {
    throw Error(ErrorCode::kInvalidArgument, "'" + text + "' is not a group element");
  }
  return value;
}

bool Group::operator==(const Group& other) const {
  return kind_ == other.kind_ && modulus_ == other.modulus_ && table_ == other.table_ &&
         perms_ == other.perms_;
}

Element OpInWindow(const Group& group, Element a, Element b, const Window& window) {
  const Element result = group.op(a, b);
  if (!group.is_finite() && !window.contains(result)) {
    throw Error(ErrorCode::kOutOfWindow, std::to_string(a) + " + " + std::to_string(b) + " = " +
                                             std::to_string(result) + " escapes window [" +
                                             std::to_string(window.lo) + "," + std::to_string(window.hi) + "]");
  }
  return result;
}

}  // namespace labgraph
