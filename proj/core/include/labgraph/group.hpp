#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace labgraph {

// Group elements are integers: the value itself for the integers and for
// cyclic groups, an index into the element list otherwise.
using Element = std::int64_t;

enum class GroupKind { kTable, kPermutation, kCyclic, kIntegers };

// Inclusive range of integers used to materialize Z fixtures.
struct Window {
  Element lo = 0;
  Element hi = 0;

  bool contains(Element g) const { return lo <= g && g <= hi; }
  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
  bool operator==(const Window&) const = default;
};

// Throws Error(kInvalidArgument) when lo > hi.
Window MakeWindow(Element lo, Element hi);

class Group {
 public:
  static Group Integers();
  static Group Cyclic(int n);
  // Multiplication table over 0..n-1; every axiom is checked and a failure
  // raises Error(kAxiomFailure) naming the violating elements.
  static Group FromTable(std::vector<std::vector<int>> table);
  // Group generated by permutations of {0..degree-1}. Elements are sorted
  // lexicographically by image list, so the identity is element 0.
  static Group FromPermutations(std::vector<std::vector<int>> generators);

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != GroupKind::kIntegers; }
  // Throws for the integers.
  std::size_t order() const;
  std::vector<Element> elements() const;

  Element identity() const { return identity_; }
  Element op(Element a, Element b) const;
  Element inv(Element a) const;
  bool contains(Element a) const;

  // Integers and cyclic/table elements print as numbers, permutations as
  // "[1,0,2]".
  std::string format(Element a) const;
  // Throws Error(kInvalidArgument) on text that names no element.
  Element parse(const std::string& text) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  int modulus() const { return modulus_; }

  bool operator==(const Group& other) const;

 private:
  GroupKind kind_ = GroupKind::kIntegers;
  int modulus_ = 0;
  Element identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> generators_;
  std::vector<Element> inverse_;
};

// op(a, b) for a windowed materialization: throws Error(kOutOfWindow) when
// an integer result escapes the window. Finite groups ignore the window.
Element OpInWindow(const Group& group, Element a, Element b, const Window& window);

}  // namespace labgraph
