#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace stonedual {

/// Finite subset of the natural numbers, kept sorted so equality is syntactic.
class FinSet {
public:
  FinSet() = default;
  FinSet(std::initializer_list<int> xs);
  explicit FinSet(std::vector<int> xs);

  bool contains(int x) const;
  bool empty() const { return elems_.empty(); }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }

  FinSet with(int x) const;
  FinSet without(int x) const;

  bool operator==(const FinSet&) const = default;
  auto operator<=>(const FinSet&) const = default;

  std::string str() const;

private:
  std::vector<int> elems_;
};

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersect(const FinSet& a, const FinSet& b);
FinSet set_diff(const FinSet& a, const FinSet& b);
bool set_subset(const FinSet& a, const FinSet& b);
FinSet range_set(int lo, int hi);  // {lo, ..., hi-1}

}  // namespace stonedual
