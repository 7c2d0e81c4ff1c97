#include "stonedual/finset.hpp"

#include <algorithm>
#include <sstream>

namespace stonedual {

FinSet::FinSet(std::initializer_list<int> xs) : FinSet(std::vector<int>(xs)) {}

FinSet::FinSet(std::vector<int> xs) : elems_(std::move(xs)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FinSet::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

FinSet FinSet::with(int x) const {
  auto xs = elems_;
  xs.push_back(x);
  return FinSet(std::move(xs));
}

FinSet FinSet::without(int x) const {
  auto xs = elems_;
  std::erase(xs, x);
  FinSet out;
  out.elems_ = std::move(xs);
  return out;
}

std::string FinSet::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<int> out;
  std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(),
                 b.elems().end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet set_intersect(const FinSet& a, const FinSet& b) {
  std::vector<int> out;
  std::set_intersection(a.elems().begin(), a.elems().end(), b.elems().begin(),
                        b.elems().end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet set_diff(const FinSet& a, const FinSet& b) {
  std::vector<int> out;
  std::set_difference(a.elems().begin(), a.elems().end(), b.elems().begin(),
                      b.elems().end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

bool set_subset(const FinSet& a, const FinSet& b) {
  return std::includes(b.elems().begin(), b.elems().end(), a.elems().begin(),
                       a.elems().end());
}

FinSet range_set(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i < hi; ++i) out.push_back(i);
  return FinSet(std::move(out));
}

}  // namespace stonedual
