#include "stonedual/order.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stonedual {

namespace {

void check_range(const FinPoset& p, const std::vector<int>& xs) {
  for (int x : xs)
    if (x < 0 || x >= p.size()) throw std::out_of_range("poset element index out of range");
}

}  // namespace

FinPoset::FinPoset(int size, std::vector<uint8_t> leq, std::optional<int> bottom)
    : n_(size), leq_(std::move(leq)), bottom_(bottom) {
  if (n_ < 0 || leq_.size() != static_cast<size_t>(n_) * n_)
    throw std::invalid_argument("leq relation has wrong shape");
  for (int a = 0; a < n_; ++a) {
    if (!this->leq(a, a)) throw std::invalid_argument("leq not reflexive");
    for (int b = 0; b < n_; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a))
        throw std::invalid_argument("leq not antisymmetric");
      if (!this->leq(a, b)) continue;
      for (int c = 0; c < n_; ++c)
        if (this->leq(b, c) && !this->leq(a, c))
          throw std::invalid_argument("leq not transitive");
    }
  }
  if (bottom_) {
    if (*bottom_ < 0 || *bottom_ >= n_) throw std::out_of_range("bottom index out of range");
    for (int x = 0; x < n_; ++x)
      if (!this->leq(*bottom_, x)) throw std::invalid_argument("declared bottom is not a minimum");
  }
}

FinPoset FinPoset::chain(int n) {
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = 1;
  return FinPoset(n, std::move(leq), n > 0 ? std::optional<int>(0) : std::nullopt);
}

FinPoset FinPoset::powerset(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("powerset poset size out of range");
  int n = 1 << k;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) leq[static_cast<size_t>(a) * n + b] = 1;
  return FinPoset(n, std::move(leq), 0);
}

FinPoset FinPoset::diamond() {
  return from_leq_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}, 0);
}

FinPoset FinPoset::from_leq_pairs(int size, const std::vector<std::pair<int, int>>& pairs,
                                  std::optional<int> bottom) {
  std::vector<uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a) leq[static_cast<size_t>(a) * size + a] = 1;
  for (auto [a, b] : pairs) leq[static_cast<size_t>(a) * size + b] = 1;
  // transitive closure
  for (int k = 0; k < size; ++k)
    for (int a = 0; a < size; ++a)
      if (leq[static_cast<size_t>(a) * size + k])
        for (int b = 0; b < size; ++b)
          if (leq[static_cast<size_t>(k) * size + b]) leq[static_cast<size_t>(a) * size + b] = 1;
  return FinPoset(size, std::move(leq), bottom);
}

bool FinPoset::has_all_meets() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (!meet(a, b)) return false;
  return true;
}

std::optional<int> FinPoset::meet(int a, int b) const {
  std::optional<int> best;
  for (int x = 0; x < n_; ++x) {
    if (!leq(x, a) || !leq(x, b)) continue;
    if (!best || leq(*best, x)) best = x;
  }
  if (!best) return std::nullopt;
  // greatest lower bound: every lower bound must be below it
  for (int x = 0; x < n_; ++x)
    if (leq(x, a) && leq(x, b) && !leq(x, *best)) return std::nullopt;
  return best;
}

std::vector<int> FinPoset::minimal_above_bottom() const {
  if (!bottom_) throw std::invalid_argument("poset has no bottom");
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (a == *bottom_) continue;
    bool minimal = true;
    for (int b = 0; b < n_; ++b)
      if (b != a && b != *bottom_ && leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<int> closure_up(const FinPoset& p, const std::vector<int>& xs) {
  check_range(p, xs);
  std::vector<uint8_t> in(p.size(), 0);
  for (int x : xs)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) in[y] = 1;
  std::vector<int> out;
  for (int y = 0; y < p.size(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

bool is_filter(const FinPoset& p, const std::vector<int>& f) {
  check_range(p, f);
  if (f.empty()) throw std::invalid_argument("filters are non-empty by convention");
  std::vector<uint8_t> in(p.size(), 0);
  for (int x : f) in[x] = 1;
  for (int x : f)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !in[y]) return false;  // not upward closed
  for (int x : f)
    for (int y : f) {
      bool directed = false;
      for (int z : f)
        if (p.leq(z, x) && p.leq(z, y)) {
          directed = true;
          break;
        }
      if (!directed) return false;
    }
  return true;
}

int filter_minimum(const FinPoset& p, const std::vector<int>& f) {
  if (!is_filter(p, f)) throw std::invalid_argument("not a filter");
  for (int m : f) {
    bool least = true;
    for (int x : f)
      if (!p.leq(m, x)) {
        least = false;
        break;
      }
    if (least) return m;
  }
  throw std::logic_error("finite directed set without minimum");
}

std::vector<int> realize(const FinPoset& p, PrincipalFilter f) {
  return closure_up(p, {f.generator});
}

bool is_maximal_proper_filter(const FinPoset& p, const std::vector<int>& f) {
  if (!p.bottom()) throw std::invalid_argument("poset has no bottom");
  if (!is_filter(p, f)) return false;
  int bot = *p.bottom();
  for (int x : f)
    if (x == bot) return false;
  // proper filters are principal here, so enlarging means a smaller generator
  int g = filter_minimum(p, f);
  for (int h = 0; h < p.size(); ++h)
    if (h != g && h != bot && p.leq(h, g)) return false;
  return true;
}

std::vector<PrincipalFilter> ultrafilters(const FinPoset& p) {
  if (!p.bottom()) throw std::invalid_argument("poset has no bottom");
  std::vector<PrincipalFilter> out;
  for (int a : p.minimal_above_bottom()) out.push_back({a});
  if (p.size() <= 12) {
    // cross-check against a scan over every principal filter
    std::vector<PrincipalFilter> scan;
    for (int g = 0; g < p.size(); ++g)
      if (is_maximal_proper_filter(p, realize(p, {g}))) scan.push_back({g});
    if (scan != out) throw std::logic_error("ultrafilter enumeration disagrees with scan");
  }
  return out;
}

bool exel_criterion(const FinPoset& p, const std::vector<int>& f) {
  if (!p.bottom() || !p.has_all_meets())
    throw std::invalid_argument("exel criterion needs a meet semilattice with bottom");
  if (!is_filter(p, f)) throw std::invalid_argument("not a filter");
  int bot = *p.bottom();
  for (int x : f)
    if (x == bot) throw std::invalid_argument("filter is not proper");
  std::vector<uint8_t> in(p.size(), 0);
  for (int x : f) in[x] = 1;
  for (int y = 0; y < p.size(); ++y) {
    if (in[y]) continue;
    bool meets_all = true;
    for (int x : f)
      if (*p.meet(x, y) == bot) {
        meets_all = false;
        break;
      }
    if (meets_all) return false;
  }
  return true;
}

std::string poset_to_json(const FinPoset& p) {
  nlohmann::json j;
  j["size"] = p.size();
  std::vector<std::vector<int>> rows(p.size(), std::vector<int>(p.size(), 0));
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) rows[a][b] = p.leq(a, b) ? 1 : 0;
  j["leq"] = rows;
  if (p.bottom())
    j["bottom"] = *p.bottom();
  else
    j["bottom"] = nullptr;
  return j.dump(2) + "\n";
}

FinPoset poset_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("size").get<int>();
  auto rows = j.at("leq").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("leq row count mismatch");
  std::vector<uint8_t> leq;
  leq.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("leq column count mismatch");
    for (int v : row) leq.push_back(v ? 1 : 0);
  }
  std::optional<int> bottom;
  if (!j.at("bottom").is_null()) bottom = j.at("bottom").get<int>();
  return FinPoset(n, std::move(leq), bottom);
}

}  // namespace stonedual
