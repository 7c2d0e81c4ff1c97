#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stonedual/catalog.hpp"
#include "stonedual/order.hpp"

namespace testsupport {

/// Element of a symmetric-inverse-monoid-style semigroup by display name,
/// e.g. "[0>1]" or "0".
inline int named(const stonedual::FinInvSemi& s, const std::string& name) {
  auto i = s.index_of_name(name);
  if (!i) throw std::runtime_error("no element named " + name);
  return *i;
}

/// Small meet semilattices with bottom used by the order-law suites.
inline std::vector<std::pair<std::string, stonedual::FinPoset>> poset_family() {
  using stonedual::FinPoset;
  std::vector<std::pair<std::string, FinPoset>> out;
  for (int n = 1; n <= 5; ++n)
    out.emplace_back("chain" + std::to_string(n), FinPoset::chain(n));
  for (int k = 0; k <= 3; ++k)
    out.emplace_back("powerset" + std::to_string(k), FinPoset::powerset(k));
  out.emplace_back("diamond", FinPoset::diamond());
  // M3: three incomparable midpoints
  out.emplace_back("m3", FinPoset::from_leq_pairs(
                             5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, 0));
  // N5: pentagon
  out.emplace_back("n5", FinPoset::from_leq_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, 0));
  // grid 3x2
  {
    int n = 6;
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    auto code = [](int a, int b) { return a * 2 + b; };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 2; ++d)
            if (a <= c && b <= d) leq[static_cast<size_t>(code(a, b)) * n + code(c, d)] = 1;
    out.emplace_back("grid3x2", FinPoset(n, std::move(leq), 0));
  }
  // the idempotent order of I_2
  {
    auto i2 = stonedual::symmetric_inverse_monoid(2);
    const auto& es = i2.idempotents();
    int n = static_cast<int>(es.size());
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i2.leq(es[i], es[j])) leq[static_cast<size_t>(i) * n + j] = 1;
    int bottom = 0;
    for (int i = 0; i < n; ++i)
      if (es[i] == i2.zero()) bottom = i;
    out.emplace_back("E(I_2)", FinPoset(n, std::move(leq), bottom));
  }
  return out;
}

/// All filters of a poset of size <= 20, as element sets.
inline std::vector<std::vector<int>> all_filters(const stonedual::FinPoset& p) {
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (1u << p.size()); ++mask) {
    std::vector<int> f;
    for (int x = 0; x < p.size(); ++x)
      if (mask & (1u << x)) f.push_back(x);
    if (stonedual::is_filter(p, f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace testsupport
