#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonedual/invsemi.hpp"

namespace stonedual {

/// Finite groupoid as an algebraic structure: a partial multiplication table
/// with a sentinel for undefined products. Construction checks the category
/// axioms, that products exist exactly when d(a) = r(b), and that the
/// declared identities are exactly the computed ones.
class FinGroupoid {
public:
  FinGroupoid(int n, std::vector<int> mul, std::vector<int> inv, std::vector<int> identities);

  int size() const { return n_; }
  bool defined(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b] >= 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  bool is_identity(int e) const { return ident_[e] != 0; }
  const std::vector<int>& identities() const { return ident_list_; }
  int d(int a) const { return d_[a]; }
  int r(int a) const { return r_[a]; }

  std::vector<int> star(int e) const;  // elements with d(a) = e

private:
  int n_;
  std::vector<int> mul_, inv_;
  std::vector<uint8_t> ident_;
  std::vector<int> ident_list_, d_, r_;
};

struct GroupoidComponent {
  int points = 1;
  GroupTable group;
};

/// Disjoint union of connected groupoids X_i x H_i x X_i.
FinGroupoid from_components(const std::vector<GroupoidComponent>& spec);
FinGroupoid pair_groupoid(int n);
FinGroupoid disjoint_union(const FinGroupoid& g, const FinGroupoid& h);

std::vector<std::vector<int>> connected_components(const FinGroupoid& g);
GroupTable local_group(const FinGroupoid& g, int e, std::vector<int>* elements = nullptr);
std::vector<int> iso_part(const FinGroupoid& g);

/// Subset multiplication AB = {ab : a in A, b in B, ab defined}.
std::vector<int> subset_mul(const FinGroupoid& g, const std::vector<int>& a,
                            const std::vector<int>& b);
std::vector<int> subset_inv(const FinGroupoid& g, const std::vector<int>& a);

/// Decided by the two-sided uniqueness characterization and cross-checked
/// against the containment definition.
bool is_local_bisection(const FinGroupoid& g, const std::vector<int>& a);

/// The inverse monoid of all local bisections under subset multiplication;
/// every subset of a finite discrete groupoid is compact-open.
struct KbResult {
  FinInvSemi semi;
  std::vector<std::vector<int>> bisections;  // element index -> sorted subset
  int index_of(const std::vector<int>& bisection) const;
};
KbResult kb(const FinGroupoid& g, int size_cap = 2000);

class GroupoidFunctor {
public:
  GroupoidFunctor(const FinGroupoid& src, const FinGroupoid& dst, std::vector<int> map);
  const FinGroupoid& src() const { return src_; }
  const FinGroupoid& dst() const { return dst_; }
  int operator()(int a) const { return map_[a]; }
  const std::vector<int>& map() const { return map_; }

private:
  FinGroupoid src_, dst_;
  std::vector<int> map_;
};

bool is_star_injective(const GroupoidFunctor& f);
bool is_star_surjective(const GroupoidFunctor& f);
bool is_covering_functor(const GroupoidFunctor& f);

/// Factorization x = uv with f(u) = a, f(v) = b, given f(x) = ab. Fails
/// (returns nothing) when f is not a covering functor.
std::optional<std::pair<int, int>> lift_product(const GroupoidFunctor& f, int x, int a, int b);

bool is_principal(const FinGroupoid& g);
bool is_effective_discrete(const FinGroupoid& g);
bool is_minimal_discrete(const FinGroupoid& g);
inline bool is_hausdorff_discrete(const FinGroupoid&) { return true; }

/// G with one extra isolated identity adjoined.
FinGroupoid adjoin_identity(const FinGroupoid& g);

std::string groupoid_to_json(const FinGroupoid& g);
FinGroupoid groupoid_from_json(const std::string& text);
std::string groupoid_to_dot(const FinGroupoid& g);

}  // namespace stonedual
