#include "stonedual/duality.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stonedual {

std::vector<int> filter_up_set(const FinInvSemi& s, PrimeFilter f) {
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x)
    if (s.leq(f.generator, x)) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> brute_force_prime_filters(const FinInvSemi& s) {
  if (s.size() > 20) throw std::invalid_argument("brute-force filter enumeration capped at 20 elements");
  std::vector<std::vector<int>> out;
  uint32_t limit = 1u << s.size();
  for (uint32_t mask = 1; mask < limit; ++mask) {
    if (mask & (1u << s.zero())) continue;  // proper
    auto in = [&](int x) { return (mask >> x) & 1u; };
    bool ok = true;
    // upward closed
    for (int x = 0; x < s.size() && ok; ++x) {
      if (!in(x)) continue;
      for (int y = 0; y < s.size(); ++y)
        if (s.leq(x, y) && !in(y)) {
          ok = false;
          break;
        }
    }
    // downward directed
    for (int x = 0; x < s.size() && ok; ++x) {
      if (!in(x)) continue;
      for (int y = 0; y < s.size() && ok; ++y) {
        if (!in(y)) continue;
        bool found = false;
        for (int z = 0; z < s.size(); ++z)
          if (in(z) && s.leq(z, x) && s.leq(z, y)) {
            found = true;
            break;
          }
        if (!found) ok = false;
      }
    }
    // prime: a v b in A implies a in A or b in A
    for (int a = 0; a < s.size() && ok; ++a)
      for (int b = 0; b < s.size() && ok; ++b) {
        if (!s.compatible(a, b)) continue;
        auto j = s.join_lub(a, b);
        if (j && in(*j) && !in(a) && !in(b)) ok = false;
      }
    if (!ok) continue;
    std::vector<int> elems;
    for (int x = 0; x < s.size(); ++x)
      if (in(x)) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeFilter> prime_filters(const FinInvSemi& s) {
  auto rep = is_boolean(s);
  if (!rep.ok()) throw std::invalid_argument("prime filters need a Boolean host: " + rep.witness);
  std::vector<PrimeFilter> out;
  for (int a : s.atoms()) out.push_back({a});
  if (s.size() <= 15) {
    std::vector<std::vector<int>> expected;
    for (auto f : out) expected.push_back(filter_up_set(s, f));
    std::sort(expected.begin(), expected.end());
    if (expected != brute_force_prime_filters(s))
      throw std::logic_error("atom enumeration of prime filters disagrees with the brute force");
  }
  return out;
}

PrimeFilter filter_d(const FinInvSemi& s, PrimeFilter a) { return {s.d(a.generator)}; }
PrimeFilter filter_r(const FinInvSemi& s, PrimeFilter a) { return {s.r(a.generator)}; }
PrimeFilter filter_inv(const FinInvSemi& s, PrimeFilter a) { return {s.inv(a.generator)}; }

std::optional<PrimeFilter> filter_product(const FinInvSemi& s, PrimeFilter a, PrimeFilter b) {
  if (s.d(a.generator) != s.r(b.generator)) return std::nullopt;
  return PrimeFilter{s.mul(a.generator, b.generator)};
}

StoneGroupoid stone_groupoid(const FinInvSemi& s) {
  auto filters = prime_filters(s);
  int n = static_cast<int>(filters.size());
  StoneGroupoid out{FinGroupoid(0, {}, {}, {}), {}, {}};
  std::vector<int> atom_of(n);
  std::vector<int> filter_of_atom(s.size(), -1);
  for (int i = 0; i < n; ++i) {
    atom_of[i] = filters[i].generator;
    filter_of_atom[filters[i].generator] = i;
  }
  std::vector<int> mul(static_cast<size_t>(n) * n, -1), inv(n), identities;
  for (int i = 0; i < n; ++i) {
    inv[i] = filter_of_atom[s.inv(atom_of[i])];
    if (s.is_idempotent(atom_of[i])) identities.push_back(i);
    for (int j = 0; j < n; ++j) {
      auto p = filter_product(s, filters[i], filters[j]);
      if (!p) continue;
      int prod = filter_of_atom[p->generator];
      if (prod < 0) throw std::logic_error("product of atoms is not an atom");
      mul[static_cast<size_t>(i) * n + j] = prod;
    }
  }
  out.groupoid = FinGroupoid(n, std::move(mul), std::move(inv), std::move(identities));
  out.atom_of = std::move(atom_of);
  out.filter_of_atom = std::move(filter_of_atom);
  return out;
}

USet u_set(const FinInvSemi& s, int a) {
  USet u{a, {}};
  for (int g : s.atoms())
    if (s.leq(g, a)) u.generators.push_back(g);
  return u;
}

AlphaResult alpha(const FinInvSemi& s) {
  auto stone = stone_groupoid(s);
  auto kbres = kb(stone.groupoid);
  std::vector<int> map(s.size()), inverse(kbres.semi.size(), -1);
  for (int a = 0; a < s.size(); ++a) {
    std::vector<int> bisection;
    for (int g : u_set(s, a).generators) bisection.push_back(stone.filter_of_atom[g]);
    std::sort(bisection.begin(), bisection.end());
    map[a] = kbres.index_of(bisection);
    inverse[map[a]] = a;
  }
  // bijective
  if (kbres.semi.size() != s.size()) throw std::logic_error("alpha is not surjective");
  for (int v : inverse)
    if (v < 0) throw std::logic_error("alpha is not injective");
  // homomorphism (zero, inverses and products transfer)
  if (map[s.zero()] != kbres.semi.zero()) throw std::logic_error("alpha does not preserve zero");
  for (int a = 0; a < s.size(); ++a) {
    if (kbres.semi.inv(map[a]) != map[s.inv(a)])
      throw std::logic_error("alpha does not preserve inverses");
    for (int b = 0; b < s.size(); ++b)
      if (kbres.semi.mul(map[a], map[b]) != map[s.mul(a, b)])
        throw std::logic_error("alpha is not a homomorphism");
  }
  return AlphaResult{std::move(stone), std::move(kbres), std::move(map), std::move(inverse)};
}

BetaResult beta(const FinGroupoid& g) {
  auto kbres = kb(g);
  auto stone = stone_groupoid(kbres.semi);
  std::vector<int> map(g.size(), -1), inverse(stone.groupoid.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    int atom = kbres.index_of(std::vector<int>{x});  // the singleton bisection
    map[x] = stone.filter_of_atom[atom];
    if (map[x] < 0) throw std::logic_error("singleton bisection is not an atom");
    inverse[map[x]] = x;
  }
  if (stone.groupoid.size() != g.size()) throw std::logic_error("beta is not surjective");
  for (int v : inverse)
    if (v < 0) throw std::logic_error("beta is not injective");
  // functor checks run in the constructor
  GroupoidFunctor check(g, stone.groupoid, map);
  return BetaResult{std::move(kbres), std::move(stone), std::move(map), std::move(inverse)};
}

SemigroupMorphism::SemigroupMorphism(const FinInvSemi& src, const FinInvSemi& dst,
                                     std::vector<int> map)
    : src_(src), dst_(dst), map_(std::move(map)) {
  if (map_.size() != static_cast<size_t>(src_.size()))
    throw std::invalid_argument("morphism map has wrong length");
  for (int v : map_)
    if (v < 0 || v >= dst_.size()) throw std::invalid_argument("morphism map value out of range");
  if (map_[src_.zero()] != dst_.zero()) throw std::invalid_argument("morphism does not preserve zero");
  for (int a = 0; a < src_.size(); ++a)
    for (int b = 0; b < src_.size(); ++b) {
      if (map_[src_.mul(a, b)] != dst_.mul(map_[a], map_[b]))
        throw std::invalid_argument("morphism does not preserve multiplication");
      if (src_.compatible(a, b)) {
        auto j = src_.join_lub(a, b);
        if (j) {
          auto dj = dst_.join_lub(map_[a], map_[b]);
          if (!dj || *dj != map_[*j])
            throw std::invalid_argument("morphism does not preserve compatible joins");
        }
      }
    }
}

SemigroupMorphism SemigroupMorphism::identity(const FinInvSemi& s) {
  std::vector<int> map(s.size());
  for (int i = 0; i < s.size(); ++i) map[i] = i;
  return SemigroupMorphism(s, s, std::move(map));
}

bool is_proper_morphism(const SemigroupMorphism& m) {
  const auto& t = m.dst();
  for (int x = 0; x < t.size(); ++x) {
    // saturate the join of everything below x that is below an image
    int acc = t.zero();
    for (int y = 0; y < t.size(); ++y) {
      if (!t.leq(y, x)) continue;
      bool below_image = false;
      for (int s = 0; s < m.src().size(); ++s)
        if (t.leq(y, m(s))) {
          below_image = true;
          break;
        }
      if (!below_image) continue;
      auto j = t.join_lub(acc, y);
      if (!j) return false;
      acc = *j;
    }
    if (acc != x) return false;
  }
  return true;
}

bool is_weakly_meet_preserving(const SemigroupMorphism& m) {
  for (int a = 0; a < m.src().size(); ++a)
    for (int b = 0; b < m.src().size(); ++b)
      for (int t = 0; t < m.dst().size(); ++t) {
        if (!m.dst().leq(t, m(a)) || !m.dst().leq(t, m(b))) continue;
        bool found = false;
        for (int c = 0; c < m.src().size(); ++c)
          if (m.src().leq(c, a) && m.src().leq(c, b) && m.dst().leq(t, m(c))) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

bool is_callitic(const SemigroupMorphism& m) {
  return is_proper_morphism(m) && is_weakly_meet_preserving(m);
}

DualMorphismResult dual_morphism(const SemigroupMorphism& theta) {
  if (!is_callitic(theta)) throw std::invalid_argument("dual_morphism needs a callitic morphism");
  auto stone_src = stone_groupoid(theta.src());
  auto stone_dst = stone_groupoid(theta.dst());
  std::vector<int> map(stone_dst.groupoid.size(), -1);
  for (int i = 0; i < stone_dst.groupoid.size(); ++i) {
    int b = stone_dst.atom_of[i];
    // preimage of b^ under theta; a filter exactly because theta is callitic
    std::vector<int> pre;
    for (int x = 0; x < theta.src().size(); ++x)
      if (theta.dst().leq(b, theta(x))) pre.push_back(x);
    if (pre.empty()) throw std::logic_error("preimage filter empty for a proper morphism");
    std::optional<int> min;
    for (int x : pre) {
      bool least = true;
      for (int y : pre)
        if (!theta.src().leq(x, y)) {
          least = false;
          break;
        }
      if (least) min = x;
    }
    if (!min) throw std::logic_error("preimage of a prime filter is not principal");
    int atom = stone_src.filter_of_atom[*min];
    if (atom < 0) throw std::logic_error("preimage filter is not prime");
    map[i] = atom;
  }
  GroupoidFunctor functor(stone_dst.groupoid, stone_src.groupoid, std::move(map));
  if (!is_covering_functor(functor))
    throw std::logic_error("dual of a callitic morphism failed to be a covering functor");
  return DualMorphismResult{std::move(stone_src), std::move(stone_dst), std::move(functor)};
}

DualFunctorResult dual_functor(const GroupoidFunctor& phi) {
  if (!is_covering_functor(phi)) throw std::invalid_argument("dual_functor needs a covering functor");
  auto kb_src = kb(phi.src());
  auto kb_dst = kb(phi.dst());
  std::vector<int> map(kb_dst.semi.size());
  for (int u = 0; u < kb_dst.semi.size(); ++u) {
    std::vector<int> pre;
    for (int x = 0; x < phi.src().size(); ++x) {
      const auto& bis = kb_dst.bisections[u];
      if (std::binary_search(bis.begin(), bis.end(), phi(x))) pre.push_back(x);
    }
    map[u] = kb_src.index_of(pre);  // throws if the preimage failed to be a bisection
  }
  SemigroupMorphism m(kb_dst.semi, kb_src.semi, std::move(map));
  if (!is_callitic(m)) throw std::logic_error("dual of a covering functor failed to be callitic");
  return DualFunctorResult{std::move(kb_src), std::move(kb_dst), std::move(m)};
}

bool is_additive_ideal(const FinInvSemi& s, const std::vector<int>& ideal) {
  std::vector<uint8_t> in(s.size(), 0);
  for (int x : ideal) {
    if (x < 0 || x >= s.size()) throw std::out_of_range("ideal element out of range");
    in[x] = 1;
  }
  if (!in[s.zero()]) return false;
  for (int x : ideal)
    for (int y = 0; y < s.size(); ++y)
      if (!in[s.mul(x, y)] || !in[s.mul(y, x)]) return false;
  for (int x : ideal)
    for (int y : ideal) {
      if (!s.compatible(x, y)) continue;
      auto j = s.join_lub(x, y);
      if (j && !in[*j]) return false;
    }
  return true;
}

CongruenceByIdeal ideal_congruence(const FinInvSemi& s, const std::vector<int>& ideal) {
  if (!is_additive_ideal(s, ideal)) throw std::invalid_argument("not an additive ideal");
  std::vector<uint8_t> in(s.size(), 0);
  for (int x : ideal) in[x] = 1;

  auto related = [&](int a, int b) {
    for (int c = 0; c < s.size(); ++c) {
      if (!s.leq(c, a) || !s.leq(c, b)) continue;
      if (in[complement_below(s, c, a)] && in[complement_below(s, c, b)]) return true;
    }
    return false;
  };

  std::vector<int> class_of(s.size(), -1);
  std::vector<int> reps;
  for (int a = 0; a < s.size(); ++a) {
    if (class_of[a] >= 0) continue;
    int cls = static_cast<int>(reps.size());
    reps.push_back(a);
    class_of[a] = cls;
    for (int b = a + 1; b < s.size(); ++b)
      if (class_of[b] < 0 && related(a, b)) class_of[b] = cls;
  }
  // the relation must be transitive (it is an additive congruence)
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if ((class_of[a] == class_of[b]) != related(a, b))
        throw std::logic_error("ideal congruence failed to be an equivalence");
  // products must be well-defined on classes
  int m = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<size_t>(m) * m, -1), inv(m, -1);
  for (int a = 0; a < s.size(); ++a) {
    int ca = class_of[a];
    if (inv[ca] < 0)
      inv[ca] = class_of[s.inv(a)];
    else if (inv[ca] != class_of[s.inv(a)])
      throw std::logic_error("ideal congruence not compatible with inversion");
    for (int b = 0; b < s.size(); ++b) {
      int& slot = mul[static_cast<size_t>(ca) * m + class_of[b]];
      int val = class_of[s.mul(a, b)];
      if (slot < 0)
        slot = val;
      else if (slot != val)
        throw std::logic_error("ideal congruence is not a congruence");
    }
  }
  std::vector<std::string> names(m);
  for (int c = 0; c < m; ++c) names[c] = "[" + s.name(reps[c]) + "]";
  FinInvSemi quotient(m, std::move(mul), std::move(inv), class_of[s.zero()], std::move(names));
  SemigroupMorphism natural(s, quotient, class_of);
  // kernel is exactly the ideal
  for (int a = 0; a < s.size(); ++a)
    if ((class_of[a] == class_of[s.zero()]) != (in[a] != 0))
      throw std::logic_error("congruence kernel differs from the ideal");
  return CongruenceByIdeal{ideal, std::move(class_of), std::move(quotient), std::move(natural)};
}

PrimeFilter separation_witness(const FinInvSemi& s, int a, int b) {
  if (s.leq(b, a)) throw std::invalid_argument("separation witness needs b not below a");
  for (int g : s.atoms())
    if (s.leq(g, b) && !s.leq(g, a)) return PrimeFilter{g};
  throw std::logic_error("no separating prime filter found in a Boolean host");
}

bool is_meet_semigroup(const FinInvSemi& s) {
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (!s.meet(a, b)) return false;
  return true;
}

bool CorrespondenceReport::all_hold() const {
  for (const auto& it : items)
    if (!it.holds()) return false;
  return true;
}

CorrespondenceReport verify_correspondences(const FinInvSemi& s) {
  auto stone = stone_groupoid(s);
  const auto& g = stone.groupoid;
  CorrespondenceReport rep;
  rep.items.push_back({"fundamental", "effective", is_fundamental(s), is_effective_discrete(g), false});
  rep.items.push_back({"0-simplifying", "minimal", is_zero_simplifying(s), is_minimal_discrete(g), false});
  rep.items.push_back({"basic", "principal", is_basic(s), is_principal(g), false});
  rep.items.push_back({"simple", "minimal and effective", is_simple(s),
                       is_minimal_discrete(g) && is_effective_discrete(g), false});
  rep.items.push_back({"semisimple", "discrete", is_semisimple(s), true, true});
  rep.items.push_back({"meet-semigroup", "Hausdorff", is_meet_semigroup(s), is_hausdorff_discrete(g), true});
  rep.items.push_back({"countable", "second-countable", true, true, true});
  return rep;
}

}  // namespace stonedual
