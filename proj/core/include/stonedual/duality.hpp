#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stonedual/groupoid.hpp"
#include "stonedual/invsemi.hpp"

namespace stonedual {

/// Prime filter of a Boolean inverse semigroup, stored by its atom
/// generator; the realized filter is the generator's up-set.
struct PrimeFilter {
  int generator;
  bool operator==(const PrimeFilter&) const = default;
};

std::vector<int> filter_up_set(const FinInvSemi& s, PrimeFilter f);

/// All prime filters, as atom generators. For hosts with at most 15
/// elements the definitional enumeration over all subsets is run as well
/// and the two must agree.
std::vector<PrimeFilter> prime_filters(const FinInvSemi& s);

/// Definitional oracle: every subset that is a proper prime filter,
/// returned as realized sets. Host must have at most 20 elements.
std::vector<std::vector<int>> brute_force_prime_filters(const FinInvSemi& s);

PrimeFilter filter_d(const FinInvSemi& s, PrimeFilter a);
PrimeFilter filter_r(const FinInvSemi& s, PrimeFilter a);
PrimeFilter filter_inv(const FinInvSemi& s, PrimeFilter a);
std::optional<PrimeFilter> filter_product(const FinInvSemi& s, PrimeFilter a, PrimeFilter b);

/// The groupoid of prime filters with A.B = (AB)^ when d(A) = r(B).
struct StoneGroupoid {
  FinGroupoid groupoid;
  std::vector<int> atom_of;         // groupoid element -> host atom generator
  std::vector<int> filter_of_atom;  // host element -> groupoid element, or -1

  int element_of(PrimeFilter f) const { return filter_of_atom[f.generator]; }
};

StoneGroupoid stone_groupoid(const FinInvSemi& s);

/// The set of prime filters containing a.
struct USet {
  int element;
  std::vector<int> generators;  // atom generators, sorted
};

USet u_set(const FinInvSemi& s, int a);

/// a |-> U_a, an isomorphism from s onto KB(G(s)).
struct AlphaResult {
  StoneGroupoid stone;
  KbResult kbres;
  std::vector<int> map;      // s element -> kb element
  std::vector<int> inverse;  // kb element -> s element
};

AlphaResult alpha(const FinInvSemi& s);

/// g |-> F_g, an isomorphism from g onto G(KB(g)).
struct BetaResult {
  KbResult kbres;
  StoneGroupoid stone;
  std::vector<int> map;      // g element -> stone element
  std::vector<int> inverse;  // stone element -> g element
};

BetaResult beta(const FinGroupoid& g);

/// Morphism of Boolean inverse semigroups: preserves multiplication, zero
/// and binary compatible joins (validated on construction).
class SemigroupMorphism {
public:
  SemigroupMorphism(const FinInvSemi& src, const FinInvSemi& dst, std::vector<int> map);
  static SemigroupMorphism identity(const FinInvSemi& s);

  const FinInvSemi& src() const { return src_; }
  const FinInvSemi& dst() const { return dst_; }
  int operator()(int a) const { return map_[a]; }
  const std::vector<int>& map() const { return map_; }

private:
  FinInvSemi src_, dst_;
  std::vector<int> map_;
};

bool is_proper_morphism(const SemigroupMorphism& m);
bool is_weakly_meet_preserving(const SemigroupMorphism& m);
bool is_callitic(const SemigroupMorphism& m);

/// theta* = theta^-1 on prime filters: a covering functor G(T) -> G(S).
struct DualMorphismResult {
  StoneGroupoid stone_src;  // G(S)
  StoneGroupoid stone_dst;  // G(T)
  GroupoidFunctor functor;  // G(T) -> G(S)
};

DualMorphismResult dual_morphism(const SemigroupMorphism& theta);

/// phi* = phi^-1 on compact-open local bisections: a callitic morphism
/// KB(H) -> KB(G).
struct DualFunctorResult {
  KbResult kb_src;  // KB(G)
  KbResult kb_dst;  // KB(H)
  SemigroupMorphism morphism;  // KB(H) -> KB(G)
};

DualFunctorResult dual_functor(const GroupoidFunctor& phi);

/// The congruence eps_I of an additive ideal, with its quotient and natural
/// morphism.
struct CongruenceByIdeal {
  std::vector<int> ideal;
  std::vector<int> class_of;  // host element -> class index
  FinInvSemi quotient;
  SemigroupMorphism natural;
};

bool is_additive_ideal(const FinInvSemi& s, const std::vector<int>& ideal);
CongruenceByIdeal ideal_congruence(const FinInvSemi& s, const std::vector<int>& ideal);

/// A prime filter containing b and omitting a; requires b not below a.
PrimeFilter separation_witness(const FinInvSemi& s, int a, int b);

bool is_meet_semigroup(const FinInvSemi& s);

struct Correspondence {
  std::string lhs, rhs;
  bool lhs_value = false, rhs_value = false;
  bool degenerate = false;  // constant on finite instances
  bool holds() const { return lhs_value == rhs_value; }
};

struct CorrespondenceReport {
  std::vector<Correspondence> items;
  bool all_hold() const;
};

CorrespondenceReport verify_correspondences(const FinInvSemi& s);

}  // namespace stonedual
