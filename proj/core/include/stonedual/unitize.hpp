#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stonedual/duality.hpp"
#include "stonedual/finset.hpp"

namespace stonedual {

/// Partial bijection of the naturals with finite support, kept as a sorted
/// graph so equality is syntactic.
class FinSupportPB {
public:
  FinSupportPB() = default;
  explicit FinSupportPB(std::vector<std::pair<int, int>> graph);
  static FinSupportPB identity_on(const FinSet& s);

  std::optional<int> apply(int n) const;
  FinSupportPB compose(const FinSupportPB& rhs) const;  // apply rhs, then this
  FinSupportPB inverse() const;
  FinSet domain() const;
  FinSet range() const;
  const std::vector<std::pair<int, int>>& graph() const { return graph_; }
  bool empty() const { return graph_.empty(); }

  bool operator==(const FinSupportPB&) const = default;
  std::string str() const;

private:
  std::vector<std::pair<int, int>> graph_;
};

/// Element of the unitization of the finite-support partial bijections of
/// the naturals. Inner elements are the finite-support maps themselves;
/// Outer(e, s) acts as s on dom(s), is undefined on e minus dom(s), and is
/// the identity off e. Outer values are canonical: e is minimal, so equality
/// is syntactic.
class UnitizedElem {
public:
  static UnitizedElem inner(FinSupportPB s);
  static UnitizedElem outer(const FinSet& e, const FinSupportPB& s);
  static UnitizedElem one() { return outer({}, FinSupportPB()); }

  bool is_inner() const { return inner_; }
  const FinSupportPB& finite_part() const { return s_; }
  const FinSet& exceptional_set() const { return e_; }

  bool defined(int n) const;
  std::optional<int> apply(int n) const;
  UnitizedElem inverse() const;

  bool operator==(const UnitizedElem&) const = default;
  std::string str() const;

private:
  UnitizedElem(bool inner, FinSet e, FinSupportPB s)
      : inner_(inner), e_(std::move(e)), s_(std::move(s)) {}
  bool inner_;
  FinSet e_;
  FinSupportPB s_;
};

/// Product by direct evaluation of the two partial maps over a finite
/// probing window.
UnitizedElem compose_direct(const UnitizedElem& x, const UnitizedElem& y);
/// Product by the symbolic join decomposition formula.
UnitizedElem compose_formula(const UnitizedElem& x, const UnitizedElem& y);
/// Both routes; throws if they ever disagree.
UnitizedElem compose_unitized(const UnitizedElem& x, const UnitizedElem& y);

/// True iff x is a finitary permutation of the naturals: an outer element
/// whose finite part is a bijection of its exceptional set.
bool is_unit_unitized(const UnitizedElem& x);

UnitizedElem random_unitized_elem(std::mt19937_64& rng, int window);

std::string unitized_to_json(const UnitizedElem& x);
UnitizedElem unitized_from_json(const std::string& text);

/// The Clifford semigroup of local unit groups G_e = units of eSe, glued by
/// the connecting maps a |-> a v (f \ e). Elements are exactly the host
/// elements with d(a) = r(a).
struct CliffordSemigroup {
  FinInvSemi host;
  std::vector<int> elements;  // host elements with d = r
  std::vector<int> local_of;  // host element -> local index, or -1
  std::vector<int> mul;       // local product table

  int size() const { return static_cast<int>(elements.size()); }
  int times(int i, int j) const { return mul[static_cast<size_t>(i) * elements.size() + j]; }
  int inv(int i) const { return local_of[host.inv(elements[i])]; }
  bool is_idem(int i) const { return host.is_idempotent(elements[i]); }
  int idem_of(int i) const { return host.d(elements[i]); }
  /// The connecting map into G_f; requires idem_of(i) <= f.
  int connect(int i, int f) const;
  bool leq(int i, int j) const;  // natural order of the Clifford semigroup
};

CliffordSemigroup clifford(const FinInvSemi& s);

/// U(S) = C(S)/sigma, with sigma realized as the compatibility relation
/// (the host being E-unitary makes it transitive; this is verified).
struct UnitGroupResult {
  CliffordSemigroup cs;
  std::vector<int> sigma_class;  // clifford index -> class index
  GroupTable group;
  std::vector<int> host_units;   // units of the host monoid
  std::vector<int> unit_class;   // the explicit isomorphism host unit -> class
};

UnitGroupResult group_of_units(const FinInvSemi& s);

/// Units of KB(G with an adjoined identity) against the bisections of that
/// groupoid, with the correspondence realized through sigma-classes.
struct FullGroupReport {
  FinGroupoid ginf;
  KbResult kbinf;
  std::vector<int> full_group;  // kbinf elements that are bisections of ginf
  UnitGroupResult units;        // U(KB(G))
  bool isomorphism_ok = false;
  int full_group_order() const { return static_cast<int>(full_group.size()); }
  int unit_group_order() const { return units.group.n; }
};

FullGroupReport units_vs_full_group(const FinGroupoid& g);

/// T = KB(G(S) with an adjoined identity): a Boolean inverse monoid of size
/// 2|S| containing S as an additive ideal and subalgebra.
struct FiniteUnitization {
  StoneGroupoid stone;
  FinGroupoid ginf;
  KbResult kbres;
  std::vector<int> embedding;  // s element -> monoid element
  const FinInvSemi& monoid() const { return kbres.semi; }
};

FiniteUnitization unitize_finite(const FinInvSemi& s);

}  // namespace stonedual
