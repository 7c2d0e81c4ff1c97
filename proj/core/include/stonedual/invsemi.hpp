#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonedual/genbool.hpp"

namespace stonedual {

/// Group presented by its multiplication table.
struct GroupTable {
  int n = 0;
  std::vector<int> mul;  // n*n
  int identity = 0;
  std::vector<int> inverse;

  int times(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
};

GroupTable trivial_group();
GroupTable cyclic_group(int k);
bool is_group_table(int n, const std::vector<int>& mul, int* identity_out = nullptr);

/// Partial bijection of {0..ground-1}; the concrete model behind the
/// symmetric inverse monoid.
struct PartialBijection {
  int ground = 0;
  std::vector<int> img;  // img[p] = image of p, or -1

  static PartialBijection empty(int ground);
  static PartialBijection identity(int ground);

  bool defined(int p) const { return img[p] >= 0; }
  int rank() const;
  PartialBijection compose(const PartialBijection& rhs) const;  // apply rhs, then this
  PartialBijection inverse() const;
  std::string str() const;
  bool operator==(const PartialBijection&) const = default;
};

/// Finite inverse semigroup with zero, as multiplication and inverse tables.
/// The natural order, compatibility relation and (for moderate sizes) the
/// meet and compatible-join tables are derived once at construction; values
/// are immutable afterwards.
class FinInvSemi {
public:
  FinInvSemi(int n, std::vector<int> mul, std::vector<int> inv, int zero,
             std::vector<std::string> names = {});

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int zero() const { return zero_; }
  const std::string& name(int a) const { return names_[a]; }
  std::optional<int> index_of_name(const std::string& name) const;

  bool is_idempotent(int a) const { return idem_[a] != 0; }
  const std::vector<int>& idempotents() const { return idem_list_; }
  int d(int a) const { return mul(inv(a), a); }
  int r(int a) const { return mul(a, inv(a)); }

  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * n_ + b] != 0; }
  bool compatible(int a, int b) const { return compat_[static_cast<size_t>(a) * n_ + b] != 0; }
  bool orthogonal(int a, int b) const;

  /// Greatest lower bound, by scan over the order; absent in non-Boolean
  /// instances only.
  std::optional<int> meet(int a, int b) const;
  /// Least upper bound of a compatible pair; rejects incompatible pairs.
  std::optional<int> compatible_join(int a, int b) const;
  /// Least upper bound scan without the compatibility guard.
  std::optional<int> join_lub(int a, int b) const;

  /// Largest idempotent below a, when one exists.
  std::optional<int> fixed_point(int a) const;

  std::vector<int> atoms() const;
  std::optional<int> monoid_identity() const;

private:
  int n_, zero_;
  std::vector<int> mul_, inv_;
  std::vector<std::string> names_;
  std::vector<uint8_t> idem_;
  std::vector<int> idem_list_;
  std::vector<uint8_t> leq_, compat_;
  bool tables_cached_ = false;
  std::vector<int> meet_tab_, join_tab_;  // -1 = absent; cached for n <= 600

  void validate_and_derive();
};

// --- named constructions -------------------------------------------------

std::vector<PartialBijection> partial_bijections(int n);
FinInvSemi symmetric_inverse_monoid(int n);  // 1 <= n <= 5

FinInvSemi group_with_zero(const GroupTable& g, const std::string& label = "g");

struct LabelledPB {
  PartialBijection pb;
  std::vector<int> labels;  // labels[p] for p in dom(pb), else -1
};
std::vector<LabelledPB> rook_elements(int n, const GroupTable& g);
FinInvSemi rook_matrices(int n, const GroupTable& g);  // n <= 3, |G| <= 3

FinInvSemi direct_product(const FinInvSemi& s, const FinInvSemi& t);

struct Subalgebra {
  FinInvSemi semi;
  std::vector<int> parent_of;  // sub element -> host element
};
Subalgebra subalgebra_generated(const FinInvSemi& s, std::vector<int> generators,
                                int size_cap = 2000);

// --- structure -----------------------------------------------------------

/// The unique c with c <= a, b _|_ c and b v c = a; requires b <= a. The
/// scan also asserts uniqueness.
int complement_below(const FinInvSemi& s, int b, int a);

/// The semilattice of idempotents as a lattice, when all joins of
/// idempotents exist. idem_index maps host elements to lattice indices.
std::optional<FinLattice> idempotent_lattice(const FinInvSemi& s, std::vector<int>* idem_index = nullptr);

struct BooleanReport {
  bool joins_exist = true;
  bool distributes = true;
  bool idempotents_gba = true;
  std::string witness;
  bool ok() const { return joins_exist && distributes && idempotents_gba; }
};

BooleanReport is_boolean(const FinInvSemi& s);

struct Pencil {
  std::vector<int> elements;
  int source = -1;  // e = join of d(x_i)
  int target = -1;  // each r(x_i) <= f
};

bool pencil_is_valid(const FinInvSemi& s, const Pencil& p);
std::optional<Pencil> find_pencil(const FinInvSemi& s, int e, int f);

std::vector<std::vector<int>> additive_ideals(const FinInvSemi& s);
std::vector<int> additive_ideal_generated(const FinInvSemi& s, const std::vector<int>& seed);

/// Decided by ideal count and by the pencil criterion; the two must agree.
bool is_zero_simplifying(const FinInvSemi& s);

bool is_fundamental(const FinInvSemi& s);

std::vector<int> infinitesimals(const FinInvSemi& s);

/// The saturated decomposition of a into an idempotent part and the
/// infinitesimals below a, when its join returns a.
std::optional<std::vector<int>> basic_decomposition(const FinInvSemi& s, int a);
bool is_basic(const FinInvSemi& s);

bool is_semisimple(const FinInvSemi& s);
bool d_related(const FinInvSemi& s, int e, int f);
bool is_0_simple(const FinInvSemi& s);
bool is_properly_infinite(const FinInvSemi& s, int e);
bool is_purely_infinite(const FinInvSemi& s);
bool is_simple(const FinInvSemi& s);

struct SigmaUnitalResult {
  bool value = false;
  std::string note;
};
SigmaUnitalResult sigma_unital(const FinInvSemi& s);

std::string semigroup_to_json(const FinInvSemi& s);
FinInvSemi semigroup_from_json(const std::string& text);

}  // namespace stonedual
