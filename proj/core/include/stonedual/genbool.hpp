#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stonedual/finset.hpp"

namespace stonedual {

/// Finite lattice with bottom, presented by meet/join tables. Construction
/// validates the lattice laws; whether the lattice is a generalized Boolean
/// algebra is a property to be checked, not assumed.
class FinLattice {
public:
  FinLattice(int n, std::vector<int> meet, std::vector<int> join, int zero);

  static FinLattice powerset(int k);
  static FinLattice chain(int n);
  /// Finite window of the finite/cofinite algebra: Fin(s) and Cofin(s) for
  /// s inside {0..w-1}. Index i < 2^w encodes Fin(i), i >= 2^w encodes
  /// Cofin(i - 2^w).
  static FinLattice fincofin_window(int w);

  int size() const { return n_; }
  int zero() const { return zero_; }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * n_ + b]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * n_ + b]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
  bool is_distributive() const;
  std::optional<int> top() const;  // join of everything, if it bounds all

private:
  int n_, zero_;
  std::vector<int> meet_, join_;
};

/// x \ y when it exists: the d with y ^ d = 0 and (x ^ y) v d = x. Unique in
/// a distributive lattice.
std::optional<int> relcomplement(const FinLattice& l, int x, int y);

/// Complement of c in the interval [b, a], computed as (a \ c) v b.
std::optional<int> interval_complement(const FinLattice& l, int b, int c, int a);

struct GbaEquivReport {
  bool distributive = true;
  bool clause_relcomplements = true;   // every x \ y exists
  bool clause_principal_ideals = true; // each non-zero a-down is a unital BA
  bool clause_intervals = true;        // every interval is complemented
  std::string witness;
  bool is_gba() const {
    return distributive && clause_relcomplements && clause_principal_ideals && clause_intervals;
  }
  bool consistent() const {
    return clause_relcomplements == clause_principal_ideals &&
           clause_principal_ideals == clause_intervals;
  }
};

GbaEquivReport verify_gba_equivalences(const FinLattice& l);

/// Order-isomorphism between filters of a-down and filters of the lattice
/// containing a, realized on principal generators. Construction verifies the
/// two maps are mutually inverse and send ultrafilters to ultrafilters.
struct FilterTransfer {
  int a = -1;
  std::vector<int> generators;        // elements g <= a; g^ in a-down <-> g^ in host
  std::vector<int> down_ultra;        // generators of ultrafilters of a-down
  std::vector<int> host_ultra;        // generators of host ultrafilters containing a
};

FilterTransfer filter_transfer(const FinLattice& l, int a);

/// Lattice homomorphism presented by its element map; construction validates
/// preservation of 0, meet, join and relative complements.
class LatticeHom {
public:
  LatticeHom(const FinLattice& src, const FinLattice& dst, std::vector<int> map);
  const FinLattice& src() const { return src_; }
  const FinLattice& dst() const { return dst_; }
  int operator()(int x) const { return map_[x]; }

private:
  FinLattice src_, dst_;
  std::vector<int> map_;
};

/// True iff every element of the codomain is below an element of the image.
bool is_proper_hom(const LatticeHom& h, std::string* witness = nullptr);

/// Symbolic finite/cofinite algebra over the naturals. Fin(s) is the finite
/// set s; Cofin(s) is its complement. Canonical by construction, so equality
/// is syntactic.
class FinCofin {
public:
  static FinCofin fin(FinSet s) { return FinCofin(false, std::move(s)); }
  static FinCofin cofin(FinSet s) { return FinCofin(true, std::move(s)); }

  bool is_fin() const { return !cofin_; }
  const FinSet& support() const { return s_; }

  bool contains(int x) const { return cofin_ ? !s_.contains(x) : s_.contains(x); }

  bool operator==(const FinCofin&) const = default;
  std::string str() const;

private:
  FinCofin(bool cofin, FinSet s) : cofin_(cofin), s_(std::move(s)) {}
  bool cofin_;
  FinSet s_;
};

FinCofin fc_meet(const FinCofin& a, const FinCofin& b);
FinCofin fc_join(const FinCofin& a, const FinCofin& b);
FinCofin fc_compl(const FinCofin& a);
FinCofin fc_relcomplement(const FinCofin& a, const FinCofin& b);  // a \ b
bool fc_leq(const FinCofin& a, const FinCofin& b);

inline FinCofin fc_zero() { return FinCofin::fin({}); }
inline FinCofin fc_one() { return FinCofin::cofin({}); }

/// One-point unitization of the algebra of finite subsets of the naturals:
/// the embedding into the finite/cofinite algebra.
struct GbaUnitization {
  FinCofin embed(const FinSet& s) const { return FinCofin::fin(s); }
  bool in_ideal(const FinCofin& x) const { return x.is_fin(); }
};

GbaUnitization unitize_finite_sets();

/// Unitization of a lattice-presented instance. Finite lattices always have
/// a top, so this reports the identity embedding with a warning.
struct LatticeUnitization {
  FinLattice algebra;
  std::vector<int> embedding;
  bool already_unital = false;
};

LatticeUnitization unitize_lattice(const FinLattice& l);

std::string fincofin_to_json(const FinCofin& x);
FinCofin fincofin_from_json(const std::string& text);

}  // namespace stonedual
