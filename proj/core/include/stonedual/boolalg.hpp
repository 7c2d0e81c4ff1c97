#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stonedual {

/// Finite Boolean algebra stored atom-canonically: elements are bit-vectors
/// over the atom set, join/meet/complement are the bitwise operations.
class FinBoolAlg {
public:
  using Elem = uint32_t;

  explicit FinBoolAlg(int atom_count);

  int atoms() const { return k_; }
  int size() const { return 1 << k_; }
  Elem zero() const { return 0; }
  Elem one() const { return (k_ == 32) ? ~Elem(0) : ((Elem(1) << k_) - 1); }

  Elem join(Elem a, Elem b) const { return a | b; }
  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem complement(Elem a) const { return ~a & one(); }
  bool leq(Elem a, Elem b) const { return (a & b) == a; }
  bool is_atom(Elem a) const { return a != 0 && (a & (a - 1)) == 0; }
  Elem atom(int i) const { return Elem(1) << i; }

  /// The atoms below a (the finite U_a), as atom indices.
  std::vector<int> atoms_below(Elem a) const;

private:
  int k_;
};

/// A table-presented structure with Boolean-algebra signature; used to run
/// the axiom checks against structures that may fail them.
struct BoolOps {
  int n = 0;
  std::function<int(int, int)> join, meet;
  std::function<int(int)> complement;
  int zero = 0, one = 0;
};

BoolOps ops_of(const FinBoolAlg& b);

struct AxiomResult {
  std::string axiom;     // "B1" .. "B10"
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_ok() const;
  std::string str() const;
};

/// Checks B1..B10; exhaustive when n <= 16, otherwise sampled with the
/// stated seed (default 0xB001) for reproducibility.
AxiomReport verify_axioms(const BoolOps& b, uint64_t seed = 0xB001, int samples = 20000);

/// Boolean-ring signature for the ring correspondence.
struct RingOps {
  int n = 0;
  std::function<int(int, int)> add, mul;
  int zero = 0, one = 0;
};

RingOps to_ring(const FinBoolAlg& b);
BoolOps bool_from_ring(const RingOps& r);

/// The idempotents of Z_n under e v f = e + f - ef; a Boolean algebra.
struct IdempotentAlgebra {
  int modulus = 0;
  std::vector<int> elements;  // residues x with x^2 = x (mod n), sorted
  int join(int x, int y) const;
  int meet(int x, int y) const;
  int complement(int x) const;
  BoolOps ops() const;  // over indices into elements
};

IdempotentAlgebra idempotent_algebra(int modulus);

/// Homomorphism between finite Boolean algebras, stored as the full element
/// map. Construction validates preservation of 0, 1, meet and join.
class BoolHom {
public:
  BoolHom(const FinBoolAlg& src, const FinBoolAlg& dst, std::vector<uint32_t> map);

  static BoolHom identity(const FinBoolAlg& b);

  const FinBoolAlg& src() const { return src_; }
  const FinBoolAlg& dst() const { return dst_; }
  uint32_t operator()(uint32_t x) const { return map_[x]; }
  const std::vector<uint32_t>& map() const { return map_; }

  bool operator==(const BoolHom& o) const { return map_ == o.map_; }

private:
  FinBoolAlg src_, dst_;
  std::vector<uint32_t> map_;
};

/// Function at(dst) -> at(src) backing a homomorphism src -> dst.
struct AtomMap {
  int src_atoms = 0, dst_atoms = 0;
  std::vector<int> map;  // index: dst atom, value: src atom
  bool operator==(const AtomMap&) const = default;
};

/// theta# : the src atom e with f <= theta(e), per dst atom f. Throws with a
/// diagnostic when theta is not a homomorphism (the assignment fails to be
/// a function exactly then).
AtomMap hom_to_atom_map(const BoolHom& theta);

/// alpha_flat(x) = join of the dst atoms f with alpha(f) <= x.
BoolHom atom_map_to_hom(const AtomMap& alpha, const FinBoolAlg& src, const FinBoolAlg& dst);

/// Characteristic homomorphism of the ultrafilter generated by an atom, and
/// its inverse (recover the generator from a homomorphism onto the
/// two-element algebra).
BoolHom ultrafilter_char(const FinBoolAlg& b, int atom_index);
int char_to_atom(const BoolHom& theta);

/// (is_prime(a^), is_atom(a)); the two components coincide.
std::pair<bool, bool> prime_iff_atom(const FinBoolAlg& b, FinBoolAlg::Elem a);

std::string boolalg_to_json(const FinBoolAlg& b);
FinBoolAlg boolalg_from_json(const std::string& text);
std::string hom_to_json(const BoolHom& h);

}  // namespace stonedual
