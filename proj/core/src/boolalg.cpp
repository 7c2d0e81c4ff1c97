#include "stonedual/boolalg.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stonedual {

FinBoolAlg::FinBoolAlg(int atom_count) : k_(atom_count) {
  if (k_ < 0 || k_ > 24) throw std::invalid_argument("atom count out of range");
}

std::vector<int> FinBoolAlg::atoms_below(Elem a) const {
  std::vector<int> out;
  for (int i = 0; i < k_; ++i)
    if (a & (Elem(1) << i)) out.push_back(i);
  return out;
}

BoolOps ops_of(const FinBoolAlg& b) {
  BoolOps o;
  o.n = b.size();
  o.join = [b](int x, int y) { return static_cast<int>(b.join(x, y)); };
  o.meet = [b](int x, int y) { return static_cast<int>(b.meet(x, y)); };
  o.complement = [b](int x) { return static_cast<int>(b.complement(x)); };
  o.zero = 0;
  o.one = static_cast<int>(b.one());
  return o;
}

bool AxiomReport::all_ok() const {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

std::string AxiomReport::str() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.axiom << (r.ok ? " pass" : " FAIL");
    if (!r.ok) os << " at (" << r.witness[0] << "," << r.witness[1] << "," << r.witness[2] << ")";
    os << "\n";
  }
  return os.str();
}

AxiomReport verify_axioms(const BoolOps& b, uint64_t seed, int samples) {
  struct Law {
    const char* name;
    std::function<bool(const BoolOps&, int, int, int)> holds;
  };
  const std::array<Law, 10> laws = {{
      {"B1", [](const BoolOps& o, int x, int y, int z) {
         return o.join(o.join(x, y), z) == o.join(x, o.join(y, z));
       }},
      {"B2", [](const BoolOps& o, int x, int y, int) { return o.join(x, y) == o.join(y, x); }},
      {"B3", [](const BoolOps& o, int x, int, int) { return o.join(x, o.zero) == x; }},
      {"B4", [](const BoolOps& o, int x, int y, int z) {
         return o.meet(o.meet(x, y), z) == o.meet(x, o.meet(y, z));
       }},
      {"B5", [](const BoolOps& o, int x, int y, int) { return o.meet(x, y) == o.meet(y, x); }},
      {"B6", [](const BoolOps& o, int x, int, int) { return o.meet(x, o.one) == x; }},
      {"B7", [](const BoolOps& o, int x, int y, int z) {
         return o.meet(x, o.join(y, z)) == o.join(o.meet(x, y), o.meet(x, z));
       }},
      {"B8", [](const BoolOps& o, int x, int y, int z) {
         return o.join(x, o.meet(y, z)) == o.meet(o.join(x, y), o.join(x, z));
       }},
      {"B9", [](const BoolOps& o, int x, int, int) { return o.join(x, o.complement(x)) == o.one; }},
      {"B10", [](const BoolOps& o, int x, int, int) { return o.meet(x, o.complement(x)) == o.zero; }},
  }};

  AxiomReport rep;
  bool exhaustive = b.n <= 16;
  for (const auto& law : laws) {
    AxiomResult res;
    res.axiom = law.name;
    if (exhaustive) {
      for (int x = 0; x < b.n && res.ok; ++x)
        for (int y = 0; y < b.n && res.ok; ++y)
          for (int z = 0; z < b.n && res.ok; ++z)
            if (!law.holds(b, x, y, z)) {
              res.ok = false;
              res.witness = {x, y, z};
            }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> pick(0, b.n - 1);
      for (int i = 0; i < samples && res.ok; ++i) {
        int x = pick(rng), y = pick(rng), z = pick(rng);
        if (!law.holds(b, x, y, z)) {
          res.ok = false;
          res.witness = {x, y, z};
        }
      }
    }
    rep.results.push_back(res);
  }
  return rep;
}

RingOps to_ring(const FinBoolAlg& b) {
  RingOps r;
  r.n = b.size();
  r.add = [b](int x, int y) {
    auto a = static_cast<FinBoolAlg::Elem>(x), c = static_cast<FinBoolAlg::Elem>(y);
    return static_cast<int>(b.join(b.meet(a, b.complement(c)), b.meet(b.complement(a), c)));
  };
  r.mul = [b](int x, int y) { return static_cast<int>(b.meet(x, y)); };
  r.zero = 0;
  r.one = static_cast<int>(b.one());
  return r;
}

BoolOps bool_from_ring(const RingOps& r) {
  BoolOps o;
  o.n = r.n;
  o.join = [r](int x, int y) { return r.add(r.add(x, y), r.mul(x, y)); };
  o.meet = r.mul;
  // in a Boolean ring -a = a, so 1 - a = 1 + a
  o.complement = [r](int x) { return r.add(r.one, x); };
  o.zero = r.zero;
  o.one = r.one;
  return o;
}

int IdempotentAlgebra::join(int x, int y) const {
  long long v = (static_cast<long long>(x) + y - static_cast<long long>(x) * y) % modulus;
  return static_cast<int>((v % modulus + modulus) % modulus);
}

int IdempotentAlgebra::meet(int x, int y) const {
  return static_cast<int>((static_cast<long long>(x) * y) % modulus);
}

int IdempotentAlgebra::complement(int x) const { return ((1 - x) % modulus + modulus) % modulus; }

BoolOps IdempotentAlgebra::ops() const {
  auto index_of = [this](int value) {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == value) return static_cast<int>(i);
    throw std::logic_error("idempotent set not closed");
  };
  BoolOps o;
  o.n = static_cast<int>(elements.size());
  o.join = [this, index_of](int i, int j) { return index_of(join(elements[i], elements[j])); };
  o.meet = [this, index_of](int i, int j) { return index_of(meet(elements[i], elements[j])); };
  o.complement = [this, index_of](int i) { return index_of(complement(elements[i])); };
  o.zero = index_of(0);
  o.one = index_of(1 % modulus);
  return o;
}

IdempotentAlgebra idempotent_algebra(int modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  IdempotentAlgebra a;
  a.modulus = modulus;
  for (int x = 0; x < modulus; ++x)
    if ((static_cast<long long>(x) * x) % modulus == x) a.elements.push_back(x);
  return a;
}

BoolHom::BoolHom(const FinBoolAlg& src, const FinBoolAlg& dst, std::vector<uint32_t> map)
    : src_(src), dst_(dst), map_(std::move(map)) {
  if (map_.size() != static_cast<size_t>(src_.size()))
    throw std::invalid_argument("hom map has wrong length");
  if (map_[src_.zero()] != dst_.zero() || map_[src_.one()] != dst_.one())
    throw std::invalid_argument("hom does not preserve the constants");
  for (int x = 0; x < src_.size(); ++x)
    for (int y = 0; y < src_.size(); ++y) {
      if (map_[src_.meet(x, y)] != dst_.meet(map_[x], map_[y]))
        throw std::invalid_argument("hom does not preserve meet");
      if (map_[src_.join(x, y)] != dst_.join(map_[x], map_[y]))
        throw std::invalid_argument("hom does not preserve join");
    }
}

BoolHom BoolHom::identity(const FinBoolAlg& b) {
  std::vector<uint32_t> map(b.size());
  for (int x = 0; x < b.size(); ++x) map[x] = x;
  return BoolHom(b, b, std::move(map));
}

AtomMap hom_to_atom_map(const BoolHom& theta) {
  AtomMap out;
  out.src_atoms = theta.src().atoms();
  out.dst_atoms = theta.dst().atoms();
  for (int fi = 0; fi < out.dst_atoms; ++fi) {
    auto f = theta.dst().atom(fi);
    std::optional<int> hit;
    for (int ei = 0; ei < out.src_atoms; ++ei) {
      if (!theta.dst().leq(f, theta(theta.src().atom(ei)))) continue;
      if (hit) throw std::invalid_argument("atom assignment not a function: map is not a homomorphism");
      hit = ei;
    }
    if (!hit) throw std::invalid_argument("atom assignment not total: map is not a homomorphism");
    out.map.push_back(*hit);
  }
  return out;
}

BoolHom atom_map_to_hom(const AtomMap& alpha, const FinBoolAlg& src, const FinBoolAlg& dst) {
  if (alpha.src_atoms != src.atoms() || alpha.dst_atoms != dst.atoms() ||
      alpha.map.size() != static_cast<size_t>(dst.atoms()))
    throw std::invalid_argument("atom map does not match the algebras");
  for (int v : alpha.map)
    if (v < 0 || v >= src.atoms()) throw std::invalid_argument("atom map value out of range");
  std::vector<uint32_t> map(src.size(), 0);
  for (int x = 0; x < src.size(); ++x) {
    uint32_t img = 0;
    for (int fi = 0; fi < dst.atoms(); ++fi)
      if (src.leq(src.atom(alpha.map[fi]), static_cast<uint32_t>(x))) img |= dst.atom(fi);
    map[x] = img;
  }
  return BoolHom(src, dst, std::move(map));
}

BoolHom ultrafilter_char(const FinBoolAlg& b, int atom_index) {
  if (atom_index < 0 || atom_index >= b.atoms())
    throw std::invalid_argument("not an ultrafilter of this algebra");
  FinBoolAlg two(1);
  std::vector<uint32_t> map(b.size());
  for (int x = 0; x < b.size(); ++x)
    map[x] = b.leq(b.atom(atom_index), static_cast<uint32_t>(x)) ? 1u : 0u;
  return BoolHom(b, two, std::move(map));
}

int char_to_atom(const BoolHom& theta) {
  if (theta.dst().atoms() != 1) throw std::invalid_argument("codomain is not the two-element algebra");
  // the preimage of 1 is a filter; its minimum is the generator
  std::optional<uint32_t> min;
  for (int x = 0; x < theta.src().size(); ++x) {
    if (theta(x) != 1) continue;
    if (!min || theta.src().leq(static_cast<uint32_t>(x), *min)) min = static_cast<uint32_t>(x);
  }
  if (!min || !theta.src().is_atom(*min))
    throw std::invalid_argument("preimage of 1 is not an ultrafilter");
  auto below = theta.src().atoms_below(*min);
  return below[0];
}

std::pair<bool, bool> prime_iff_atom(const FinBoolAlg& b, FinBoolAlg::Elem a) {
  if (a == b.zero()) throw std::invalid_argument("zero generates no proper filter");
  bool prime = true;
  for (int x = 0; x < b.size() && prime; ++x)
    for (int y = 0; y < b.size() && prime; ++y) {
      bool jn = b.leq(a, b.join(x, y));
      if (jn && !b.leq(a, static_cast<uint32_t>(x)) && !b.leq(a, static_cast<uint32_t>(y)))
        prime = false;
    }
  return {prime, b.is_atom(a)};
}

std::string boolalg_to_json(const FinBoolAlg& b) {
  nlohmann::json j;
  j["atoms"] = b.atoms();
  return j.dump(2) + "\n";
}

FinBoolAlg boolalg_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return FinBoolAlg(j.at("atoms").get<int>());
}

std::string hom_to_json(const BoolHom& h) {
  nlohmann::json j;
  j["map"] = h.map();
  return j.dump(2) + "\n";
}

}  // namespace stonedual
