#include "stonedual/genbool.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stonedual {

FinLattice::FinLattice(int n, std::vector<int> meet, std::vector<int> join, int zero)
    : n_(n), zero_(zero), meet_(std::move(meet)), join_(std::move(join)) {
  if (n_ <= 0 || meet_.size() != static_cast<size_t>(n_) * n_ ||
      join_.size() != static_cast<size_t>(n_) * n_)
    throw std::invalid_argument("lattice tables have wrong shape");
  auto at = [&](const std::vector<int>& t, int a, int b) { return t[static_cast<size_t>(a) * n_ + b]; };
  for (int a = 0; a < n_; ++a) {
    if (at(meet_, a, a) != a || at(join_, a, a) != a)
      throw std::invalid_argument("lattice operations not idempotent");
    if (at(meet_, zero_, a) != zero_) throw std::invalid_argument("declared zero is not a bottom");
    for (int b = 0; b < n_; ++b) {
      if (at(meet_, a, b) != at(meet_, b, a) || at(join_, a, b) != at(join_, b, a))
        throw std::invalid_argument("lattice operations not commutative");
      if (at(meet_, a, at(join_, a, b)) != a || at(join_, a, at(meet_, a, b)) != a)
        throw std::invalid_argument("absorption laws fail");
      for (int c = 0; c < n_; ++c) {
        if (at(meet_, at(meet_, a, b), c) != at(meet_, a, at(meet_, b, c)))
          throw std::invalid_argument("meet not associative");
        if (at(join_, at(join_, a, b), c) != at(join_, a, at(join_, b, c)))
          throw std::invalid_argument("join not associative");
      }
    }
  }
}

FinLattice FinLattice::powerset(int k) {
  if (k < 0 || k > 16) throw std::invalid_argument("powerset lattice size out of range");
  int n = 1 << k;
  std::vector<int> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[static_cast<size_t>(a) * n + b] = a & b;
      join[static_cast<size_t>(a) * n + b] = a | b;
    }
  return FinLattice(n, std::move(meet), std::move(join), 0);
}

FinLattice FinLattice::chain(int n) {
  std::vector<int> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[static_cast<size_t>(a) * n + b] = std::min(a, b);
      join[static_cast<size_t>(a) * n + b] = std::max(a, b);
    }
  return FinLattice(n, std::move(meet), std::move(join), 0);
}

namespace {

FinCofin window_decode(int w, int i) {
  FinSet s;
  int mask = i & ((1 << w) - 1);
  for (int b = 0; b < w; ++b)
    if (mask & (1 << b)) s = s.with(b);
  return i < (1 << w) ? FinCofin::fin(s) : FinCofin::cofin(s);
}

int window_encode(int w, const FinCofin& x) {
  int mask = 0;
  for (int e : x.support().elems()) {
    if (e < 0 || e >= w) throw std::logic_error("support escaped the window");
    mask |= 1 << e;
  }
  return x.is_fin() ? mask : mask + (1 << w);
}

}  // namespace

FinLattice FinLattice::fincofin_window(int w) {
  if (w < 0 || w > 10) throw std::invalid_argument("window size out of range");
  int n = 1 << (w + 1);
  std::vector<int> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto xa = window_decode(w, a), xb = window_decode(w, b);
      meet[static_cast<size_t>(a) * n + b] = window_encode(w, fc_meet(xa, xb));
      join[static_cast<size_t>(a) * n + b] = window_encode(w, fc_join(xa, xb));
    }
  return FinLattice(n, std::move(meet), std::move(join), 0);
}

bool FinLattice::is_distributive() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

std::optional<int> FinLattice::top() const {
  int t = zero_;
  for (int a = 0; a < n_; ++a) t = join(t, a);
  for (int a = 0; a < n_; ++a)
    if (!leq(a, t)) return std::nullopt;
  return t;
}

std::optional<int> relcomplement(const FinLattice& l, int x, int y) {
  for (int d = 0; d < l.size(); ++d)
    if (l.meet(y, d) == l.zero() && l.join(l.meet(x, y), d) == x) return d;
  return std::nullopt;
}

std::optional<int> interval_complement(const FinLattice& l, int b, int c, int a) {
  if (!l.leq(b, c) || !l.leq(c, a))
    throw std::invalid_argument("interval_complement needs b <= c <= a");
  auto ac = relcomplement(l, a, c);
  if (!ac) return std::nullopt;
  int d = l.join(*ac, b);
  if (l.meet(c, d) != b || l.join(c, d) != a) return std::nullopt;
  return d;
}

GbaEquivReport verify_gba_equivalences(const FinLattice& l) {
  GbaEquivReport rep;
  std::ostringstream wit;
  rep.distributive = l.is_distributive();
  if (!rep.distributive) wit << "not distributive; ";

  for (int x = 0; x < l.size() && rep.clause_relcomplements; ++x)
    for (int y = 0; y < l.size(); ++y)
      if (!relcomplement(l, x, y)) {
        rep.clause_relcomplements = false;
        wit << "no relative complement " << x << "\\" << y << "; ";
        break;
      }

  for (int a = 0; a < l.size() && rep.clause_principal_ideals; ++a) {
    if (a == l.zero()) continue;
    // a-down must be a unital Boolean algebra with top a
    for (int b = 0; b < l.size(); ++b) {
      if (!l.leq(b, a)) continue;
      bool complemented = false;
      for (int d = 0; d < l.size(); ++d)
        if (l.leq(d, a) && l.meet(b, d) == l.zero() && l.join(b, d) == a) {
          complemented = true;
          break;
        }
      if (!complemented) {
        rep.clause_principal_ideals = false;
        wit << "no complement of " << b << " in " << a << "-down; ";
        break;
      }
    }
  }

  for (int a = 0; a < l.size() && rep.clause_intervals; ++a)
    for (int b = 0; b < l.size() && rep.clause_intervals; ++b) {
      if (!l.leq(b, a)) continue;
      for (int c = 0; c < l.size(); ++c) {
        if (!(l.leq(b, c) && l.leq(c, a))) continue;
        bool complemented = false;
        for (int d = 0; d < l.size(); ++d)
          if (l.leq(b, d) && l.leq(d, a) && l.meet(c, d) == b && l.join(c, d) == a) {
            complemented = true;
            break;
          }
        if (!complemented) {
          rep.clause_intervals = false;
          wit << "interval [" << b << "," << a << "] has non-complemented " << c << "; ";
          break;
        }
      }
    }

  rep.witness = wit.str();
  return rep;
}

namespace {

bool lattice_is_ultra_gen(const FinLattice& l, int g) {
  // g^ maximal proper: g != 0 and nothing strictly between 0 and g
  if (g == l.zero()) return false;
  for (int h = 0; h < l.size(); ++h)
    if (h != g && h != l.zero() && l.leq(h, g)) return false;
  return true;
}

}  // namespace

FilterTransfer filter_transfer(const FinLattice& l, int a) {
  if (a == l.zero()) throw std::invalid_argument("filter transfer needs a non-zero element");
  FilterTransfer t;
  t.a = a;
  for (int g = 0; g < l.size(); ++g)
    if (l.leq(g, a)) t.generators.push_back(g);

  // ultrafilters of a-down: atoms of the interval [0, a]
  for (int g : t.generators) {
    if (g == l.zero()) continue;
    bool atom = true;
    for (int h : t.generators)
      if (h != g && h != l.zero() && l.leq(h, g)) {
        atom = false;
        break;
      }
    if (atom) t.down_ultra.push_back(g);
  }
  // host ultrafilters containing a: generators g with g^ maximal and a in g^
  for (int g = 0; g < l.size(); ++g)
    if (lattice_is_ultra_gen(l, g) && l.leq(g, a)) t.host_ultra.push_back(g);

  // both maps fix generators; check they are mutually inverse bijections on
  // realized filters, and that the ultrafilter lists coincide
  if (t.down_ultra != t.host_ultra)
    throw std::logic_error("filter transfer does not preserve ultrafilters");
  for (int g : t.generators) {
    // F = g^ in host; F ^ a-down realized and re-extended must return F
    std::vector<int> down;
    for (int x : t.generators)
      if (l.leq(g, x)) down.push_back(x);
    // the minimum of the trace is g again
    bool ok = false;
    for (int m : down) {
      bool least = true;
      for (int x : down)
        if (!l.leq(m, x)) least = false;
      if (least && m == g) ok = true;
    }
    if (!ok) throw std::logic_error("filter transfer maps are not mutually inverse");
  }
  return t;
}

LatticeHom::LatticeHom(const FinLattice& src, const FinLattice& dst, std::vector<int> map)
    : src_(src), dst_(dst), map_(std::move(map)) {
  if (map_.size() != static_cast<size_t>(src_.size()))
    throw std::invalid_argument("hom map has wrong length");
  for (int v : map_)
    if (v < 0 || v >= dst_.size()) throw std::invalid_argument("hom map value out of range");
  if (map_[src_.zero()] != dst_.zero()) throw std::invalid_argument("hom does not preserve zero");
  for (int x = 0; x < src_.size(); ++x)
    for (int y = 0; y < src_.size(); ++y) {
      if (map_[src_.meet(x, y)] != dst_.meet(map_[x], map_[y]))
        throw std::invalid_argument("hom does not preserve meet");
      if (map_[src_.join(x, y)] != dst_.join(map_[x], map_[y]))
        throw std::invalid_argument("hom does not preserve join");
      auto rc = relcomplement(src_, x, y);
      if (rc) {
        auto drc = relcomplement(dst_, map_[x], map_[y]);
        if (!drc || map_[*rc] != *drc)
          throw std::invalid_argument("hom does not preserve relative complements");
      }
    }
}

bool is_proper_hom(const LatticeHom& h, std::string* witness) {
  for (int c = 0; c < h.dst().size(); ++c) {
    bool covered = false;
    for (int s = 0; s < h.src().size(); ++s)
      if (h.dst().leq(c, h(s))) {
        covered = true;
        break;
      }
    if (!covered) {
      if (witness) *witness = "element " + std::to_string(c) + " not below the image";
      return false;
    }
  }
  return true;
}

std::string FinCofin::str() const {
  return (cofin_ ? std::string("Cofin") : std::string("Fin")) + s_.str();
}

FinCofin fc_meet(const FinCofin& a, const FinCofin& b) {
  if (a.is_fin() && b.is_fin()) return FinCofin::fin(set_intersect(a.support(), b.support()));
  if (a.is_fin()) return FinCofin::fin(set_diff(a.support(), b.support()));
  if (b.is_fin()) return FinCofin::fin(set_diff(b.support(), a.support()));
  return FinCofin::cofin(set_union(a.support(), b.support()));
}

FinCofin fc_join(const FinCofin& a, const FinCofin& b) {
  if (a.is_fin() && b.is_fin()) return FinCofin::fin(set_union(a.support(), b.support()));
  if (a.is_fin()) return FinCofin::cofin(set_diff(b.support(), a.support()));
  if (b.is_fin()) return FinCofin::cofin(set_diff(a.support(), b.support()));
  return FinCofin::cofin(set_intersect(a.support(), b.support()));
}

FinCofin fc_compl(const FinCofin& a) {
  return a.is_fin() ? FinCofin::cofin(a.support()) : FinCofin::fin(a.support());
}

FinCofin fc_relcomplement(const FinCofin& a, const FinCofin& b) {
  return fc_meet(a, fc_compl(b));
}

bool fc_leq(const FinCofin& a, const FinCofin& b) { return fc_meet(a, b) == a; }

GbaUnitization unitize_finite_sets() { return GbaUnitization{}; }

LatticeUnitization unitize_lattice(const FinLattice& l) {
  LatticeUnitization u{l, {}, false};
  if (l.top()) {
    u.already_unital = true;
    for (int x = 0; x < l.size(); ++x) u.embedding.push_back(x);
    return u;
  }
  // a finite lattice always has a top (the join of everything), so this
  // branch is unreachable for valid inputs
  throw std::logic_error("finite lattice without a top");
}

std::string fincofin_to_json(const FinCofin& x) {
  nlohmann::json j;
  j["kind"] = x.is_fin() ? "fin" : "cofin";
  j["support"] = x.support().elems();
  return j.dump(2) + "\n";
}

FinCofin fincofin_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto kind = j.at("kind").get<std::string>();
  FinSet s(j.at("support").get<std::vector<int>>());
  if (kind == "fin") return FinCofin::fin(s);
  if (kind == "cofin") return FinCofin::cofin(s);
  throw std::invalid_argument("unknown fincofin kind: " + kind);
}

}  // namespace stonedual
