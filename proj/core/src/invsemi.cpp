#include "stonedual/invsemi.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stonedual {

namespace {
constexpr int kSizeCap = 2000;
constexpr int kExhaustiveAssocBound = 60;
constexpr int kTableCap = 600;
constexpr uint64_t kAssocSeed = 0xA550C;  // fixed seed for sampled law checks
}  // namespace

GroupTable trivial_group() { return GroupTable{1, {0}, 0, {0}}; }

GroupTable cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be positive");
  GroupTable g;
  g.n = k;
  g.mul.resize(static_cast<size_t>(k) * k);
  g.inverse.resize(k);
  for (int a = 0; a < k; ++a) {
    g.inverse[a] = (k - a) % k;
    for (int b = 0; b < k; ++b) g.mul[static_cast<size_t>(a) * k + b] = (a + b) % k;
  }
  g.identity = 0;
  return g;
}

bool is_group_table(int n, const std::vector<int>& mul, int* identity_out) {
  if (n <= 0 || mul.size() != static_cast<size_t>(n) * n) return false;
  auto at = [&](int a, int b) { return mul[static_cast<size_t>(a) * n + b]; };
  for (int v : mul)
    if (v < 0 || v >= n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) return false;
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (at(e, a) != a || at(a, e) != a) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) return false;
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (at(a, b) == id && at(b, a) == id) has_inverse = true;
    if (!has_inverse) return false;
  }
  if (identity_out) *identity_out = id;
  return true;
}

PartialBijection PartialBijection::empty(int ground) {
  return PartialBijection{ground, std::vector<int>(ground, -1)};
}

PartialBijection PartialBijection::identity(int ground) {
  PartialBijection p{ground, std::vector<int>(ground)};
  for (int i = 0; i < ground; ++i) p.img[i] = i;
  return p;
}

int PartialBijection::rank() const {
  int c = 0;
  for (int v : img)
    if (v >= 0) ++c;
  return c;
}

PartialBijection PartialBijection::compose(const PartialBijection& rhs) const {
  PartialBijection out = empty(ground);
  for (int p = 0; p < ground; ++p) {
    int q = rhs.img[p];
    if (q >= 0 && img[q] >= 0) out.img[p] = img[q];
  }
  return out;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection out = empty(ground);
  for (int p = 0; p < ground; ++p)
    if (img[p] >= 0) out.img[img[p]] = p;
  return out;
}

std::string PartialBijection::str() const {
  if (rank() == 0) return "0";
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int p = 0; p < ground; ++p) {
    if (img[p] < 0) continue;
    if (!first) os << ';';
    first = false;
    os << p << '>' << img[p];
  }
  os << ']';
  return os.str();
}

FinInvSemi::FinInvSemi(int n, std::vector<int> mul, std::vector<int> inv, int zero,
                       std::vector<std::string> names)
    : n_(n), zero_(zero), mul_(std::move(mul)), inv_(std::move(inv)), names_(std::move(names)) {
  if (n_ <= 0 || n_ > kSizeCap)
    throw std::invalid_argument("semigroup size out of range (cap " + std::to_string(kSizeCap) + ")");
  if (mul_.size() != static_cast<size_t>(n_) * n_ || inv_.size() != static_cast<size_t>(n_))
    throw std::invalid_argument("semigroup tables have wrong shape");
  if (zero_ < 0 || zero_ >= n_) throw std::invalid_argument("zero index out of range");
  for (int v : mul_)
    if (v < 0 || v >= n_) throw std::invalid_argument("multiplication table value out of range");
  for (int v : inv_)
    if (v < 0 || v >= n_) throw std::invalid_argument("inverse table value out of range");
  if (names_.empty()) {
    names_.resize(n_);
    for (int i = 0; i < n_; ++i) names_[i] = "e" + std::to_string(i);
  }
  if (names_.size() != static_cast<size_t>(n_))
    throw std::invalid_argument("name list has wrong length");
  validate_and_derive();
}

void FinInvSemi::validate_and_derive() {
  auto at = [this](int a, int b) { return mul_[static_cast<size_t>(a) * n_ + b]; };

  if (n_ <= kExhaustiveAssocBound) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw std::invalid_argument("multiplication not associative");
  } else {
    std::mt19937_64 rng(kAssocSeed);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int i = 0; i < 200000; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw std::invalid_argument("multiplication not associative (sampled)");
    }
  }

  for (int a = 0; a < n_; ++a) {
    if (at(at(a, inv_[a]), a) != a || at(at(inv_[a], a), inv_[a]) != inv_[a])
      throw std::invalid_argument("inverse table violates the regularity identities");
  }

  idem_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    if (at(a, a) == a) {
      idem_[a] = 1;
      idem_list_.push_back(a);
    }
  for (int e : idem_list_)
    for (int f : idem_list_)
      if (at(e, f) != at(f, e)) throw std::invalid_argument("idempotents do not commute");

  for (int a = 0; a < n_; ++a)
    if (at(zero_, a) != zero_ || at(a, zero_) != zero_)
      throw std::invalid_argument("zero does not absorb");

  // natural partial order, computed two equivalent ways
  leq_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int a = 0; a < n_; ++a) {
    int da = at(inv_[a], a), ra = at(a, inv_[a]);
    for (int b = 0; b < n_; ++b) {
      bool via_d = at(b, da) == a;
      bool via_r = at(ra, b) == a;
      if (via_d != via_r) throw std::invalid_argument("order characterizations disagree; not an inverse semigroup");
      if (via_d) leq_[static_cast<size_t>(a) * n_ + b] = 1;
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (a != b && leq(a, b) && leq(b, a))
        throw std::invalid_argument("natural order is not antisymmetric");
  if (n_ <= 300) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!leq(a, b)) continue;
        for (int c = 0; c < n_; ++c)
          if (leq(b, c) && !leq(a, c))
            throw std::invalid_argument("natural order is not transitive");
      }
  }

  compat_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (idem_[at(inv_[a], b)] && idem_[at(a, inv_[b])])
        compat_[static_cast<size_t>(a) * n_ + b] = 1;

  if (n_ <= kTableCap) {
    meet_tab_.assign(static_cast<size_t>(n_) * n_, -1);
    join_tab_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        // greatest lower bound
        int m = -1;
        for (int x = 0; x < n_; ++x)
          if (leq(x, a) && leq(x, b) && (m < 0 || leq(m, x))) m = x;
        if (m >= 0) {
          bool greatest = true;
          for (int x = 0; x < n_; ++x)
            if (leq(x, a) && leq(x, b) && !leq(x, m)) greatest = false;
          if (greatest) meet_tab_[static_cast<size_t>(a) * n_ + b] = m;
        }
        // least upper bound
        int j = -1;
        for (int x = 0; x < n_; ++x)
          if (leq(a, x) && leq(b, x) && (j < 0 || leq(x, j))) j = x;
        if (j >= 0) {
          bool least = true;
          for (int x = 0; x < n_; ++x)
            if (leq(a, x) && leq(b, x) && !leq(j, x)) least = false;
          if (least) join_tab_[static_cast<size_t>(a) * n_ + b] = j;
        }
      }
    tables_cached_ = true;
  }
}

std::optional<int> FinInvSemi::index_of_name(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool FinInvSemi::orthogonal(int a, int b) const {
  return mul(d(a), d(b)) == zero_ && mul(r(a), r(b)) == zero_;
}

std::optional<int> FinInvSemi::meet(int a, int b) const {
  if (tables_cached_) {
    int m = meet_tab_[static_cast<size_t>(a) * n_ + b];
    return m < 0 ? std::nullopt : std::optional<int>(m);
  }
  int m = -1;
  for (int x = 0; x < n_; ++x)
    if (leq(x, a) && leq(x, b) && (m < 0 || leq(m, x))) m = x;
  if (m < 0) return std::nullopt;
  for (int x = 0; x < n_; ++x)
    if (leq(x, a) && leq(x, b) && !leq(x, m)) return std::nullopt;
  return m;
}

std::optional<int> FinInvSemi::join_lub(int a, int b) const {
  if (tables_cached_) {
    int j = join_tab_[static_cast<size_t>(a) * n_ + b];
    return j < 0 ? std::nullopt : std::optional<int>(j);
  }
  int j = -1;
  for (int x = 0; x < n_; ++x)
    if (leq(a, x) && leq(b, x) && (j < 0 || leq(x, j))) j = x;
  if (j < 0) return std::nullopt;
  for (int x = 0; x < n_; ++x)
    if (leq(a, x) && leq(b, x) && !leq(j, x)) return std::nullopt;
  return j;
}

std::optional<int> FinInvSemi::compatible_join(int a, int b) const {
  if (!compatible(a, b)) throw std::invalid_argument("join of an incompatible pair");
  return join_lub(a, b);
}

std::optional<int> FinInvSemi::fixed_point(int a) const {
  int m = -1;
  for (int e : idem_list_)
    if (leq(e, a) && (m < 0 || leq(m, e))) m = e;
  if (m < 0) return std::nullopt;
  for (int e : idem_list_)
    if (leq(e, a) && !leq(e, m)) return std::nullopt;
  return m;
}

std::vector<int> FinInvSemi::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (a == zero_) continue;
    bool atom = true;
    for (int b = 0; b < n_; ++b)
      if (b != a && b != zero_ && leq(b, a)) atom = false;
    if (atom) out.push_back(a);
  }
  return out;
}

std::optional<int> FinInvSemi::monoid_identity() const {
  for (int i : idem_list_) {
    bool ok = true;
    for (int a = 0; a < n_; ++a)
      if (mul(i, a) != a || mul(a, i) != a) {
        ok = false;
        break;
      }
    if (ok) return i;
  }
  return std::nullopt;
}

// --- constructions -------------------------------------------------------

namespace {

void enumerate_pbs(int n, int pos, std::vector<int>& img, std::vector<uint8_t>& used,
                   std::vector<PartialBijection>& out) {
  if (pos == n) {
    out.push_back(PartialBijection{n, img});
    return;
  }
  img[pos] = -1;
  enumerate_pbs(n, pos + 1, img, used, out);
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    img[pos] = v;
    used[v] = 1;
    enumerate_pbs(n, pos + 1, img, used, out);
    used[v] = 0;
  }
  img[pos] = -1;
}

}  // namespace

std::vector<PartialBijection> partial_bijections(int n) {
  std::vector<PartialBijection> out;
  std::vector<int> img(n, -1);
  std::vector<uint8_t> used(n, 0);
  enumerate_pbs(n, 0, img, used, out);
  return out;
}

FinInvSemi symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("symmetric inverse monoid supported for 1 <= n <= 5");
  auto elems = partial_bijections(n);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i].img] = static_cast<int>(i);
  int m = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(m) * m), inv(m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    inv[i] = index.at(elems[i].inverse().img);
    names[i] = elems[i].str();
    for (int j = 0; j < m; ++j)
      mul[static_cast<size_t>(i) * m + j] = index.at(elems[i].compose(elems[j]).img);
  }
  return FinInvSemi(m, std::move(mul), std::move(inv), index.at(PartialBijection::empty(n).img),
                    std::move(names));
}

FinInvSemi group_with_zero(const GroupTable& g, const std::string& label) {
  int id;
  if (!is_group_table(g.n, g.mul, &id) || id != g.identity)
    throw std::invalid_argument("not a valid group table");
  int m = g.n + 1;
  std::vector<int> mul(static_cast<size_t>(m) * m, 0), inv(m, 0);
  std::vector<std::string> names(m);
  names[0] = "0";
  for (int a = 0; a < g.n; ++a) {
    names[a + 1] = label + std::to_string(a);
    inv[a + 1] = g.inverse[a] + 1;
    for (int b = 0; b < g.n; ++b) mul[static_cast<size_t>(a + 1) * m + (b + 1)] = g.times(a, b) + 1;
  }
  return FinInvSemi(m, std::move(mul), std::move(inv), 0, std::move(names));
}

namespace {

void enumerate_rook(int n, const GroupTable& g, int pos, std::vector<int>& img,
                    std::vector<int>& lab, std::vector<uint8_t>& used,
                    std::vector<LabelledPB>& out) {
  if (pos == n) {
    out.push_back(LabelledPB{PartialBijection{n, img}, lab});
    return;
  }
  img[pos] = -1;
  lab[pos] = -1;
  enumerate_rook(n, g, pos + 1, img, lab, used, out);
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    img[pos] = v;
    for (int x = 0; x < g.n; ++x) {
      lab[pos] = x;
      enumerate_rook(n, g, pos + 1, img, lab, used, out);
    }
    used[v] = 0;
  }
  img[pos] = -1;
  lab[pos] = -1;
}

std::string rook_name(const LabelledPB& e) {
  if (e.pb.rank() == 0) return "0";
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int p = 0; p < e.pb.ground; ++p) {
    if (!e.pb.defined(p)) continue;
    if (!first) os << ';';
    first = false;
    os << p << '>' << e.pb.img[p] << ':' << e.labels[p];
  }
  os << ']';
  return os.str();
}

}  // namespace

std::vector<LabelledPB> rook_elements(int n, const GroupTable& g) {
  std::vector<LabelledPB> out;
  std::vector<int> img(n, -1), lab(n, -1);
  std::vector<uint8_t> used(n, 0);
  enumerate_rook(n, g, 0, img, lab, used, out);
  return out;
}

FinInvSemi rook_matrices(int n, const GroupTable& g) {
  if (n < 1 || n > 3 || g.n > 3) throw std::invalid_argument("rook matrix size bound exceeded");
  int id;
  if (!is_group_table(g.n, g.mul, &id)) throw std::invalid_argument("not a valid group table");
  auto elems = rook_elements(n, g);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  for (size_t i = 0; i < elems.size(); ++i)
    index[{elems[i].pb.img, elems[i].labels}] = static_cast<int>(i);

  auto compose = [&](const LabelledPB& a, const LabelledPB& b) {
    LabelledPB out{PartialBijection::empty(n), std::vector<int>(n, -1)};
    for (int p = 0; p < n; ++p) {
      int q = b.pb.img[p];
      if (q < 0 || a.pb.img[q] < 0) continue;
      out.pb.img[p] = a.pb.img[q];
      out.labels[p] = g.times(a.labels[q], b.labels[p]);
    }
    return out;
  };
  auto invert = [&](const LabelledPB& a) {
    LabelledPB out{PartialBijection::empty(n), std::vector<int>(n, -1)};
    for (int p = 0; p < n; ++p)
      if (a.pb.img[p] >= 0) {
        out.pb.img[a.pb.img[p]] = p;
        out.labels[a.pb.img[p]] = g.inverse[a.labels[p]];
      }
    return out;
  };

  int m = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(m) * m), inv(m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    auto vi = invert(elems[i]);
    inv[i] = index.at({vi.pb.img, vi.labels});
    names[i] = rook_name(elems[i]);
    for (int j = 0; j < m; ++j) {
      auto c = compose(elems[i], elems[j]);
      mul[static_cast<size_t>(i) * m + j] = index.at({c.pb.img, c.labels});
    }
  }
  int zero = index.at({PartialBijection::empty(n).img, std::vector<int>(n, -1)});
  return FinInvSemi(m, std::move(mul), std::move(inv), zero, std::move(names));
}

FinInvSemi direct_product(const FinInvSemi& s, const FinInvSemi& t) {
  int m = s.size() * t.size();
  auto code = [&](int a, int b) { return a * t.size() + b; };
  std::vector<int> mul(static_cast<size_t>(m) * m), inv(m);
  std::vector<std::string> names(m);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      int i = code(a, b);
      inv[i] = code(s.inv(a), t.inv(b));
      names[i] = "(" + s.name(a) + "," + t.name(b) + ")";
      for (int c = 0; c < s.size(); ++c)
        for (int e = 0; e < t.size(); ++e)
          mul[static_cast<size_t>(i) * m + code(c, e)] = code(s.mul(a, c), t.mul(b, e));
    }
  return FinInvSemi(m, std::move(mul), std::move(inv), code(s.zero(), t.zero()), std::move(names));
}

Subalgebra subalgebra_generated(const FinInvSemi& s, std::vector<int> generators, int size_cap) {
  std::set<int> in(generators.begin(), generators.end());
  in.insert(s.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(in.begin(), in.end());
    if (static_cast<int>(cur.size()) > size_cap)
      throw std::runtime_error("subalgebra closure exceeded size cap");
    for (int a : cur) {
      if (in.insert(s.inv(a)).second) grew = true;
      for (int b : cur) {
        if (in.insert(s.mul(a, b)).second) grew = true;
        if (s.compatible(a, b)) {
          auto j = s.join_lub(a, b);
          if (j && in.insert(*j).second) grew = true;
        }
        if (s.is_idempotent(a) && s.is_idempotent(b)) {
          // e \ f, the complement of ef below e
          int ef = s.mul(a, b);
          int c = complement_below(s, ef, a);
          if (in.insert(c).second) grew = true;
        }
      }
    }
  }
  std::vector<int> parent(in.begin(), in.end());
  std::map<int, int> sub_of;
  for (size_t i = 0; i < parent.size(); ++i) sub_of[parent[i]] = static_cast<int>(i);
  int m = static_cast<int>(parent.size());
  std::vector<int> mul(static_cast<size_t>(m) * m), inv(m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    inv[i] = sub_of.at(s.inv(parent[i]));
    names[i] = s.name(parent[i]);
    for (int j = 0; j < m; ++j)
      mul[static_cast<size_t>(i) * m + j] = sub_of.at(s.mul(parent[i], parent[j]));
  }
  return Subalgebra{FinInvSemi(m, std::move(mul), std::move(inv), sub_of.at(s.zero()), std::move(names)),
                    std::move(parent)};
}

// --- structure -----------------------------------------------------------

int complement_below(const FinInvSemi& s, int b, int a) {
  if (!s.leq(b, a)) throw std::invalid_argument("complement_below needs b <= a");
  std::vector<int> found;
  for (int c = 0; c < s.size(); ++c) {
    if (!s.leq(c, a) || !s.orthogonal(b, c)) continue;
    auto j = s.join_lub(b, c);
    if (j && *j == a) found.push_back(c);
  }
  if (found.size() != 1)
    throw std::domain_error("complement below " + std::to_string(a) + " of " + std::to_string(b) +
                            (found.empty() ? " is absent" : " is not unique"));
  return found[0];
}

std::optional<FinLattice> idempotent_lattice(const FinInvSemi& s, std::vector<int>* idem_index) {
  const auto& es = s.idempotents();
  int m = static_cast<int>(es.size());
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[es[i]] = i;
  std::vector<int> meet(static_cast<size_t>(m) * m), join(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      meet[static_cast<size_t>(i) * m + j] = pos.at(s.mul(es[i], es[j]));
      auto jn = s.join_lub(es[i], es[j]);
      if (!jn || !pos.count(*jn)) return std::nullopt;
      join[static_cast<size_t>(i) * m + j] = pos.at(*jn);
    }
  if (idem_index) {
    idem_index->assign(s.size(), -1);
    for (int i = 0; i < m; ++i) (*idem_index)[es[i]] = i;
  }
  return FinLattice(m, std::move(meet), std::move(join), pos.at(s.zero()));
}

BooleanReport is_boolean(const FinInvSemi& s) {
  BooleanReport rep;
  std::ostringstream wit;
  for (int a = 0; a < s.size() && rep.joins_exist; ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (!s.compatible(a, b)) continue;
      if (!s.join_lub(a, b)) {
        rep.joins_exist = false;
        wit << "compatible pair (" << s.name(a) << "," << s.name(b) << ") has no join; ";
        break;
      }
    }
  if (rep.joins_exist) {
    for (int a = 0; a < s.size() && rep.distributes; ++a)
      for (int b = 0; b < s.size() && rep.distributes; ++b) {
        if (!s.compatible(a, b)) continue;
        int j = *s.join_lub(a, b);
        for (int c = 0; c < s.size(); ++c) {
          auto left = s.join_lub(s.mul(c, a), s.mul(c, b));
          auto right = s.join_lub(s.mul(a, c), s.mul(b, c));
          if (!left || *left != s.mul(c, j) || !right || *right != s.mul(j, c)) {
            rep.distributes = false;
            wit << "multiplication fails to distribute over " << s.name(a) << " v " << s.name(b)
                << " with " << s.name(c) << "; ";
            break;
          }
        }
      }
    auto lat = idempotent_lattice(s);
    if (!lat) {
      rep.idempotents_gba = false;
      wit << "idempotent joins missing; ";
    } else {
      auto gba = verify_gba_equivalences(*lat);
      if (!gba.is_gba()) {
        rep.idempotents_gba = false;
        wit << "E(S) not a generalized Boolean algebra: " << gba.witness;
      }
    }
  } else {
    rep.distributes = false;
    rep.idempotents_gba = false;
  }
  rep.witness = wit.str();
  return rep;
}

bool pencil_is_valid(const FinInvSemi& s, const Pencil& p) {
  if (p.elements.empty()) return false;
  if (!s.is_idempotent(p.source) || !s.is_idempotent(p.target)) return false;
  int acc = s.zero();
  for (int x : p.elements) {
    if (!s.leq(s.r(x), p.target)) return false;
    auto j = s.join_lub(acc, s.d(x));
    if (!j) return false;
    acc = *j;
  }
  return acc == p.source;
}

std::optional<Pencil> find_pencil(const FinInvSemi& s, int e, int f) {
  if (!s.is_idempotent(e) || !s.is_idempotent(f))
    throw std::invalid_argument("pencil endpoints must be idempotents");
  if (e == s.zero()) return Pencil{{s.zero()}, e, f};
  std::vector<int> xs;
  int acc = s.zero();
  for (int x = 0; x < s.size(); ++x) {
    if (x == s.zero() || !s.leq(s.r(x), f) || !s.leq(s.d(x), e)) continue;
    xs.push_back(x);
    auto j = s.join_lub(acc, s.d(x));
    if (!j) return std::nullopt;
    acc = *j;
  }
  if (acc != e) return std::nullopt;
  Pencil p{std::move(xs), e, f};
  if (!pencil_is_valid(s, p)) throw std::logic_error("constructed pencil failed validation");
  return p;
}

namespace {

std::vector<uint8_t> additive_closure(const FinInvSemi& s, std::vector<uint8_t> in) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur;
    for (int x = 0; x < s.size(); ++x)
      if (in[x]) cur.push_back(x);
    for (int x : cur) {
      for (int y = 0; y < s.size(); ++y) {
        int p = s.mul(y, x), q = s.mul(x, y);
        if (!in[p]) in[p] = 1, grew = true;
        if (!in[q]) in[q] = 1, grew = true;
      }
      for (int y : cur) {
        if (!s.compatible(x, y)) continue;
        auto j = s.join_lub(x, y);
        if (j && !in[*j]) in[*j] = 1, grew = true;
      }
    }
  }
  return in;
}

}  // namespace

std::vector<int> additive_ideal_generated(const FinInvSemi& s, const std::vector<int>& seed) {
  std::vector<uint8_t> in(s.size(), 0);
  in[s.zero()] = 1;
  for (int x : seed) {
    if (x < 0 || x >= s.size()) throw std::out_of_range("ideal generator out of range");
    in[x] = 1;
  }
  auto mask = additive_closure(s, std::move(in));
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> additive_ideals(const FinInvSemi& s) {
  std::set<std::vector<uint8_t>> ideals;
  for (int x = 0; x < s.size(); ++x) {
    std::vector<uint8_t> seed(s.size(), 0);
    seed[x] = 1;
    seed[s.zero()] = 1;
    ideals.insert(additive_closure(s, std::move(seed)));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<uint8_t>> cur(ideals.begin(), ideals.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<uint8_t> u(s.size(), 0);
        for (int x = 0; x < s.size(); ++x) u[x] = cur[i][x] | cur[j][x];
        if (ideals.insert(additive_closure(s, std::move(u))).second) grew = true;
      }
  }
  std::vector<std::vector<int>> out;
  for (const auto& mask : ideals) {
    std::vector<int> elems;
    for (int x = 0; x < s.size(); ++x)
      if (mask[x]) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_zero_simplifying(const FinInvSemi& s) {
  bool by_ideals = s.size() > 1 && additive_ideals(s).size() == 2;
  bool by_pencils = s.size() > 1;
  for (int e : s.idempotents()) {
    if (!by_pencils) break;
    if (e == s.zero()) continue;
    for (int f : s.idempotents()) {
      if (f == s.zero()) continue;
      if (!find_pencil(s, e, f)) {
        by_pencils = false;
        break;
      }
    }
  }
  if (by_ideals != by_pencils)
    throw std::logic_error("ideal and pencil criteria for 0-simplifying disagree");
  return by_ideals;
}

bool is_fundamental(const FinInvSemi& s) {
  for (int a = 0; a < s.size(); ++a) {
    if (s.is_idempotent(a)) continue;
    bool central = true;
    for (int e : s.idempotents())
      if (s.mul(a, e) != s.mul(e, a)) {
        central = false;
        break;
      }
    if (central) return false;
  }
  return true;
}

std::vector<int> infinitesimals(const FinInvSemi& s) {
  std::vector<int> out;
  for (int a = 0; a < s.size(); ++a)
    if (a != s.zero() && s.mul(a, a) == s.zero()) out.push_back(a);
  return out;
}

std::optional<std::vector<int>> basic_decomposition(const FinInvSemi& s, int a) {
  auto phi = s.fixed_point(a);
  if (!phi) return std::nullopt;
  std::vector<int> parts{*phi};
  for (int x : infinitesimals(s))
    if (s.leq(x, a)) parts.push_back(x);
  int acc = s.zero();
  for (int x : parts) {
    auto j = s.join_lub(acc, x);
    if (!j) return std::nullopt;
    acc = *j;
  }
  if (acc != a) return std::nullopt;
  return parts;
}

bool is_basic(const FinInvSemi& s) {
  for (int a = 0; a < s.size(); ++a)
    if (!basic_decomposition(s, a)) return false;
  return true;
}

bool is_semisimple(const FinInvSemi& s) {
  // every principal order ideal of a finite semigroup is finite
  for (int a = 0; a < s.size(); ++a) {
    int count = 0;
    for (int x = 0; x < s.size(); ++x)
      if (s.leq(x, a)) ++count;
    if (count <= 0) return false;
  }
  return true;
}

bool d_related(const FinInvSemi& s, int e, int f) {
  for (int x = 0; x < s.size(); ++x)
    if (s.d(x) == e && s.r(x) == f) return true;
  return false;
}

bool is_0_simple(const FinInvSemi& s) {
  if (s.size() <= 1) return false;
  for (int x = 0; x < s.size(); ++x) {
    if (x == s.zero()) continue;
    // semigroup ideal generated by x
    std::vector<uint8_t> in(s.size(), 0);
    in[x] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int y = 0; y < s.size(); ++y) {
        if (!in[y]) continue;
        for (int t = 0; t < s.size(); ++t) {
          int p = s.mul(t, y), q = s.mul(y, t);
          if (!in[p]) in[p] = 1, grew = true;
          if (!in[q]) in[q] = 1, grew = true;
        }
      }
    }
    for (int y = 0; y < s.size(); ++y)
      if (!in[y]) return false;
  }
  return true;
}

bool is_properly_infinite(const FinInvSemi& s, int e) {
  if (!s.is_idempotent(e) || e == s.zero())
    throw std::invalid_argument("properly infinite is about non-zero idempotents");
  for (int i : s.idempotents()) {
    if (!s.leq(i, e) || !d_related(s, e, i)) continue;
    for (int j : s.idempotents()) {
      if (!s.leq(j, e) || s.mul(i, j) != s.zero()) continue;
      if (d_related(s, e, j)) return true;
    }
  }
  return false;
}

bool is_purely_infinite(const FinInvSemi& s) {
  for (int e : s.idempotents())
    if (e != s.zero() && !is_properly_infinite(s, e)) return false;
  return true;
}

bool is_simple(const FinInvSemi& s) { return is_fundamental(s) && is_zero_simplifying(s); }

SigmaUnitalResult sigma_unital(const FinInvSemi& s) {
  SigmaUnitalResult res;
  res.note = "degenerate at finite scale: any finite Boolean inverse semigroup is a monoid, "
             "so a single corner suffices";
  for (int e : s.idempotents()) {
    bool corner = true;
    for (int a = 0; a < s.size(); ++a)
      if (s.mul(s.mul(e, a), e) != a) {
        corner = false;
        break;
      }
    if (corner) {
      res.value = true;
      return res;
    }
  }
  res.value = false;
  return res;
}

std::string semigroup_to_json(const FinInvSemi& s) {
  nlohmann::json j;
  j["size"] = s.size();
  std::vector<std::vector<int>> rows(s.size(), std::vector<int>(s.size()));
  std::vector<int> inv(s.size());
  std::vector<std::string> names(s.size());
  for (int a = 0; a < s.size(); ++a) {
    inv[a] = s.inv(a);
    names[a] = s.name(a);
    for (int b = 0; b < s.size(); ++b) rows[a][b] = s.mul(a, b);
  }
  j["mul"] = rows;
  j["inv"] = inv;
  j["zero"] = s.zero();
  j["names"] = names;
  return j.dump(2) + "\n";
}

FinInvSemi semigroup_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("size").get<int>();
  auto rows = j.at("mul").get<std::vector<std::vector<int>>>();
  std::vector<int> mul;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("mul row length mismatch");
    mul.insert(mul.end(), row.begin(), row.end());
  }
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("mul row count mismatch");
  auto inv = j.at("inv").get<std::vector<int>>();
  int zero = j.at("zero").get<int>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return FinInvSemi(n, std::move(mul), std::move(inv), zero, std::move(names));
}

}  // namespace stonedual
