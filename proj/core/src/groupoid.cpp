#include "stonedual/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stonedual {

FinGroupoid::FinGroupoid(int n, std::vector<int> mul, std::vector<int> inv,
                         std::vector<int> identities)
    : n_(n), mul_(std::move(mul)), inv_(std::move(inv)) {
  if (n_ < 0 || n_ > 300) throw std::invalid_argument("groupoid size out of range");
  if (mul_.size() != static_cast<size_t>(n_) * n_ || inv_.size() != static_cast<size_t>(n_))
    throw std::invalid_argument("groupoid tables have wrong shape");
  for (int v : mul_)
    if (v < -1 || v >= n_) throw std::invalid_argument("multiplication table value out of range");

  ident_.assign(n_, 0);
  for (int e : identities) {
    if (e < 0 || e >= n_) throw std::out_of_range("identity index out of range");
    ident_[e] = 1;
  }
  // declared identities must match the computed ones
  for (int e = 0; e < n_; ++e) {
    bool is_id = defined(e, e) && mul_[static_cast<size_t>(e) * n_ + e] == e;
    if (is_id)
      for (int a = 0; a < n_; ++a) {
        if (defined(a, e) && mul_[static_cast<size_t>(a) * n_ + e] != a) is_id = false;
        if (defined(e, a) && mul_[static_cast<size_t>(e) * n_ + a] != a) is_id = false;
      }
    if (is_id != (ident_[e] != 0))
      throw std::invalid_argument("declared identity set does not match the table");
  }
  for (int e = 0; e < n_; ++e)
    if (ident_[e]) ident_list_.push_back(e);

  // (C3) every element has a unique right and left identity
  d_.assign(n_, -1);
  r_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int e : ident_list_) {
      if (defined(a, e)) {
        if (d_[a] >= 0) throw std::invalid_argument("element with two right identities");
        d_[a] = e;
      }
      if (defined(e, a)) {
        if (r_[a] >= 0) throw std::invalid_argument("element with two left identities");
        r_[a] = e;
      }
    }
    if (d_[a] < 0 || r_[a] < 0) throw std::invalid_argument("element without an identity (C3 fails)");
  }

  // inverses land on identities both ways
  for (int a = 0; a < n_; ++a) {
    int b = inv_[a];
    if (!defined(a, b) || !ident_[mul_[static_cast<size_t>(a) * n_ + b]] || !defined(b, a) ||
        !ident_[mul_[static_cast<size_t>(b) * n_ + a]])
      throw std::invalid_argument("inverse table violates the groupoid inverse laws");
  }

  // products exist exactly when d(a) = r(b)
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (defined(a, b) != (d_[a] == r_[b]))
        throw std::invalid_argument("composability disagrees with d/r");

  // (C1) and (C2)
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!defined(a, b)) continue;
      int ab = mul_[static_cast<size_t>(a) * n_ + b];
      for (int c = 0; c < n_; ++c) {
        bool left = defined(ab, c);
        bool right = defined(b, c) && defined(a, mul_[static_cast<size_t>(b) * n_ + c]);
        if (left != right) throw std::invalid_argument("associativity of existence fails (C1)");
        if (left) {
          int lhs = mul_[static_cast<size_t>(ab) * n_ + c];
          int rhs = mul_[static_cast<size_t>(a) * n_ + mul_[static_cast<size_t>(b) * n_ + c]];
          if (lhs != rhs) throw std::invalid_argument("associativity of values fails (C1)");
        }
      }
    }
}

int FinGroupoid::mul(int a, int b) const {
  int v = mul_[static_cast<size_t>(a) * n_ + b];
  if (v < 0) throw std::domain_error("groupoid product undefined");
  return v;
}

std::vector<int> FinGroupoid::star(int e) const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (d_[a] == e) out.push_back(a);
  return out;
}

FinGroupoid from_components(const std::vector<GroupoidComponent>& spec) {
  int n = 0;
  for (const auto& c : spec) {
    if (c.points <= 0) throw std::invalid_argument("component with an empty point set");
    int id;
    if (!is_group_table(c.group.n, c.group.mul, &id) || id != c.group.identity)
      throw std::invalid_argument("component group table invalid");
    n += c.points * c.group.n * c.points;
  }
  std::vector<int> mul(static_cast<size_t>(n) * n, -1), inv(n);
  std::vector<int> identities;
  int base = 0;
  for (const auto& c : spec) {
    int h = c.group.n, p = c.points;
    auto code = [&](int x, int g, int y) { return base + (x * h + g) * p + y; };
    for (int x = 0; x < p; ++x)
      for (int g = 0; g < h; ++g)
        for (int y = 0; y < p; ++y) {
          int i = code(x, g, y);
          inv[i] = code(y, c.group.inverse[g], x);
          if (x == y && g == c.group.identity) identities.push_back(i);
          for (int y2 = 0; y2 < p; ++y2)
            for (int g2 = 0; g2 < h; ++g2)
              mul[static_cast<size_t>(i) * n + code(y, g2, y2)] =
                  code(x, c.group.times(g, g2), y2);
        }
    base += p * h * p;
  }
  return FinGroupoid(n, std::move(mul), std::move(inv), std::move(identities));
}

FinGroupoid pair_groupoid(int n) { return from_components({{n, trivial_group()}}); }

FinGroupoid disjoint_union(const FinGroupoid& g, const FinGroupoid& h) {
  int n = g.size() + h.size();
  std::vector<int> mul(static_cast<size_t>(n) * n, -1), inv(n), identities;
  for (int a = 0; a < g.size(); ++a) {
    inv[a] = g.inv(a);
    if (g.is_identity(a)) identities.push_back(a);
    for (int b = 0; b < g.size(); ++b)
      if (g.defined(a, b)) mul[static_cast<size_t>(a) * n + b] = g.mul(a, b);
  }
  for (int a = 0; a < h.size(); ++a) {
    int i = g.size() + a;
    inv[i] = g.size() + h.inv(a);
    if (h.is_identity(a)) identities.push_back(i);
    for (int b = 0; b < h.size(); ++b)
      if (h.defined(a, b)) mul[static_cast<size_t>(i) * n + (g.size() + b)] = g.size() + h.mul(a, b);
  }
  return FinGroupoid(n, std::move(mul), std::move(inv), std::move(identities));
}

std::vector<std::vector<int>> connected_components(const FinGroupoid& g) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < g.size(); ++a) parent[find(g.d(a))] = find(g.r(a));
  std::map<int, std::vector<int>> by_root;
  for (int a = 0; a < g.size(); ++a) by_root[find(g.d(a))].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [root, elems] : by_root) out.push_back(std::move(elems));
  return out;
}

GroupTable local_group(const FinGroupoid& g, int e, std::vector<int>* elements) {
  if (!g.is_identity(e)) throw std::invalid_argument("local group base point must be an identity");
  std::vector<int> elems;
  for (int a = 0; a < g.size(); ++a)
    if (g.d(a) == e && g.r(a) == e) elems.push_back(a);
  std::map<int, int> pos;
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  GroupTable t;
  t.n = static_cast<int>(elems.size());
  t.mul.resize(static_cast<size_t>(t.n) * t.n);
  t.inverse.resize(t.n);
  for (int i = 0; i < t.n; ++i) {
    t.inverse[i] = pos.at(g.inv(elems[i]));
    for (int j = 0; j < t.n; ++j)
      t.mul[static_cast<size_t>(i) * t.n + j] = pos.at(g.mul(elems[i], elems[j]));
  }
  t.identity = pos.at(e);
  if (elements) *elements = elems;
  return t;
}

std::vector<int> iso_part(const FinGroupoid& g) {
  std::vector<int> out;
  for (int a = 0; a < g.size(); ++a)
    if (g.d(a) == g.r(a)) out.push_back(a);
  return out;
}

std::vector<int> subset_mul(const FinGroupoid& g, const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    for (int y : b)
      if (g.defined(x, y)) out.push_back(g.mul(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> subset_inv(const FinGroupoid& g, const std::vector<int>& a) {
  std::vector<int> out;
  for (int x : a) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_local_bisection(const FinGroupoid& g, const std::vector<int>& a) {
  bool unique = true;
  for (int x : a)
    for (int y : a)
      if (x != y && (g.d(x) == g.d(y) || g.r(x) == g.r(y))) unique = false;
  // containment definition: A^-1 A and A A^-1 inside the identities
  bool contained = true;
  for (int x : subset_mul(g, subset_inv(g, a), a))
    if (!g.is_identity(x)) contained = false;
  for (int x : subset_mul(g, a, subset_inv(g, a)))
    if (!g.is_identity(x)) contained = false;
  if (unique != contained)
    throw std::logic_error("local bisection characterizations disagree");
  return unique;
}

namespace {

void enumerate_bisections(const FinGroupoid& g, const std::vector<int>& ids, size_t pos,
                          std::vector<int>& current, std::vector<uint8_t>& range_used,
                          std::vector<std::vector<int>>& out, int size_cap) {
  if (static_cast<int>(out.size()) > size_cap)
    throw std::runtime_error("local bisection count exceeds the size cap");
  if (pos == ids.size()) {
    auto b = current;
    std::sort(b.begin(), b.end());
    out.push_back(std::move(b));
    return;
  }
  // identity ids[pos] not in the domain
  enumerate_bisections(g, ids, pos + 1, current, range_used, out, size_cap);
  // or pick an arrow out of it with an unused range identity
  for (int a : g.star(ids[pos])) {
    int ri = g.r(a);
    if (range_used[ri]) continue;
    range_used[ri] = 1;
    current.push_back(a);
    enumerate_bisections(g, ids, pos + 1, current, range_used, out, size_cap);
    current.pop_back();
    range_used[ri] = 0;
  }
}

}  // namespace

int KbResult::index_of(const std::vector<int>& bisection) const {
  auto it = std::lower_bound(bisections.begin(), bisections.end(), bisection,
                             [](const std::vector<int>& a, const std::vector<int>& b) {
                               return a.size() != b.size() ? a.size() < b.size() : a < b;
                             });
  if (it == bisections.end() || *it != bisection)
    throw std::invalid_argument("subset is not a local bisection of this groupoid");
  return static_cast<int>(it - bisections.begin());
}

KbResult kb(const FinGroupoid& g, int size_cap) {
  std::vector<std::vector<int>> bis;
  std::vector<int> current;
  std::vector<uint8_t> range_used(g.size(), 0);
  enumerate_bisections(g, g.identities(), 0, current, range_used, bis, size_cap);
  std::sort(bis.begin(), bis.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < bis.size(); ++i) index[bis[i]] = static_cast<int>(i);
  int m = static_cast<int>(bis.size());
  std::vector<int> mul(static_cast<size_t>(m) * m), inv(m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    inv[i] = index.at(subset_inv(g, bis[i]));
    std::ostringstream os;
    os << '{';
    for (size_t t = 0; t < bis[i].size(); ++t) os << (t ? "," : "") << bis[i][t];
    os << '}';
    names[i] = os.str();
    for (int j = 0; j < m; ++j)
      mul[static_cast<size_t>(i) * m + j] = index.at(subset_mul(g, bis[i], bis[j]));
  }
  FinInvSemi semi(m, std::move(mul), std::move(inv), index.at(std::vector<int>{}), std::move(names));
  return KbResult{std::move(semi), std::move(bis)};
}

GroupoidFunctor::GroupoidFunctor(const FinGroupoid& src, const FinGroupoid& dst,
                                 std::vector<int> map)
    : src_(src), dst_(dst), map_(std::move(map)) {
  if (map_.size() != static_cast<size_t>(src_.size()))
    throw std::invalid_argument("functor map has wrong length");
  for (int v : map_)
    if (v < 0 || v >= dst_.size()) throw std::invalid_argument("functor map value out of range");
  for (int e : src_.identities())
    if (!dst_.is_identity(map_[e])) throw std::invalid_argument("functor does not preserve identities");
  for (int a = 0; a < src_.size(); ++a) {
    if (map_[src_.inv(a)] != dst_.inv(map_[a]))
      throw std::invalid_argument("functor does not preserve inverses");
    for (int b = 0; b < src_.size(); ++b)
      if (src_.defined(a, b)) {
        if (!dst_.defined(map_[a], map_[b]) ||
            dst_.mul(map_[a], map_[b]) != map_[src_.mul(a, b)])
          throw std::invalid_argument("functor does not preserve products");
      }
  }
}

bool is_star_injective(const GroupoidFunctor& f) {
  for (int e : f.src().identities()) {
    auto st = f.src().star(e);
    for (size_t i = 0; i < st.size(); ++i)
      for (size_t j = i + 1; j < st.size(); ++j)
        if (f(st[i]) == f(st[j])) return false;
  }
  return true;
}

bool is_star_surjective(const GroupoidFunctor& f) {
  for (int e : f.src().identities()) {
    auto target = f.dst().star(f(e));
    for (int t : target) {
      bool hit = false;
      for (int a : f.src().star(e))
        if (f(a) == t) hit = true;
      if (!hit) return false;
    }
  }
  return true;
}

bool is_covering_functor(const GroupoidFunctor& f) {
  return is_star_injective(f) && is_star_surjective(f);
}

std::optional<std::pair<int, int>> lift_product(const GroupoidFunctor& f, int x, int a, int b) {
  if (!f.dst().defined(a, b) || f(x) != f.dst().mul(a, b))
    throw std::invalid_argument("lift_product needs f(x) = ab with ab defined");
  std::vector<int> candidates;
  for (int v : f.src().star(f.src().d(x)))
    if (f(v) == b) candidates.push_back(v);
  if (candidates.size() != 1) return std::nullopt;
  int v = candidates[0];
  if (!f.src().defined(x, f.src().inv(v))) return std::nullopt;
  int u = f.src().mul(x, f.src().inv(v));
  if (f(u) != a || !f.src().defined(u, v) || f.src().mul(u, v) != x) return std::nullopt;
  return std::make_pair(u, v);
}

bool is_principal(const FinGroupoid& g) {
  for (int e : g.identities())
    for (int f : g.identities()) {
      int count = 0;
      for (int a = 0; a < g.size(); ++a)
        if (g.d(a) == e && g.r(a) == f) ++count;
      if (count > 1) return false;
    }
  return true;
}

bool is_effective_discrete(const FinGroupoid& g) {
  for (int a : iso_part(g))
    if (!g.is_identity(a)) return false;
  return true;
}

bool is_minimal_discrete(const FinGroupoid& g) {
  return g.size() > 0 && connected_components(g).size() == 1;
}

FinGroupoid adjoin_identity(const FinGroupoid& g) {
  int n = g.size() + 1;
  std::vector<int> mul(static_cast<size_t>(n) * n, -1), inv(n);
  std::vector<int> identities = g.identities();
  for (int a = 0; a < g.size(); ++a) {
    inv[a] = g.inv(a);
    for (int b = 0; b < g.size(); ++b)
      if (g.defined(a, b)) mul[static_cast<size_t>(a) * n + b] = g.mul(a, b);
  }
  int inf = g.size();
  inv[inf] = inf;
  mul[static_cast<size_t>(inf) * n + inf] = inf;
  identities.push_back(inf);
  return FinGroupoid(n, std::move(mul), std::move(inv), std::move(identities));
}

std::string groupoid_to_json(const FinGroupoid& g) {
  nlohmann::json j;
  j["size"] = g.size();
  j["identities"] = g.identities();
  std::vector<int> inv(g.size());
  for (int a = 0; a < g.size(); ++a) inv[a] = g.inv(a);
  j["inv"] = inv;
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < g.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < g.size(); ++b) {
      if (g.defined(a, b))
        row.push_back(g.mul(a, b));
      else
        row.push_back(nullptr);
    }
    rows.push_back(row);
  }
  j["mul"] = rows;
  return j.dump(2) + "\n";
}

FinGroupoid groupoid_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("size").get<int>();
  auto identities = j.at("identities").get<std::vector<int>>();
  auto inv = j.at("inv").get<std::vector<int>>();
  std::vector<int> mul;
  mul.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : j.at("mul")) {
    for (const auto& v : row) mul.push_back(v.is_null() ? -1 : v.get<int>());
  }
  if (mul.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("mul table has wrong shape");
  return FinGroupoid(n, std::move(mul), std::move(inv), std::move(identities));
}

std::string groupoid_to_dot(const FinGroupoid& g) {
  std::ostringstream os;
  os << "digraph groupoid {\n";
  for (int e : g.identities()) os << "  n" << e << " [shape=circle];\n";
  for (int a = 0; a < g.size(); ++a) {
    if (g.is_identity(a)) continue;
    os << "  n" << g.d(a) << " -> n" << g.r(a) << " [label=\"" << a << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stonedual
