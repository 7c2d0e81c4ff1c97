#include "stonedual/unitize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stonedual {

FinSupportPB::FinSupportPB(std::vector<std::pair<int, int>> graph) : graph_(std::move(graph)) {
  std::sort(graph_.begin(), graph_.end());
  graph_.erase(std::unique(graph_.begin(), graph_.end()), graph_.end());
  std::set<int> src, dst;
  for (auto [p, q] : graph_) {
    if (p < 0 || q < 0) throw std::invalid_argument("graph points must be natural numbers");
    if (!src.insert(p).second || !dst.insert(q).second)
      throw std::invalid_argument("graph is not injective both ways");
  }
}

FinSupportPB FinSupportPB::identity_on(const FinSet& s) {
  std::vector<std::pair<int, int>> graph;
  for (int x : s.elems()) graph.emplace_back(x, x);
  return FinSupportPB(std::move(graph));
}

std::optional<int> FinSupportPB::apply(int n) const {
  for (auto [p, q] : graph_)
    if (p == n) return q;
  return std::nullopt;
}

FinSupportPB FinSupportPB::compose(const FinSupportPB& rhs) const {
  std::vector<std::pair<int, int>> graph;
  for (auto [p, q] : rhs.graph_) {
    auto r = apply(q);
    if (r) graph.emplace_back(p, *r);
  }
  return FinSupportPB(std::move(graph));
}

FinSupportPB FinSupportPB::inverse() const {
  std::vector<std::pair<int, int>> graph;
  for (auto [p, q] : graph_) graph.emplace_back(q, p);
  return FinSupportPB(std::move(graph));
}

FinSet FinSupportPB::domain() const {
  std::vector<int> xs;
  for (auto [p, q] : graph_) xs.push_back(p);
  return FinSet(std::move(xs));
}

FinSet FinSupportPB::range() const {
  std::vector<int> xs;
  for (auto [p, q] : graph_) xs.push_back(q);
  return FinSet(std::move(xs));
}

std::string FinSupportPB::str() const {
  if (graph_.empty()) return "0";
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < graph_.size(); ++i) {
    if (i) os << ';';
    os << graph_[i].first << '>' << graph_[i].second;
  }
  os << ']';
  return os.str();
}

UnitizedElem UnitizedElem::inner(FinSupportPB s) {
  return UnitizedElem(true, FinSet{}, std::move(s));
}

UnitizedElem UnitizedElem::outer(const FinSet& e, const FinSupportPB& s) {
  if (!set_subset(s.domain(), e) || !set_subset(s.range(), e))
    throw std::invalid_argument("outer part must act inside the exceptional set");
  // minimal form: keep undefined points and moved points only
  std::vector<std::pair<int, int>> moved;
  std::vector<int> exceptional;
  for (auto [p, q] : s.graph())
    if (p != q) moved.emplace_back(p, q);
  FinSupportPB smin(std::move(moved));
  for (int p : e.elems()) {
    auto v = s.apply(p);
    if (!v || *v != p) exceptional.push_back(p);
  }
  return UnitizedElem(false, FinSet(std::move(exceptional)), std::move(smin));
}

bool UnitizedElem::defined(int n) const {
  if (inner_) return s_.apply(n).has_value();
  if (!e_.contains(n)) return true;
  return s_.apply(n).has_value();
}

std::optional<int> UnitizedElem::apply(int n) const {
  auto v = s_.apply(n);
  if (v) return v;
  if (!inner_ && !e_.contains(n)) return n;
  return std::nullopt;
}

UnitizedElem UnitizedElem::inverse() const {
  if (inner_) return inner(s_.inverse());
  return outer(e_, s_.inverse());
}

std::string UnitizedElem::str() const {
  if (inner_) return "inner " + s_.str();
  return "outer e=" + e_.str() + " s=" + s_.str();
}

UnitizedElem compose_direct(const UnitizedElem& x, const UnitizedElem& y) {
  // probe over every point that either factor treats non-identically
  std::vector<int> probe;
  auto add_all = [&probe](const UnitizedElem& u) {
    for (int p : u.exceptional_set().elems()) probe.push_back(p);
    for (auto [p, q] : u.finite_part().graph()) {
      probe.push_back(p);
      probe.push_back(q);
    }
  };
  add_all(x);
  add_all(y);
  FinSet window(probe);

  std::vector<std::pair<int, int>> graph;
  for (int n : window.elems()) {
    auto m = y.apply(n);
    if (!m) continue;
    auto r = x.apply(*m);
    if (r) graph.emplace_back(n, *r);
  }
  if (x.is_inner() || y.is_inner()) return UnitizedElem::inner(FinSupportPB(std::move(graph)));
  return UnitizedElem::outer(window, FinSupportPB(std::move(graph)));
}

UnitizedElem compose_formula(const UnitizedElem& x, const UnitizedElem& y) {
  if (x.is_inner() && y.is_inner())
    return UnitizedElem::inner(x.finite_part().compose(y.finite_part()));
  if (x.is_inner()) {
    // x(b1 (+) f') = x b1 (+) x restricted off f
    const auto& f = y.exceptional_set();
    auto first = x.finite_part().compose(y.finite_part());
    std::vector<std::pair<int, int>> rest;
    for (auto [p, q] : x.finite_part().graph())
      if (!f.contains(p)) rest.emplace_back(p, q);
    auto graph = first.graph();
    for (auto pq : rest) graph.push_back(pq);
    return UnitizedElem::inner(FinSupportPB(std::move(graph)));
  }
  if (y.is_inner()) {
    const auto& e = x.exceptional_set();
    auto first = x.finite_part().compose(y.finite_part());
    std::vector<std::pair<int, int>> rest;
    for (auto [p, q] : y.finite_part().graph())
      if (!e.contains(q)) rest.emplace_back(p, q);
    auto graph = first.graph();
    for (auto pq : rest) graph.push_back(pq);
    return UnitizedElem::inner(FinSupportPB(std::move(graph)));
  }
  // (a1 (+) (e v f)e')(b1 (+) (e v f)f') (+) e'f'
  const auto& e = x.exceptional_set();
  const auto& f = y.exceptional_set();
  FinSet ef = set_union(e, f);
  FinSet only_f = set_diff(ef, e), only_e = set_diff(ef, f);
  auto aprime_graph = x.finite_part().graph();
  for (int p : only_f.elems()) aprime_graph.emplace_back(p, p);
  auto bprime_graph = y.finite_part().graph();
  for (int p : only_e.elems()) bprime_graph.emplace_back(p, p);
  FinSupportPB aprime(std::move(aprime_graph)), bprime(std::move(bprime_graph));
  return UnitizedElem::outer(ef, aprime.compose(bprime));
}

UnitizedElem compose_unitized(const UnitizedElem& x, const UnitizedElem& y) {
  auto direct = compose_direct(x, y);
  auto formula = compose_formula(x, y);
  if (!(direct == formula))
    throw std::logic_error("product routes disagree: " + direct.str() + " vs " + formula.str());
  return direct;
}

bool is_unit_unitized(const UnitizedElem& x) {
  if (x.is_inner()) return false;
  return x.finite_part().domain() == x.exceptional_set() &&
         x.finite_part().range() == x.exceptional_set();
}

UnitizedElem random_unitized_elem(std::mt19937_64& rng, int window) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> targets;
  for (int i = 0; i < window; ++i) targets.push_back(i);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<std::pair<int, int>> graph;
  size_t next = 0;
  for (int p = 0; p < window; ++p)
    if (coin(rng)) graph.emplace_back(p, targets[next++]);
  FinSupportPB s(std::move(graph));
  if (coin(rng)) return UnitizedElem::inner(std::move(s));
  std::vector<int> extra;
  for (int p = 0; p < window; ++p)
    if (coin(rng)) extra.push_back(p);
  FinSet e = set_union(set_union(s.domain(), s.range()), FinSet(std::move(extra)));
  return UnitizedElem::outer(e, s);
}

std::string unitized_to_json(const UnitizedElem& x) {
  nlohmann::json j;
  j["kind"] = x.is_inner() ? "inner" : "outer";
  j["e"] = x.exceptional_set().elems();
  nlohmann::json graph = nlohmann::json::array();
  for (auto [p, q] : x.finite_part().graph()) graph.push_back({p, q});
  j["graph"] = graph;
  return j.dump(2) + "\n";
}

UnitizedElem unitized_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto kind = j.at("kind").get<std::string>();
  std::vector<std::pair<int, int>> graph;
  for (const auto& row : j.at("graph")) graph.emplace_back(row.at(0).get<int>(), row.at(1).get<int>());
  FinSupportPB s(std::move(graph));
  if (kind == "inner") return UnitizedElem::inner(std::move(s));
  if (kind != "outer") throw std::invalid_argument("unknown unitized element kind");
  FinSet e(j.at("e").get<std::vector<int>>());
  return UnitizedElem::outer(e, s);
}

// --- Clifford semigroup and group of units --------------------------------

int CliffordSemigroup::connect(int i, int f) const {
  int e = idem_of(i);
  if (!host.leq(e, f)) throw std::invalid_argument("connecting map needs e <= f");
  int comp = complement_below(host, e, f);  // f \ e
  auto j = host.join_lub(elements[i], comp);
  if (!j) throw std::logic_error("connecting join missing in a Boolean host");
  return local_of[*j];
}

bool CliffordSemigroup::leq(int i, int j) const {
  return times(j, times(inv(i), i)) == i;
}

CliffordSemigroup clifford(const FinInvSemi& s) {
  auto rep = is_boolean(s);
  if (!rep.ok()) throw std::invalid_argument("clifford needs a Boolean host: " + rep.witness);
  if (!s.monoid_identity()) throw std::invalid_argument("clifford needs a monoid");

  CliffordSemigroup c{s, {}, std::vector<int>(s.size(), -1), {}};
  for (int a = 0; a < s.size(); ++a)
    if (s.d(a) == s.r(a)) {
      c.local_of[a] = static_cast<int>(c.elements.size());
      c.elements.push_back(a);
    }
  int m = c.size();
  c.mul.assign(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int e = c.idem_of(i), f = c.idem_of(j);
      auto g = s.join_lub(e, f);
      if (!g) throw std::logic_error("idempotent join missing in a Boolean host");
      int ai = c.connect(i, *g), bj = c.connect(j, *g);
      int prod = s.mul(c.elements[ai], c.elements[bj]);
      if (c.local_of[prod] < 0) throw std::logic_error("Clifford product escaped the local groups");
      c.mul[static_cast<size_t>(i) * m + j] = c.local_of[prod];
    }

  // strong-semilattice laws
  for (int i = 0; i < m; ++i)
    if (c.connect(i, c.idem_of(i)) != i) throw std::logic_error("identity connecting map fails");
  for (int i = 0; i < m; ++i) {
    int e = c.idem_of(i);
    for (int f : s.idempotents()) {
      if (!s.leq(e, f)) continue;
      for (int g : s.idempotents()) {
        if (!s.leq(f, g)) continue;
        if (c.connect(c.connect(i, f), g) != c.connect(i, g))
          throw std::logic_error("connecting maps do not compose");
      }
    }
  }
  // associativity; this is where the join (not meet) in the second
  // connecting subscript is essential
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (c.times(c.times(i, j), k) != c.times(i, c.times(j, k)))
          throw std::logic_error("Clifford product not associative");
  // central idempotents
  for (int i = 0; i < m; ++i) {
    if (!c.is_idem(i)) continue;
    for (int j = 0; j < m; ++j)
      if (c.times(i, j) != c.times(j, i)) throw std::logic_error("idempotents not central");
  }
  // E-unitary
  for (int i = 0; i < m; ++i) {
    if (!c.is_idem(i)) continue;
    for (int j = 0; j < m; ++j)
      if (c.leq(i, j) && !c.is_idem(j)) throw std::logic_error("Clifford semigroup not E-unitary");
  }
  return c;
}

UnitGroupResult group_of_units(const FinInvSemi& s) {
  UnitGroupResult res{clifford(s), {}, {}, {}, {}};
  auto& c = res.cs;
  int m = c.size();

  auto compatible = [&](int i, int j) {
    return c.is_idem(c.times(c.inv(i), j)) && c.is_idem(c.times(i, c.inv(j)));
  };
  // transitivity of the compatibility relation (licensed by E-unitarity)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (compatible(i, j) && compatible(j, k) && !compatible(i, k))
          throw std::logic_error("sigma is not transitive");

  res.sigma_class.assign(m, -1);
  std::vector<int> reps;
  for (int i = 0; i < m; ++i) {
    if (res.sigma_class[i] >= 0) continue;
    int cls = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int j = i; j < m; ++j)
      if (compatible(i, j)) res.sigma_class[j] = cls;
  }
  int k = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<size_t>(k) * k, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int& slot = mul[static_cast<size_t>(res.sigma_class[i]) * k + res.sigma_class[j]];
      int val = res.sigma_class[c.times(i, j)];
      if (slot < 0)
        slot = val;
      else if (slot != val)
        throw std::logic_error("sigma is not a congruence");
    }
  int identity = -1;
  if (!is_group_table(k, mul, &identity)) throw std::logic_error("C(S)/sigma is not a group");
  res.group.n = k;
  res.group.mul = std::move(mul);
  res.group.identity = identity;
  res.group.inverse.assign(k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (res.group.mul[static_cast<size_t>(i) * k + j] == identity) res.group.inverse[i] = j;

  // explicit isomorphism with the ordinary unit group of the monoid
  int one = *s.monoid_identity();
  for (int u = 0; u < s.size(); ++u)
    if (s.d(u) == one && s.r(u) == one) res.host_units.push_back(u);
  if (static_cast<int>(res.host_units.size()) != k)
    throw std::logic_error("unit group order mismatch");
  std::vector<uint8_t> seen(k, 0);
  for (int u : res.host_units) {
    int cls = res.sigma_class[c.local_of[u]];
    res.unit_class.push_back(cls);
    if (seen[cls]) throw std::logic_error("unit group map not injective");
    seen[cls] = 1;
  }
  for (size_t i = 0; i < res.host_units.size(); ++i)
    for (size_t j = 0; j < res.host_units.size(); ++j) {
      int prod = s.mul(res.host_units[i], res.host_units[j]);
      if (res.sigma_class[c.local_of[prod]] !=
          res.group.mul[static_cast<size_t>(res.unit_class[i]) * k + res.unit_class[j]])
        throw std::logic_error("unit group map not a homomorphism");
    }
  return res;
}

FullGroupReport units_vs_full_group(const FinGroupoid& g) {
  FullGroupReport rep{adjoin_identity(g), kb(adjoin_identity(g)), {}, group_of_units(kb(g).semi),
                      false};
  const auto& t = rep.kbinf.semi;
  auto idm = t.monoid_identity();
  if (!idm) throw std::logic_error("KB of a groupoid is always a monoid");
  for (int u = 0; u < t.size(); ++u)
    if (t.d(u) == *idm && t.r(u) == *idm) rep.full_group.push_back(u);
  // cross-check against the bisection definition at groupoid level
  {
    std::vector<int> bisections;
    std::vector<int> all_ids = rep.ginf.identities();
    std::sort(all_ids.begin(), all_ids.end());
    for (int u = 0; u < t.size(); ++u) {
      const auto& a = rep.kbinf.bisections[u];
      if (subset_mul(rep.ginf, subset_inv(rep.ginf, a), a) == all_ids &&
          subset_mul(rep.ginf, a, subset_inv(rep.ginf, a)) == all_ids)
        bisections.push_back(u);
    }
    if (bisections != rep.full_group)
      throw std::logic_error("unit elements of KB differ from the bisections");
  }

  // realize the correspondence A |-> sigma(B), with B the non-identity part
  auto kb_g = kb(g);
  const auto& cliff = rep.units.cs;
  int korder = rep.units.group.n;
  std::vector<int> image_class;
  std::vector<uint8_t> seen(korder, 0);
  for (int u : rep.full_group) {
    std::vector<int> b;
    for (int x : rep.kbinf.bisections[u])
      if (!rep.ginf.is_identity(x)) b.push_back(x);
    int b_elem = kb_g.index_of(b);
    int cls = rep.units.sigma_class[cliff.local_of[b_elem]];
    image_class.push_back(cls);
    if (cls < 0 || seen[cls]) return rep;  // not injective
    seen[cls] = 1;
  }
  if (static_cast<int>(rep.full_group.size()) != korder) return rep;
  for (size_t i = 0; i < rep.full_group.size(); ++i)
    for (size_t j = 0; j < rep.full_group.size(); ++j) {
      int prod = t.mul(rep.full_group[i], rep.full_group[j]);
      auto it = std::find(rep.full_group.begin(), rep.full_group.end(), prod);
      if (it == rep.full_group.end()) return rep;
      int prod_class = image_class[it - rep.full_group.begin()];
      if (prod_class !=
          rep.units.group.mul[static_cast<size_t>(image_class[i]) * korder + image_class[j]])
        return rep;
    }
  rep.isomorphism_ok = true;
  return rep;
}

FiniteUnitization unitize_finite(const FinInvSemi& s) {
  auto stone = stone_groupoid(s);
  auto ginf = adjoin_identity(stone.groupoid);
  auto kbres = kb(ginf);
  const auto& t = kbres.semi;
  if (t.size() != 2 * s.size())
    throw std::logic_error("unitization size is not twice the host size");

  std::vector<int> embedding(s.size());
  std::vector<uint8_t> in_image(t.size(), 0);
  for (int a = 0; a < s.size(); ++a) {
    std::vector<int> bisection;
    for (int gatom : u_set(s, a).generators) bisection.push_back(stone.filter_of_atom[gatom]);
    std::sort(bisection.begin(), bisection.end());
    embedding[a] = kbres.index_of(bisection);
    in_image[embedding[a]] = 1;
  }
  // embedding is an injective homomorphism
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (t.mul(embedding[a], embedding[b]) != embedding[s.mul(a, b)])
        throw std::logic_error("unitization embedding is not a homomorphism");
  // the image is an additive ideal
  for (int x = 0; x < t.size(); ++x)
    for (int a = 0; a < s.size(); ++a) {
      if (!in_image[t.mul(x, embedding[a])] || !in_image[t.mul(embedding[a], x)])
        throw std::logic_error("unitization image is not a semigroup ideal");
    }
  // ... and a subalgebra: closed under compatible joins and relative
  // complements of idempotents
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      int ia = embedding[a], ib = embedding[b];
      if (t.compatible(ia, ib)) {
        auto j = t.join_lub(ia, ib);
        if (j && !in_image[*j]) throw std::logic_error("unitization image not join-closed");
      }
      if (t.is_idempotent(ia) && t.is_idempotent(ib)) {
        int c = complement_below(t, t.mul(ia, ib), ia);
        if (!in_image[c]) throw std::logic_error("unitization image not complement-closed");
      }
    }
  return FiniteUnitization{std::move(stone), std::move(ginf), std::move(kbres), std::move(embedding)};
}

}  // namespace stonedual
