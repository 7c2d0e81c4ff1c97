#include <doctest.h>

#include <algorithm>

#include "stonedual/catalog.hpp"
#include "stonedual/unitize.hpp"
#include "support.hpp"

using namespace stonedual;
using testsupport::named;

TEST_CASE("finite-support partial bijections") {
  FinSupportPB s({{0, 1}, {1, 0}});
  CHECK(s.apply(0) == 1);
  CHECK_FALSE(s.apply(5).has_value());
  CHECK(s.compose(s) == FinSupportPB({{0, 0}, {1, 1}}));
  CHECK(s.inverse() == s);
  CHECK_THROWS_AS(FinSupportPB({{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(FinSupportPB({{0, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("canonical outer form strips identity points") {
  auto x = UnitizedElem::outer({0, 1, 2}, FinSupportPB({{0, 0}, {1, 2}, {2, 1}}));
  CHECK(x.exceptional_set() == FinSet{1, 2});
  CHECK(x.finite_part() == FinSupportPB({{1, 2}, {2, 1}}));
  CHECK(x.apply(0) == 0);  // identity again off the minimal set

  // undefined points stay exceptional
  auto y = UnitizedElem::outer({0, 1}, FinSupportPB({{0, 1}}));
  CHECK(y.exceptional_set() == FinSet{0, 1});
  CHECK_FALSE(y.defined(1));
  CHECK(y.apply(7) == 7);

  CHECK_THROWS_AS(UnitizedElem::outer({0}, FinSupportPB({{1, 2}})), std::invalid_argument);
}

TEST_CASE("composition of off-identity transpositions builds a 3-cycle") {
  auto x = UnitizedElem::outer({0, 1}, FinSupportPB({{0, 1}, {1, 0}}));
  auto y = UnitizedElem::outer({1, 2}, FinSupportPB({{1, 2}, {2, 1}}));
  auto xy = compose_unitized(x, y);
  CHECK(xy == UnitizedElem::outer({0, 1, 2}, FinSupportPB({{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("inner products stay inner") {
  auto a = UnitizedElem::inner(FinSupportPB({{0, 3}}));
  auto b = UnitizedElem::inner(FinSupportPB({{2, 0}}));
  CHECK(compose_unitized(a, b).is_inner());
  auto u = UnitizedElem::outer({0, 1}, FinSupportPB({{0, 1}, {1, 0}}));
  CHECK(compose_unitized(a, u).is_inner());
  CHECK(compose_unitized(u, a).is_inner());
}

TEST_CASE("units compose to the identity") {
  auto u = UnitizedElem::outer({0, 1}, FinSupportPB({{0, 1}, {1, 0}}));
  CHECK(compose_unitized(u, u.inverse()) == UnitizedElem::one());
}

TEST_CASE("unit recognition") {
  CHECK(is_unit_unitized(UnitizedElem::outer({0, 1}, FinSupportPB({{0, 1}, {1, 0}}))));
  CHECK_FALSE(is_unit_unitized(UnitizedElem::outer({0, 1}, FinSupportPB({{0, 1}}))));
  CHECK_FALSE(is_unit_unitized(UnitizedElem::inner(FinSupportPB({{0, 1}, {1, 0}}))));
  CHECK(is_unit_unitized(UnitizedElem::one()));
}

TEST_CASE("product routes agree on seeded samples") {
  std::mt19937_64 rng(0x0DD5EED);
  for (int i = 0; i < 10000; ++i) {
    auto x = random_unitized_elem(rng, 10);
    auto y = random_unitized_elem(rng, 10);
    CHECK_NOTHROW(compose_unitized(x, y));  // throws when the routes disagree
  }
}

TEST_CASE("inner part is an additive ideal under sampled products") {
  std::mt19937_64 rng(0x1DEA1);
  for (int i = 0; i < 2000; ++i) {
    auto x = random_unitized_elem(rng, 8);
    auto y = random_unitized_elem(rng, 8);
    auto xy = compose_unitized(x, y);
    if (x.is_inner() || y.is_inner()) CHECK(xy.is_inner());
  }
}

TEST_CASE("idempotents of the unitization mirror the finite/cofinite algebra") {
  std::mt19937_64 rng(0x1DE3);
  auto as_fincofin = [](const UnitizedElem& x) {
    return x.is_inner() ? FinCofin::fin(x.finite_part().domain())
                        : FinCofin::cofin(x.exceptional_set());
  };
  for (int i = 0; i < 2000; ++i) {
    auto x = random_unitized_elem(rng, 8);
    auto e = compose_unitized(x, x.inverse());  // an idempotent
    CHECK(compose_unitized(e, e) == e);
    CHECK(e.finite_part().domain() == e.finite_part().range());
    auto y = random_unitized_elem(rng, 8);
    auto f = compose_unitized(y, y.inverse());
    // products of idempotents match meets of finite/cofinite sets
    CHECK(as_fincofin(compose_unitized(e, f)) == fc_meet(as_fincofin(e), as_fincofin(f)));
  }
}

TEST_CASE("idempotent outer elements are pure co-identities") {
  auto e = UnitizedElem::outer({0, 2}, FinSupportPB());
  CHECK(compose_unitized(e, e) == e);
  CHECK(e.finite_part().empty());
}

TEST_CASE("units form a group under sampled products") {
  std::mt19937_64 rng(0x96069);
  std::vector<UnitizedElem> units;
  while (units.size() < 60) {
    auto x = random_unitized_elem(rng, 6);
    if (is_unit_unitized(x)) units.push_back(x);
  }
  for (size_t i = 0; i < units.size(); ++i) {
    CHECK(is_unit_unitized(units[i].inverse()));
    CHECK(compose_unitized(units[i], units[i].inverse()) == UnitizedElem::one());
    for (size_t j = 0; j < units.size(); ++j)
      CHECK(is_unit_unitized(compose_unitized(units[i], units[j])));
  }
}

TEST_CASE("unitized json round trip") {
  std::mt19937_64 rng(0x15A3);
  for (int i = 0; i < 200; ++i) {
    auto x = random_unitized_elem(rng, 9);
    CHECK(unitized_from_json(unitized_to_json(x)) == x);
  }
}

TEST_CASE("clifford semigroup of I_2") {
  auto s = symmetric_inverse_monoid(2);
  auto c = clifford(s);
  CHECK(c.size() == 5);  // zero, two corner units, the identity, the transposition

  // the connecting map sends the corner identity to the monoid identity
  int id0 = named(s, "[0>0]"), id = named(s, "[0>0;1>1]");
  CHECK(c.elements[c.connect(c.local_of[id0], id)] == id);
}

TEST_CASE("clifford semigroup of a Boolean algebra is its join semilattice") {
  auto ba = make_semigroup("I_1xI_1");
  auto c = clifford(ba);
  CHECK(c.size() == ba.size());
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c.size(); ++j)
      CHECK(c.elements[c.times(i, j)] == ba.compatible_join(c.elements[i], c.elements[j]).value());
}

TEST_CASE("group of units through the Clifford quotient") {
  auto u2 = group_of_units(symmetric_inverse_monoid(2));
  CHECK(u2.group.n == 2);

  auto u3 = group_of_units(symmetric_inverse_monoid(3));
  CHECK(u3.group.n == 6);
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (u3.group.times(a, b) != u3.group.times(b, a)) abelian = false;
  CHECK_FALSE(abelian);  // order six and non-abelian pins the symmetric group

  auto uba = group_of_units(make_semigroup("I_1xI_1"));
  CHECK(uba.group.n == 1);
}

TEST_CASE("units versus the topological full group") {
  auto p2 = units_vs_full_group(pair_groupoid(2));
  CHECK(p2.full_group_order() == 2);
  CHECK(p2.unit_group_order() == 2);
  CHECK(p2.isomorphism_ok);

  auto p1 = units_vs_full_group(pair_groupoid(1));
  CHECK(p1.full_group_order() == 1);
  CHECK(p1.isomorphism_ok);

  auto lab = units_vs_full_group(make_groupoid("Comp(2,Z2,2)"));
  CHECK(lab.full_group_order() == 8);
  CHECK(lab.unit_group_order() == 8);
  CHECK(lab.isomorphism_ok);
}

TEST_CASE("finite unitization sizes and embedding") {
  auto s = symmetric_inverse_monoid(2);
  auto u = unitize_finite(s);
  CHECK(u.monoid().size() == 14);
  CHECK(is_boolean(u.monoid()).ok());

  // the smallest host: the zero semigroup unitizes to a two-element semilattice
  FinInvSemi zero_semi(1, {0}, {0}, 0);
  auto uz = unitize_finite(zero_semi);
  CHECK(uz.monoid().size() == 2);
  for (int a = 0; a < 2; ++a) CHECK(uz.monoid().is_idempotent(a));

  // the new identity is the old top joined with the added point
  int top = s.monoid_identity().value();
  int embedded_top = u.embedding[top];
  int tid = u.monoid().monoid_identity().value();
  auto bis = u.kbres.bisections[tid];
  auto old_bis = u.kbres.bisections[embedded_top];
  std::vector<int> expect = old_bis;
  expect.push_back(u.ginf.size() - 1);  // the adjoined identity
  std::sort(expect.begin(), expect.end());
  CHECK(bis == expect);
}

TEST_CASE("outer elements of the finite unitization have the normal form") {
  auto s = symmetric_inverse_monoid(2);
  auto u = unitize_finite(s);
  const auto& t = u.kbres.semi;
  std::vector<uint8_t> image(t.size(), 0);
  for (int a = 0; a < s.size(); ++a) image[u.embedding[a]] = 1;
  int infinity = u.ginf.size() - 1;
  for (int x = 0; x < t.size(); ++x) {
    const auto& bis = u.kbres.bisections[x];
    bool outer = std::binary_search(bis.begin(), bis.end(), infinity);
    CHECK(outer == !image[x]);
    if (!outer) continue;
    // x = (identity-and-infinity part) v (inner arrow part), orthogonally
    std::vector<int> co, inner;
    for (int g : bis)
      (u.ginf.is_identity(g) ? co : inner).push_back(g);
    int co_elem = u.kbres.index_of(co);
    int in_elem = u.kbres.index_of(inner);
    CHECK(image[in_elem]);
    CHECK_FALSE(image[co_elem]);
    CHECK(t.orthogonal(co_elem, in_elem));
    CHECK(t.compatible_join(co_elem, in_elem) == x);
  }
}

TEST_CASE("unitization counting law across the catalog") {
  for (const auto& [name, s] : acceptance_catalog()) {
    if (s.size() > 40) continue;  // the rest run in the acceptance suite
    INFO(name);
    auto u = unitize_finite(s);
    CHECK(u.monoid().size() == 2 * s.size());
  }
}
