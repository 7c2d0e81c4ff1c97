#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "stonedual/catalog.hpp"
#include "stonedual/invsemi.hpp"
#include "support.hpp"

using namespace stonedual;
using testsupport::named;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long fact(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// |I_n| = sum_k C(n,k)^2 k!
long long symmetric_inverse_size(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) total += binom(n, k) * binom(n, k) * fact(k);
  return total;
}

// |R_n(G^0)| = sum_k C(n,k)^2 k! |G|^k
long long rook_size(int n, int g) {
  long long total = 0, pow = 1;
  for (int k = 0; k <= n; ++k) {
    total += binom(n, k) * binom(n, k) * fact(k) * pow;
    pow *= g;
  }
  return total;
}

FinInvSemi chain_semilattice(int n) {
  // a chain as an inverse semigroup: multiplication is min
  std::vector<int> mul(static_cast<size_t>(n) * n), inv(n);
  for (int a = 0; a < n; ++a) {
    inv[a] = a;
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = std::min(a, b);
  }
  return FinInvSemi(n, std::move(mul), std::move(inv), 0);
}

}  // namespace

TEST_CASE("symmetric inverse monoid sizes match the counting formula") {
  CHECK(symmetric_inverse_size(1) == 2);
  CHECK(symmetric_inverse_size(2) == 7);
  CHECK(symmetric_inverse_size(3) == 34);
  for (int n = 1; n <= 3; ++n)
    CHECK(symmetric_inverse_monoid(n).size() == symmetric_inverse_size(n));
  CHECK_THROWS_AS(symmetric_inverse_monoid(6), std::invalid_argument);
}

TEST_CASE("groups with zero") {
  CHECK(group_with_zero(cyclic_group(2)).size() == 3);
  CHECK(group_with_zero(trivial_group()).size() == 2);
  auto z3 = group_with_zero(cyclic_group(3));
  CHECK(z3.idempotents().size() == 2);  // E(S) is the two-element Boolean algebra
  // non-group input
  std::vector<int> bad{0, 0, 0, 0};
  CHECK_FALSE(is_group_table(2, bad));
}

TEST_CASE("rook matrices") {
  auto r2 = rook_matrices(2, trivial_group());
  CHECK(r2.size() == 7);
  // explicit isomorphism with I_2 through the underlying partial bijections
  auto i2 = symmetric_inverse_monoid(2);
  auto elems = rook_elements(2, trivial_group());
  std::vector<int> iso(r2.size());
  for (int i = 0; i < r2.size(); ++i) iso[i] = named(i2, elems[i].pb.str());
  for (int a = 0; a < r2.size(); ++a)
    for (int b = 0; b < r2.size(); ++b)
      CHECK(iso[r2.mul(a, b)] == i2.mul(iso[a], iso[b]));

  CHECK(rook_size(2, 2) == 17);
  CHECK(rook_matrices(2, cyclic_group(2)).size() == 17);
  CHECK(rook_matrices(1, cyclic_group(2)).size() == 3);
  CHECK_THROWS_AS(rook_matrices(3, cyclic_group(5)), std::invalid_argument);
}

TEST_CASE("natural order, compatibility, orthogonality in I_2") {
  auto s = symmetric_inverse_monoid(2);
  int id = named(s, "[0>0;1>1]"), id0 = named(s, "[0>0]");
  int a01 = named(s, "[0>1]"), a10 = named(s, "[1>0]");
  CHECK(s.leq(id0, id));
  CHECK_FALSE(s.leq(id, id0));
  CHECK_FALSE(s.compatible(a01, id0));  // a b^-1 fails to be idempotent
  CHECK(s.orthogonal(a01, a10));
  CHECK(s.compatible(a01, a10));  // orthogonal implies compatible
}

TEST_CASE("fixed point operator and meets in I_2") {
  auto s = symmetric_inverse_monoid(2);
  int swap = named(s, "[0>1;1>0]"), id = named(s, "[0>0;1>1]");
  CHECK(s.fixed_point(swap) == s.zero());
  for (int e : s.idempotents()) CHECK(s.fixed_point(e) == e);
  CHECK(s.meet(id, swap) == s.zero());  // graphs intersect emptily
}

TEST_CASE("meets are graph intersections in symmetric inverse monoids") {
  for (int n : {2, 3}) {
    auto s = symmetric_inverse_monoid(n);
    auto pbs = partial_bijections(n);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        PartialBijection expect = PartialBijection::empty(n);
        for (int p = 0; p < n; ++p)
          if (pbs[a].img[p] >= 0 && pbs[a].img[p] == pbs[b].img[p]) expect.img[p] = pbs[a].img[p];
        auto m = s.meet(a, b);
        REQUIRE(m.has_value());
        CHECK(pbs[*m] == expect);
      }
  }
}

TEST_CASE("meet agrees with the fixed-point formula") {
  for (const auto& key : {"I_2", "GZ(Z2)", "Rook(2,Z2)"}) {
    auto s = make_semigroup(key);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        auto phi = s.fixed_point(s.mul(a, s.inv(b)));
        REQUIRE(phi.has_value());
        CHECK(s.meet(a, b) == s.mul(*phi, b));
      }
  }
}

TEST_CASE("compatible joins in I_2") {
  auto s = symmetric_inverse_monoid(2);
  int a01 = named(s, "[0>1]"), a10 = named(s, "[1>0]"), swap = named(s, "[0>1;1>0]");
  CHECK(s.compatible_join(a01, a10) == swap);
  for (int a = 0; a < s.size(); ++a) CHECK(s.compatible_join(a, a) == a);
  CHECK(s.compatible_join(named(s, "[0>0]"), named(s, "[1>1]")) == named(s, "[0>0;1>1]"));
  CHECK_THROWS_AS(s.compatible_join(a01, named(s, "[0>0]")), std::invalid_argument);
}

TEST_CASE("compatible joins are graph unions") {
  auto s = symmetric_inverse_monoid(3);
  auto pbs = partial_bijections(3);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (!s.compatible(a, b)) continue;
      auto j = s.compatible_join(a, b);
      REQUIRE(j.has_value());
      for (int p = 0; p < 3; ++p) {
        int expect = pbs[a].img[p] >= 0 ? pbs[a].img[p] : pbs[b].img[p];
        CHECK(pbs[*j].img[p] == expect);
      }
    }
}

TEST_CASE("compatible pairs satisfy the four meet expressions") {
  for (const auto& key : {"I_2", "GZ(Z3)", "Rook(2,Z2)"}) {
    auto s = make_semigroup(key);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (!s.compatible(a, b)) continue;
        int m = s.meet(a, b).value();
        CHECK(m == s.mul(s.mul(a, s.inv(b)), b));
        CHECK(m == s.mul(s.mul(b, s.inv(b)), a));
        CHECK(m == s.mul(s.mul(a, s.inv(a)), b));
        CHECK(m == s.mul(s.mul(b, s.inv(a)), a));
      }
  }
}

TEST_CASE("complement below") {
  auto s = symmetric_inverse_monoid(2);
  int id = named(s, "[0>0;1>1]"), id0 = named(s, "[0>0]"), id1 = named(s, "[1>1]");
  int swap = named(s, "[0>1;1>0]"), a01 = named(s, "[0>1]"), a10 = named(s, "[1>0]");
  CHECK(complement_below(s, id0, id) == id1);
  for (int a = 0; a < s.size(); ++a) CHECK(complement_below(s, a, a) == s.zero());
  CHECK(complement_below(s, a01, swap) == a10);
  CHECK_THROWS_AS(complement_below(s, id, id0), std::invalid_argument);
}

TEST_CASE("complement below agrees with transport along d") {
  auto s = symmetric_inverse_monoid(3);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (!s.leq(b, a)) continue;
      int edc = complement_below(s, s.d(b), s.d(a));  // d(a) \ d(b) in E(S)
      CHECK(complement_below(s, b, a) == s.mul(a, edc));
    }
}

TEST_CASE("is_boolean") {
  CHECK(is_boolean(symmetric_inverse_monoid(3)).ok());
  CHECK(is_boolean(rook_matrices(2, cyclic_group(2))).ok());
  auto chain = chain_semilattice(3);
  auto rep = is_boolean(chain);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.idempotents_gba);
}

TEST_CASE("additive ideals and 0-simplifying") {
  CHECK(is_zero_simplifying(symmetric_inverse_monoid(3)));
  auto prod = make_semigroup("I_2xI_2");
  CHECK_FALSE(is_zero_simplifying(prod));
  auto ideals = additive_ideals(prod);
  CHECK(ideals.size() == 4);  // {0}, I_2 x {0}, {0} x I_2, everything
  // the left factor with zero second coordinate is one of them
  auto i2 = symmetric_inverse_monoid(2);
  std::vector<int> left;
  for (int a = 0; a < i2.size(); ++a) left.push_back(a * i2.size() + i2.zero());
  std::sort(left.begin(), left.end());
  CHECK(std::find(ideals.begin(), ideals.end(), left) != ideals.end());

  FinInvSemi zero_semi(1, {0}, {0}, 0);
  CHECK_FALSE(is_zero_simplifying(zero_semi));
}

TEST_CASE("pencil witnesses") {
  auto s = symmetric_inverse_monoid(3);
  for (int e : s.idempotents())
    for (int f : s.idempotents()) {
      if (e == s.zero() || f == s.zero()) continue;
      auto p = find_pencil(s, e, f);
      REQUIRE(p.has_value());
      CHECK(pencil_is_valid(s, *p));
    }
}

TEST_CASE("fundamental") {
  CHECK(is_fundamental(symmetric_inverse_monoid(3)));
  CHECK_FALSE(is_fundamental(group_with_zero(cyclic_group(2))));
  CHECK(is_fundamental(chain_semilattice(4)));  // semilattices are fundamental
}

TEST_CASE("infinitesimals and basic") {
  auto s = symmetric_inverse_monoid(2);
  auto inf = infinitesimals(s);
  std::vector<int> expect{named(s, "[0>1]"), named(s, "[1>0]")};
  std::sort(expect.begin(), expect.end());
  CHECK(inf == expect);
  auto dec = basic_decomposition(s, named(s, "[0>1;1>0]"));
  REQUIRE(dec.has_value());
  CHECK(std::find(dec->begin(), dec->end(), named(s, "[0>1]")) != dec->end());
  CHECK(std::find(dec->begin(), dec->end(), named(s, "[1>0]")) != dec->end());
  CHECK(is_basic(s));

  auto gz = group_with_zero(cyclic_group(2));
  CHECK(infinitesimals(gz).empty());
  CHECK_FALSE(is_basic(gz));  // the non-identity unit has no decomposition
}

TEST_CASE("classification predicates") {
  auto i3 = symmetric_inverse_monoid(3);
  CHECK(is_semisimple(i3));  // finiteness makes every principal ideal finite
  CHECK(is_simple(i3));
  CHECK_FALSE(is_purely_infinite(i3));

  // the rank filtration gives proper semigroup ideals, so I_3 is 0-simplifying
  // without being 0-simple
  CHECK_FALSE(is_0_simple(i3));
  CHECK(is_zero_simplifying(i3));
  CHECK(is_0_simple(group_with_zero(cyclic_group(2))));

  // the Brandt semigroup of 2x2 matrix units is 0-simple
  auto i2 = symmetric_inverse_monoid(2);
  std::vector<int> brandt_elems{i2.zero(), named(i2, "[0>0]"), named(i2, "[0>1]"),
                                named(i2, "[1>0]"), named(i2, "[1>1]")};
  std::map<int, int> pos;
  for (size_t i = 0; i < brandt_elems.size(); ++i) pos[brandt_elems[i]] = static_cast<int>(i);
  int m = static_cast<int>(brandt_elems.size());
  std::vector<int> mul(static_cast<size_t>(m) * m), inv(m);
  for (int i = 0; i < m; ++i) {
    inv[i] = pos.at(i2.inv(brandt_elems[i]));
    for (int j = 0; j < m; ++j) {
      int prod = i2.mul(brandt_elems[i], brandt_elems[j]);
      mul[static_cast<size_t>(i) * m + j] = pos.count(prod) ? pos.at(prod) : 0;
    }
  }
  FinInvSemi brandt(m, std::move(mul), std::move(inv), 0);
  CHECK(is_0_simple(brandt));

  auto prod = make_semigroup("I_2xI_2");
  CHECK_FALSE(is_0_simple(prod));
  CHECK_FALSE(is_purely_infinite(prod));
}

TEST_CASE("0-simple agrees with the D-relation criterion") {
  for (const auto& key : {"I_2", "I_3", "GZ(Z2)", "Rook(2,Z2)", "I_2xI_2"}) {
    auto s = make_semigroup(key);
    bool by_lemma = s.size() > 1;
    for (int e : s.idempotents()) {
      if (!by_lemma) break;
      if (e == s.zero()) continue;
      for (int f : s.idempotents()) {
        if (f == s.zero()) continue;
        bool found = false;
        for (int i : s.idempotents())
          if (s.leq(i, f) && d_related(s, e, i)) found = true;
        if (!found) by_lemma = false;
      }
    }
    CHECK(is_0_simple(s) == by_lemma);
  }
}

TEST_CASE("subalgebra generated") {
  auto s = symmetric_inverse_monoid(2);
  auto sub = subalgebra_generated(s, {s.zero(), named(s, "[0>1;1>0]")});
  CHECK(sub.semi.size() == 3);  // zero, the transposition, the identity
  CHECK(is_boolean(sub.semi).ok());
  std::set<int> parents(sub.parent_of.begin(), sub.parent_of.end());
  CHECK(parents.count(named(s, "[0>1;1>0]")) == 1);
  CHECK(parents.count(named(s, "[0>0;1>1]")) == 1);

  auto trivial = subalgebra_generated(s, {s.zero()});
  CHECK(trivial.semi.size() == 1);
}

TEST_CASE("direct product of two copies of I_1 is a Boolean algebra") {
  auto p = make_semigroup("I_1xI_1");
  CHECK(p.size() == 4);
  CHECK(static_cast<int>(p.idempotents().size()) == 4);
  CHECK(is_boolean(p).ok());
}

TEST_CASE("order is monotone under multiplication and inversion") {
  for (const auto& key : {"I_2", "GZ(Z2)", "Rook(2,Z2)"}) {
    auto s = make_semigroup(key);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (!s.leq(a, b)) continue;
        CHECK(s.leq(s.inv(a), s.inv(b)));
        for (int x = 0; x < s.size(); ++x) {
          CHECK(s.leq(s.mul(x, a), s.mul(x, b)));
          CHECK(s.leq(s.mul(a, x), s.mul(b, x)));
        }
      }
  }
}

TEST_CASE("meet-join calculus on hosts up to 40 elements") {
  for (const auto& key : {"I_1", "I_2", "I_3", "GZ(Z2)", "GZ(Z3)", "Rook(2,Z2)"}) {
    auto s = make_semigroup(key);
    REQUIRE(s.size() <= 40);
    // (1) d and r of a compatible join split
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (!s.compatible(a, b)) continue;
        int j = s.compatible_join(a, b).value();
        CHECK(s.d(j) == s.compatible_join(s.d(a), s.d(b)).value());
        CHECK(s.r(j) == s.compatible_join(s.r(a), s.r(b)).value());
      }
    // (2) meets multiply: (a ^ b)c = ac ^ bc and dually
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        auto m = s.meet(a, b);
        if (!m) continue;
        for (int c = 0; c < s.size(); ++c) {
          auto rc = s.meet(s.mul(a, c), s.mul(b, c));
          REQUIRE(rc.has_value());
          CHECK(*rc == s.mul(*m, c));
          auto lc = s.meet(s.mul(c, a), s.mul(c, b));
          REQUIRE(lc.has_value());
          CHECK(*lc == s.mul(c, *m));
        }
      }
    // (3)-(5) distribution of meets over binary compatible joins
    for (int a1 = 0; a1 < s.size(); ++a1)
      for (int a2 = 0; a2 < s.size(); ++a2) {
        if (!s.compatible(a1, a2)) continue;
        int a = s.compatible_join(a1, a2).value();
        for (int c = 0; c < s.size(); ++c) {
          auto lhs = s.meet(c, a);
          auto m1 = s.meet(c, a1), m2 = s.meet(c, a2);
          REQUIRE(lhs.has_value());
          REQUIRE(m1.has_value());
          REQUIRE(m2.has_value());
          CHECK(*lhs == s.compatible_join(*m1, *m2).value());
        }
      }
  }
  // (5) full two-sided decomposition on a mid-size host
  auto s = symmetric_inverse_monoid(2);
  for (int a1 = 0; a1 < s.size(); ++a1)
    for (int a2 = 0; a2 < s.size(); ++a2) {
      if (!s.compatible(a1, a2)) continue;
      int a = s.compatible_join(a1, a2).value();
      for (int b1 = 0; b1 < s.size(); ++b1)
        for (int b2 = 0; b2 < s.size(); ++b2) {
          if (!s.compatible(b1, b2)) continue;
          int b = s.compatible_join(b1, b2).value();
          int acc = s.zero();
          for (const auto& x : {s.meet(a1, b1), s.meet(a1, b2), s.meet(a2, b1), s.meet(a2, b2)})
            acc = s.compatible_join(acc, x.value()).value();
          CHECK(acc == s.meet(a, b).value());
        }
    }
}

TEST_CASE("every catalog instance is a monoid") {
  for (const auto& [name, s] : acceptance_catalog()) {
    INFO(name);
    CHECK(s.monoid_identity().has_value());
  }
}

TEST_CASE("sigma-unital is trivially satisfied at finite scale") {
  auto res = sigma_unital(symmetric_inverse_monoid(2));
  CHECK(res.value);
  CHECK_FALSE(res.note.empty());
}

TEST_CASE("construction validation") {
  // broken inverse table
  CHECK_THROWS_AS(FinInvSemi(2, {0, 0, 0, 1}, {1, 0}, 0), std::invalid_argument);
  // declared zero that fails to absorb
  CHECK_THROWS_AS(FinInvSemi(2, {0, 1, 1, 1}, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("semigroup json round trip") {
  auto s = make_semigroup("Rook(2,Z2)");
  auto t = semigroup_from_json(semigroup_to_json(s));
  REQUIRE(t.size() == s.size());
  CHECK(t.zero() == s.zero());
  for (int a = 0; a < s.size(); ++a) {
    CHECK(t.inv(a) == s.inv(a));
    CHECK(t.name(a) == s.name(a));
    for (int b = 0; b < s.size(); ++b) CHECK(t.mul(a, b) == s.mul(a, b));
  }
}
