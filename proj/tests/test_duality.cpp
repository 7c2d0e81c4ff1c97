#include <doctest.h>

#include <algorithm>

#include "stonedual/catalog.hpp"
#include "stonedual/duality.hpp"
#include "support.hpp"

using namespace stonedual;
using testsupport::named;

namespace {

SemigroupMorphism projection_first(const FinInvSemi& s, const FinInvSemi& prod) {
  // (a, b) |-> a under the pairing used by direct_product
  std::vector<int> map(prod.size());
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) map[a * s.size() + b] = a;
  return SemigroupMorphism(prod, s, std::move(map));
}

}  // namespace

TEST_CASE("prime filters are the atom up-sets") {
  auto i2 = symmetric_inverse_monoid(2);
  CHECK(prime_filters(i2).size() == 4);
  CHECK(prime_filters(group_with_zero(cyclic_group(2))).size() == 2);
  FinInvSemi zero_semi(1, {0}, {0}, 0);
  CHECK(prime_filters(zero_semi).empty());
}

TEST_CASE("brute-force prime filter enumeration matches on small hosts") {
  for (const auto& [name, s] : acceptance_catalog()) {
    if (s.size() > 15) continue;
    INFO(name);
    auto brute = brute_force_prime_filters(s);
    std::vector<std::vector<int>> from_atoms;
    for (auto f : prime_filters(s)) from_atoms.push_back(filter_up_set(s, f));
    std::sort(from_atoms.begin(), from_atoms.end());
    CHECK(brute == from_atoms);
  }
}

TEST_CASE("coset law on every enumerated filter") {
  for (const auto& key : {"I_2", "GZ(Z2)", "GZ(Z3)"}) {
    auto s = make_semigroup(key);
    for (const auto& filter : brute_force_prime_filters(s)) {
      // d(A) as a set: up-closure of pairwise a^-1 b
      std::vector<uint8_t> dset(s.size(), 0);
      for (int a : filter)
        for (int b : filter)
          for (int y = 0; y < s.size(); ++y)
            if (s.leq(s.mul(s.inv(a), b), y)) dset[y] = 1;
      for (int a : filter) {
        // (a d(A))^ must reproduce the filter
        std::vector<uint8_t> prod(s.size(), 0);
        for (int z = 0; z < s.size(); ++z) {
          if (!dset[z]) continue;
          for (int y = 0; y < s.size(); ++y)
            if (s.leq(s.mul(a, z), y)) prod[y] = 1;
        }
        std::vector<int> rebuilt;
        for (int y = 0; y < s.size(); ++y)
          if (prod[y]) rebuilt.push_back(y);
        CHECK(rebuilt == filter);
      }
    }
  }
}

TEST_CASE("d, r, inverse and product of prime filters in I_2") {
  auto s = symmetric_inverse_monoid(2);
  PrimeFilter a{named(s, "[0>1]")};
  CHECK(filter_d(s, a).generator == named(s, "[0>0]"));
  CHECK(filter_r(s, a).generator == named(s, "[1>1]"));
  CHECK(filter_inv(s, a).generator == named(s, "[1>0]"));

  auto atoms = s.atoms();
  for (int e : s.idempotents()) {
    if (e == s.zero()) continue;
    if (std::find(atoms.begin(), atoms.end(), e) == atoms.end()) continue;
    PrimeFilter f{e};
    CHECK(filter_d(s, f) == f);
    CHECK(filter_r(s, f) == f);
  }

  PrimeFilter b{named(s, "[1>0]")};
  auto prod = filter_product(s, a, b);
  REQUIRE(prod.has_value());
  CHECK(prod->generator == named(s, "[1>1]"));

  CHECK(filter_product(s, a, filter_d(s, a)) == a);
  CHECK_FALSE(filter_product(s, a, a).has_value());  // mismatched d and r
}

TEST_CASE("stone groupoid of I_n is the pair groupoid") {
  for (int n = 1; n <= 3; ++n) {
    auto st = stone_groupoid(symmetric_inverse_monoid(n));
    CHECK(st.groupoid.size() == n * n);
    CHECK(static_cast<int>(st.groupoid.identities().size()) == n);
    CHECK(is_principal(st.groupoid));
    CHECK(connected_components(st.groupoid).size() == 1);
  }
}

TEST_CASE("stone groupoid of labelled rook matrices is the labelled pair groupoid") {
  auto st = stone_groupoid(rook_matrices(2, cyclic_group(2)));
  CHECK(st.groupoid.size() == 8);
  CHECK(st.groupoid.identities().size() == 2);
  for (int e : st.groupoid.identities()) CHECK(local_group(st.groupoid, e).n == 2);
}

TEST_CASE("u-sets") {
  auto s = symmetric_inverse_monoid(2);
  CHECK(u_set(s, s.zero()).generators.empty());
  auto u = u_set(s, named(s, "[0>1;1>0]"));
  std::vector<int> expect{named(s, "[0>1]"), named(s, "[1>0]")};
  std::sort(expect.begin(), expect.end());
  CHECK(u.generators == expect);
}

TEST_CASE("u-set calculus") {
  for (const auto& key : {"I_2", "GZ(Z2)", "Rook(2,Z2)"}) {
    auto s = make_semigroup(key);
    auto st = stone_groupoid(s);
    auto realize = [&](int a) {
      std::vector<int> v;
      for (int g : u_set(s, a).generators) v.push_back(st.filter_of_atom[g]);
      std::sort(v.begin(), v.end());
      return v;
    };
    for (int a = 0; a < s.size(); ++a) {
      CHECK(u_set(s, a).generators.empty() == (a == s.zero()));
      CHECK(subset_inv(st.groupoid, realize(a)) == realize(s.inv(a)));
      // idempotent exactly when every member filter is idempotent
      bool all_idem = true;
      for (int g : u_set(s, a).generators)
        if (!s.is_idempotent(g)) all_idem = false;
      CHECK(all_idem == s.is_idempotent(a));
      for (int b = 0; b < s.size(); ++b) {
        auto ra = realize(a), rb = realize(b);
        CHECK(subset_mul(st.groupoid, ra, rb) == realize(s.mul(a, b)));
        bool contained = std::includes(rb.begin(), rb.end(), ra.begin(), ra.end());
        CHECK(contained == s.leq(a, b));
      }
    }
  }
}

TEST_CASE("alpha is an isomorphism on the catalog") {
  for (const auto& [name, s] : acceptance_catalog()) {
    INFO(name);
    auto a = alpha(s);  // construction validates bijectivity and the laws
    CHECK(a.kbres.semi.size() == s.size());
    CHECK(a.map[s.zero()] == a.kbres.semi.zero());
  }
}

TEST_CASE("compatibility transfers along alpha") {
  auto s = symmetric_inverse_monoid(2);
  auto a = alpha(s);
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      CHECK(s.compatible(x, y) == a.kbres.semi.compatible(a.map[x], a.map[y]));
}

TEST_CASE("beta is an isomorphism for catalog groupoids") {
  for (const auto& key : groupoid_catalog_keys()) {
    INFO(key);
    auto g = make_groupoid(key);
    if (g.size() > 16) continue;  // the larger ones run in the acceptance suite
    auto b = beta(g);
    CHECK(b.stone.groupoid.size() == g.size());
    for (int e : g.identities())
      CHECK(b.stone.groupoid.is_identity(b.map[e]));
  }
}

TEST_CASE("morphism classes") {
  auto i2 = symmetric_inverse_monoid(2);
  CHECK(is_callitic(SemigroupMorphism::identity(i2)));

  auto prod = direct_product(i2, i2);
  auto proj = projection_first(i2, prod);
  CHECK(is_proper_morphism(proj));
  CHECK(is_weakly_meet_preserving(proj));
  CHECK(is_callitic(proj));

  // embedding I_1 -> I_2 onto a corner is weakly meet preserving but not proper
  auto i1 = symmetric_inverse_monoid(1);
  std::vector<int> emb(i1.size());
  emb[i1.zero()] = i2.zero();
  for (int a = 0; a < i1.size(); ++a)
    if (a != i1.zero()) emb[a] = named(i2, "[0>0]");
  SemigroupMorphism embedding(i1, i2, emb);
  CHECK_FALSE(is_proper_morphism(embedding));
  CHECK(is_weakly_meet_preserving(embedding));
  CHECK_FALSE(is_callitic(embedding));

  // collapsing the group of GZ(Z2) onto I_1 is proper but not weakly meet preserving
  auto gz = group_with_zero(cyclic_group(2));
  std::vector<int> collapse(gz.size());
  for (int a = 0; a < gz.size(); ++a)
    collapse[a] = a == gz.zero() ? i1.zero() : i1.monoid_identity().value();
  SemigroupMorphism cmor(gz, i1, collapse);
  CHECK(is_proper_morphism(cmor));
  CHECK_FALSE(is_weakly_meet_preserving(cmor));
}

TEST_CASE("non-morphisms are rejected with a witness") {
  auto i2 = symmetric_inverse_monoid(2);
  std::vector<int> bad(i2.size(), named(i2, "[0>0]"));
  CHECK_THROWS_AS(SemigroupMorphism(i2, i2, bad), std::invalid_argument);
}

TEST_CASE("dual of the identity is the identity functor") {
  auto i2 = symmetric_inverse_monoid(2);
  auto dual = dual_morphism(SemigroupMorphism::identity(i2));
  for (int i = 0; i < dual.stone_dst.groupoid.size(); ++i) CHECK(dual.functor(i) == i);
}

TEST_CASE("dual of the projection embeds one component") {
  auto i2 = symmetric_inverse_monoid(2);
  auto prod = direct_product(i2, i2);
  auto proj = projection_first(i2, prod);
  auto dual = dual_morphism(proj);
  // G(I_2 x I_2) has two components; the functor lands inside one of them
  CHECK(connected_components(dual.stone_src.groupoid).size() == 2);
  CHECK(is_covering_functor(dual.functor));
  std::vector<int> image;
  for (int i = 0; i < dual.stone_dst.groupoid.size(); ++i) image.push_back(dual.functor(i));
  std::sort(image.begin(), image.end());
  auto comps = connected_components(dual.stone_src.groupoid);
  bool inside_one = false;
  for (const auto& comp : comps) {
    auto sorted = comp;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == image) inside_one = true;
  }
  CHECK(inside_one);
}

TEST_CASE("dual of a component inclusion is the projection up to alpha") {
  auto g = pair_groupoid(2);
  auto uni = make_groupoid("Pair(2)+Pair(1)");
  std::vector<int> incl(g.size());
  for (int i = 0; i < g.size(); ++i) incl[i] = i;
  GroupoidFunctor inclusion(g, uni, incl);
  auto dual = dual_functor(inclusion);  // KB(uni) -> KB(Pair(2))
  CHECK(is_callitic(dual.morphism));
  // it restricts bisections to the included component
  for (int u = 0; u < dual.kb_dst.semi.size(); ++u) {
    std::vector<int> expect;
    for (int x : dual.kb_dst.bisections[u])
      if (x < g.size()) expect.push_back(x);
    CHECK(dual.kb_src.bisections[dual.morphism(u)] == expect);
  }
}

TEST_CASE("morphism round trip through both dualities") {
  auto i2 = symmetric_inverse_monoid(2);
  auto prod = direct_product(i2, i2);
  auto proj = projection_first(i2, prod);

  auto dual = dual_morphism(proj);               // G(I_2) -> G(I_2 x I_2)
  auto back = dual_functor(dual.functor);        // KB(G(I_2 x I_2)) -> KB(G(I_2))
  auto a_src = alpha(prod);
  auto a_dst = alpha(i2);
  for (int x = 0; x < prod.size(); ++x)
    CHECK(back.morphism(a_src.map[x]) == a_dst.map[proj(x)]);
}

TEST_CASE("functor round trip through both dualities") {
  auto g = pair_groupoid(2);
  auto uni = make_groupoid("Pair(2)+Pair(1)");
  std::vector<int> incl(g.size());
  for (int i = 0; i < g.size(); ++i) incl[i] = i;
  GroupoidFunctor inclusion(g, uni, incl);

  auto dual = dual_functor(inclusion);           // KB(uni) -> KB(g)
  auto back = dual_morphism(dual.morphism);      // G(KB(g)) -> G(KB(uni))
  auto b_src = beta(g);
  auto b_dst = beta(uni);
  for (int x = 0; x < g.size(); ++x)
    CHECK(back.functor(b_src.map[x]) == b_dst.map[inclusion(x)]);
}

TEST_CASE("dualization reverses composition") {
  auto i2 = symmetric_inverse_monoid(2);
  auto prod = direct_product(i2, i2);
  auto proj = projection_first(i2, prod);
  // conjugation by the transposition, an automorphism of I_2
  int tau = named(i2, "[0>1;1>0]");
  std::vector<int> conj(i2.size());
  for (int a = 0; a < i2.size(); ++a) conj[a] = i2.mul(i2.mul(tau, a), i2.inv(tau));
  SemigroupMorphism psi(i2, i2, conj);
  REQUIRE(is_callitic(psi));

  std::vector<int> comp(prod.size());
  for (int x = 0; x < prod.size(); ++x) comp[x] = psi(proj(x));
  SemigroupMorphism psitheta(prod, i2, comp);

  auto d_all = dual_morphism(psitheta);
  auto d_theta = dual_morphism(proj);
  auto d_psi = dual_morphism(psi);
  for (int i = 0; i < d_all.stone_dst.groupoid.size(); ++i)
    CHECK(d_all.functor(i) == d_theta.functor(d_psi.functor(i)));
}

TEST_CASE("ideal congruences and quotients") {
  auto i2 = symmetric_inverse_monoid(2);
  auto prod = direct_product(i2, i2);

  // trivial ideal: the quotient is the host
  auto trivial = ideal_congruence(prod, {prod.zero()});
  CHECK(trivial.quotient.size() == prod.size());

  // the left factor: quotient is I_2 again
  std::vector<int> left;
  for (int a = 0; a < i2.size(); ++a) left.push_back(a * i2.size() + i2.zero());
  auto cong = ideal_congruence(prod, left);
  CHECK(cong.quotient.size() == i2.size());
  CHECK(is_boolean(cong.quotient).ok());
  CHECK(is_callitic(cong.natural));
  // classes are fibers of the second projection
  for (int a = 0; a < i2.size(); ++a)
    for (int b = 0; b < i2.size(); ++b)
      for (int a2 = 0; a2 < i2.size(); ++a2)
        CHECK(cong.class_of[a * i2.size() + b] == cong.class_of[a2 * i2.size() + b]);

  // the whole semigroup: quotient collapses to zero
  std::vector<int> everything(prod.size());
  for (int x = 0; x < prod.size(); ++x) everything[x] = x;
  CHECK(ideal_congruence(prod, everything).quotient.size() == 1);

  CHECK(is_additive_ideal(prod, everything));
  CHECK_THROWS_AS(ideal_congruence(prod, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("weakly meet preserving if and only if ideal induced, on the catalog") {
  auto i2 = symmetric_inverse_monoid(2);
  auto prod = direct_product(i2, i2);

  // direction 1: every ideal quotient is weakly meet preserving (and callitic)
  for (const auto& ideal : additive_ideals(prod)) {
    auto cong = ideal_congruence(prod, ideal);
    CHECK(is_weakly_meet_preserving(cong.natural));
    CHECK(is_callitic(cong.natural));
  }

  // direction 2: a weakly-meet-preserving morphism has the congruence of its kernel
  auto proj = projection_first(i2, prod);
  REQUIRE(is_weakly_meet_preserving(proj));
  std::vector<int> kernel;
  for (int x = 0; x < prod.size(); ++x)
    if (proj(x) == i2.zero()) kernel.push_back(x);
  auto cong = ideal_congruence(prod, kernel);
  for (int x = 0; x < prod.size(); ++x)
    for (int y = 0; y < prod.size(); ++y)
      CHECK((proj(x) == proj(y)) == (cong.class_of[x] == cong.class_of[y]));

  // and a non-weakly-meet-preserving morphism has a congruence that is not
  // induced by its kernel
  auto gz = group_with_zero(cyclic_group(2));
  auto i1 = symmetric_inverse_monoid(1);
  std::vector<int> collapse(gz.size());
  for (int a = 0; a < gz.size(); ++a)
    collapse[a] = a == gz.zero() ? i1.zero() : i1.monoid_identity().value();
  SemigroupMorphism cmor(gz, i1, collapse);
  REQUIRE_FALSE(is_weakly_meet_preserving(cmor));
  std::vector<int> ckernel{gz.zero()};
  auto ccong = ideal_congruence(gz, ckernel);
  bool same = true;
  for (int x = 0; x < gz.size(); ++x)
    for (int y = 0; y < gz.size(); ++y)
      if ((cmor(x) == cmor(y)) != (ccong.class_of[x] == ccong.class_of[y])) same = false;
  CHECK_FALSE(same);
}

TEST_CASE("separation witnesses") {
  auto s = symmetric_inverse_monoid(2);
  auto w = separation_witness(s, named(s, "[0>1]"), named(s, "[0>1;1>0]"));
  CHECK(s.leq(w.generator, named(s, "[0>1;1>0]")));
  CHECK_FALSE(s.leq(w.generator, named(s, "[0>1]")));

  auto atom = separation_witness(s, s.zero(), named(s, "[1>0]"));
  CHECK(atom.generator == named(s, "[1>0]"));

  auto sep = separation_witness(s, named(s, "[1>1]"), named(s, "[0>0]"));
  CHECK(sep.generator == named(s, "[0>0]"));

  CHECK_THROWS_AS(separation_witness(s, named(s, "[0>1;1>0]"), named(s, "[0>1]")),
                  std::invalid_argument);
}

TEST_CASE("section-8 correspondences on designed contrasts") {
  auto report = verify_correspondences(symmetric_inverse_monoid(3));
  CHECK(report.all_hold());
  for (const auto& item : report.items)
    if (item.lhs == "fundamental") {
      CHECK(item.lhs_value);
      CHECK(item.rhs_value);
    }

  auto rook = verify_correspondences(rook_matrices(2, cyclic_group(2)));
  CHECK(rook.all_hold());
  for (const auto& item : rook.items)
    if (item.lhs == "fundamental") {
      CHECK_FALSE(item.lhs_value);
      CHECK_FALSE(item.rhs_value);
    }

  auto prod = verify_correspondences(make_semigroup("I_2xI_2"));
  CHECK(prod.all_hold());
  for (const auto& item : prod.items)
    if (item.lhs == "0-simplifying") {
      CHECK_FALSE(item.lhs_value);
      CHECK_FALSE(item.rhs_value);
    }
}
