#include <map>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "ppfun/construct.hpp"
#include "ppfun/ddelta.hpp"
#include "ppfun/error.hpp"
#include "ppfun/isotype.hpp"
#include "ppfun/numutil.hpp"
#include "ppfun/pgroups.hpp"

using namespace ppfun;

namespace {

AutMap aut_of_order(const PermGroup& G, int n) {
  AutGroupData A = automorphism_group(G);
  for (long i = 0; i < A.aut_order(); ++i)
    if (A.aut.element_order(static_cast<int>(i)) == n) return A.aut_map(static_cast<int>(i));
  FAIL("no automorphism of requested order");
  return AutMap::identity(G);
}

// Brute-force restatement of the cyclic-faithful criterion: scans all
// subgroups for a normal Sylow p-subgroup and a cyclic complement acting
// faithfully. Only for small G.
bool brute_nonvanishing(const PermGroup& G, long p) {
  Subgroup P = sylow(G, p);
  if (!is_normal(G, P)) return false;
  for (const auto& mem : brute::all_subgroups(G)) {
    Subgroup K(G, mem);
    if (K.order() != G.order() / P.order()) continue;
    if (intersect(K, P).order() != 1) continue;
    PermGroup Kg = K.as_group();
    if (!is_cyclic(Kg)) continue;
    if (intersect(K, centralizer(G, P.members())).order() == 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("p-group catalogue is complete and irredundant") {
  auto check = [](long p, long max_order, const std::map<long, int>& expected_counts) {
    auto cat = pgroup_catalogue(p, max_order);
    std::map<long, int> counts;
    for (const auto& e : cat) {
      CHECK(e.group.is_pgroup(p));
      ++counts[e.group.order()];
    }
    for (auto [ord, cnt] : expected_counts) CHECK(counts[ord] == cnt);
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = i + 1; j < cat.size(); ++j)
        CHECK(isomorphisms(cat[i].group, full_subgroup(cat[j].group)).empty());
  };
  check(2, 16, {{1, 1}, {2, 1}, {4, 2}, {8, 5}, {16, 14}});
  check(3, 27, {{1, 1}, {3, 1}, {9, 2}, {27, 5}});
  CHECK_THROWS_AS(pgroup_catalogue(2, 32), error);
  CHECK_THROWS_AS(pgroup_catalogue(5, 25), error);
  CHECK(pgroup_catalogue(5, 5).size() == 2);
}

TEST_CASE("iso labels") {
  IsoRegistry reg;
  CHECK(reg.label(PermGroup::named("D8")) == "D8");
  CHECK(reg.label(PermGroup::named("Q8")) == "Q8");
  CHECK(reg.label(PermGroup::named("V4")) == "V4");
  CHECK(reg.label(PermGroup::named("C6")) == "C6");
  // an A4 Sylow 2 is V4 no matter how it is presented
  PermGroup a4 = PermGroup::named("A4");
  CHECK(reg.label(sylow(a4, 2).as_group()) == "V4");
  // abelian invariants: C2 x C4 in any order of factors
  CHECK(reg.label(PermGroup::named("C2xC4")) == reg.label(PermGroup::named("C4xC2")));
  // distinct nonabelian types of order 16 get distinct labels
  std::set<std::string> labels;
  for (const auto& e : pgroup_catalogue(2, 16)) labels.insert(reg.label(e.group));
  CHECK(labels.size() == 23);
}

TEST_CASE("is_ddelta_pair") {
  PermGroup v4 = PermGroup::named("V4");
  CHECK(is_ddelta_pair(v4, aut_of_order(v4, 3), 2));
  PermGroup c4 = PermGroup::named("C4");
  CHECK(is_ddelta_pair(c4, AutMap::identity(c4), 2));
  CHECK_FALSE(is_ddelta_pair(c4, aut_of_order(c4, 2), 2));  // inversion has order 2 = p
  CHECK_FALSE(is_ddelta_pair(PermGroup::named("S3"), AutMap::identity(PermGroup::named("S3")), 2));
}

TEST_CASE("pair enumeration matches the spec counts") {
  auto pairs2 = enumerate_ddelta_pairs(2, 4);
  REQUIRE(pairs2.size() == 5);
  // (1,1), (C2,1), (C4,1), (V4,1), (V4,u3)
  std::multiset<std::pair<long, int>> shapes;
  for (const auto& pr : pairs2) {
    CHECK(is_ddelta_pair(pr.L, pr.u, 2));
    shapes.insert({pr.L.order(), pr.u.order()});
  }
  CHECK(shapes == std::multiset<std::pair<long, int>>{{1, 1}, {2, 1}, {4, 1}, {4, 1}, {4, 3}});

  auto pairs3 = enumerate_ddelta_pairs(3, 3);
  REQUIRE(pairs3.size() == 3);
  std::multiset<std::pair<long, int>> shapes3;
  for (const auto& pr : pairs3) shapes3.insert({pr.L.order(), pr.u.order()});
  CHECK(shapes3 == std::multiset<std::pair<long, int>>{{1, 1}, {3, 1}, {3, 2}});

  CHECK(enumerate_ddelta_pairs(2, 1).size() == 1);

  // irredundancy via the equivalence test itself
  for (size_t i = 0; i < pairs2.size(); ++i)
    for (size_t j = i + 1; j < pairs2.size(); ++j) CHECK_FALSE(pairs_isomorphic(pairs2[i], pairs2[j]));
}

TEST_CASE("pair automorphism groups") {
  // (V4, u3): L<u> = A4, Out(V4,u3) trivial
  PermGroup v4 = PermGroup::named("V4");
  DDeltaPair p{v4, aut_of_order(v4, 3), 2, "V4:u3"};
  PairAutData D = pair_aut(p);
  CHECK(D.product.group.order() == 12);
  CHECK(D.aut.aut_order() == 24);
  CHECK(D.out_pair_order == 1);
  CHECK(D.aut_pair_order == 12);

  // (L,1): Out(L,1) = Out(L)
  PermGroup d8 = PermGroup::named("D8");
  DDeltaPair pd{d8, AutMap::identity(d8), 2, "D8"};
  PairAutData Dd = pair_aut(pd);
  AutGroupData Ad = automorphism_group(d8);
  CHECK(Dd.out_pair_order == Ad.out_order());
  CHECK(Dd.aut_pair_order == Ad.aut_order());

  // (C3, inversion): L<u> = S3, Out trivial
  PermGroup c3 = PermGroup::named("C3");
  DDeltaPair pc{c3, aut_of_order(c3, 2), 3, "C3:u2"};
  PairAutData Dc = pair_aut(pc);
  CHECK(Dc.product.group.order() == 6);
  CHECK(Dc.out_pair_order == 1);

  // Out(L,u) composition table is a group table
  for (const PairAutData& D2 : {D, Dd, Dc}) {
    long n = D2.out_pair_order;
    for (long i = 0; i < n; ++i) {
      CHECK(D2.out_mul[0][i] == i);
      CHECK(D2.out_mul[i][D2.out_inv[i]] == 0);
    }
  }
}

TEST_CASE("essential support classification") {
  PermGroup s3 = PermGroup::named("S3");
  auto r = essential_support(s3, 3);
  REQUIRE(r.nonvanishing);
  CHECK(r.k_order == 2);
  CHECK(r.L->order() == 3);
  CHECK(r.u->order() == 2);
  // the witness reconstructs G
  SemidirectProduct sp = semidirect(*r.L, *r.u);
  CHECK(!isomorphisms(sp.group, full_subgroup(s3)).empty());

  auto r2 = essential_support(PermGroup::named("C6"), 3);
  CHECK_FALSE(r2.nonvanishing);
  CHECK(r2.reason == VanishReason::k_not_faithful);

  auto r3 = essential_support(s3, 2);
  CHECK_FALSE(r3.nonvanishing);
  CHECK(r3.reason == VanishReason::no_normal_sylow_complement_form);

  auto r4 = essential_support(e9_semidirect_v4(), 3);
  CHECK_FALSE(r4.nonvanishing);
  CHECK(r4.reason == VanishReason::k_not_cyclic);

  // non-elementary complement: S3 at a prime not dividing its order
  auto r5 = essential_support(s3, 5);
  CHECK_FALSE(r5.nonvanishing);
  CHECK(r5.reason == VanishReason::k_not_elementary_or_split_failure);

  auto r6 = essential_support(e9_semidirect_c2(), 3);
  REQUIRE(r6.nonvanishing);
  CHECK(r6.k_order == 2);
  CHECK(r6.L->order() == 9);
}

TEST_CASE("essential support agrees with brute force on small groups") {
  for (const auto& e : small_group_catalogue()) {
    if (e.group.order() > 16) continue;  // brute subgroup scan gets slow
    for (long p : {2L, 3L, 5L}) {
      auto rep = essential_support(e.group, p);
      bool oracle = brute_nonvanishing(e.group, p);
      CHECK_MESSAGE(rep.nonvanishing == oracle, e.name, " @ p=", p);
      if (rep.nonvanishing) {
        SemidirectProduct sp = semidirect(*rep.L, *rep.u);
        CHECK(!isomorphisms(sp.group, full_subgroup(e.group)).empty());
      }
    }
  }
}
