#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "ppfun/automorphism.hpp"
#include "ppfun/construct.hpp"
#include "ppfun/error.hpp"
#include "ppfun/group.hpp"
#include "ppfun/group_io.hpp"
#include "ppfun/numutil.hpp"

using namespace ppfun;

namespace {

std::multiset<long> class_sizes(const PermGroup& G) {
  std::multiset<long> s;
  for (const auto& c : conjugacy_classes(G)) s.insert(c.size);
  return s;
}

bool isomorphic(const PermGroup& A, const PermGroup& B) {
  return !isomorphisms(A, full_subgroup(B)).empty();
}

AutMap order3_automorphism_of_v4(const PermGroup& V) {
  AutGroupData A = automorphism_group(V);
  for (long i = 0; i < A.aut_order(); ++i)
    if (A.aut.element_order(static_cast<int>(i)) == 3) return A.aut_map(static_cast<int>(i));
  FAIL("V4 has an order-3 automorphism");
  return AutMap::identity(V);
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  Perm p = Perm::from_cycles(4, "(1 2)(3 4)");
  CHECK(p.cycle_string() == "(1 2)(3 4)");
  CHECK(p.order() == 2);
  CHECK(Perm::from_cycles(5, "()").is_identity());
  CHECK(Perm::from_cycles(3, "(1 2 3)").power(3).is_identity());
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), error);
}

TEST_CASE("closure from generators") {
  PermGroup s3 = PermGroup::from_generators(3, {Perm::from_cycles(3, "(1 2)"), Perm::from_cycles(3, "(1 2 3)")});
  CHECK(s3.order() == 6);
  PermGroup triv = PermGroup::from_generators(1, {});
  CHECK(triv.order() == 1);
  PermGroup v4 = PermGroup::from_generators(4, {Perm::from_cycles(4, "(1 2)(3 4)"), Perm::from_cycles(4, "(1 3)(2 4)")});
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  CHECK_THROWS_AS(PermGroup::from_generators(5, {Perm::from_cycles(5, "(1 2 3 4 5)")}, 3), error);
}

TEST_CASE("element arithmetic against perms") {
  PermGroup G = PermGroup::named("S4");
  for (int a = 0; a < G.order(); a += 5)
    for (int b = 0; b < G.order(); b += 7) {
      CHECK(G.element(G.mul(a, b)) == G.element(a) * G.element(b));
    }
  for (int a = 0; a < G.order(); ++a) {
    CHECK(G.mul(a, G.inv(a)) == G.identity());
    // word reconstruction
    auto [par, gi] = G.word_step(a);
    if (par >= 0) CHECK(G.element(a) == G.element(par) * G.generators()[gi]);
  }
}

TEST_CASE("named groups") {
  CHECK(PermGroup::named("S4").order() == 24);
  CHECK(PermGroup::named("C1").order() == 1);
  CHECK(PermGroup::named("A5").order() == 60);
  CHECK(PermGroup::named("D8").order() == 8);
  CHECK(PermGroup::named("E27").order() == 27);
  CHECK(PermGroup::named("C2xC3").order() == 6);
  PermGroup q8 = PermGroup::named("Q8");
  CHECK(q8.order() == 8);
  int involutions = 0;
  for (int x = 0; x < q8.order(); ++x)
    if (q8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(!isomorphic(q8, PermGroup::named("D8")));
  CHECK_THROWS_AS(PermGroup::named("X9"), error);
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(PermGroup::named("S4")) == std::multiset<long>{1, 3, 6, 6, 8});
  CHECK(class_sizes(PermGroup::named("C1")) == std::multiset<long>{1});
  CHECK(class_sizes(PermGroup::named("A4")) == std::multiset<long>{1, 3, 4, 4});
  for (const char* name : {"S4", "A5", "Q8", "D8", "C12"}) {
    PermGroup G = PermGroup::named(name);
    long total = 0;
    for (const auto& c : conjugacy_classes(G)) {
      total += c.size;
      CHECK(G.order() % c.size == 0);
      CHECK(c.representative == c.members.front());
      // witness conjugator exists for a sample member
      int y = c.members.back();
      bool witnessed = false;
      for (int g = 0; g < G.order() && !witnessed; ++g) witnessed = G.conj(g, c.representative) == y;
      CHECK(witnessed);
    }
    CHECK(total == G.order());
  }
}

TEST_CASE("centralizer, normalizer, center") {
  PermGroup s4 = PermGroup::named("S4");
  int t = s4.index_of(Perm::from_cycles(4, "(1 2)"));
  REQUIRE(t >= 0);
  CHECK(centralizer(s4, std::vector<int>{t}).order() == 4);
  CHECK(center(PermGroup::named("Q8")).order() == 2);
  CHECK(centralizer(s4, std::vector<int>{s4.identity()}).order() == 24);
  // normalizer of a Sylow 2 in S4 is itself
  Subgroup syl = sylow(s4, 2);
  CHECK(normalizer(s4, syl).order() == 8);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow(PermGroup::named("S4"), 2).order() == 8);
  CHECK(sylow(PermGroup::named("S3"), 5).order() == 1);
  PermGroup a4 = PermGroup::named("A4");
  Subgroup s = sylow(a4, 2);
  CHECK(s.order() == 4);
  CHECK(is_normal(a4, s));
  for (const char* name : {"S4", "A5", "C12", "D8"}) {
    PermGroup G = PermGroup::named(name);
    for (auto [p, e] : factorize(G.order())) CHECK(sylow(G, p).order() == p_part(G.order(), p));
  }
}

TEST_CASE("p-part / p'-part decomposition") {
  PermGroup c6 = PermGroup::named("C6");
  int g = -1;
  for (int x = 0; x < 6; ++x)
    if (c6.element_order(x) == 6) g = x;
  auto [g3, g2] = pp_decomposition(c6, g, 3);
  CHECK(c6.element_order(g3) == 3);
  CHECK(c6.element_order(g2) == 2);
  CHECK(c6.mul(g3, g2) == g);
  auto [i1, i2] = pp_decomposition(c6, c6.identity(), 5);
  CHECK(i1 == c6.identity());
  CHECK(i2 == c6.identity());
  for (const char* name : {"S4", "A5", "C12"}) {
    PermGroup G = PermGroup::named(name);
    for (long p : {2L, 3L, 5L})
      for (int x = 0; x < G.order(); x += 3) {
        auto [xp, xq] = pp_decomposition(G, x, p);
        CHECK(G.mul(xp, xq) == x);
        CHECK(G.mul(xp, xq) == G.mul(xq, xp));
        CHECK(p_prime_part(G.element_order(xp), p) == 1);
        CHECK(G.element_order(xq) % p != 0);
        CHECK(static_cast<long>(G.element_order(xp)) * G.element_order(xq) == G.element_order(x));
      }
  }
}

TEST_CASE("p-subgroups up to conjugacy") {
  PermGroup a4 = PermGroup::named("A4");
  auto reps = p_subgroups_up_to_conjugacy(a4, 2);
  CHECK(reps.size() == 3);  // 1, C2, V4
  CHECK(p_subgroups_up_to_conjugacy(a4, 7).size() == 1);

  for (const char* name : {"S4", "A4", "D8", "Q8", "C12"}) {
    PermGroup G = PermGroup::named(name);
    for (long p : {2L, 3L}) {
      auto fast = p_subgroups_up_to_conjugacy(G, p);
      // brute-force oracle: all subgroups of a Sylow p-subgroup, fused under G
      PermGroup P = sylow(G, p).as_group();
      std::vector<std::vector<int>> subs;
      for (const auto& mem_in_p : brute::all_subgroups(P)) {
        std::vector<int> mem;
        for (int i : mem_in_p) mem.push_back(G.index_of(P.element(i)));
        std::sort(mem.begin(), mem.end());
        subs.push_back(std::move(mem));
      }
      auto slow = brute::fuse_subgroups(G, subs);
      std::set<std::vector<int>> fast_set, slow_set(slow.begin(), slow.end());
      for (const auto& s : fast) fast_set.insert(s.members());
      CHECK(fast_set == slow_set);
    }
  }
}

TEST_CASE("isomorphism search") {
  PermGroup c2 = PermGroup::named("C2");
  PermGroup s4 = PermGroup::named("S4");
  int t = s4.index_of(Perm::from_cycles(4, "(1 2)"));
  Subgroup q(s4, {s4.identity(), t});
  CHECK(isomorphisms(c2, q).size() == 1);

  PermGroup v4 = PermGroup::named("V4");
  CHECK(isomorphisms(v4, full_subgroup(v4)).size() == 6);
  PermGroup c4 = PermGroup::named("C4");
  CHECK(isomorphisms(c4, full_subgroup(v4)).empty());

  // every returned map is a genuine isomorphism
  PermGroup a4 = PermGroup::named("A4");
  Subgroup syl = sylow(a4, 2);
  auto isos = isomorphisms(v4, syl);
  CHECK(isos.size() == 6);
  for (const auto& e : isos) {
    for (int x = 0; x < v4.order(); ++x)
      for (int y = 0; y < v4.order(); ++y) CHECK(e.apply(v4.mul(x, y)) == a4.mul(e.apply(x), e.apply(y)));
  }
}

TEST_CASE("automorphism groups") {
  AutGroupData s3 = automorphism_group(PermGroup::named("S3"));
  CHECK(s3.aut_order() == 6);
  CHECK(s3.out_order() == 1);

  AutGroupData c1 = automorphism_group(PermGroup::named("C1"));
  CHECK(c1.aut_order() == 1);

  AutGroupData a4 = automorphism_group(PermGroup::named("A4"));
  CHECK(a4.aut_order() == 24);
  CHECK(a4.out_order() == 2);

  for (const char* name : {"S3", "A4", "Q8", "D8", "C6"}) {
    PermGroup G = PermGroup::named(name);
    AutGroupData A = automorphism_group(G);
    CHECK(A.aut_order() == A.inn_order * A.out_order());
    CHECK(A.inn_order == G.order() / center(G).order());
    // out composition table is a group table
    long no = A.out_order();
    for (long i = 0; i < no; ++i) {
      CHECK(A.out_mul[0][i] == i);
      CHECK(A.out_mul[i][A.out_inv[i]] == 0);
    }
  }
  CHECK_THROWS_AS(automorphism_group(PermGroup::named("S5"), 100), error);
}

TEST_CASE("semidirect products") {
  PermGroup v4 = PermGroup::named("V4");
  SemidirectProduct sp = semidirect(v4, order3_automorphism_of_v4(v4));
  CHECK(sp.group.order() == 12);
  CHECK(isomorphic(sp.group, PermGroup::named("A4")));

  PermGroup d8 = PermGroup::named("D8");
  SemidirectProduct trivial = semidirect(d8, AutMap::identity(d8));
  CHECK(trivial.group.order() == 8);
  CHECK(isomorphic(trivial.group, d8));

  PermGroup c3 = PermGroup::named("C3");
  AutMap inversion(c3, {0, 2, 1});  // elements sorted: id, (123), (132)
  REQUIRE(inversion.is_automorphism());
  SemidirectProduct s3 = semidirect(c3, inversion);
  CHECK(s3.group.order() == 6);
  CHECK(isomorphic(s3.group, PermGroup::named("S3")));

  // embeddings are homomorphisms landing where they should
  const Embedding& e = sp.embed_base;
  for (int x = 0; x < v4.order(); ++x)
    for (int y = 0; y < v4.order(); ++y) CHECK(e.apply(v4.mul(x, y)) == sp.group.mul(e.apply(x), e.apply(y)));
  int u = sp.u_element();
  CHECK(sp.group.element_order(u) == 3);
  // conjugation by u realizes the automorphism on the embedded base
  AutMap back = e.transported_conjugation(u);
  CHECK(back == order3_automorphism_of_v4(v4));
}

TEST_CASE("coset action quotient") {
  PermGroup s4 = PermGroup::named("S4");
  Subgroup v4 = sylow(PermGroup::named("A4"), 2);
  // V4 viewed inside S4
  std::vector<int> mem;
  for (int i : v4.members()) mem.push_back(s4.index_of(v4.parent().element(i)));
  CosetAction q = coset_action(s4, Subgroup(s4, mem));
  CHECK(q.image.order() == 6);
  CHECK(isomorphic(q.image, PermGroup::named("S3")));
  // elt_map is a homomorphism
  for (int a = 0; a < s4.order(); a += 3)
    for (int b = 0; b < s4.order(); b += 5) CHECK(q.elt_map[s4.mul(a, b)] == q.image.mul(q.elt_map[a], q.elt_map[b]));
}

TEST_CASE("inner automorphism law for faithful semidirect groups") {
  // Automorphisms restricting to the identity on the normal Sylow subgroup P
  // are exactly the conjugations by elements of Z(P).
  struct Case {
    const char* name;
    long p;
  };
  for (Case c : {Case{"A4", 2}, Case{"S3", 3}, Case{"S4", 0}}) {
    if (c.p == 0) continue;  // placeholder keeps list extensible
    PermGroup G = PermGroup::named(c.name);
    Subgroup P = sylow(G, c.p);
    REQUIRE(is_normal(G, P));
    AutGroupData A = automorphism_group(G);
    std::set<std::vector<int>> fixing, conj_by_zp;
    for (long i = 0; i < A.aut_order(); ++i) {
      AutMap a = A.aut_map(static_cast<int>(i));
      bool fixes = true;
      for (int x : P.members())
        if (a.apply(x) != x) fixes = false;
      if (fixes) fixing.insert(a.images());
    }
    PermGroup Pg = P.as_group();
    Subgroup ZP = center(Pg);
    for (int w : ZP.members()) {
      int wg = G.index_of(Pg.element(w));
      conj_by_zp.insert(AutMap::conjugation(G, wg).images());
    }
    CHECK(fixing == conj_by_zp);
  }
}

TEST_CASE("group definition text format") {
  PermGroup g = parse_group_text("# a comment\ndegree 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n");
  CHECK(g.order() == 4);
  CHECK(parse_group_text("name S4").order() == 24);
  PermGroup sd = parse_group_text("semidirect base=C3 auto=0,2,1");
  CHECK(sd.order() == 6);
  CHECK(isomorphic(sd, PermGroup::named("S3")));
  CHECK_THROWS_AS(parse_group_text("gen (1 2)"), error);
  CHECK_THROWS_AS(parse_group_text("bogus directive"), error);
}
