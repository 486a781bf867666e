#include <numeric>

#include "doctest.h"
#include "ppfun/essential.hpp"
#include "ppfun/pgroups.hpp"

using namespace ppfun;

namespace {

template <class F>
std::vector<typename F::Elt> rewrite_of(const F& f, const RBarQuotient<F>& R, long chi) {
  std::vector<typename F::Elt> v(R.rank);
  for (long t = 0; t < R.rank; ++t) v[t] = R.rewrite(chi, t);
  return v;
}

AutMap aut_of_order(const PermGroup& G, int n) {
  AutGroupData A = automorphism_group(G);
  for (long i = 0; i < A.aut_order(); ++i)
    if (A.aut.element_order(static_cast<int>(i)) == n) return A.aut_map(static_cast<int>(i));
  FAIL("no automorphism of requested order");
  return AutMap::identity(G);
}

}  // namespace

TEST_CASE("rbar ranks and rewrite") {
  QField Q;
  auto r1 = rbar(Q, 1, 0);
  CHECK(r1.rank == 1);

  GF f2(2, 1);
  auto r3 = rbar(f2, 3, 2);
  CHECK(r3.rank == 2);
  CHECK(r3.basis == std::vector<long>{1, 2});
  // single relation chi^0 + chi^1 + chi^2 = 0: chi-bar^0 = chi-bar^1 + chi-bar^2 over GF(2)
  CHECK(rewrite_of(f2, r3, 0) == std::vector<GF::Elt>{1, 1});

  GF f3(3, 1);
  auto r4 = rbar(f3, 4, 3);
  CHECK(r4.rank == 2);
  CHECK(r4.basis == std::vector<long>{2, 3});
  // chi^0 = -chi^2, chi^1 = -chi^3
  CHECK(rewrite_of(f3, r4, 0) == std::vector<GF::Elt>{2, 0});
  CHECK(rewrite_of(f3, r4, 1) == std::vector<GF::Elt>{0, 2});

  CHECK_THROWS_AS(rbar(f2, 4, 2), error);
}

TEST_CASE("rbar rank equals totient for n <= 30 over all valid fields") {
  QField Q;
  for (long n = 1; n <= 30; ++n) {
    CHECK(rbar(Q, n, 0).rank == totient(n));
    for (long p : {2L, 3L, 5L, 7L}) {
      if (n % p == 0) continue;
      GF f(p, 1);
      CHECK(rbar(f, n, p).rank == totient(n));
    }
    // rank of the relation span is the same over Q and over GF(p):
    // all SNF divisors of the relation lattice are 1
    auto rel = rbar_relations(n);
    if (!rel.empty()) {
      ZMat A;
      for (auto& row : rel) {
        std::vector<mpz_class> r(row.begin(), row.end());
        A.push_back(std::move(r));
      }
      auto divs = smith_normal_form(A);
      long rk = 0;
      for (auto& d : divs)
        if (d != 0) {
          CHECK(d == 1);
          ++rk;
        }
      CHECK(rk == n - totient(n));
    }
  }
}

TEST_CASE("essential algebra dimensions") {
  GF f4(2, 2);
  auto a4 = build_essential(f4, PermGroup::named("A4"), 2, 2);
  CHECK(a4.dimension == 4);
  CHECK(a4.n == 3);
  CHECK(a4.autG.out_order() == 2);

  GF f3(3, 1);
  auto s3 = build_essential(f3, PermGroup::named("S3"), 3, 3);
  CHECK(s3.dimension == 1);

  GF f2(2, 1);
  auto c2 = build_essential(f2, PermGroup::named("C2"), 2, 2);
  CHECK(c2.dimension == 1);

  CHECK_THROWS_AS(build_essential(f2, PermGroup::named("C6"), 3, 2), error);

  // char 0 gives the same dimensions
  QField Q;
  CHECK(build_essential(Q, PermGroup::named("A4"), 2, 0).dimension == 4);
  CHECK(build_essential(Q, PermGroup::named("S3"), 3, 0).dimension == 1);
}

TEST_CASE("out action respects character multiplication") {
  GF f4(2, 2);
  auto A = build_essential(f4, PermGroup::named("A4"), 2, 2);
  for (long c = 0; c < A.autG.out_order(); ++c) {
    long a = A.out_action[c];
    for (long i = 0; i < A.n; ++i)
      for (long j = 0; j < A.n; ++j) CHECK(((i + j) % A.n) * a % A.n == (i * a % A.n + j * a % A.n) % A.n);
  }
  // inner automorphisms act trivially on K-hat (G-hat = K-hat)
  const PermGroup& G = A.G;
  const Subgroup& P = *A.support.sylow_p;
  std::vector<int> kpow(A.n);
  kpow[0] = G.identity();
  for (long j = 1; j < A.n; ++j) kpow[j] = G.mul(kpow[j - 1], A.k_generator);
  for (int g = 0; g < G.order(); ++g) {
    int im = G.conj(g, A.k_generator);
    bool trivial = false;
    // i_g(k0) lies in the coset P k0
    trivial = P.contains(G.mul(im, G.inv(kpow[1])));
    CHECK(trivial);
  }
}

TEST_CASE("essential multiplication laws") {
  GF f4(2, 2);
  auto A = build_essential(f4, PermGroup::named("A4"), 2, 2);
  auto unit = A.unit(f4);
  long no = A.autG.out_order(), r = A.rbar.rank;

  // unit and associativity over all basis triples
  std::vector<EssentialAlgebra<GF>::Element> basis;
  for (long i = 0; i < no; ++i)
    for (long t = 0; t < r; ++t) basis.push_back(A.basis_element(f4, i, t));
  for (const auto& x : basis) {
    CHECK(ess_multiply(f4, A, unit, x) == x);
    CHECK(ess_multiply(f4, A, x, unit) == x);
  }
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        auto left = ess_multiply(f4, A, ess_multiply(f4, A, x, y), z);
        auto right = ess_multiply(f4, A, x, ess_multiply(f4, A, y, z));
        CHECK(left == right);
      }

  // (sigma ⋉ chi-bar^1)^2 = id ⋉ chi-bar^0 when sigma inverts K
  long sigma = -1;
  for (long c = 0; c < no; ++c)
    if (A.out_action[c] == 2) sigma = c;  // inversion mod 3
  REQUIRE(sigma >= 0);
  long pos1 = -1, pos2 = -1;
  for (long t = 0; t < r; ++t) {
    if (A.rbar.basis[t] == 1) pos1 = t;
    if (A.rbar.basis[t] == 2) pos2 = t;
  }
  REQUIRE(pos1 >= 0);
  REQUIRE(pos2 >= 0);
  auto sq = ess_multiply(f4, A, A.basis_element(f4, sigma, pos1), A.basis_element(f4, sigma, pos1));
  CHECK(sq == A.unit(f4));

  // 1-dimensional algebra: basis element squares to itself
  GF f3(3, 1);
  auto S = build_essential(f3, PermGroup::named("S3"), 3, 3);
  auto e = S.unit(f3);
  CHECK(ess_multiply(f3, S, e, e) == e);
}

TEST_CASE("e_x evaluation") {
  GF f4(2, 2);
  auto R = rbar(f4, 3, 2);
  // n=1: unit evaluates to 1
  auto R1 = rbar(f4, 1, 2);
  CHECK(e_x_gf(f4, R1, 1, {f4.one()}) == f4.one());
  // e_u(chi-bar^1) is the fixed primitive cube root
  std::vector<GF::Elt> chi1(R.rank, 0);
  for (long t = 0; t < R.rank; ++t)
    if (R.basis[t] == 1) chi1[t] = 1;
  CHECK(e_x_gf(f4, R, 1, chi1) == f4.root_of_unity(3));
  // full fiber sum rewrites to something e_x kills
  std::vector<GF::Elt> fiber(R.rank, 0);
  for (long i = 0; i < 3; ++i)
    for (long t = 0; t < R.rank; ++t) fiber[t] = f4.add(fiber[t], R.rewrite(i, t));
  CHECK(e_x_gf(f4, R, 1, fiber) == 0);
  CHECK(e_x_gf(f4, R, 2, fiber) == 0);
  CHECK_THROWS_AS(e_x_gf(f4, rbar(f4, 9, 2), 3, std::vector<GF::Elt>(6, 0)), error);

  // multiplicativity on the quotient: chi-bar^i * chi-bar^j = chi-bar^{i+j}
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) {
      auto vi = std::vector<GF::Elt>(R.rank), vj = vi, vij = vi;
      for (long t = 0; t < R.rank; ++t) {
        vi[t] = R.rewrite(i, t);
        vj[t] = R.rewrite(j, t);
        vij[t] = R.rewrite((i + j) % 3, t);
      }
      CHECK(f4.mul(e_x_gf(f4, R, 1, vi), e_x_gf(f4, R, 1, vj)) == e_x_gf(f4, R, 1, vij));
    }

  // char 0: values are exact cyclotomics
  QField Q;
  CycloField C(3);
  auto RQ = rbar(Q, 3, 0);
  std::vector<mpq_class> qchi1(RQ.rank, 0);
  for (long t = 0; t < RQ.rank; ++t)
    if (RQ.basis[t] == 1) qchi1[t] = 1;
  CHECK(C.eq(e_x_cyclo(C, RQ, 1, qchi1), C.zeta_pow(1)));
}

TEST_CASE("generator orbits for the triples parametrization") {
  // (L, 1): single orbit {1}
  PermGroup d8 = PermGroup::named("D8");
  auto od8 = simple_param_orbits(pair_aut({d8, AutMap::identity(d8), 2, "D8"}));
  REQUIRE(od8.size() == 1);
  CHECK(od8[0].orbit_size == 1);

  // (C3, inversion): one generator, one orbit
  PermGroup c3 = PermGroup::named("C3");
  auto oc3 = simple_param_orbits(pair_aut({c3, aut_of_order(c3, 2), 3, "C3:inv"}));
  REQUIRE(oc3.size() == 1);
  CHECK(oc3[0].orbit_size == 1);
  CHECK(oc3[0].out_pair_order == 1);

  // (V4, u3): generators {u, u^2} form a single orbit
  PermGroup v4 = PermGroup::named("V4");
  auto ov4 = simple_param_orbits(pair_aut({v4, aut_of_order(v4, 3), 2, "V4:u3"}));
  REQUIRE(ov4.size() == 1);
  CHECK(ov4[0].orbit_size == 2);
  CHECK(ov4[0].out_pair_order == 1);
}
