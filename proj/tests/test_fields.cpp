#include <set>

#include "doctest.h"
#include "ppfun/cyclotomic.hpp"
#include "ppfun/error.hpp"
#include "ppfun/gf.hpp"
#include "ppfun/intmat.hpp"
#include "ppfun/linalg.hpp"
#include "ppfun/numutil.hpp"

using namespace ppfun;

TEST_CASE("GF(p^m) arithmetic") {
  GF f4(2, 2);
  CHECK(f4.q() == 4);
  // x^2 + x + 1 is the least irreducible of degree 2 over GF(2)
  CHECK(f4.spec().modulus == std::vector<long>{1, 1, 1});
  // field axioms by brute force
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(f4.add(a, b) == f4.add(b, a));
      CHECK(f4.mul(a, b) == f4.mul(b, a));
      if (b) CHECK(f4.mul(f4.div(a, b), b) == a);
      for (unsigned c = 0; c < 4; ++c) CHECK(f4.mul(a, f4.add(b, c)) == f4.add(f4.mul(a, b), f4.mul(a, c)));
    }
  // primitive element has full order
  std::set<unsigned> powers;
  for (int i = 0; i < 3; ++i) powers.insert(f4.pow(f4.primitive(), i));
  CHECK(powers.size() == 3);
  // cube roots of unity sum to zero in GF(4)
  unsigned w = f4.root_of_unity(3);
  CHECK(f4.add(f4.add(1, w), f4.mul(w, w)) == 0);

  GF f9(3, 2);
  CHECK(f9.q() == 9);
  for (unsigned a = 1; a < 9; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
  CHECK(f9.pow(f9.root_of_unity(4), 4) == 1);
  CHECK(f9.pow(f9.root_of_unity(4), 2) != 1);

  GF f8(2, 3);
  CHECK(f8.dlog(f8.primitive()) == 1);
  for (unsigned a = 1; a < 8; ++a) CHECK(f8.pow(f8.primitive(), f8.dlog(a)) == a);
}

TEST_CASE("splitting fields") {
  CHECK(splitting_field(PermGroup::named("S3"), 3).m == 1);
  CHECK(splitting_field(PermGroup::named("A4"), 2).m == 2);
  CHECK(splitting_field(PermGroup::named("C2"), 2).m == 1);
  CHECK(splitting_degree(3, 4) == 2);
  CHECK(splitting_degree(2, 7) == 3);
  CHECK(splitting_degree(2, 1) == 1);
}

TEST_CASE("smith normal form") {
  auto snf = smith_normal_form({{mpz_class(2), mpz_class(0)}, {mpz_class(0), mpz_class(3)}});
  CHECK(snf == std::vector<mpz_class>{1, 6});
  auto snf2 = smith_normal_form({{mpz_class(2), mpz_class(4), mpz_class(4)},
                                 {mpz_class(-6), mpz_class(6), mpz_class(12)},
                                 {mpz_class(10), mpz_class(4), mpz_class(16)}});
  CHECK(snf2 == std::vector<mpz_class>{2, 2, 156});  // classical worked example
  // single fiber-sum relation over n=3
  auto snf3 = smith_normal_form({{mpz_class(1), mpz_class(1), mpz_class(1)}});
  CHECK(snf3 == std::vector<mpz_class>{1});
  CHECK(rank_over_q({{mpz_class(1), mpz_class(2)}, {mpz_class(2), mpz_class(4)}}) == 1);
  CHECK(det({{mpz_class(2), mpz_class(1)}, {mpz_class(1), mpz_class(2)}}) == 3);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic field arithmetic") {
  CycloField C(12);
  CHECK(C.phi() == 4);
  auto z = C.zeta_pow(1);
  // zeta^12 = 1, zeta^6 = -1
  CHECK(C.eq(C.zeta_pow(12), C.one()));
  CHECK(C.eq(C.zeta_pow(6), C.neg(C.one())));
  // inverse round-trip on a messy element
  auto a = C.add(C.scale(C.zeta_pow(5), mpq_class(3, 7)), C.from_rational(mpq_class(-2, 5)));
  CHECK(C.eq(C.mul(a, C.inv(a)), C.one()));
  // galois conjugation: z -> z^-1 inverts roots
  CHECK(C.eq(C.mul(z, C.galois(z, -1)), C.one()));
  // sum of all primitive 12th roots = mu(12) = 0... sum over gcd(k,12)=1
  auto s = C.zero();
  for (long k : {1, 5, 7, 11}) s = C.add(s, C.zeta_pow(k));
  mpq_class val;
  CHECK(C.rational_value(s, &val));
  CHECK(val == 0);

  // rho-reduction: cube roots of unity to GF(4)
  CycloField C3(3);
  GF f4(2, 2);
  auto w = C3.zeta_pow(1);
  CHECK(C3.to_gf(f4, w) == f4.root_of_unity(3));
  auto total = C3.add(C3.add(C3.one(), w), C3.zeta_pow(2));
  CHECK(C3.to_gf(f4, total) == 0);
  // 1/3 reduces fine mod 2, 1/2 must throw
  CHECK(C3.to_gf(f4, C3.from_rational(mpq_class(1, 3))) == 1);
  CHECK_THROWS_AS(C3.to_gf(f4, C3.from_rational(mpq_class(1, 2))), error);
}

TEST_CASE("generic linear algebra over GF and Q") {
  GF f3(3, 1);
  Matrix<GF::Elt> M(2, 2, 0);
  M(0, 0) = 2;
  M(0, 1) = 1;
  M(1, 0) = 1;
  M(1, 1) = 1;  // det = 1 mod 3
  CHECK(mat_rank(f3, M) == 2);
  auto inv = mat_inverse(f3, M);
  REQUIRE(inv.has_value());
  auto prod = mat_mul(f3, M, *inv);
  CHECK(prod.a == mat_identity(f3, 2).a);

  Matrix<GF::Elt> sing(2, 2, 0);
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 1;  // det = 1 - 4 = 0 mod 3
  CHECK(mat_rank(f3, sing) == 1);
  CHECK(!mat_inverse(f3, sing).has_value());
  auto ns = nullspace(f3, sing);
  REQUIRE(ns.size() == 1);

  QField Q;
  Matrix<mpq_class> A(2, 3, 0);
  A(0, 0) = 1;
  A(0, 1) = 2;
  A(0, 2) = 3;
  A(1, 0) = 2;
  A(1, 1) = 4;
  A(1, 2) = 7;
  auto x = solve(Q, A, {mpq_class(6), mpq_class(13)});
  REQUIRE(x.has_value());
  // check A x = b
  CHECK((*x)[0] * 1 + (*x)[1] * 2 + (*x)[2] * 3 == 6);
  CHECK((*x)[0] * 2 + (*x)[1] * 4 + (*x)[2] * 7 == 13);

  // solve over the cyclotomic field
  CycloField C(5);
  Matrix<CycloField::Elt> B(2, 2, C.zero());
  B(0, 0) = C.zeta_pow(1);
  B(0, 1) = C.one();
  B(1, 0) = C.one();
  B(1, 1) = C.zeta_pow(4);
  // det = z*z^4 - 1 = 0; rank 1
  CHECK(mat_rank(C, B) == 1);
  B(1, 1) = C.zeta_pow(3);
  CHECK(mat_rank(C, B) == 2);
}
