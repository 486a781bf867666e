#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ppfun/gf.hpp"

namespace ppfun {

/// Exact arithmetic in Q(zeta_N): elements are rational-coefficient
/// polynomials in zeta of degree < phi(N), reduced modulo the N-th
/// cyclotomic polynomial. No floating point anywhere.
class CycloField {
public:
  using Elt = std::vector<mpq_class>;  // length phi(N)

  explicit CycloField(long N);

  long n() const { return n_; }
  long phi() const { return phi_; }
  const std::vector<mpz_class>& minimal_polynomial() const { return phi_poly_; }

  Elt zero() const { return Elt(phi_, 0); }
  Elt one() const { return from_rational(1); }
  Elt from_rational(const mpq_class& r) const;
  /// zeta^j for any integer j (mod N), reduced.
  Elt zeta_pow(long j) const;

  bool is_zero(const Elt& a) const;
  bool eq(const Elt& a, const Elt& b) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
  Elt scale(const Elt& a, const mpq_class& r) const;

  /// Galois conjugation zeta -> zeta^k, gcd(k, N) = 1 (k = -1 is complex
  /// conjugation).
  Elt galois(const Elt& a, long k) const;

  /// True (and sets *out) when a is rational.
  bool rational_value(const Elt& a, mpq_class* out = nullptr) const;

  /// rho-reduction to GF(p^m): zeta -> fixed primitive N-th root of unity.
  /// Requires N | q-1; denominators must be prime to p.
  GF::Elt to_gf(const GF& F, const Elt& a) const;

  std::string str(const Elt& a) const;

private:
  long n_, phi_;
  std::vector<mpz_class> phi_poly_;               // monic, integer coeffs, degree phi
  std::vector<std::vector<mpq_class>> power_red_;  // zeta^k reduced, k < max(N, 2*phi-1)
};

/// Coefficients of the N-th cyclotomic polynomial (monic, integer).
std::vector<mpz_class> cyclotomic_polynomial(long N);

/// mpq_class as a field for the generic linear algebra routines.
struct QField {
  using Elt = mpq_class;
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(const Elt& a) const { return a == 0; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const { return 1 / a; }
  Elt div(const Elt& a, const Elt& b) const { return a / b; }
  std::string str(const Elt& a) const { return a.get_str(); }
};

}  // namespace ppfun
