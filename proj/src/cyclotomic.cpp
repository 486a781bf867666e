#include "ppfun/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ppfun/error.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

namespace {

using ZPoly = std::vector<mpz_class>;

// exact division of integer polynomials, remainder must vanish
ZPoly zpoly_div(const ZPoly& num, const ZPoly& den) {
  ZPoly rem = num, quo(num.size() - den.size() + 1, 0);
  for (size_t k = quo.size(); k-- > 0;) {
    mpz_class c = rem[k + den.size() - 1] / den.back();
    quo[k] = c;
    for (size_t t = 0; t < den.size(); ++t) rem[k + t] -= c * den[t];
  }
  for (const mpz_class& c : rem)
    if (c != 0) fail(errc::invalid_permutation, "inexact polynomial division");
  return quo;
}

std::map<long, ZPoly>& cyclo_cache() {
  static std::map<long, ZPoly> cache;
  return cache;
}

}  // namespace

ZPoly cyclotomic_polynomial(long N) {
  auto& cache = cyclo_cache();
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  // (x^N - 1) / prod_{d | N, d < N} Phi_d
  ZPoly num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (long d = 1; d < N; ++d) {
    if (N % d) continue;
    num = zpoly_div(num, cyclotomic_polynomial(d));
  }
  cache[N] = num;
  return num;
}

CycloField::CycloField(long N) : n_(N) {
  phi_poly_ = cyclotomic_polynomial(N);
  phi_ = static_cast<long>(phi_poly_.size()) - 1;
  long need = std::max(n_, 2 * phi_ - 1);
  power_red_.resize(need);
  for (long k = 0; k < need; ++k) {
    if (k < phi_) {
      power_red_[k].assign(phi_, 0);
      power_red_[k][k] = 1;
    } else {
      // zeta^k = zeta * zeta^(k-1), reduced via zeta^phi = -(lower terms)
      std::vector<mpq_class> shifted(phi_ + 1, 0);
      for (long i = 0; i < phi_; ++i) shifted[i + 1] = power_red_[k - 1][i];
      mpq_class lead = shifted[phi_];
      std::vector<mpq_class> red(phi_, 0);
      for (long i = 0; i < phi_; ++i) red[i] = shifted[i] - lead * mpq_class(phi_poly_[i]);
      power_red_[k] = std::move(red);
    }
  }
}

CycloField::Elt CycloField::from_rational(const mpq_class& r) const {
  Elt e(phi_, 0);
  e[0] = r;
  return e;
}

CycloField::Elt CycloField::zeta_pow(long j) const {
  j %= n_;
  if (j < 0) j += n_;
  return Elt(power_red_[j]);
}

bool CycloField::is_zero(const Elt& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

bool CycloField::eq(const Elt& a, const Elt& b) const { return a == b; }

CycloField::Elt CycloField::add(const Elt& a, const Elt& b) const {
  Elt c(phi_);
  for (long i = 0; i < phi_; ++i) c[i] = a[i] + b[i];
  return c;
}

CycloField::Elt CycloField::sub(const Elt& a, const Elt& b) const {
  Elt c(phi_);
  for (long i = 0; i < phi_; ++i) c[i] = a[i] - b[i];
  return c;
}

CycloField::Elt CycloField::neg(const Elt& a) const {
  Elt c(phi_);
  for (long i = 0; i < phi_; ++i) c[i] = -a[i];
  return c;
}

CycloField::Elt CycloField::scale(const Elt& a, const mpq_class& r) const {
  Elt c(phi_);
  for (long i = 0; i < phi_; ++i) c[i] = a[i] * r;
  return c;
}

CycloField::Elt CycloField::mul(const Elt& a, const Elt& b) const {
  std::vector<mpq_class> conv(2 * phi_ - 1, 0);
  for (long i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < phi_; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  Elt c(phi_, 0);
  for (long k = 0; k < 2 * phi_ - 1; ++k) {
    if (conv[k] == 0) continue;
    for (long i = 0; i < phi_; ++i) c[i] += conv[k] * power_red_[k][i];
  }
  return c;
}

CycloField::Elt CycloField::inv(const Elt& a) const {
  if (is_zero(a)) fail(errc::invalid_permutation, "division by zero in cyclotomic field");
  // extended Euclid in Q[x] against the (irreducible) minimal polynomial
  using QPoly = std::vector<mpq_class>;
  auto trim = [](QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  QPoly r0(phi_poly_.size());
  for (size_t i = 0; i < phi_poly_.size(); ++i) r0[i] = mpq_class(phi_poly_[i]);
  QPoly r1(a.begin(), a.end());
  trim(r1);
  QPoly s0{}, s1{mpq_class(1)};  // coefficients of a in the Bezout identity
  while (true) {
    // r0 = q*r1 + r2
    QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    QPoly r2 = r0;
    for (size_t k = q.size(); k-- > 0;) {
      if (r2.size() < k + r1.size()) continue;
      mpq_class c = r2[k + r1.size() - 1] / r1.back();
      q[k] = c;
      for (size_t t = 0; t < r1.size(); ++t) r2[k + t] -= c * r1[t];
    }
    trim(r2);
    // s2 = s0 - q*s1
    QPoly s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), 0);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    if (r2.empty()) {
      // r1 is the gcd; must be a nonzero constant since Phi_N is irreducible
      if (r1.size() != 1) fail(errc::invalid_permutation, "cyclotomic inverse: gcd not constant");
      Elt out(phi_, 0);
      for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(phi_); ++i) out[i] = s1[i] / r1[0];
      return out;
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

CycloField::Elt CycloField::galois(const Elt& a, long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1) fail(errc::invalid_permutation, "galois exponent not coprime to N");
  Elt out(phi_, 0);
  for (long i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    long j = (i * k) % n_;
    for (long t = 0; t < phi_; ++t) out[t] += a[i] * power_red_[j][t];
  }
  return out;
}

bool CycloField::rational_value(const Elt& a, mpq_class* out) const {
  for (long i = 1; i < phi_; ++i)
    if (a[i] != 0) return false;
  if (out) *out = a[0];
  return true;
}

GF::Elt CycloField::to_gf(const GF& F, const Elt& a) const {
  GF::Elt omega = F.root_of_unity(n_);
  GF::Elt acc = 0;
  for (long i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    mpz_class num = a[i].get_num(), den = a[i].get_den();
    mpz_class dmod = den % F.p();
    if (dmod == 0) fail(errc::denominator_divisible_by_p, "rho-reduction hit a denominator divisible by p");
    mpz_class nmod = num % F.p();
    GF::Elt v = F.mul(F.from_int(nmod.get_si()), F.inv(F.from_int(dmod.get_si())));
    acc = F.add(acc, F.mul(v, F.pow(omega, i)));
  }
  return acc;
}

std::string CycloField::str(const Elt& a) const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    os << a[i].get_str();
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ppfun
