#include "ppfun/gf.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ppfun/error.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

namespace {

// dense polynomials over GF(p), coefficient vectors without trailing zeros
using Poly = std::vector<long>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  // reduce by monic mod
  size_t dm = mod.size() - 1;
  for (size_t k = c.size(); k-- > dm;) {
    long lead = c[k];
    if (!lead) continue;
    for (size_t t = 0; t <= dm; ++t) c[k - dm + t] = ((c[k - dm + t] - lead * mod[t]) % p + p) % p;
  }
  c.resize(dm);
  trim(c);
  if (c.empty()) c = {};
  return c;
}

Poly poly_powmod(Poly base, long e, const Poly& mod, long p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    long il = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      long lead = a.back() * il % p;
      if (lead)
        for (size_t t = 0; t < b.size(); ++t) {
          size_t k = a.size() - b.size() + t;
          a[k] = ((a[k] - lead * b[t]) % p + p) % p;
        }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod f
Poly frobenius_power(const Poly& f, long p, int k) {
  Poly t{0, 1};
  for (int i = 0; i < k; ++i) t = poly_powmod(t, p, f, p);
  return t;
}

bool is_irreducible(const Poly& f, long p) {
  int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  // x^(p^m) == x mod f
  Poly xpm = frobenius_power(f, p, m);
  Poly x{0, 1};
  if (xpm != x) return false;
  for (auto [ell, e] : factorize(m)) {
    Poly t = frobenius_power(f, p, m / static_cast<int>(ell));
    // gcd(t - x, f) must be 1
    Poly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// lexicographically least monic irreducible of degree m over GF(p),
// scanning the low coefficients c_0..c_{m-1} as base-p integers
Poly least_irreducible(long p, int m) {
  if (m == 1) return Poly{0, 1};  // x itself; GF(p) needs no extension
  long total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    Poly f(m + 1, 0);
    long c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(errc::field_table_exhausted, "no irreducible polynomial found");
}

// optional override table: lines "p m c_0 c_1 ... c_m"
bool lookup_override(long p, int m, Poly& out) {
  const char* path = std::getenv("PPFUN_FIELD_TABLE");
  if (!path) return false;
  std::ifstream in(path);
  if (!in.good()) fail(errc::field_table_exhausted, std::string("cannot read PPFUN_FIELD_TABLE at ") + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long fp;
    int fm;
    if (!(ls >> fp >> fm)) continue;
    if (fp != p || fm != m) continue;
    Poly f;
    long c;
    while (ls >> c) f.push_back(((c % p) + p) % p);
    if (static_cast<int>(f.size()) != m + 1 || f.back() != 1)
      fail(errc::field_table_exhausted, "PPFUN_FIELD_TABLE entry is not a monic degree-m polynomial");
    if (!is_irreducible(f, p)) fail(errc::field_table_exhausted, "PPFUN_FIELD_TABLE entry is reducible");
    out = f;
    return true;
  }
  return false;
}

}  // namespace

GF::GF(long p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) fail(errc::field_table_exhausted, "field characteristic must be prime");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ >= kFieldSizeCap) fail(errc::field_table_exhausted, "field size cap 2^20 exceeded");
  }
  Poly mod;
  if (!lookup_override(p, m, mod)) mod = least_irreducible(p, m);
  spec_ = {p, m, std::vector<long>(mod.begin(), mod.end())};

  // polynomial multiply on integer encodings, used to bootstrap the tables
  auto encode = [&](const Poly& f) {
    long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return static_cast<Elt>(v);
  };
  auto decode = [&](Elt v) {
    Poly f;
    long x = v;
    while (x) {
      f.push_back(x % p);
      x /= p;
    }
    return f;
  };
  auto raw_mul = [&](Elt a, Elt b) -> Elt {
    if (!a || !b) return 0;
    return encode(poly_mulmod(decode(a), decode(b), mod, p));
  };
  auto raw_pow = [&](Elt a, long e) {
    Elt r = 1;
    Elt base = a;
    while (e) {
      if (e & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return r;
  };

  // least generator of the multiplicative group
  auto qm1_factors = factorize(q_ - 1);
  for (Elt cand = (q_ == 2) ? 1 : 2; cand < static_cast<Elt>(q_); ++cand) {
    bool gen = true;
    for (auto [ell, e] : qm1_factors)
      if (raw_pow(cand, (q_ - 1) / ell) == 1) {
        gen = false;
        break;
      }
    if (gen) {
      primitive_ = cand;
      break;
    }
  }
  if (q_ == 2) primitive_ = 1;

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elt cur = 1;
  for (long i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<Elt>(i);
    cur = raw_mul(cur, primitive_);
  }
  if (cur != 1) fail(errc::field_table_exhausted, "primitive element has wrong order");
}

GF::Elt GF::add(Elt a, Elt b) const {
  Elt r = 0, mul = 1;
  while (a || b) {
    long da = a % p_, db = b % p_;
    r += static_cast<Elt>((da + db) % p_) * mul;
    a /= p_;
    b /= p_;
    mul *= static_cast<Elt>(p_);
  }
  return r;
}

GF::Elt GF::neg(Elt a) const {
  Elt r = 0, mul = 1;
  while (a) {
    long d = a % p_;
    r += static_cast<Elt>((p_ - d) % p_) * mul;
    a /= p_;
    mul *= static_cast<Elt>(p_);
  }
  return r;
}

GF::Elt GF::inv(Elt a) const {
  if (a == 0) fail(errc::invalid_permutation, "division by zero in GF");
  if (a == 1) return 1;
  return exp_[(q_ - 1) - log_[a]];
}

GF::Elt GF::pow(Elt a, long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  long l = log_[a] * static_cast<long>(((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

GF::Elt GF::from_int(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

long GF::dlog(Elt a) const {
  if (a == 0) fail(errc::invalid_permutation, "dlog of zero");
  return log_[a];
}

GF::Elt GF::root_of_unity(long n) const {
  if ((q_ - 1) % n != 0) fail(errc::field_table_exhausted, "field has no n-th roots of unity");
  if (n == 1) return 1;
  return exp_[(q_ - 1) / n];
}

int splitting_degree(long p, long n) {
  if (n == 1) return 1;
  long pm = 1;
  for (int m = 1;; ++m) {
    pm *= p;
    if (pm >= kFieldSizeCap) fail(errc::field_table_exhausted, "splitting field exceeds the 2^20 table cap");
    if ((pm - 1) % n == 0) return m;
  }
}

FieldSpec splitting_field(const PermGroup& G, long p) {
  long n = p_prime_part(G.exponent(), p);
  int m = splitting_degree(p, n);
  return GF(p, m).spec();
}

}  // namespace ppfun
