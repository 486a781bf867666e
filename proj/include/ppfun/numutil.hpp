#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ppfun {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) n /= d, ++e;
    f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

/// Largest power of p dividing n.
inline long p_part(long n, long p) {
  long q = 1;
  while (n % p == 0) n /= p, q *= p;
  return q;
}

inline long p_prime_part(long n, long p) { return n / p_part(n, p); }

inline long totient(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline long pow_mod(long base, long exp, long mod) {
  long r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

/// Multiplicative inverse of a mod m (gcd(a,m)=1).
inline long inv_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = a % m;
  if (a1 < 0) a1 += m;
  while (a1) {
    long q = g / a1;
    g -= q * a1;
    std::swap(g, a1);
    x -= q * x1;
    std::swap(x, x1);
  }
  x %= m;
  if (x < 0) x += m;
  return x;
}

}  // namespace ppfun
