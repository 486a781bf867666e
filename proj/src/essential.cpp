#include "ppfun/essential.hpp"

#include <numeric>
#include <set>

namespace ppfun {

std::vector<std::vector<long>> rbar_relations(long n) {
  std::vector<std::vector<long>> rows;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    for (long j = 0; j < d; ++j) {
      std::vector<long> row(n, 0);
      for (long i = j; i < n; i += d) row[i] = 1;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GF::Elt e_x_gf(const GF& f, const RBarQuotient<GF>& R, long s, const std::vector<GF::Elt>& coords) {
  if (std::gcd(((s % R.n) + R.n) % R.n, R.n) != 1 && R.n > 1)
    fail(errc::not_a_generator, "x = u^s generates <u> only when gcd(s, n) = 1");
  GF::Elt omega = f.root_of_unity(R.n);
  GF::Elt acc = 0;
  for (long t = 0; t < R.rank; ++t) {
    if (f.is_zero(coords[t])) continue;
    acc = f.add(acc, f.mul(coords[t], f.pow(omega, (R.basis[t] * s) % R.n)));
  }
  return acc;
}

CycloField::Elt e_x_cyclo(const CycloField& C, const RBarQuotient<QField>& R, long s,
                          const std::vector<mpq_class>& coords) {
  if (std::gcd(((s % R.n) + R.n) % R.n, R.n) != 1 && R.n > 1)
    fail(errc::not_a_generator, "x = u^s generates <u> only when gcd(s, n) = 1");
  CycloField::Elt acc = C.zero();
  for (long t = 0; t < R.rank; ++t) {
    if (coords[t] == 0) continue;
    acc = C.add(acc, C.scale(C.zeta_pow(R.basis[t] * s), coords[t]));
  }
  return acc;
}

std::vector<GeneratorOrbit> simple_param_orbits(const PairAutData& D) {
  const PermGroup& G = D.product.group;
  long m = D.product.acting_order;
  int u = D.product.u_element();
  // <u> and its generators
  std::set<int> cyc;
  std::vector<long> exponent_of(G.order(), -1);
  {
    int cur = G.identity();
    for (long j = 0; j < m; ++j) {
      cyc.insert(cur);
      exponent_of[cur] = j;
      cur = G.mul(cur, u);
    }
  }
  std::vector<int> gens;
  for (long s = (m == 1 ? 0 : 1); s < std::max(m, 2L); ++s) {
    if (m == 1 && s == 0) {
      gens.push_back(G.identity());
      break;
    }
    if (std::gcd(s, m) == 1) gens.push_back(G.power(u, s));
  }

  // automorphisms of L<u> stabilizing <u> setwise
  std::vector<int> sharp;
  for (long a = 0; a < D.aut.aut_order(); ++a) {
    const Perm& phi = D.aut.aut.element(static_cast<int>(a));
    bool stable = true;
    for (int c : cyc)
      if (!cyc.count(phi(c))) {
        stable = false;
        break;
      }
    if (stable) sharp.push_back(static_cast<int>(a));
  }

  std::vector<GeneratorOrbit> out;
  std::set<int> assigned;
  for (int x : gens) {
    if (assigned.count(x)) continue;
    std::set<int> orbit;
    for (int a : sharp) orbit.insert(D.aut.aut.element(a)(x));
    GeneratorOrbit rec;
    rec.element = *orbit.begin();
    rec.exponent = exponent_of[rec.element];
    rec.orbit_size = static_cast<long>(orbit.size());
    // x = u^s acts on L as the s-th power of u
    AutMap ux = AutMap::identity(D.pair.L);
    for (long t = 0; t < (m == 1 ? 1 : rec.exponent); ++t) ux = ux.compose(D.pair.u);
    rec.out_pair_order = pair_aut({D.pair.L, ux, D.pair.p, ""}).out_pair_order;
    out.push_back(rec);
    for (int y : orbit) assigned.insert(y);
  }
  return out;
}

}  // namespace ppfun
