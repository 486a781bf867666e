#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "ppfun/cyclotomic.hpp"
#include "ppfun/ddelta.hpp"
#include "ppfun/error.hpp"
#include "ppfun/gf.hpp"
#include "ppfun/intmat.hpp"
#include "ppfun/linalg.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

/// R_k(K)/(sums induced from proper subgroups) for cyclic K of order n,
/// over a coefficient field of characteristic 0 or a prime not dividing n.
/// Characters chi^0..chi^{n-1} are indexed by exponent against a fixed
/// generator of K; the quotient basis is the set of non-pivot character
/// indices of the row-reduced relation matrix (deterministic).
template <class F>
struct RBarQuotient {
  long n = 1;
  long rank = 1;
  std::vector<long> basis;              // character indices, increasing
  Matrix<typename F::Elt> rewrite;      // n x rank; row i = coordinates of chi-bar^i
  std::vector<std::vector<long>> relations;  // integer fiber-sum rows (for checks)
};

/// Integer fiber-sum relation rows for cyclic order n: one row per proper
/// divisor d and residue j, with 1 at indices congruent to j mod d.
std::vector<std::vector<long>> rbar_relations(long n);

template <class F>
RBarQuotient<F> rbar(const F& f, long n, long field_char) {
  if (field_char != 0 && n % field_char == 0)
    fail(errc::char_divides_order, "coefficient characteristic divides |K|");
  RBarQuotient<F> R;
  R.n = n;
  R.relations = rbar_relations(n);

  Matrix<typename F::Elt> M(static_cast<long>(R.relations.size()), n, f.zero());
  for (size_t i = 0; i < R.relations.size(); ++i)
    for (long j = 0; j < n; ++j)
      if (R.relations[i][j]) M(static_cast<long>(i), j) = f.one();
  std::vector<long> pivots;
  long rel_rank = M.rows ? row_reduce(f, M, &pivots) : 0;
  R.rank = n - rel_rank;

  std::vector<char> is_pivot(n, 0);
  for (long p : pivots) is_pivot[p] = 1;
  for (long j = 0; j < n; ++j)
    if (!is_pivot[j]) R.basis.push_back(j);

  R.rewrite = Matrix<typename F::Elt>(n, R.rank, f.zero());
  for (long t = 0; t < R.rank; ++t) R.rewrite(R.basis[t], t) = f.one();
  for (long r = 0; r < rel_rank; ++r) {
    long p = pivots[r];
    // chi-bar^p = -sum over basis columns of M(r, basis_j) chi-bar^{basis_j}
    for (long t = 0; t < R.rank; ++t) R.rewrite(p, t) = f.neg(M(r, R.basis[t]));
  }

  // lattice cross-checks: the quotient rank is phi(n), identically over Q
  // and over the coefficient field (Smith form has unit elementary divisors)
  if (R.rank != totient(n)) fail(errc::char_divides_order, "rbar rank mismatch with Euler phi");
  return R;
}

/// The essential algebra E(G) = Out(G) ⋉ R-bar_k(K) for G = P ⋊ K with
/// normal Sylow P and cyclic faithful p'-complement K.
template <class F>
struct EssentialAlgebra {
  PermGroup G;
  long p = 2;
  EssentialSupportReport support;
  AutGroupData autG;
  long n = 1;                    // |K|
  int k_generator = 0;           // element index of the chosen generator of K
  std::vector<long> out_action;  // out class c acts on chi^i as chi^{i*out_action[c]}
  RBarQuotient<F> rbar;
  long dimension = 1;

  /// coefficients[c * rank + t]: coefficient of gamma_c ⋉ chi-bar^{basis[t]}
  using Element = std::vector<typename F::Elt>;

  Element zero_element(const F& f) const {
    return Element(autG.out_order() * rbar.rank, f.zero());
  }
  Element basis_element(const F& f, long out_idx, long basis_idx) const {
    Element e = zero_element(f);
    e[out_idx * rbar.rank + basis_idx] = f.one();
    return e;
  }
  Element unit(const F& f) const {
    // id ⋉ chi-bar^0
    Element e = zero_element(f);
    for (long t = 0; t < rbar.rank; ++t) e[t] = rbar.rewrite(0, t);
    return e;
  }
};

template <class F>
EssentialAlgebra<F> build_essential(const F& f, const PermGroup& G, long p, long field_char) {
  EssentialAlgebra<F> A;
  A.G = G;
  A.p = p;
  A.support = essential_support(G, p);
  if (!A.support.nonvanishing)
    fail(errc::vanishing_essential_algebra,
         std::string("essential algebra vanishes: ") + vanish_reason_name(A.support.reason));
  A.n = A.support.k_order;
  A.autG = automorphism_group(G);
  A.rbar = rbar(f, A.n, field_char);

  const Subgroup& K = *A.support.complement_k;
  const Subgroup& P = *A.support.sylow_p;
  A.k_generator = G.identity();
  for (int x : K.members())
    if (G.element_order(x) == A.n) {
      A.k_generator = x;
      break;
    }
  // powers of the generator and P-coset projection G -> K
  std::vector<int> kpow(A.n);
  kpow[0] = G.identity();
  for (long j = 1; j < A.n; ++j) kpow[j] = G.mul(kpow[j - 1], A.k_generator);
  auto k_part_exponent = [&](int g) -> long {
    for (long j = 0; j < A.n; ++j)
      if (P.contains(G.mul(g, G.inv(kpow[j])))) return j;
    fail(errc::invalid_permutation, "element not in PK");
  };
  for (long c = 0; c < A.autG.out_order(); ++c) {
    AutMap rep = A.autG.out_rep_map(static_cast<int>(c));
    long a = k_part_exponent(rep.apply(A.k_generator));
    // chi^i ∘ gamma-bar = chi^{i a}; a is a unit mod n since gamma-bar is bijective
    if (A.n > 1 && std::gcd(a, A.n) != 1) fail(errc::invalid_permutation, "outer action is not invertible on K");
    A.out_action.push_back(a % A.n);
  }
  A.dimension = A.autG.out_order() * A.rbar.rank;
  return A;
}

/// Bilinear product from (gamma ⋉ lambda)(delta ⋉ mu) =
/// (gamma∘delta) ⋉ ((lambda∘delta) · mu).
template <class F>
typename EssentialAlgebra<F>::Element ess_multiply(const F& f, const EssentialAlgebra<F>& A,
                                                   const typename EssentialAlgebra<F>::Element& x,
                                                   const typename EssentialAlgebra<F>::Element& y) {
  long r = A.rbar.rank, no = A.autG.out_order(), n = A.n;
  auto out = A.zero_element(f);
  for (long i = 0; i < no; ++i)
    for (long s = 0; s < r; ++s) {
      const auto& xc = x[i * r + s];
      if (f.is_zero(xc)) continue;
      for (long j = 0; j < no; ++j) {
        long k = A.autG.out_mul[i][j];
        long a = A.out_action[j];
        long ls = (A.rbar.basis[s] * a) % n;
        for (long t = 0; t < r; ++t) {
          const auto& yc = y[j * r + t];
          if (f.is_zero(yc)) continue;
          long idx = (ls + A.rbar.basis[t]) % n;
          auto coef = f.mul(xc, yc);
          for (long w = 0; w < r; ++w)
            out[k * r + w] = f.add(out[k * r + w], f.mul(coef, A.rbar.rewrite(idx, w)));
        }
      }
    }
  return out;
}

/// e_x on R-bar coordinates, for the generator x = u^s of the cyclic group
/// (gcd(s, n) = 1): chi-bar^i evaluates to omega^{i s} with omega the fixed
/// primitive n-th root of unity in GF(p^m).
GF::Elt e_x_gf(const GF& f, const RBarQuotient<GF>& R, long s, const std::vector<GF::Elt>& coords);

/// Same over Q(zeta_n) in characteristic 0.
CycloField::Elt e_x_cyclo(const CycloField& C, const RBarQuotient<QField>& R, long s,
                          const std::vector<mpq_class>& coords);

/// Generator-class records for the triples parametrization: generators of
/// <u> in L<u> up to the automorphisms stabilizing <u> setwise.
struct GeneratorOrbit {
  long exponent = 1;        // representative x = u^exponent
  int element = 0;          // element index of x in L<u>
  long orbit_size = 1;
  long out_pair_order = 1;  // |Out(L,x)|
};

std::vector<GeneratorOrbit> simple_param_orbits(const PairAutData& D);

}  // namespace ppfun
