#include "ppfun/ddelta.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ppfun/error.hpp"
#include "ppfun/numutil.hpp"
#include "ppfun/pgroups.hpp"

namespace ppfun {

bool is_ddelta_pair(const PermGroup& L, const AutMap& u, long p) {
  if (!L.is_pgroup(p)) return false;
  return std::gcd(static_cast<long>(u.order()), p) == 1;
}

int PairAutData::position_of_out_class(int out_class) const {
  auto it = std::find(pair_out_classes.begin(), pair_out_classes.end(), out_class);
  return it == pair_out_classes.end() ? -1 : static_cast<int>(it - pair_out_classes.begin());
}

PairAutData pair_aut(const DDeltaPair& pair, long aut_cap) {
  PairAutData D;
  D.pair = pair;
  D.product = semidirect(pair.L, pair.u);
  const PermGroup& G = D.product.group;
  D.aut = automorphism_group(G, aut_cap);

  int u_elt = D.product.u_element();
  // conjugacy class of u in L<u>
  std::set<int> u_class;
  for (int g = 0; g < G.order(); ++g) u_class.insert(G.conj(g, u_elt));

  // An out class lies in Out(L,u) iff any (equivalently every) representative
  // sends u into its conjugacy class; Inn fixes classes, so the test is
  // coset-independent.
  for (long c = 0; c < D.aut.out_order(); ++c) {
    AutMap rep = D.aut.out_rep_map(static_cast<int>(c));
    if (u_class.count(rep.apply(u_elt))) D.pair_out_classes.push_back(static_cast<int>(c));
  }
  D.out_pair_order = static_cast<long>(D.pair_out_classes.size());
  D.aut_pair_order = D.out_pair_order * D.aut.inn_order;

  long n = D.out_pair_order;
  D.out_mul.assign(n, std::vector<int>(n));
  D.out_inv.resize(n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      int c = D.aut.out_mul[D.pair_out_classes[i]][D.pair_out_classes[j]];
      int pos = D.position_of_out_class(c);
      if (pos < 0) fail(errc::invalid_permutation, "Out(L,u) is not closed under composition");
      D.out_mul[i][j] = pos;
    }
    D.out_inv[i] = D.position_of_out_class(D.aut.out_inv[D.pair_out_classes[i]]);
  }
  return D;
}

bool pairs_isomorphic(const DDeltaPair& a, const DDeltaPair& b) {
  if (a.L.order() != b.L.order()) return false;
  if (a.u.order() != b.u.order()) return false;
  SemidirectProduct pa = semidirect(a.L, a.u), pb = semidirect(b.L, b.u);
  int ua = pa.u_element(), ub = pb.u_element();
  std::set<int> ub_class;
  for (int g = 0; g < pb.group.order(); ++g) ub_class.insert(pb.group.conj(g, ub));
  for (const Embedding& phi : isomorphisms(pa.group, full_subgroup(pb.group)))
    if (ub_class.count(phi.apply(ua))) return true;
  return false;
}

std::vector<DDeltaPair> enumerate_ddelta_pairs(long p, long max_order) {
  std::vector<DDeltaPair> out;
  for (const CatalogueEntry& entry : pgroup_catalogue(p, max_order)) {
    const PermGroup& L = entry.group;
    AutGroupData A = automorphism_group(L, std::max(kDefaultAutCap, L.order()));
    // p'-automorphisms up to Aut(L)-conjugacy; conjugate automorphisms give
    // isomorphic pairs.
    std::vector<DDeltaPair> candidates;
    for (const ConjClassRec& c : conjugacy_classes(A.aut)) {
      if (std::gcd(static_cast<long>(c.element_order), p) != 1) continue;
      DDeltaPair cand{L, A.aut_map(c.representative), p, entry.name};
      if (c.element_order > 1) cand.name += ":u" + std::to_string(c.element_order);
      candidates.push_back(std::move(cand));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const DDeltaPair& x, const DDeltaPair& y) { return x.u.order() < y.u.order(); });
    std::vector<DDeltaPair> kept;
    for (DDeltaPair& cand : candidates) {
      bool dup = false;
      for (const DDeltaPair& prev : kept)
        if (pairs_isomorphic(prev, cand)) {
          dup = true;
          break;
        }
      if (!dup) kept.push_back(std::move(cand));
    }
    for (DDeltaPair& k : kept) out.push_back(std::move(k));
  }
  return out;
}

const char* vanish_reason_name(VanishReason r) {
  switch (r) {
    case VanishReason::no_normal_sylow_complement_form: return "NoNormalSylowComplementForm";
    case VanishReason::k_not_elementary_or_split_failure: return "KNotElementaryOrSplitFailure";
    case VanishReason::k_not_cyclic: return "KNotCyclic";
    case VanishReason::k_not_faithful: return "KNotFaithful";
  }
  return "?";
}

bool is_cyclic(const PermGroup& K) {
  for (int x = 0; x < K.order(); ++x)
    if (K.element_order(x) == K.order()) return true;
  return K.order() == 1;
}

bool is_elementary(const PermGroup& K) {
  // K = Q x C: all Sylow subgroups normal (nilpotent), at most one non-cyclic.
  int non_cyclic = 0;
  for (auto [q, e] : factorize(K.order())) {
    Subgroup S = sylow(K, q);
    if (!is_normal(K, S)) return false;
    if (!is_cyclic(S.as_group())) ++non_cyclic;
  }
  return non_cyclic <= 1;
}

EssentialSupportReport essential_support(const PermGroup& G, long p) {
  EssentialSupportReport R;
  Subgroup P = sylow(G, p);
  if (!is_normal(G, P)) {
    R.reason = VanishReason::no_normal_sylow_complement_form;
    return R;
  }
  // Greedy p'-closure growth; with P a normal Sylow subgroup, a maximal
  // p'-subgroup is a complement (Schur-Zassenhaus).
  Subgroup K = trivial_subgroup(G);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < G.order(); ++x) {
      if (K.contains(x) || G.element_order(x) % p == 0) continue;
      std::vector<int> seed = K.members();
      seed.push_back(x);
      Subgroup T = closure_subgroup(G, std::move(seed));
      if (T.order() % p != 0) {
        K = std::move(T);
        grew = true;
      }
    }
  }
  if (K.order() * P.order() != G.order()) {
    R.reason = VanishReason::k_not_elementary_or_split_failure;  // split failure
    return R;
  }
  PermGroup Kg = K.as_group();
  if (!is_elementary(Kg)) {
    R.reason = VanishReason::k_not_elementary_or_split_failure;
    return R;
  }
  if (!is_cyclic(Kg)) {
    R.reason = VanishReason::k_not_cyclic;
    return R;
  }
  if (intersect(K, centralizer(G, P.members())).order() != 1) {
    R.reason = VanishReason::k_not_faithful;
    return R;
  }
  R.nonvanishing = true;
  R.k_order = K.order();
  R.sylow_p = P;
  R.complement_k = K;
  PermGroup L = P.as_group();
  std::vector<int> emb(L.order());
  for (int i = 0; i < L.order(); ++i) emb[i] = G.index_of(L.element(i));
  Embedding e(L, G, std::move(emb));
  int k0 = -1;
  for (int x : K.members())
    if (G.element_order(x) == K.order()) {
      k0 = x;
      break;
    }
  if (K.order() == 1) k0 = G.identity();
  R.L = L;
  R.u = e.transported_conjugation(k0);
  return R;
}

}  // namespace ppfun
