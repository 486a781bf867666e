#include "ppfun/construct.hpp"

#include <algorithm>
#include <map>

#include "ppfun/error.hpp"

namespace ppfun {

SemidirectProduct semidirect(const PermGroup& L, const AutMap& u) {
  long nl = L.order();
  int m = u.order();
  long n = nl * m;
  // labels: (l, j) -> l*m + j, product (l1,j1)(l2,j2) = (l1 * u^j1(l2), j1+j2 mod m)
  std::vector<std::vector<int>> upow(m);
  upow[0] = AutMap::identity(L).images();
  for (int j = 1; j < m; ++j) {
    upow[j].resize(nl);
    for (long x = 0; x < nl; ++x) upow[j][x] = u.apply(upow[j - 1][x]);
  }
  auto mul = [&](long a, long b) -> long {
    long l1 = a / m, j1 = a % m, l2 = b / m, j2 = b % m;
    return static_cast<long>(L.mul(static_cast<int>(l1), upow[j1][l2])) * m + (j1 + j2) % m;
  };
  auto left_translation = [&](long g) {
    std::vector<int> img(n);
    for (long x = 0; x < n; ++x) img[x] = static_cast<int>(mul(g, x));
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (int gi : L.generator_indices()) gens.push_back(left_translation(static_cast<long>(gi) * m));
  if (m > 1) gens.push_back(left_translation(1));  // (id, u)
  PermGroup P = PermGroup::from_generators(static_cast<int>(n), gens, n + 1);
  if (P.order() != n) fail(errc::invalid_permutation, "semidirect closure mismatch");

  SemidirectProduct S;
  S.group = P;
  S.acting_order = m;
  std::vector<int> base_img(nl);
  for (long l = 0; l < nl; ++l) base_img[l] = P.index_of(left_translation(l * m));
  S.embed_base = Embedding(L, P, std::move(base_img));
  S.embed_acting.resize(m);
  for (int j = 0; j < m; ++j) S.embed_acting[j] = P.index_of(left_translation(j));
  return S;
}

DirectProduct direct_product(const PermGroup& A, const PermGroup& B) {
  int da = A.degree(), db = B.degree();
  auto lift_a = [&](const Perm& p) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = p(i);
    for (int i = 0; i < db; ++i) img[da + i] = da + i;
    return Perm(std::move(img));
  };
  auto lift_b = [&](const Perm& p) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = i;
    for (int i = 0; i < db; ++i) img[da + i] = da + p(i);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (const Perm& g : A.generators()) gens.push_back(lift_a(g));
  for (const Perm& g : B.generators()) gens.push_back(lift_b(g));
  long n = A.order() * B.order();
  PermGroup P = PermGroup::from_generators(da + db, gens, n + 1);
  if (P.order() != n) fail(errc::invalid_permutation, "direct product closure mismatch");

  DirectProduct D;
  D.group = P;
  std::vector<int> ia(A.order()), ib(B.order());
  for (long x = 0; x < A.order(); ++x) ia[x] = P.index_of(lift_a(A.element(static_cast<int>(x))));
  for (long x = 0; x < B.order(); ++x) ib[x] = P.index_of(lift_b(B.element(static_cast<int>(x))));
  D.embed_left = Embedding(A, P, std::move(ia));
  D.embed_right = Embedding(B, P, std::move(ib));
  return D;
}

CosetAction coset_action(const PermGroup& G, const Subgroup& H) {
  long n = G.order();
  // left cosets gH, identified by sorted member sets; coset of g found via
  // canonical representative = least element of gH.
  std::vector<int> coset_of(n, -1);
  std::vector<int> coset_rep;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(coset_rep.size());
    coset_rep.push_back(g);  // least element, since g increases
    for (int h : H.members()) coset_of[G.mul(g, h)] = c;
  }
  int nc = static_cast<int>(coset_rep.size());
  auto action = [&](int g) {
    std::vector<int> img(nc);
    for (int c = 0; c < nc; ++c) img[c] = coset_of[G.mul(g, coset_rep[c])];
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (int gi : G.generator_indices()) gens.push_back(action(gi));
  if (gens.empty()) gens.push_back(Perm(nc));
  CosetAction A;
  A.image = PermGroup::from_generators(nc, gens, n + 1);
  A.elt_map.resize(n);
  for (int g = 0; g < n; ++g) A.elt_map[g] = A.image.index_of(action(g));
  return A;
}

PermGroup regular_rep(int n, const std::function<int(int, int)>& mul, const std::vector<int>& generator_labels) {
  auto left_translation = [&](int g) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = mul(g, x);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (int g : generator_labels) gens.push_back(left_translation(g));
  if (gens.empty()) gens.push_back(Perm(n));
  PermGroup P = PermGroup::from_generators(n, gens, static_cast<long>(n) + 1);
  if (P.order() != n) fail(errc::invalid_permutation, "regular representation closure mismatch");
  return P;
}

}  // namespace ppfun
