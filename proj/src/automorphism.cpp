#include "ppfun/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ppfun/error.hpp"

namespace ppfun {

AutMap AutMap::identity(const PermGroup& G) {
  std::vector<int> img(G.order());
  std::iota(img.begin(), img.end(), 0);
  return AutMap(G, std::move(img));
}

AutMap AutMap::conjugation(const PermGroup& G, int g) {
  std::vector<int> img(G.order());
  for (int x = 0; x < G.order(); ++x) img[x] = G.conj(g, x);
  return AutMap(G, std::move(img));
}

AutMap AutMap::compose(const AutMap& rhs) const {
  std::vector<int> img(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) img[x] = img_[rhs.img_[x]];
  return AutMap(domain_, std::move(img));
}

AutMap AutMap::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
  return AutMap(domain_, std::move(img));
}

int AutMap::order() const { return Perm(img_).order(); }

bool AutMap::is_identity() const {
  for (size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

bool AutMap::is_automorphism() const {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  const PermGroup& G = domain_;
  for (int x = 0; x < G.order(); ++x)
    for (int g : G.generator_indices())
      if (img_[G.mul(x, g)] != G.mul(img_[x], img_[g])) return false;
  return true;
}

Embedding::Embedding(PermGroup domain, PermGroup target, std::vector<int> images)
    : domain_(std::move(domain)), target_(std::move(target)), img_(std::move(images)) {
  for (size_t i = 0; i < img_.size(); ++i) pre_[img_[i]] = static_cast<int>(i);
}

int Embedding::preimage(int t) const {
  auto it = pre_.find(t);
  return it == pre_.end() ? -1 : it->second;
}

Subgroup Embedding::image() const { return Subgroup(target_, img_); }

AutMap Embedding::transported_conjugation(int g) const {
  std::vector<int> img(domain_.order());
  for (int l = 0; l < domain_.order(); ++l) {
    int t = target_.conj(g, img_[l]);
    int back = preimage(t);
    if (back < 0) fail(errc::invalid_permutation, "conjugator does not normalize the image");
    img[l] = back;
  }
  return AutMap(domain_, std::move(img));
}

Embedding Embedding::precompose(const AutMap& a) const {
  std::vector<int> img(img_.size());
  for (size_t l = 0; l < img_.size(); ++l) img[l] = img_[a.apply(static_cast<int>(l))];
  return Embedding(domain_, target_, std::move(img));
}

Embedding Embedding::postcompose_conjugation(int g) const {
  std::vector<int> img(img_.size());
  for (size_t l = 0; l < img_.size(); ++l) img[l] = target_.conj(g, img_[l]);
  return Embedding(domain_, target_, std::move(img));
}

std::vector<int> generating_sequence(const PermGroup& G) {
  std::vector<int> gens;
  Subgroup S = trivial_subgroup(G);
  while (S.order() < G.order()) {
    int next = -1;
    for (int x = 0; x < G.order(); ++x)
      if (!S.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    std::vector<int> seed = S.members();
    seed.push_back(next);
    S = closure_subgroup(G, std::move(seed));
  }
  return gens;
}

namespace {

// Extends the partial assignment gens[i] -> images[i] to a homomorphism on
// the subgroup generated by those gens, checking consistency along the way.
// `sub` lists that subgroup's members. On success fills img (indexed by
// element of G, -1 when outside sub) and returns true.
bool build_partial_hom(const PermGroup& L, const PermGroup& T, const std::vector<int>& gens,
                       const std::vector<int>& images, const std::vector<int>& sub, std::vector<int>& img) {
  img.assign(L.order(), -1);
  img[L.identity()] = T.identity();
  std::vector<int> queue{L.identity()};
  size_t processed = 0;
  while (processed < queue.size()) {
    int x = queue[processed++];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = L.mul(x, gens[gi]);
      int v = T.mul(img[x], images[gi]);
      if (img[y] < 0) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        return false;
      }
    }
  }
  if (queue.size() != sub.size()) return false;  // not a hom on all of <gens>
  return true;
}

}  // namespace

std::vector<Embedding> isomorphisms(const PermGroup& L, const Subgroup& Q) {
  std::vector<Embedding> out;
  if (L.order() != Q.order()) return out;
  const PermGroup& T = Q.parent();

  // order census must match
  std::multiset<int> co1, co2;
  for (int x = 0; x < L.order(); ++x) co1.insert(L.element_order(x));
  for (int m : Q.members()) co2.insert(T.element_order(m));
  if (co1 != co2) return out;

  std::vector<int> gens = generating_sequence(L);
  size_t r = gens.size();
  if (r == 0) {  // trivial group
    out.emplace_back(L, T, std::vector<int>{T.identity()});
    return out;
  }
  // subgroup chain <g_1..g_i>
  std::vector<std::vector<int>> chain(r);
  {
    Subgroup S = trivial_subgroup(L);
    for (size_t i = 0; i < r; ++i) {
      std::vector<int> seed = S.members();
      seed.push_back(gens[i]);
      S = closure_subgroup(L, std::move(seed));
      chain[i] = S.members();
    }
  }
  // candidate images by element order
  std::vector<std::vector<int>> cands(r);
  for (size_t i = 0; i < r; ++i)
    for (int m : Q.members())
      if (T.element_order(m) == L.element_order(gens[i])) cands[i].push_back(m);

  std::vector<int> images(r, -1), img;
  auto dfs = [&](auto&& self, size_t depth) -> void {
    if (depth == r) {
      std::vector<int> full = img;  // verified hom on all of L, injective by size
      bool onto = true;
      for (int v : full)
        if (!Q.contains(v)) {
          onto = false;
          break;
        }
      std::set<int> distinct(full.begin(), full.end());
      if (onto && distinct.size() == full.size()) out.emplace_back(L, T, std::move(full));
      return;
    }
    for (int c : cands[depth]) {
      images[depth] = c;
      std::vector<int> partial_gens(gens.begin(), gens.begin() + depth + 1);
      std::vector<int> partial_imgs(images.begin(), images.begin() + depth + 1);
      if (build_partial_hom(L, T, partial_gens, partial_imgs, chain[depth], img)) self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

AutMap automorphism_from_generator_images(const PermGroup& G, const std::vector<int>& gens,
                                           const std::vector<int>& images) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> img;
  if (!build_partial_hom(G, G, gens, images, all, img))
    fail(errc::invalid_permutation, "generator images do not extend to an endomorphism");
  AutMap a(G, std::move(img));
  if (!a.is_automorphism()) fail(errc::invalid_permutation, "generator images do not define an automorphism");
  return a;
}

AutMap power_map(const PermGroup& G, long k) {
  std::vector<int> img(G.order());
  for (int x = 0; x < G.order(); ++x) img[x] = G.power(x, k);
  AutMap a(G, std::move(img));
  if (!a.is_automorphism()) fail(errc::invalid_permutation, "power map is not an automorphism");
  return a;
}

bool AutGroupData::is_inner(int aut_elt) const { return std::binary_search(inner.begin(), inner.end(), aut_elt); }

int AutGroupData::out_class_of_map(const AutMap& a) const {
  int idx = aut.index_of(Perm(a.images()));
  if (idx < 0) fail(errc::invalid_permutation, "map is not an automorphism of this group");
  return out_class[idx];
}

AutGroupData automorphism_group(const PermGroup& G, long aut_cap) {
  if (G.order() > aut_cap) fail(errc::cap_exceeded, "automorphism computation exceeds cap " + std::to_string(aut_cap));
  AutGroupData D;
  D.group = G;

  std::vector<Embedding> all = isomorphisms(G, full_subgroup(G));
  long na = static_cast<long>(all.size());

  // Small generating set for Aut(G), greedy over the sorted automorphism list.
  std::vector<Perm> gens;
  std::set<Perm> have{Perm(G.order())};
  auto rebuild_closure = [&] {
    have.clear();
    std::vector<Perm> queue{Perm(G.order())};
    have.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head)
      for (const Perm& g : gens) {
        Perm p = queue[head] * g;
        if (have.insert(p).second) queue.push_back(std::move(p));
      }
  };
  for (const Embedding& e : all) {
    Perm p(e.images());
    if (have.count(p)) continue;
    gens.push_back(std::move(p));
    rebuild_closure();
  }
  if (gens.empty()) gens.push_back(Perm(G.order()));
  D.aut = PermGroup::from_generators(G.order(), gens, na + 1);
  if (D.aut.order() != na) fail(errc::invalid_permutation, "automorphism closure mismatch");

  // Inn(G)
  std::set<int> inner;
  for (int g = 0; g < G.order(); ++g) {
    AutMap ig = AutMap::conjugation(G, g);
    inner.insert(D.aut.index_of(Perm(ig.images())));
  }
  D.inner.assign(inner.begin(), inner.end());
  D.inn_order = static_cast<long>(D.inner.size());

  // Coset decomposition Aut = ⊔ Inn∘rep, identity coset first.
  D.out_class.assign(na, -1);
  int id_aut = D.aut.index_of(Perm(G.order()));
  D.out_reps.push_back(id_aut);
  for (int i : D.inner) D.out_class[i] = 0;
  for (int a = 0; a < na; ++a) {
    if (D.out_class[a] >= 0) continue;
    int cls = static_cast<int>(D.out_reps.size());
    D.out_reps.push_back(a);
    for (int i : D.inner) D.out_class[D.aut.mul(i, a)] = cls;
  }

  long no = D.out_order();
  D.out_mul.assign(no, std::vector<int>(no));
  D.out_inv.resize(no);
  for (long i = 0; i < no; ++i) {
    for (long j = 0; j < no; ++j) D.out_mul[i][j] = D.out_class[D.aut.mul(D.out_reps[i], D.out_reps[j])];
    D.out_inv[i] = D.out_class[D.aut.inv(D.out_reps[i])];
  }
  return D;
}

}  // namespace ppfun
