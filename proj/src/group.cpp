#include "ppfun/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ppfun/error.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

namespace {
constexpr long kMulTableMax = 1024;
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens, long order_cap) {
  if (degree < 1) fail(errc::invalid_permutation, "degree must be positive");
  for (const Perm& g : gens)
    if (g.degree() != degree) fail(errc::invalid_permutation, "generator degree mismatch");

  // BFS closure, recording one factorization (parent, gen) per element.
  std::vector<Perm> elts;
  std::map<Perm, int> index;
  std::vector<std::pair<int, int>> word;
  Perm id(degree);
  elts.push_back(id);
  index[id] = 0;
  word.emplace_back(-1, -1);
  for (size_t head = 0; head < elts.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = elts[head] * gens[gi];
      if (index.count(next)) continue;
      if (static_cast<long>(elts.size()) >= order_cap)
        fail(errc::closure_exceeds_cap, "group order exceeds cap " + std::to_string(order_cap));
      index[next] = static_cast<int>(elts.size());
      elts.push_back(std::move(next));
      word.emplace_back(static_cast<int>(head), static_cast<int>(gi));
    }
  }

  // Re-index in lexicographic element order.
  long n = static_cast<long>(elts.size());
  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) { return elts[a] < elts[b]; });
  std::vector<int> new_of_old(n);
  for (long r = 0; r < n; ++r) new_of_old[by_rank[r]] = static_cast<int>(r);

  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->gens = gens;
  d->elements.resize(n);
  d->word.resize(n);
  for (long r = 0; r < n; ++r) {
    int old = by_rank[r];
    d->elements[r] = elts[old];
    auto [par, gi] = word[old];
    d->word[r] = par < 0 ? std::pair<int, int>{-1, -1} : std::pair<int, int>{new_of_old[par], gi};
  }
  d->id_index = new_of_old[0];

  d->inv.resize(n);
  d->elt_order.resize(n);
  std::map<Perm, int> sorted_index;
  for (long i = 0; i < n; ++i) sorted_index[d->elements[i]] = static_cast<int>(i);
  for (long i = 0; i < n; ++i) {
    d->inv[i] = sorted_index[d->elements[i].inverse()];
    d->elt_order[i] = d->elements[i].order();
  }
  d->gen_idx.reserve(gens.size());
  for (const Perm& g : gens) d->gen_idx.push_back(sorted_index[g]);

  if (n <= kMulTableMax) {
    d->mul_table.resize(n * n);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) d->mul_table[a * n + b] = sorted_index[d->elements[a] * d->elements[b]];
  }

  PermGroup G;
  G.d_ = std::move(d);
  return G;
}

int PermGroup::index_of(const Perm& p) const {
  const auto& v = d_->elements;
  auto it = std::lower_bound(v.begin(), v.end(), p);
  if (it == v.end() || *it != p) return -1;
  return static_cast<int>(it - v.begin());
}

int PermGroup::mul(int a, int b) const {
  if (!d_->mul_table.empty()) return d_->mul_table[static_cast<long>(a) * order() + b];
  return index_of(d_->elements[a] * d_->elements[b]);
}

int PermGroup::power(int a, long e) const {
  int n = element_order(a);
  e %= n;
  if (e < 0) e += n;
  int acc = identity(), base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool PermGroup::is_abelian() const {
  for (int a : generator_indices())
    for (int b : generator_indices())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool PermGroup::is_pgroup(long p) const {
  long n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

long PermGroup::exponent() const {
  long e = 1;
  for (long i = 0; i < order(); ++i) e = std::lcm(e, static_cast<long>(d_->elt_order[i]));
  return e;
}

Subgroup::Subgroup(PermGroup parent, std::vector<int> members) : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(int elt_index) const {
  return std::binary_search(members_.begin(), members_.end(), elt_index);
}

PermGroup Subgroup::as_group() const {
  std::vector<Perm> gens;
  gens.reserve(members_.size());
  for (int i : members_) gens.push_back(parent_.element(i));
  if (gens.empty()) gens.push_back(Perm(parent_.degree()));
  return PermGroup::from_generators(parent_.degree(), std::move(gens), parent_.order() + 1);
}

std::vector<ConjClassRec> conjugacy_classes(const PermGroup& G) {
  long n = G.order();
  std::vector<int> cls(n, -1);
  std::vector<ConjClassRec> out;
  const auto& gens = G.generator_indices();
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjClassRec rec;
    rec.representative = x;  // least index since x increases
    std::vector<int> stack{x};
    cls[x] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      rec.members.push_back(y);
      for (int g : gens) {
        int z = G.conj(g, y);
        if (cls[z] < 0) {
          cls[z] = cls[x];
          stack.push_back(z);
        }
      }
    }
    std::sort(rec.members.begin(), rec.members.end());
    rec.size = static_cast<long>(rec.members.size());
    rec.element_order = G.element_order(x);
    out.push_back(std::move(rec));
  }
  return out;
}

Subgroup centralizer(const PermGroup& G, const std::vector<int>& S) {
  std::vector<int> mem;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int s : S)
      if (G.mul(g, s) != G.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(g);
  }
  return Subgroup(G, std::move(mem));
}

Subgroup centralizer(const PermGroup& G, const Subgroup& H) { return centralizer(G, H.members()); }

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  std::vector<int> mem;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int h : H.members())
      if (!H.contains(G.conj(g, h))) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(g);
  }
  return Subgroup(G, std::move(mem));
}

Subgroup center(const PermGroup& G) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return centralizer(G, all);
}

Subgroup trivial_subgroup(const PermGroup& G) { return Subgroup(G, {G.identity()}); }

Subgroup full_subgroup(const PermGroup& G) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G, std::move(all));
}

Subgroup closure_subgroup(const PermGroup& G, std::vector<int> seed) {
  std::set<int> mem{G.identity()};
  std::vector<int> queue{G.identity()};
  for (int s : seed)
    if (mem.insert(s).second) queue.push_back(s);
  for (size_t head = 0; head < queue.size(); ++head)
    for (int s : seed) {
      int z = G.mul(queue[head], s);
      if (mem.insert(z).second) queue.push_back(z);
    }
  return Subgroup(G, std::vector<int>(mem.begin(), mem.end()));
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<int> mem;
  std::set_intersection(A.members().begin(), A.members().end(), B.members().begin(), B.members().end(),
                        std::back_inserter(mem));
  return Subgroup(A.parent(), std::move(mem));
}

Subgroup product_subgroup(const Subgroup& A, const Subgroup& B) {
  const PermGroup& G = A.parent();
  std::set<int> mem;
  for (int a : A.members())
    for (int b : B.members()) mem.insert(G.mul(a, b));
  long n = static_cast<long>(mem.size());
  if (A.order() * B.order() % n != 0 || n % A.order() != 0)
    fail(errc::invalid_permutation, "product of subgroups is not a subgroup");
  return Subgroup(G, std::vector<int>(mem.begin(), mem.end()));
}

std::vector<int> conjugate_members(const PermGroup& G, const std::vector<int>& members, int g) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(G.conj(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const PermGroup& G, const Subgroup& H) {
  for (int g : G.generator_indices())
    for (int h : H.members())
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

bool conjugate_subgroups(const PermGroup& G, const Subgroup& H, const Subgroup& K, int* witness) {
  if (H.order() != K.order()) return false;
  for (int g = 0; g < G.order(); ++g) {
    if (conjugate_members(G, H.members(), g) == K.members()) {
      if (witness) *witness = g;
      return true;
    }
  }
  return false;
}

Subgroup sylow(const PermGroup& G, long p) {
  long target = p_part(G.order(), p);
  Subgroup S = trivial_subgroup(G);
  while (S.order() < target) {
    Subgroup N = normalizer(G, S);
    bool grown = false;
    for (int x : N.members()) {
      if (S.contains(x)) continue;
      long ord = G.element_order(x);
      if (p_prime_part(ord, p) != 1) continue;
      // xS has p-power order in N/S; <S,x> is a p-group containing S with index p^k.
      std::vector<int> seed = S.members();
      seed.push_back(x);
      Subgroup T = closure_subgroup(G, std::move(seed));
      if (p_prime_part(T.order(), p) == 1 && T.order() > S.order()) {
        S = std::move(T);
        grown = true;
        break;
      }
    }
    if (!grown) fail(errc::invalid_permutation, "sylow growth stalled");  // cannot happen
  }
  return S;
}

std::pair<int, int> pp_decomposition(const PermGroup& G, int x, long p) {
  long n = G.element_order(x);
  long np = p_part(n, p), m = n / np;
  // x_p = x^(m * (m^-1 mod np)), x_p' = x^(np * (np^-1 mod m)).
  long ep = (np == 1) ? 0 : m * inv_mod(m % np, np);
  long em = (m == 1) ? 0 : np * inv_mod(np % m, m);
  int xp = (np == 1) ? G.identity() : G.power(x, ep);
  int xq = (m == 1) ? G.identity() : G.power(x, em);
  return {xp, xq};
}

std::vector<Subgroup> p_subgroups_up_to_conjugacy(const PermGroup& G, long p) {
  Subgroup P = sylow(G, p);
  // All subgroups of the p-group P by cyclic extension: each subgroup of
  // order p^(k+1) is generated by a normal index-p subgroup and one element.
  std::set<std::vector<int>> level{trivial_subgroup(G).members()};
  std::set<std::vector<int>> all = level;
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& mem : level) {
      Subgroup H(G, mem);
      // normalizer of H inside P
      std::vector<int> nmem;
      for (int x : P.members()) {
        if (conjugate_members(G, mem, x) == mem) nmem.push_back(x);
      }
      for (int x : nmem) {
        if (H.contains(x)) continue;
        if (!H.contains(G.power(x, p))) continue;
        std::vector<int> seed = mem;
        seed.push_back(x);
        Subgroup T = closure_subgroup(G, std::move(seed));
        if (T.order() == H.order() * p) next.insert(T.members());
      }
    }
    for (const auto& m : next) all.insert(m);
    level = std::move(next);
  }
  // Fuse under G-conjugacy; representative = least member list in its orbit.
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> reps;
  for (const auto& mem : all) {
    if (seen.count(mem)) continue;
    std::vector<int> best = mem;
    std::set<std::vector<int>> orbit{mem};
    std::vector<std::vector<int>> queue{mem};
    for (size_t head = 0; head < queue.size(); ++head)
      for (int g : G.generator_indices()) {
        auto im = conjugate_members(G, queue[head], g);
        if (orbit.insert(im).second) {
          queue.push_back(im);
          if (im < best) best = im;
        }
      }
    for (const auto& m : orbit) seen.insert(m);
    reps.emplace_back(G, best);
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return reps;
}

}  // namespace ppfun
