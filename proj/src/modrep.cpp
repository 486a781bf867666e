#include "ppfun/modrep.hpp"

#include <algorithm>
#include <random>

#include "ppfun/error.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

namespace {

// Semi-echelon basis: rows with distinct pivot columns, pivot entry 1; each
// new row is reduced against the existing ones before insertion.
struct Echelon {
  const GF* f;
  long cols;
  std::vector<std::vector<GF::Elt>> rows;
  std::vector<long> pivots;

  explicit Echelon(const GF* field, long c) : f(field), cols(c) {}

  // reduces v in place; returns its pivot or -1 if it reduces to zero
  long reduce(std::vector<GF::Elt>& v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      GF::Elt c = v[pivots[i]];
      if (f->is_zero(c)) continue;
      for (long j = 0; j < cols; ++j) v[j] = f->sub(v[j], f->mul(c, rows[i][j]));
    }
    for (long j = 0; j < cols; ++j)
      if (!f->is_zero(v[j])) return j;
    return -1;
  }

  // inserts v (destructively); true if it enlarged the span
  bool insert(std::vector<GF::Elt> v) {
    long p = reduce(v);
    if (p < 0) return false;
    GF::Elt il = f->inv(v[p]);
    for (long j = 0; j < cols; ++j) v[j] = f->mul(v[j], il);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  long dim() const { return static_cast<long>(rows.size()); }

  // coordinates of v in insertion order; nullopt if v is outside the span
  std::optional<std::vector<GF::Elt>> express(std::vector<GF::Elt> v) const {
    std::vector<GF::Elt> coeff(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      GF::Elt c = v[pivots[i]];
      coeff[i] = c;
      if (f->is_zero(c)) continue;
      for (long j = 0; j < cols; ++j) v[j] = f->sub(v[j], f->mul(c, rows[i][j]));
    }
    for (long j = 0; j < cols; ++j)
      if (!f->is_zero(v[j])) return std::nullopt;
    return coeff;
  }
};

std::vector<GF::Elt> row_of(const GfMat& M, long i) {
  return std::vector<GF::Elt>(M.a.begin() + i * M.cols, M.a.begin() + (i + 1) * M.cols);
}

std::vector<GF::Elt> apply_row(const GF& f, const std::vector<GF::Elt>& v, const GfMat& M) {
  std::vector<GF::Elt> out(M.cols, 0);
  for (long i = 0; i < M.rows; ++i) {
    if (f.is_zero(v[i])) continue;
    for (long j = 0; j < M.cols; ++j) out[j] = f.add(out[j], f.mul(v[i], M(i, j)));
  }
  return out;
}

// submodule generated by seeds, as a semi-echelon basis
Echelon spin(const GF& f, const std::vector<std::vector<GF::Elt>>& seeds, const std::vector<GfMat>& mats, long dim) {
  Echelon E(&f, dim);
  std::vector<std::vector<GF::Elt>> queue;
  for (const auto& s : seeds)
    if (E.insert(s)) queue.push_back(E.rows.back());
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const GfMat& M : mats) {
      auto w = apply_row(f, queue[head], M);
      if (E.insert(w)) queue.push_back(E.rows.back());
    }
  }
  return E;
}

// restriction of the action to the span of E (rows as new basis)
std::vector<GfMat> restrict_action(const GF& f, const Echelon& E, const std::vector<GfMat>& mats) {
  long k = E.dim();
  std::vector<GfMat> out;
  for (const GfMat& M : mats) {
    GfMat R(k, k, 0);
    for (long i = 0; i < k; ++i) {
      auto coeff = E.express(apply_row(f, E.rows[i], M));
      if (!coeff) fail(errc::certificate_failure, "span is not invariant");
      for (long j = 0; j < k; ++j) R(i, j) = (*coeff)[j];
    }
    out.push_back(std::move(R));
  }
  return out;
}

// action induced on the quotient by the span of E, using the standard
// basis vectors at non-pivot columns as a transversal
std::vector<GfMat> quotient_action(const GF& f, const Echelon& E, const std::vector<GfMat>& mats, long dim) {
  std::vector<char> is_pivot(dim, 0);
  for (long p : E.pivots) is_pivot[p] = 1;
  std::vector<long> free_cols;
  for (long j = 0; j < dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  long k = static_cast<long>(free_cols.size());
  // full-space expression: v = (combination of E rows) + (free coordinates)
  auto project = [&](std::vector<GF::Elt> v) {
    // reduce by E rows; what remains is supported on free columns
    for (size_t i = 0; i < E.rows.size(); ++i) {
      GF::Elt c = v[E.pivots[i]];
      if (f.is_zero(c)) continue;
      for (long j = 0; j < dim; ++j) v[j] = f.sub(v[j], f.mul(c, E.rows[i][j]));
    }
    std::vector<GF::Elt> out(k, 0);
    for (long t = 0; t < k; ++t) out[t] = v[free_cols[t]];
    return out;
  };
  std::vector<GfMat> out;
  for (const GfMat& M : mats) {
    GfMat R(k, k, 0);
    for (long t = 0; t < k; ++t) {
      std::vector<GF::Elt> e(dim, 0);
      e[free_cols[t]] = 1;
      auto img = project(apply_row(f, e, M));
      for (long j = 0; j < k; ++j) R(t, j) = img[j];
    }
    out.push_back(std::move(R));
  }
  return out;
}

std::vector<GfMat> transpose_all(const std::vector<GfMat>& mats) {
  std::vector<GfMat> out;
  for (const GfMat& M : mats) out.push_back(mat_transpose(M));
  return out;
}

std::vector<std::vector<GF::Elt>> left_nullspace(const GF& f, const GfMat& M) {
  // {v : v M = 0} = null space of M^T in the row convention
  return nullspace(f, mat_transpose(M));
}

AlgebraElt random_algebra_elt(const GF& f, const PermGroup& G, std::mt19937_64& rng, int nterms) {
  AlgebraElt a;
  for (int t = 0; t < nterms; ++t) {
    int g = static_cast<int>(rng() % G.order());
    GF::Elt c = static_cast<GF::Elt>(1 + rng() % (f.q() - 1));
    a.terms.emplace_back(g, c);
  }
  return a;
}

}  // namespace

ModuleRep regular_module(const std::shared_ptr<const GF>& field, const PermGroup& G) {
  ModuleRep M;
  M.field = field;
  M.group = G;
  M.dim = G.order();
  for (int gi : G.generator_indices()) {
    GfMat mat(M.dim, M.dim, 0);
    for (long x = 0; x < M.dim; ++x) mat(x, G.mul(static_cast<int>(x), gi)) = 1;
    M.gen_mats.push_back(std::move(mat));
  }
  return M;
}

GfMat element_matrix(const ModuleRep& M, int elt) {
  const GF& f = *M.field;
  // walk the BFS word chain
  std::vector<int> gens;
  int cur = elt;
  while (true) {
    auto [par, gi] = M.group.word_step(cur);
    if (par < 0) break;
    gens.push_back(gi);
    cur = par;
  }
  GfMat R = mat_identity(f, M.dim);
  for (size_t i = gens.size(); i-- > 0;) R = mat_mul(f, R, M.gen_mats[gens[i]]);
  return R;
}

bool is_representation(const ModuleRep& M) {
  const GF& f = *M.field;
  long n = M.group.order();
  std::vector<GfMat> all(n);
  for (int x = 0; x < n; ++x) all[x] = element_matrix(M, x);
  for (int x = 0; x < n; ++x) {
    for (size_t gi = 0; gi < M.gen_mats.size(); ++gi) {
      int y = M.group.mul(x, M.group.generator_indices()[gi]);
      if (mat_mul(f, all[x], M.gen_mats[gi]).a != all[y].a) return false;
    }
  }
  // identity really is the identity matrix, so every element is invertible
  return all[M.group.identity()].a == mat_identity(f, M.dim).a;
}

GfMat evaluate(const ModuleRep& M, const AlgebraElt& a) {
  const GF& f = *M.field;
  GfMat R(M.dim, M.dim, 0);
  for (auto [g, c] : a.terms) {
    GfMat Mg = element_matrix(M, g);
    for (size_t i = 0; i < R.a.size(); ++i) R.a[i] = f.add(R.a[i], f.mul(c, Mg.a[i]));
  }
  return R;
}

namespace {

void chop_rec(const ModuleRep& M, std::mt19937_64& rng, std::vector<CompositionFactor>& out) {
  const GF& f = *M.field;
  if (M.dim == 0) return;
  if (M.dim == 1) {
    out.push_back({M, 1, AlgebraElt{}});
    return;
  }
  auto split = [&](const Echelon& E) {
    ModuleRep sub{M.field, M.group, E.dim(), restrict_action(f, E, M.gen_mats)};
    ModuleRep quo{M.field, M.group, M.dim - E.dim(), quotient_action(f, E, M.gen_mats, M.dim)};
    chop_rec(sub, rng, out);
    chop_rec(quo, rng, out);
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    AlgebraElt a = random_algebra_elt(f, M.group, rng, 3 + attempt % 4);
    GfMat theta = evaluate(M, a);
    auto kernel = left_nullspace(f, theta);
    if (kernel.empty()) continue;  // invertible, useless
    for (const auto& v : kernel) {
      Echelon E = spin(f, {v}, M.gen_mats, M.dim);
      if (E.dim() < M.dim) {
        split(E);
        return;
      }
    }
    if (kernel.size() == 1) {
      // Norton: kernel vector spins to everything; check the dual side
      auto dual_kernel = left_nullspace(f, mat_transpose(theta));
      auto dual_mats = transpose_all(M.gen_mats);
      Echelon D = spin(f, {dual_kernel.at(0)}, dual_mats, M.dim);
      if (D.dim() == M.dim) {
        out.push_back({M, 1, a});  // certified irreducible
        return;
      }
      // proper dual submodule; its annihilator is a proper submodule
      GfMat DT(M.dim, D.dim(), 0);
      for (long i = 0; i < D.dim(); ++i)
        for (long j = 0; j < M.dim; ++j) DT(j, i) = D.rows[i][j];
      auto ann = nullspace(f, mat_transpose(DT));
      Echelon E = spin(f, ann, M.gen_mats, M.dim);
      if (E.dim() < M.dim && E.dim() > 0) {
        split(E);
        return;
      }
      fail(errc::certificate_failure, "annihilator of dual submodule did not split the module");
    }
  }
  fail(errc::certificate_failure, "no splitting element found within the retry bound");
}

}  // namespace

std::vector<CompositionFactor> chop(const ModuleRep& M, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CompositionFactor> raw;
  chop_rec(M, rng, raw);
  // group by isomorphism
  std::vector<CompositionFactor> out;
  for (auto& c : raw) {
    bool merged = false;
    for (auto& o : out) {
      if (o.factor.dim != c.factor.dim) continue;
      if (modules_isomorphic(o.factor, c.factor, o.witness)) {
        o.multiplicity += c.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CompositionFactor& a, const CompositionFactor& b) { return a.factor.dim < b.factor.dim; });
  return out;
}

namespace {

// standard basis from a seed vector: raw images in BFS discovery order
std::optional<GfMat> standard_basis(const GF& f, const ModuleRep& M, const std::vector<GF::Elt>& seed) {
  Echelon E(&f, M.dim);
  std::vector<std::vector<GF::Elt>> raw;
  if (!E.insert(seed)) return std::nullopt;
  raw.push_back(seed);
  for (size_t head = 0; head < raw.size() && E.dim() < M.dim; ++head) {
    for (const GfMat& g : M.gen_mats) {
      auto w = apply_row(f, raw[head], g);
      if (E.insert(w)) raw.push_back(w);
      if (E.dim() == M.dim) break;
    }
  }
  if (E.dim() < M.dim) return std::nullopt;
  GfMat B(M.dim, M.dim, 0);
  for (long i = 0; i < M.dim; ++i)
    for (long j = 0; j < M.dim; ++j) B(i, j) = raw[i][j];
  return B;
}

}  // namespace

bool modules_isomorphic(const ModuleRep& A, const ModuleRep& B, const AlgebraElt& witness) {
  if (A.dim != B.dim) return false;
  const GF& f = *A.field;
  if (A.dim == 1) {
    for (size_t g = 0; g < A.gen_mats.size(); ++g)
      if (A.gen_mats[g].a != B.gen_mats[g].a) return false;
    return true;
  }
  GfMat ta = evaluate(A, witness), tb = evaluate(B, witness);
  auto ka = left_nullspace(f, ta), kb = left_nullspace(f, tb);
  if (ka.size() != 1 || kb.size() != 1) return ka.size() == kb.size() && false;
  auto SA = standard_basis(f, A, ka[0]);
  auto SB = standard_basis(f, B, kb[0]);
  if (!SA || !SB) return false;
  // phi = SA^-1 SB intertwines iff isomorphic
  auto inv = mat_inverse(f, *SA);
  if (!inv) return false;
  GfMat phi = mat_mul(f, *inv, *SB);
  for (size_t g = 0; g < A.gen_mats.size(); ++g) {
    if (mat_mul(f, A.gen_mats[g], phi).a != mat_mul(f, phi, B.gen_mats[g]).a) return false;
  }
  return true;
}

SimpleInventory simple_modules(const PermGroup& G, long p, std::uint64_t seed, long cap) {
  if (G.order() > cap)
    fail(errc::oracle_cap_exceeded, "group order " + std::to_string(G.order()) + " exceeds the oracle cap");
  FieldSpec fs = splitting_field(G, p);
  auto field = std::make_shared<const GF>(fs.p, fs.m);
  std::vector<CompositionFactor> factors = chop(regular_module(field, G), seed);

  SimpleInventory inv;
  inv.field = field;
  for (auto& c : factors) {
    inv.simples.push_back(c.factor);
    inv.witnesses.push_back(c.witness);
    inv.reg_multiplicity.push_back(c.multiplicity);
  }
  long p_regular = 0;
  for (const auto& cls : conjugacy_classes(G))
    if (cls.element_order % p != 0) ++p_regular;
  if (static_cast<long>(inv.simples.size()) != p_regular)
    fail(errc::certificate_failure, "simple count disagrees with the p-regular class count");
  return inv;
}

}  // namespace ppfun
