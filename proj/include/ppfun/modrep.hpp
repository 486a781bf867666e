#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ppfun/gf.hpp"
#include "ppfun/group.hpp"
#include "ppfun/linalg.hpp"

namespace ppfun {

inline constexpr long kDefaultOracleCap = 60;

using GfMat = Matrix<GF::Elt>;

/// A kG-module as row vectors with right action: v -> v * M(g), and
/// M(gh) = M(g) M(h). One matrix per group generator.
struct ModuleRep {
  std::shared_ptr<const GF> field;
  PermGroup group;
  long dim = 0;
  std::vector<GfMat> gen_mats;
};

/// Right regular module: basis e_x, e_x * M(g) = e_{xg}.
ModuleRep regular_module(const std::shared_ptr<const GF>& field, const PermGroup& G);

/// Matrix of an arbitrary element, by its BFS word in the generators.
GfMat element_matrix(const ModuleRep& M, int elt);

/// Full check: matrices assigned to all elements via words multiply
/// consistently (so the assignment is a homomorphism) and are invertible.
bool is_representation(const ModuleRep& M);

/// A formal F-linear combination of group elements; evaluates in any module
/// over the same group, which makes it transportable between modules.
struct AlgebraElt {
  std::vector<std::pair<int, GF::Elt>> terms;  // (element index, coefficient)
};

GfMat evaluate(const ModuleRep& M, const AlgebraElt& a);

/// A composition factor with multiplicity; `witness` has nullity one on the
/// factor (empty for 1-dimensional factors).
struct CompositionFactor {
  ModuleRep factor;
  long multiplicity = 1;
  AlgebraElt witness;
};

/// MeatAxe chop: full composition-factor multiset of M, with irreducibility
/// certificates (Norton test). The random stream is seeded explicitly, and
/// the returned multiset is independent of the seed. Aborts with
/// CertificateFailure instead of guessing.
std::vector<CompositionFactor> chop(const ModuleRep& M, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Module isomorphism via the standard-basis method. `witness` must have
/// nullity one on A (e.g. from A's certificate); both modules must be
/// irreducible for the verdict to be meaningful.
bool modules_isomorphic(const ModuleRep& A, const ModuleRep& B, const AlgebraElt& witness);

/// Simple-module inventory of kG over the fixed splitting field.
struct SimpleInventory {
  std::shared_ptr<const GF> field;
  std::vector<ModuleRep> simples;
  std::vector<AlgebraElt> witnesses;
  std::vector<long> reg_multiplicity;  // multiplicity in the regular module
};

/// Chops the regular module and deduplicates; asserts the Brauer count
/// (#simples = #p-regular classes). Throws OracleCapExceeded above the cap.
SimpleInventory simple_modules(const PermGroup& G, long p, std::uint64_t seed = 0x9e3779b97f4a7c15ULL,
                               long cap = kDefaultOracleCap);

}  // namespace ppfun
