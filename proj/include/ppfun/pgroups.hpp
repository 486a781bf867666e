#pragma once

#include <string>
#include <vector>

#include "ppfun/group.hpp"

namespace ppfun {

struct CatalogueEntry {
  std::string name;
  PermGroup group;
};

/// Shipped p-group catalogue: complete up to order 16 for p = 2 (14 groups of
/// order 16) and order 27 for p = 3. For p >= 5 only cyclic groups are
/// shipped, which is complete up to order p.
/// Throws CatalogueIncomplete when max_order exceeds the shipped range.
std::vector<CatalogueEntry> pgroup_catalogue(long p, long max_order);

/// Assorted named groups of order <= 24 (plus a few semidirect witnesses),
/// used by the classification sweeps.
std::vector<CatalogueEntry> small_group_catalogue();

/// (C3 x C3) ⋊ C2 with the diagonal inversion action (faithful, cyclic).
PermGroup e9_semidirect_c2();
/// (C3 x C3) ⋊ (C2 x C2) with faithful action (each C2 inverting one factor).
PermGroup e9_semidirect_v4();

}  // namespace ppfun
