#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppfun/automorphism.hpp"
#include "ppfun/construct.hpp"
#include "ppfun/group.hpp"

namespace ppfun {

/// A finite p-group L together with a p'-automorphism u.
struct DDeltaPair {
  PermGroup L;
  AutMap u;
  long p = 2;
  std::string name;  // display only
};

bool is_ddelta_pair(const PermGroup& L, const AutMap& u, long p);

/// Aut(L,u) = automorphisms of L<u> sending u to a conjugate of u, and
/// Out(L,u) = Aut(L,u)/Inn(L<u>), realized inside Aut(L<u>).
struct PairAutData {
  DDeltaPair pair;
  SemidirectProduct product;            // L<u> with embeddings
  AutGroupData aut;                     // Aut(L<u>)
  std::vector<int> pair_out_classes;    // out classes fixing the conjugacy class of u
  long aut_pair_order = 0;              // |Aut(L,u)|
  long out_pair_order = 0;              // |Out(L,u)|

  /// Composition table and inverses restricted to Out(L,u); indices are
  /// positions in pair_out_classes.
  std::vector<std::vector<int>> out_mul;
  std::vector<int> out_inv;
  /// Position in pair_out_classes of an Aut(L<u>) out class, or -1.
  int position_of_out_class(int out_class) const;
};

PairAutData pair_aut(const DDeltaPair& pair, long aut_cap = kDefaultAutCap);

/// (L,u) ~ (L',u') iff some isomorphism L<u> -> L'<u'> carries u to a
/// conjugate of u'.
bool pairs_isomorphic(const DDeltaPair& a, const DDeltaPair& b);

/// Representatives of all D^Delta-pairs with |L| <= max_order, up to pair
/// isomorphism, over the shipped p-group catalogue.
std::vector<DDeltaPair> enumerate_ddelta_pairs(long p, long max_order);

enum class VanishReason {
  no_normal_sylow_complement_form,
  k_not_elementary_or_split_failure,
  k_not_cyclic,
  k_not_faithful,
};

const char* vanish_reason_name(VanishReason r);

/// Structural (non-)vanishing classification of the essential algebra for a
/// coefficient ring in which every prime other than p is invertible.
struct EssentialSupportReport {
  bool nonvanishing = false;
  VanishReason reason = VanishReason::no_normal_sylow_complement_form;
  // witnesses, present when nonvanishing:
  std::optional<PermGroup> L;  // the Sylow p-subgroup as a group
  std::optional<AutMap> u;     // action of a chosen generator of K on L
  long k_order = 0;
  std::optional<Subgroup> sylow_p;
  std::optional<Subgroup> complement_k;
};

EssentialSupportReport essential_support(const PermGroup& G, long p);

/// K = Q x C with Q a q-group and C cyclic (Brauer elementary).
bool is_elementary(const PermGroup& K);

bool is_cyclic(const PermGroup& K);

}  // namespace ppfun
