#pragma once

#include <functional>

#include "ppfun/automorphism.hpp"
#include "ppfun/group.hpp"

namespace ppfun {

/// L ⋊ <u> realized by the left regular action on |L|·ord(u) points,
/// returned with the embeddings of L and of <u>.
struct SemidirectProduct {
  PermGroup group;
  Embedding embed_base;            // L -> group
  std::vector<int> embed_acting;   // u^j (j = 0..ord(u)-1) -> element index
  int acting_order = 1;
  int u_element() const { return embed_acting[acting_order == 1 ? 0 : 1]; }
};

SemidirectProduct semidirect(const PermGroup& L, const AutMap& u);

struct DirectProduct {
  PermGroup group;
  Embedding embed_left, embed_right;
};

/// A × B on the disjoint union of their point sets.
DirectProduct direct_product(const PermGroup& A, const PermGroup& B);

/// Action of G on the left cosets of H by left multiplication.
/// For normal H the image is a permutation realization of G/H.
struct CosetAction {
  PermGroup image;
  std::vector<int> elt_map;  // G element index -> image element index
};

CosetAction coset_action(const PermGroup& G, const Subgroup& H);

/// Left regular permutation representation of an abstract group given by a
/// multiplication function on labels 0..n-1 (0 = identity); generators are
/// the listed labels.
PermGroup regular_rep(int n, const std::function<int(int, int)>& mul, const std::vector<int>& generator_labels);

}  // namespace ppfun
