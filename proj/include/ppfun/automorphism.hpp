#pragma once

#include <map>
#include <vector>

#include "ppfun/group.hpp"

namespace ppfun {

inline constexpr long kDefaultAutCap = 500;

/// Automorphism of a group, as a permutation of its element indices.
class AutMap {
public:
  AutMap() = default;
  AutMap(PermGroup domain, std::vector<int> images) : domain_(std::move(domain)), img_(std::move(images)) {}

  static AutMap identity(const PermGroup& G);
  static AutMap conjugation(const PermGroup& G, int g);  // i_g: x -> g x g^-1

  const PermGroup& domain() const { return domain_; }
  int apply(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  AutMap compose(const AutMap& rhs) const;  // this ∘ rhs (rhs first)
  AutMap inverse() const;
  int order() const;
  bool is_identity() const;
  /// Full check of the AutMap invariant: bijective and multiplicative.
  bool is_automorphism() const;

  bool operator==(const AutMap& o) const { return img_ == o.img_; }
  bool operator<(const AutMap& o) const { return img_ < o.img_; }

private:
  PermGroup domain_;
  std::vector<int> img_;
};

/// Injective homomorphism from `domain` onto a subgroup of `target`.
class Embedding {
public:
  Embedding() = default;
  Embedding(PermGroup domain, PermGroup target, std::vector<int> images);

  const PermGroup& domain() const { return domain_; }
  const PermGroup& target() const { return target_; }
  int apply(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  /// Preimage of a target element index, or -1.
  int preimage(int t) const;
  /// Image as a subgroup of target.
  Subgroup image() const;

  /// delta^-1 ∘ i_g ∘ delta as an automorphism of domain; g must normalize
  /// the image.
  AutMap transported_conjugation(int g) const;
  /// this ∘ a for an automorphism a of domain.
  Embedding precompose(const AutMap& a) const;
  /// i_g ∘ this (post-compose with conjugation in target).
  Embedding postcompose_conjugation(int g) const;

  bool operator==(const Embedding& o) const { return img_ == o.img_; }
  bool operator<(const Embedding& o) const { return img_ < o.img_; }

private:
  PermGroup domain_, target_;
  std::vector<int> img_;
  std::map<int, int> pre_;
};

/// All isomorphisms from L onto Q, by generator-image backtracking with
/// element-order pruning. Empty if none exist.
std::vector<Embedding> isomorphisms(const PermGroup& L, const Subgroup& Q);

/// Greedy minimal-ish generating sequence: least element extending the
/// generated subgroup at each step.
std::vector<int> generating_sequence(const PermGroup& G);

/// Extends images of a generating set to an automorphism of G; fails if the
/// assignment is inconsistent or not bijective.
AutMap automorphism_from_generator_images(const PermGroup& G, const std::vector<int>& gens,
                                           const std::vector<int>& images);

/// x -> x^k (an automorphism when G is abelian and gcd(k, |G|) = 1).
AutMap power_map(const PermGroup& G, long k);

/// Aut(G), Inn(G) and Out(G) data. The automorphism group is realized as a
/// permutation group of degree |G| acting on element indices, so all group
/// machinery applies to it.
struct AutGroupData {
  PermGroup group;                      // the acted-on group G
  PermGroup aut;                        // Aut(G) as perm group on element indices
  std::vector<int> inner;               // sorted aut-element indices forming Inn(G)
  long inn_order = 0;
  std::vector<int> out_reps;            // aut-element indices; out_reps[0] is the identity map
  std::vector<int> out_class;           // aut-element index -> out class index
  std::vector<std::vector<int>> out_mul;  // out class composition table
  std::vector<int> out_inv;

  long aut_order() const { return aut.order(); }
  long out_order() const { return static_cast<long>(out_reps.size()); }
  AutMap aut_map(int aut_elt) const { return AutMap(group, aut.element(aut_elt).images()); }
  AutMap out_rep_map(int out_idx) const { return aut_map(out_reps[out_idx]); }
  bool is_inner(int aut_elt) const;
  /// Out class of an arbitrary automorphism of G (must lie in Aut(G)).
  int out_class_of_map(const AutMap& a) const;
};

AutGroupData automorphism_group(const PermGroup& G, long aut_cap = kDefaultAutCap);

}  // namespace ppfun
