#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ppfun/perm.hpp"

namespace ppfun {

inline constexpr long kDefaultOrderCap = 2000;

/// A finite permutation group given by the full, lexicographically sorted
/// list of its elements. Immutable; copies share the underlying data.
/// All element-level operations work on indices into elements().
class PermGroup {
public:
  PermGroup() = default;

  static PermGroup from_generators(int degree, std::vector<Perm> gens, long order_cap = kDefaultOrderCap);

  /// Builtin catalogue: C_n, S_n, A_n, D_2n (order 2n), Q8, V4,
  /// elementary abelian E_{p^k}, and 'x'-separated direct products of
  /// cyclics such as C2xC4.
  static PermGroup named(const std::string& name, long order_cap = kDefaultOrderCap);

  bool valid() const { return d_ != nullptr; }
  int degree() const { return d_->degree; }
  long order() const { return static_cast<long>(d_->elements.size()); }
  const std::vector<Perm>& elements() const { return d_->elements; }
  const std::vector<Perm>& generators() const { return d_->gens; }
  const Perm& element(int i) const { return d_->elements[i]; }

  /// Index of p in elements(), or -1.
  int index_of(const Perm& p) const;

  int identity() const { return d_->id_index; }
  int mul(int a, int b) const;
  int inv(int a) const { return d_->inv[a]; }
  int element_order(int a) const { return d_->elt_order[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int power(int a, long e) const;

  /// BFS factorization step: element a = element(parent) * gens()[gen].
  /// Identity yields {-1,-1}. Used to evaluate homomorphisms by words.
  std::pair<int, int> word_step(int a) const { return d_->word[a]; }
  /// Indices of the generators inside elements().
  const std::vector<int>& generator_indices() const { return d_->gen_idx; }

  bool is_abelian() const;
  bool is_pgroup(long p) const;
  long exponent() const;

  bool same_data(const PermGroup& o) const { return d_ == o.d_; }

private:
  struct Data {
    int degree = 0;
    std::vector<Perm> gens;
    std::vector<int> gen_idx;
    std::vector<Perm> elements;
    int id_index = 0;
    std::vector<int> inv;
    std::vector<int> elt_order;
    std::vector<std::pair<int, int>> word;
    std::vector<int> mul_table;  // empty unless order small enough
  };
  std::shared_ptr<const Data> d_;
};

/// A conjugacy class, represented by its least element.
struct ConjClassRec {
  int representative = 0;
  long size = 0;
  int element_order = 0;
  std::vector<int> members;
};

/// Subgroup of a parent group, as a sorted set of element indices.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(PermGroup parent, std::vector<int> members);

  const PermGroup& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  long order() const { return static_cast<long>(members_.size()); }
  bool contains(int elt_index) const;

  /// The subgroup as a PermGroup of the same degree (generators = members),
  /// so its elements are literally elements of the parent's symmetric group.
  PermGroup as_group() const;

private:
  PermGroup parent_;
  std::vector<int> members_;
};

std::vector<ConjClassRec> conjugacy_classes(const PermGroup& G);

/// Elements commuting with every element of S (indices into G).
Subgroup centralizer(const PermGroup& G, const std::vector<int>& S);
Subgroup centralizer(const PermGroup& G, const Subgroup& H);
Subgroup normalizer(const PermGroup& G, const Subgroup& H);
Subgroup center(const PermGroup& G);
Subgroup sylow(const PermGroup& G, long p);

Subgroup trivial_subgroup(const PermGroup& G);
Subgroup full_subgroup(const PermGroup& G);
Subgroup closure_subgroup(const PermGroup& G, std::vector<int> seed);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
/// Set product AB as a subgroup; requires AB = BA (e.g. one factor normalizes the other).
Subgroup product_subgroup(const Subgroup& A, const Subgroup& B);
std::vector<int> conjugate_members(const PermGroup& G, const std::vector<int>& members, int g);
bool is_normal(const PermGroup& G, const Subgroup& H);
/// Tests whether H and K are conjugate in G; if so and witness != nullptr,
/// stores g with gHg^-1 = K.
bool conjugate_subgroups(const PermGroup& G, const Subgroup& H, const Subgroup& K, int* witness = nullptr);

/// x = x_p * x_p' as commuting powers of x; returns (x_p, x_p') as indices.
std::pair<int, int> pp_decomposition(const PermGroup& G, int x, long p);

/// Conjugacy-class representatives of all p-subgroups of G (trivial included),
/// computed by cyclic extension inside one Sylow p-subgroup plus G-fusion.
std::vector<Subgroup> p_subgroups_up_to_conjugacy(const PermGroup& G, long p);

}  // namespace ppfun
