#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppfun/group.hpp"

namespace ppfun {

/// Cheap isomorphism-invariant key: order, element-order census, center and
/// derived-subgroup orders, abelian invariants when abelian. Groups sharing a
/// key are disambiguated by an isomorphism test.
struct IsoFingerprint {
  long order = 1;
  bool abelian = true;
  std::vector<long> abelian_invariants;           // elementary divisors, sorted
  std::vector<std::pair<int, long>> order_census;  // (element order, count)
  long center_order = 1;
  long derived_order = 1;

  auto operator<=>(const IsoFingerprint&) const = default;
};

IsoFingerprint iso_fingerprint(const PermGroup& G);

Subgroup derived_subgroup(const PermGroup& G);

/// Total labeling of isomorphism types seen so far. Seeded with the shipped
/// p-group catalogues so small p-groups get their conventional names.
class IsoRegistry {
public:
  IsoRegistry();

  /// Canonical label of G's isomorphism type; registers a new type on first
  /// sight. Stable across calls within one registry.
  std::string label(const PermGroup& G);

  /// A stored representative of the type, if the label is known.
  const PermGroup* representative(const std::string& label) const;

private:
  struct Entry {
    IsoFingerprint fp;
    PermGroup rep;
    std::string label;
  };
  void seed(const std::string& name, const PermGroup& G);
  std::vector<Entry> entries_;
  std::map<std::string, size_t> by_label_;
  long anon_count_ = 0;
};

}  // namespace ppfun
