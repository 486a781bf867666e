#include "ppfun/isotype.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ppfun/automorphism.hpp"
#include "ppfun/numutil.hpp"
#include "ppfun/pgroups.hpp"

namespace ppfun {

Subgroup derived_subgroup(const PermGroup& G) {
  std::vector<int> comms;
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y) comms.push_back(G.mul(G.mul(x, y), G.inv(G.mul(y, x))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure_subgroup(G, std::move(comms));
}

namespace {

// Elementary divisors of an abelian group from its element-order census:
// per prime, #elements of order dividing p^j determines the partition.
std::vector<long> abelian_divisors(const PermGroup& G) {
  std::vector<long> divisors;
  for (auto [p, e] : factorize(G.order())) {
    std::vector<long> logcount;  // log_p #{x : x^(p^j) = 1}, j = 0,1,...
    for (int j = 0;; ++j) {
      long pj = 1;
      for (int t = 0; t < j; ++t) pj *= p;
      long cnt = 0;
      for (int x = 0; x < G.order(); ++x)
        if (pj % G.element_order(x) == 0) ++cnt;
      int lg = 0;
      while (cnt > 1) cnt /= p, ++lg;
      logcount.push_back(lg);
      if (j > 0 && logcount[j] == logcount[j - 1]) break;
    }
    // conjugate partition of the increments gives the exponent multiset
    std::vector<int> inc;
    for (size_t j = 1; j < logcount.size(); ++j)
      if (logcount[j] > logcount[j - 1]) inc.push_back(static_cast<int>(logcount[j] - logcount[j - 1]));
    int maxinc = inc.empty() ? 0 : *std::max_element(inc.begin(), inc.end());
    // parts of the partition: a_i = #{j : inc_j >= i} for i = 1..max
    for (int i = 1; i <= maxinc; ++i) {
      int part = 0;
      for (int v : inc)
        if (v >= i) ++part;
      long d = 1;
      for (int t = 0; t < part; ++t) d *= p;
      if (d > 1) divisors.push_back(d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

IsoFingerprint iso_fingerprint(const PermGroup& G) {
  IsoFingerprint fp;
  fp.order = G.order();
  fp.abelian = G.is_abelian();
  std::map<int, long> census;
  for (int x = 0; x < G.order(); ++x) ++census[G.element_order(x)];
  fp.order_census.assign(census.begin(), census.end());
  fp.center_order = center(G).order();
  fp.derived_order = fp.abelian ? 1 : derived_subgroup(G).order();
  if (fp.abelian) fp.abelian_invariants = abelian_divisors(G);
  return fp;
}

IsoRegistry::IsoRegistry() {
  for (long p : {2L, 3L})
    for (const CatalogueEntry& e : pgroup_catalogue(p, p == 2 ? 16 : 27)) seed(e.name, e.group);
}

void IsoRegistry::seed(const std::string& name, const PermGroup& G) {
  if (by_label_.count(name)) return;
  IsoFingerprint fp = iso_fingerprint(G);
  entries_.push_back({fp, G, name});
  by_label_[name] = entries_.size() - 1;
}

std::string IsoRegistry::label(const PermGroup& G) {
  IsoFingerprint fp = iso_fingerprint(G);
  for (const Entry& e : entries_) {
    if (e.fp != fp) continue;
    if (!isomorphisms(G, full_subgroup(e.rep)).empty()) return e.label;
  }
  std::string name;
  if (fp.abelian) {
    if (fp.order == 1) {
      name = "C1";
    } else {
      // invariant factors: combine the largest prime-power divisors per prime
      std::map<long, std::vector<long>> by_prime;
      for (long d : fp.abelian_invariants) by_prime[factorize(d)[0].first].push_back(d);
      size_t len = 0;
      for (auto& [p, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        len = std::max(len, v.size());
      }
      std::vector<long> factors(len, 1);
      for (auto& [p, v] : by_prime)
        for (size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
      for (long f : factors) {
        if (!name.empty()) name += "x";
        name += "C" + std::to_string(f);
      }
    }
  } else {
    name = "G" + std::to_string(fp.order) + "#" + std::to_string(++anon_count_);
  }
  // abelian names can still collide with a differently-labeled seed; suffix if taken
  while (by_label_.count(name)) name += "'";
  entries_.push_back({fp, G, name});
  by_label_[name] = entries_.size() - 1;
  return name;
}

const PermGroup* IsoRegistry::representative(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? nullptr : &entries_[it->second].rep;
}

}  // namespace ppfun
