#pragma once

// Brute-force oracles for tests: independent of the library's smarter paths.

#include <set>
#include <vector>

#include "ppfun/group.hpp"

namespace ppfun::brute {

/// Every subgroup of G, found by closing all subsets of a generating-window.
/// Only sensible for very small G (|G| <= 16 or so).
inline std::vector<std::vector<int>> all_subgroups(const PermGroup& G) {
  long n = G.order();
  std::set<std::vector<int>> found;
  // closures of all subsets of size <= 2 seed the lattice; then grow by
  // adding single elements until stable. Every subgroup is reached because
  // it is the closure of itself, built up one generator at a time.
  found.insert(trivial_subgroup(G).members());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (const auto& mem : cur) {
      for (int x = 0; x < n; ++x) {
        std::vector<int> seed = mem;
        seed.push_back(x);
        auto bigger = closure_subgroup(G, std::move(seed)).members();
        if (found.insert(bigger).second) grew = true;
      }
    }
  }
  return {found.begin(), found.end()};
}

/// G-conjugacy class representatives (least member vector) of the given
/// subgroup member sets.
inline std::vector<std::vector<int>> fuse_subgroups(const PermGroup& G, const std::vector<std::vector<int>>& subs) {
  std::set<std::vector<int>> pool(subs.begin(), subs.end()), seen;
  std::vector<std::vector<int>> reps;
  for (const auto& mem : pool) {
    if (seen.count(mem)) continue;
    std::vector<int> best = mem;
    std::set<std::vector<int>> orbit{mem};
    std::vector<std::vector<int>> queue{mem};
    for (size_t h = 0; h < queue.size(); ++h)
      for (int g = 0; g < G.order(); ++g) {
        auto im = conjugate_members(G, queue[h], g);
        if (orbit.insert(im).second) {
          queue.push_back(im);
          if (im < best) best = im;
        }
      }
    for (const auto& m : orbit) seen.insert(m);
    reps.push_back(best);
  }
  return reps;
}

}  // namespace ppfun::brute
