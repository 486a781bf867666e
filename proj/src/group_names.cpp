#include <algorithm>
#include <cctype>
#include <numeric>

#include "ppfun/construct.hpp"
#include "ppfun/error.hpp"
#include "ppfun/group.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

namespace {

Perm cycle_perm(int degree, int start, int len) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < len; ++i) img[start + i] = start + (i + 1) % len;
  return Perm(std::move(img));
}

PermGroup cyclic(int n, long cap) {
  if (n == 1) return PermGroup::from_generators(1, {Perm(1)}, cap);
  return PermGroup::from_generators(n, {cycle_perm(n, 0, n)}, cap);
}

PermGroup symmetric(int n, long cap) {
  if (n <= 1) return cyclic(1, cap);
  std::vector<Perm> gens;
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[0], img[1]);
    gens.push_back(Perm(std::move(img)));
  }
  if (n > 2) gens.push_back(cycle_perm(n, 0, n));
  return PermGroup::from_generators(n, gens, cap);
}

PermGroup alternating(int n, long cap) {
  if (n <= 2) return cyclic(1, cap);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  img[0] = 1;
  img[1] = 2;
  img[2] = 0;
  std::vector<Perm> gens{Perm(img)};
  if (n > 3) {
    if (n % 2 == 1) {
      gens.push_back(cycle_perm(n, 0, n));
    } else {
      gens.push_back(cycle_perm(n, 1, n - 1));
    }
  }
  return PermGroup::from_generators(n, gens, cap);
}

PermGroup dihedral(int order, long cap) {
  int n = order / 2;
  std::vector<int> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return PermGroup::from_generators(n, {cycle_perm(n, 0, n), Perm(std::move(refl))}, cap);
}

PermGroup quaternion8(long cap) {
  Perm a = Perm::from_cycles(8, "(1 2 3 4)(5 6 7 8)");
  Perm b = Perm::from_cycles(8, "(1 5 3 7)(2 8 4 6)");
  return PermGroup::from_generators(8, {a, b}, cap);
}

PermGroup parse_factor(const std::string& name, long cap) {
  if (name.empty()) fail(errc::unknown_name, "empty group name");
  char kind = static_cast<char>(std::toupper(name[0]));
  std::string rest = name.substr(1);
  if (kind == 'V' && rest == "4") return direct_product(cyclic(2, cap), cyclic(2, cap)).group;
  if (kind == 'Q' && rest == "8") return quaternion8(cap);
  bool numeric = !rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(c); });
  if (!numeric) fail(errc::unknown_name, "unknown group name: " + name);
  long n = std::stol(rest);
  if (n < 1 || n > cap) fail(errc::unknown_name, "group name out of range: " + name);
  switch (kind) {
    case 'C':
      return cyclic(static_cast<int>(n), cap);
    case 'S':
      return symmetric(static_cast<int>(n), cap);
    case 'A':
      return alternating(static_cast<int>(n), cap);
    case 'D': {
      if (n % 2 || n < 4) fail(errc::unknown_name, "dihedral D<m> needs even order >= 4: " + name);
      if (n == 4) return direct_product(cyclic(2, cap), cyclic(2, cap)).group;
      return dihedral(static_cast<int>(n), cap);
    }
    case 'E': {
      auto f = factorize(n);
      if (f.size() != 1) fail(errc::unknown_name, "E<q> needs a prime power: " + name);
      auto [p, e] = f[0];
      PermGroup G = cyclic(static_cast<int>(p), cap);
      for (int i = 1; i < e; ++i) G = direct_product(G, cyclic(static_cast<int>(p), cap)).group;
      return G;
    }
    default:
      fail(errc::unknown_name, "unknown group name: " + name);
  }
}

}  // namespace

PermGroup PermGroup::named(const std::string& name, long order_cap) {
  std::string s;
  for (char c : name)
    if (c != '_' && c != ' ') s.push_back(c);
  // 'x'-separated direct products
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t k = s.find_first_of("x*", pos);
    // an 'x' inside a factor name never occurs in the catalogue grammar
    if (k == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, k - pos));
    pos = k + 1;
  }
  PermGroup G = parse_factor(parts[0], order_cap);
  for (size_t i = 1; i < parts.size(); ++i) {
    PermGroup H = parse_factor(parts[i], order_cap);
    if (G.order() * H.order() > order_cap) fail(errc::closure_exceeds_cap, "named group exceeds order cap: " + name);
    G = direct_product(G, H).group;
  }
  return G;
}

}  // namespace ppfun
