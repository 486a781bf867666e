#include "ppfun/pgroups.hpp"

#include "ppfun/automorphism.hpp"
#include "ppfun/construct.hpp"
#include "ppfun/error.hpp"
#include "ppfun/numutil.hpp"

namespace ppfun {

namespace {

PermGroup named(const std::string& n) { return PermGroup::named(n); }

// Generalized quaternion Q16 = <a,b | a^8, b^2 = a^4, b a b^-1 = a^-1>,
// via its left regular representation on labels (i,e) = a^i b^e.
PermGroup quaternion16() {
  auto mul = [](int x, int y) {
    int i = x % 8, e = x / 8, j = y % 8, f = y / 8;
    if (e == 0) return (i + j) % 8 + 8 * f;
    if (f == 0) return (i - j + 8) % 8 + 8;
    return (i - j + 4 + 8) % 8;
  };
  return regular_rep(16, mul, {1, 8});
}

// C4 ⋊ C4 = <a,b | a^4, b^4, b a b^-1 = a^-1>, labels (i,j) = a^i b^j.
PermGroup c4_semi_c4() {
  auto mul = [](int x, int y) {
    int i = x % 4, j = x / 4, k = y % 4, l = y / 4;
    int sign = (j % 2) ? -1 : 1;
    return ((i + sign * k) % 4 + 4) % 4 + 4 * ((j + l) % 4);
  };
  return regular_rep(16, mul, {1, 4});
}

// (C4 x C2) ⋊ C2 with a -> ab, b -> b.
PermGroup c4xc2_semi_c2() {
  PermGroup base = named("C4xC2");
  auto gi = base.generator_indices();  // a (order 4), b (order 2)
  int a = gi[0], b = gi[1];
  AutMap u = automorphism_from_generator_images(base, {a, b}, {base.mul(a, b), b});
  return semidirect(base, u).group;
}

// Central product D8 ∘ C4 = (D8 x C4) / <(r^2, c^2)>.
PermGroup d8_central_c4() {
  DirectProduct dp = direct_product(named("D8"), named("C4"));
  const PermGroup& d8 = named("D8");
  int r = -1;  // a central involution of D8: the square of a rotation of order 4
  for (int x = 0; x < d8.order(); ++x)
    if (d8.element_order(x) == 4) r = d8.mul(x, x);
  const PermGroup& c4 = named("C4");
  int c = -1;
  for (int x = 0; x < c4.order(); ++x)
    if (c4.element_order(x) == 4) c = c4.mul(x, x);
  int z = dp.group.mul(dp.embed_left.apply(r), dp.embed_right.apply(c));
  Subgroup N(dp.group, {dp.group.identity(), z});
  return coset_action(dp.group, N).image;
}

// Modular group of order 16: C8 ⋊ C2 with a -> a^5.
PermGroup modular16() { return semidirect(named("C8"), power_map(named("C8"), 5)).group; }

// Semidihedral group of order 16: C8 ⋊ C2 with a -> a^3.
PermGroup semidihedral16() { return semidirect(named("C8"), power_map(named("C8"), 3)).group; }

// Heisenberg group of order 27 (extraspecial, exponent 3); labels
// (a,b,c) = a + 3b + 9c with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
PermGroup heisenberg3() {
  auto mul = [](int x, int y) {
    int a = x % 3, b = (x / 3) % 3, c = x / 9;
    int a2 = y % 3, b2 = (y / 3) % 3, c2 = y / 9;
    return (a + a2) % 3 + 3 * ((b + b2) % 3) + 9 * ((c + c2 + a * b2) % 3);
  };
  return regular_rep(27, mul, {1, 3});
}

// Extraspecial of order 27, exponent 9: C9 ⋊ C3 with a -> a^4.
PermGroup c9_semi_c3() { return semidirect(named("C9"), power_map(named("C9"), 4)).group; }

}  // namespace

PermGroup e9_semidirect_c2() {
  PermGroup e9 = named("C3xC3");
  return semidirect(e9, power_map(e9, -1)).group;
}

PermGroup e9_semidirect_v4() {
  // S3 x S3: each C2 factor inverts one C3 factor.
  return direct_product(named("S3"), named("S3")).group;
}

std::vector<CatalogueEntry> pgroup_catalogue(long p, long max_order) {
  std::vector<CatalogueEntry> cat;
  auto add = [&](const std::string& n, const PermGroup& g) {
    if (g.order() <= max_order) cat.push_back({n, g});
  };
  add("C1", named("C1"));
  if (p == 2) {
    if (max_order > 16) fail(errc::catalogue_incomplete, "2-group catalogue is shipped up to order 16");
    add("C2", named("C2"));
    add("C4", named("C4"));
    add("V4", named("V4"));
    add("C8", named("C8"));
    add("C4xC2", named("C4xC2"));
    add("E8", named("E8"));
    add("D8", named("D8"));
    add("Q8", named("Q8"));
    add("C16", named("C16"));
    add("C4xC4", named("C4xC4"));
    add("(C4xC2):C2", c4xc2_semi_c2());
    add("C4:C4", c4_semi_c4());
    add("C8xC2", named("C8xC2"));
    add("M16", modular16());
    add("D16", named("D16"));
    add("SD16", semidihedral16());
    add("Q16", quaternion16());
    add("C4xC2xC2", named("C4xC2xC2"));
    add("D8xC2", named("D8xC2"));
    add("Q8xC2", named("Q8xC2"));
    add("D8*C4", d8_central_c4());
    add("E16", named("E16"));
  } else if (p == 3) {
    if (max_order > 27) fail(errc::catalogue_incomplete, "3-group catalogue is shipped up to order 27");
    add("C3", named("C3"));
    add("C9", named("C9"));
    add("C3xC3", named("C3xC3"));
    add("C27", named("C27"));
    add("C9xC3", named("C9xC3"));
    add("He3", heisenberg3());
    add("C9:C3", c9_semi_c3());
    add("E27", named("E27"));
  } else {
    if (!is_prime(p)) fail(errc::catalogue_incomplete, "p must be prime");
    if (max_order >= p * p)
      fail(errc::catalogue_incomplete, "p-group catalogue for p >= 5 is cyclic-only (complete below p^2)");
    if (p <= max_order) add("C" + std::to_string(p), named("C" + std::to_string(p)));
  }
  return cat;
}

std::vector<CatalogueEntry> small_group_catalogue() {
  std::vector<CatalogueEntry> cat;
  auto add = [&](const std::string& n, const PermGroup& g) { cat.push_back({n, g}); };
  for (int n = 1; n <= 24; ++n) add("C" + std::to_string(n), named("C" + std::to_string(n)));
  for (int n = 6; n <= 24; n += 2) add("D" + std::to_string(n), named("D" + std::to_string(n)));
  add("S3", named("S3"));
  add("S4", named("S4"));
  add("A4", named("A4"));
  add("Q8", named("Q8"));
  add("V4", named("V4"));
  add("E8", named("E8"));
  add("E9", named("E9"));
  add("E16", named("E16"));
  add("C2xC4", named("C2xC4"));
  add("C2xC6", named("C2xC6"));
  add("C2xC8", named("C2xC8"));
  add("C4xC4", named("C4xC4"));
  add("C2xC10", named("C2xC10"));
  add("C2xC12", named("C2xC12"));
  add("C3xC6", named("C3xC6"));
  add("SD16", semidihedral16());
  add("Q16", quaternion16());
  add("M16", modular16());
  add("D8xC2", named("D8xC2"));
  add("Q8xC2", named("Q8xC2"));
  add("C2xA4", direct_product(named("C2"), named("A4")).group);
  add("C3xD8", named("C3xD8"));
  add("C3xQ8", named("C3xQ8"));
  add("C3xS3", direct_product(named("C3"), named("S3")).group);
  add("E9:C2", e9_semidirect_c2());
  add("He3", heisenberg3());
  add("C9:C3", c9_semi_c3());
  {
    // SL(2,3) = Q8 ⋊ C3
    PermGroup q8 = named("Q8");
    AutGroupData A = automorphism_group(q8);
    for (long i = 0; i < A.aut_order(); ++i)
      if (A.aut.element_order(static_cast<int>(i)) == 3) {
        add("SL(2,3)", semidirect(q8, A.aut_map(static_cast<int>(i))).group);
        break;
      }
  }
  {
    // dicyclic group of order 12: <a,b | a^3, b^4, b a b^-1 = a^-1>
    auto mul = [](int x, int y) {
      int i = x % 3, j = x / 3, k = y % 3, l = y / 3;
      int sign = (j % 2) ? -1 : 1;
      return ((i + sign * k) % 3 + 3) % 3 + 3 * ((j + l) % 4);
    };
    add("Dic3", regular_rep(12, mul, {1, 3}));
  }
  return cat;
}

}  // namespace ppfun
