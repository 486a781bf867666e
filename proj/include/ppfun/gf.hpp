#pragma once

#include <string>
#include <vector>

#include "ppfun/group.hpp"

namespace ppfun {

inline constexpr long kFieldSizeCap = 1L << 20;

struct FieldSpec {
  long p = 2;
  int m = 1;
  std::vector<long> modulus;  // monic, coeffs c_0..c_m over GF(p)
};

/// GF(p^m) with table-based arithmetic, p^m < 2^20. Elements are integers
/// 0..q-1 encoding polynomials over GF(p) in base p. The modulus is the
/// lexicographically least monic irreducible of degree m (overridable via the
/// PPFUN_FIELD_TABLE environment variable), and the fixed primitive element
/// is the least generator of the multiplicative group. All root-of-unity
/// conventions downstream refer to that element.
class GF {
public:
  using Elt = unsigned;

  GF(long p, int m);

  long p() const { return p_; }
  int m() const { return m_; }
  long q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(Elt a) const { return a == 0; }

  Elt add(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long e) const;
  bool eq(Elt a, Elt b) const { return a == b; }

  /// Image of an integer under Z -> GF(p) -> GF(p^m).
  Elt from_int(long v) const;

  Elt primitive() const { return primitive_; }
  long dlog(Elt a) const;  // base primitive()
  /// Fixed primitive n-th root of unity: primitive()^((q-1)/n); n | q-1.
  Elt root_of_unity(long n) const;

  std::string str(Elt a) const { return std::to_string(a); }

private:
  long p_, q_;
  int m_;
  FieldSpec spec_;
  Elt primitive_ = 1;
  std::vector<Elt> exp_, log_;
};

/// Minimal m with (p'-part of exp(G)) | p^m - 1, plus the fixed modulus.
/// Throws FieldTableExhausted when p^m would reach 2^20.
FieldSpec splitting_field(const PermGroup& G, long p);

/// Minimal m with n | p^m - 1.
int splitting_degree(long p, long n);

}  // namespace ppfun
