#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ppfun {

/// A permutation of {0,...,degree-1}, stored as its image vector.
/// External (textual) cycle notation is 1-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);

  /// Parses 1-based cycle notation, e.g. "(1 2)(3 4)" or "()".
  /// Points not mentioned are fixed.
  static Perm from_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  // (a*b)(x) = a(b(x)): b applied first.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm power(long e) const;

  bool is_identity() const;
  int order() const;

  std::string cycle_string() const;

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> img_;
};

}  // namespace ppfun
