#pragma once

#include <gmpxx.h>

#include <vector>

namespace ppfun {

using ZMat = std::vector<std::vector<mpz_class>>;

/// Diagonal of the Smith normal form (nonnegative, d_1 | d_2 | ...),
/// including trailing zeros up to min(rows, cols).
std::vector<mpz_class> smith_normal_form(ZMat A);

long rank_over_q(ZMat A);

/// Determinant of a square integer matrix (Bareiss, exact).
mpz_class det(ZMat A);

}  // namespace ppfun
