#include "ppfun/intmat.hpp"

#include <algorithm>

namespace ppfun {

namespace {

// true if some entry in A[t..][t..] is nonzero; reports its position
bool find_nonzero(const ZMat& A, long t, long& pi, long& pj) {
  long r = static_cast<long>(A.size()), c = r ? static_cast<long>(A[0].size()) : 0;
  bool found = false;
  mpz_class best;
  for (long i = t; i < r; ++i)
    for (long j = t; j < c; ++j) {
      if (A[i][j] == 0) continue;
      mpz_class a = abs(A[i][j]);
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(ZMat A) {
  long r = static_cast<long>(A.size()), c = r ? static_cast<long>(A[0].size()) : 0;
  long n = std::min(r, c);
  std::vector<mpz_class> diag(n, 0);
  for (long t = 0; t < n; ++t) {
    long pi, pj;
    if (!find_nonzero(A, t, pi, pj)) break;
    std::swap(A[t], A[pi]);
    for (long i = 0; i < r; ++i) std::swap(A[i][t], A[i][pj]);
    // clear row and column t by division-with-remainder rounds
    bool clean = false;
    while (!clean) {
      clean = true;
      for (long i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q = A[i][t] / A[t][t];
        for (long j = t; j < c; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {  // remainder smaller than pivot; swap up
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (long j = t + 1; j < c; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q = A[t][j] / A[t][t];
        for (long i = t; i < r; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (long i = t; i < r; ++i) std::swap(A[i][t], A[i][j]);
          clean = false;
        }
      }
    }
    // divisibility: pivot must divide everything below-right
    bool redo = false;
    for (long i = t + 1; i < r && !redo; ++i)
      for (long j = t + 1; j < c && !redo; ++j)
        if (A[i][j] % A[t][t] != 0) {
          for (long k = t; k < c; ++k) A[t][k] += A[i][k];
          redo = true;
        }
    if (redo) {
      --t;  // redo this pivot with the merged row
      continue;
    }
    diag[t] = abs(A[t][t]);
  }
  return diag;
}

long rank_over_q(ZMat A) {
  // fraction-free Gaussian elimination
  long r = static_cast<long>(A.size()), c = r ? static_cast<long>(A[0].size()) : 0;
  long rank = 0;
  for (long col = 0; col < c && rank < r; ++col) {
    long piv = -1;
    for (long i = rank; i < r; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[rank], A[piv]);
    for (long i = rank + 1; i < r; ++i) {
      if (A[i][col] == 0) continue;
      mpz_class f = A[i][col], g = A[rank][col];
      for (long j = col; j < c; ++j) A[i][j] = A[i][j] * g - A[rank][j] * f;
    }
    ++rank;
  }
  return rank;
}

mpz_class det(ZMat A) {
  long n = static_cast<long>(A.size());
  if (n == 0) return 1;
  // Bareiss
  mpz_class sign = 1, prev = 1;
  for (long t = 0; t < n - 1; ++t) {
    if (A[t][t] == 0) {
      long piv = -1;
      for (long i = t + 1; i < n; ++i)
        if (A[i][t] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(A[t], A[piv]);
      sign = -sign;
    }
    for (long i = t + 1; i < n; ++i)
      for (long j = t + 1; j < n; ++j) A[i][j] = (A[i][j] * A[t][t] - A[i][t] * A[t][j]) / prev;
    prev = A[t][t];
  }
  return sign * A[n - 1][n - 1];
}

}  // namespace ppfun
