#pragma once

#include <optional>
#include <vector>

namespace ppfun {

/// Dense row-major matrix over an arbitrary element type; the algorithms
/// below take the field as an explicit object (GF, QField, CycloField).
template <class Elt>
struct Matrix {
  long rows = 0, cols = 0;
  std::vector<Elt> a;

  Matrix() = default;
  Matrix(long r, long c, Elt fill) : rows(r), cols(c), a(r * c, fill) {}
  Elt& operator()(long i, long j) { return a[i * cols + j]; }
  const Elt& operator()(long i, long j) const { return a[i * cols + j]; }
};

template <class F>
Matrix<typename F::Elt> mat_identity(const F& f, long n) {
  Matrix<typename F::Elt> I(n, n, f.zero());
  for (long i = 0; i < n; ++i) I(i, i) = f.one();
  return I;
}

template <class F>
Matrix<typename F::Elt> mat_mul(const F& f, const Matrix<typename F::Elt>& A, const Matrix<typename F::Elt>& B) {
  Matrix<typename F::Elt> C(A.rows, B.cols, f.zero());
  for (long i = 0; i < A.rows; ++i)
    for (long k = 0; k < A.cols; ++k) {
      if (f.is_zero(A(i, k))) continue;
      for (long j = 0; j < B.cols; ++j) C(i, j) = f.add(C(i, j), f.mul(A(i, k), B(k, j)));
    }
  return C;
}

template <class F>
Matrix<typename F::Elt> mat_add(const F& f, const Matrix<typename F::Elt>& A, const Matrix<typename F::Elt>& B) {
  Matrix<typename F::Elt> C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.add(C.a[i], B.a[i]);
  return C;
}

template <class Elt>
Matrix<Elt> mat_transpose(const Matrix<Elt>& A) {
  Matrix<Elt> T;
  T.rows = A.cols;
  T.cols = A.rows;
  T.a.resize(A.a.size());
  for (long i = 0; i < A.rows; ++i)
    for (long j = 0; j < A.cols; ++j) T.a[j * T.cols + i] = A(i, j);
  return T;
}

/// In-place reduced row echelon form; returns the rank and (optionally) the
/// pivot column list.
template <class F>
long row_reduce(const F& f, Matrix<typename F::Elt>& M, std::vector<long>* pivots = nullptr) {
  long rank = 0;
  for (long col = 0; col < M.cols && rank < M.rows; ++col) {
    long piv = -1;
    for (long i = rank; i < M.rows; ++i)
      if (!f.is_zero(M(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (long j = 0; j < M.cols; ++j) std::swap(M(rank, j), M(piv, j));
    typename F::Elt il = f.inv(M(rank, col));
    for (long j = col; j < M.cols; ++j) M(rank, j) = f.mul(M(rank, j), il);
    for (long i = 0; i < M.rows; ++i) {
      if (i == rank || f.is_zero(M(i, col))) continue;
      typename F::Elt c = M(i, col);
      for (long j = col; j < M.cols; ++j) M(i, j) = f.sub(M(i, j), f.mul(c, M(rank, j)));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
long mat_rank(const F& f, Matrix<typename F::Elt> M) {
  return row_reduce(f, M);
}

/// Solves A x = b; empty when inconsistent. Free variables are set to zero.
template <class F>
std::optional<std::vector<typename F::Elt>> solve(const F& f, const Matrix<typename F::Elt>& A,
                                                  const std::vector<typename F::Elt>& b) {
  Matrix<typename F::Elt> M(A.rows, A.cols + 1, f.zero());
  for (long i = 0; i < A.rows; ++i) {
    for (long j = 0; j < A.cols; ++j) M(i, j) = A(i, j);
    M(i, A.cols) = b[i];
  }
  std::vector<long> pivots;
  long rank = row_reduce(f, M, &pivots);
  for (long i = 0; i < rank; ++i)
    if (pivots[i] == A.cols) return std::nullopt;  // pivot in the constant column
  std::vector<typename F::Elt> x(A.cols, f.zero());
  for (long i = 0; i < rank; ++i) x[pivots[i]] = M(i, A.cols);
  return x;
}

/// Inverse of a square matrix; fails (nullopt) when singular.
template <class F>
std::optional<Matrix<typename F::Elt>> mat_inverse(const F& f, const Matrix<typename F::Elt>& A) {
  long n = A.rows;
  Matrix<typename F::Elt> M(n, 2 * n, f.zero());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) M(i, j) = A(i, j);
    M(i, n + i) = f.one();
  }
  std::vector<long> pivots;
  long rank = row_reduce(f, M, &pivots);
  if (rank < n) return std::nullopt;
  for (long i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix<typename F::Elt> R(n, n, f.zero());
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) R(i, j) = M(i, n + j);
  return R;
}

/// Basis of the right null space {x : A x = 0}, as rows.
template <class F>
std::vector<std::vector<typename F::Elt>> nullspace(const F& f, Matrix<typename F::Elt> M) {
  long cols = M.cols;
  std::vector<long> pivots;
  long rank = row_reduce(f, M, &pivots);
  std::vector<char> is_pivot(cols, 0);
  for (long p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<typename F::Elt>> basis;
  for (long freecol = 0; freecol < cols; ++freecol) {
    if (is_pivot[freecol]) continue;
    std::vector<typename F::Elt> v(cols, f.zero());
    v[freecol] = f.one();
    for (long i = 0; i < rank; ++i) v[pivots[i]] = f.neg(M(i, freecol));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Dimension of the span of the given row vectors.
template <class F>
long span_rank(const F& f, const std::vector<std::vector<typename F::Elt>>& rows) {
  if (rows.empty()) return 0;
  Matrix<typename F::Elt> M(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()), f.zero());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) M(i, j) = rows[i][j];
  return mat_rank(f, std::move(M));
}

}  // namespace ppfun
