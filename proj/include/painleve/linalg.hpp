#pragma once

#include <functional>
#include <vector>

#include "painleve/ratfn.hpp"

namespace painleve {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
struct LinSolve {
  bool consistent = false;
  std::vector<T> particular;           // one solution with free coordinates set to 0
  std::vector<std::vector<T>> kernel;  // nullspace basis
  int rank = 0;
};

// Gaussian elimination over a field (Rat, GaussRat, RatFn<...>)
template <class T>
LinSolve<T> solve_linear(Mat<T> A, std::vector<T> b) {
  size_t m = A.size();
  size_t n = m == 0 ? 0 : A[0].size();
  assert(b.size() == m);
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = row;
    while (sel < m && is_zero(A[sel][col])) ++sel;
    if (sel == m) continue;
    std::swap(A[sel], A[row]);
    std::swap(b[sel], b[row]);
    T inv = T(1) / A[row][col];
    for (size_t j = col; j < n; ++j) A[row][j] = A[row][j] * inv;
    b[row] = b[row] * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || is_zero(A[i][col])) continue;
      T f = A[i][col];
      for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[row][j];
      b[i] = b[i] - f * b[row];
    }
    pivot_col.push_back((int)col);
    ++row;
  }
  LinSolve<T> out;
  out.rank = (int)row;
  out.consistent = true;
  for (size_t i = row; i < m; ++i)
    if (!is_zero(b[i])) out.consistent = false;
  if (!out.consistent) return out;
  out.particular.assign(n, T(0));
  for (size_t r = 0; r < row; ++r) out.particular[pivot_col[r]] = b[r];
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<T> k(n, T(0));
    k[c] = T(1);
    for (size_t r = 0; r < row; ++r) k[pivot_col[r]] = T(0) - A[r][c];
    out.kernel.push_back(std::move(k));
  }
  return out;
}

template <class T>
T det_gauss(Mat<T> A) {
  size_t n = A.size();
  T out(1);
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && is_zero(A[sel][col])) ++sel;
    if (sel == n) return T(0);
    if (sel != col) {
      std::swap(A[sel], A[col]);
      out = T(0) - out;
    }
    out = out * A[col][col];
    T inv = T(1) / A[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (is_zero(A[i][col])) continue;
      T f = A[i][col] * inv;
      for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[col][j];
    }
  }
  return out;
}

// Fraction-free determinant over an integral domain with exact division.
// Used both as an independent oracle for det_gauss and for polynomial rings.
template <class T>
T det_bareiss(Mat<T> A, const std::function<T(const T&, const T&)>& exact_div) {
  size_t n = A.size();
  if (n == 0) return T(1);
  T denom(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t sel = k;
    while (sel < n && is_zero(A[sel][k])) ++sel;
    if (sel == n) return T(0);
    if (sel != k) {
      std::swap(A[sel], A[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        A[i][j] = exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], denom);
    denom = A[k][k];
  }
  T out = A[n - 1][n - 1];
  return sign < 0 ? T(0) - out : out;
}

template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto q = try_exact_divide(a, b);
  assert(q);
  return *q;
}

template <class K>
Poly<K> det_poly(Mat<Poly<K>> A) {
  return det_bareiss<Poly<K>>(std::move(A),
                              [](const Poly<K>& a, const Poly<K>& b) { return poly_exact_div(a, b); });
}

// Sylvester resultant of f and g with respect to v; coefficients may involve
// the remaining variables.
template <class K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, VarId v) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  if (f.low(v).value() < 0 || g.low(v).value() < 0)
    throw std::invalid_argument("resultant needs ordinary (non-Laurent) inputs");
  long df = f.deg(v).value(), dg = g.deg(v).value();
  if (df == 0 && dg == 0) return Poly<K>(1);
  if (df == 0) return f.coeff_of(v, 0).pow(dg);
  if (dg == 0) return g.coeff_of(v, 0).pow(df);
  long n = df + dg;
  Mat<Poly<K>> S((size_t)n, std::vector<Poly<K>>((size_t)n, Poly<K>(0)));
  for (long r = 0; r < dg; ++r)
    for (long j = 0; j <= df; ++j) S[r][r + j] = f.coeff_of(v, df - j);
  for (long r = 0; r < df; ++r)
    for (long j = 0; j <= dg; ++j) S[dg + r][r + j] = g.coeff_of(v, dg - j);
  return det_poly(std::move(S));
}

// All rational roots of a univariate polynomial with rational coefficients.
std::vector<Rat> rational_roots(const Poly<Rat>& f, VarId v);

// Eigenvalues of a matrix with (possibly parameter-carrying) polynomial
// entries, provided they are all parameter-free rationals; nullopt otherwise.
std::optional<std::vector<Rat>> eigenvalues_rational(const Mat<PolyQ>& A);

}  // namespace painleve
