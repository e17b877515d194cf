#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rlcsynth/polynomial.hpp"

namespace rlcsynth {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free (Bareiss) determinant with row pivoting.
template <class T>
T determinant(Matrix<T> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return T(1);
  int sgn_flip = 1;
  T prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m[k][k])) {
      int r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return T();
      std::swap(m[k], m[r]);
      sgn_flip = -sgn_flip;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = T();
    }
    prev = m[k][k];
  }
  return sgn_flip < 0 ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// B(q,p): (q(z)p(w) - p(z)q(w))/(z - w) = sum_{i,j} B[i][j] z^i w^j, 0 <= i,j < n.
template <class T>
Matrix<T> bezoutian(const Polynomial<T>& q, const Polynomial<T>& p, int n) {
  Matrix<T> num(n + 1, std::vector<T>(n + 1));
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) num[k][l] = q[k] * p[l] - p[k] * q[l];
  Matrix<T> m(n, std::vector<T>(n));
  // (z - w) M = N  =>  m[i][j] = n[i+1][j] + m[i+1][j-1]
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < n; ++j) {
      T v = num[i + 1][j];
      if (i + 1 < n && j >= 1) v = v + m[i + 1][j - 1];
      m[i][j] = v;
    }
  return m;
}

// S_k(p,q): 2(n-k) rows alternating q and p coefficient rows (leading
// coefficient first), each pair shifted one column to the right.
template <class T>
Matrix<T> sylvester_block(const Polynomial<T>& p, const Polynomial<T>& q, int n, int k) {
  const int w = 2 * (n - k);
  Matrix<T> s(w, std::vector<T>(w));
  for (int i = 0; i < n - k; ++i)
    for (int j = 0; j <= n; ++j) {
      int col = i + j;
      if (col >= w) break;
      s[2 * i][col] = q[n - j];
      s[2 * i + 1][col] = p[n - j];
    }
  return s;
}

// R_k(p,q) = det S_k(p,q), k = 0..n-1.
template <class T>
std::vector<T> subresultants(const Polynomial<T>& p, const Polynomial<T>& q, int n) {
  std::vector<T> r;
  for (int k = 0; k < n; ++k) r.push_back(determinant(sylvester_block(p, q, n, k)));
  return r;
}

// Same values computed as trailing principal minors of B(q,p).
template <class T>
std::vector<T> subresultants_bezout(const Polynomial<T>& p, const Polynomial<T>& q, int n) {
  Matrix<T> b = bezoutian(q, p, n);
  std::vector<T> r;
  for (int k = 0; k < n; ++k) {
    Matrix<T> m(n - k, std::vector<T>(n - k));
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) m[i - k][j - k] = b[i][j];
    r.push_back(determinant(std::move(m)));
  }
  return r;
}

// Classical Sylvester resultant of P (degree m) and Q (degree n).
template <class T>
T resultant(const Polynomial<T>& P, const Polynomial<T>& Q) {
  const int m = P.degree(), n = Q.degree();
  if (m < 0 || n < 0) return T();
  if (m == 0) return n == 0 ? T(1) : T(P.lc().pow(n));
  if (n == 0) return T(Q.lc().pow(m));
  Matrix<T> s(m + n, std::vector<T>(m + n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = P[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = Q[n - j];
  return determinant(std::move(s));
}

template <>
inline Rational resultant(const Poly& P, const Poly& Q) {
  const int m = P.degree(), n = Q.degree();
  if (m < 0 || n < 0) return Rational();
  Matrix<Rational> s(m + n, std::vector<Rational>(m + n));
  if (m + n == 0) return Rational(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = P[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = Q[n - j];
  return determinant(std::move(s));
}

struct StorageCounts {
  int capacitors = 0;
  int inductors = 0;
  friend bool operator==(const StorageCounts&, const StorageCounts&) = default;
};

// Signs of 1, R_{n-1}, ..., R_0 with the zero-run rule applied.
std::vector<int> storage_sign_sequence(const std::vector<Rational>& r);
// Capacitor/inductor counts of any realization of p/q with at most
// n = max(deg p, deg q) storage elements. Throws NotCoprime if R_0 = 0.
StorageCounts storage_counts(const Poly& p, const Poly& q);

// Weak same-sign test: all nonnegative or all nonpositive.
bool same_sign(const std::vector<int>& signs);
inline bool same_sign(std::initializer_list<int> signs) { return same_sign(std::vector<int>(signs)); }

}  // namespace rlcsynth
