#include "weilchar/cmat.hpp"

#include <cmath>
#include <stdexcept>

namespace weilchar {

CMat cmat_zero(int rows, int cols) { return CMat(rows, std::vector<cplx>(cols, 0.0)); }

CMat cmat_identity(int n) {
  CMat e = cmat_zero(n, n);
  for (int i = 0; i < n; ++i) e[i][i] = 1.0;
  return e;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  CMat c = cmat_zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      cplx x = a[i][t];
      if (x == cplx(0.0)) continue;
      for (int j = 0; j < m; ++j) c[i][j] += x * b[t][j];
    }
  return c;
}

CMat cmat_add(const CMat& a, const CMat& b) {
  CMat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

CMat cmat_scale(cplx s, const CMat& a) {
  CMat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

cplx cmat_trace(const CMat& a) {
  cplx t = 0.0;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

double cmat_max_abs_diff(const CMat& a, const CMat& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

double cmat_frobenius(const CMat& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) s += std::norm(x);
  return std::sqrt(s);
}

cplx cmat_det(CMat a) {
  int n = static_cast<int>(a.size());
  cplx det = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    if (std::abs(a[pivot][c]) < 1e-14) return 0.0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      cplx f = a[r][c] / a[c][c];
      if (f == cplx(0.0)) continue;
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

CMat cmat_solve_right(CMat a, CMat b) {
  // X * A = B  <=>  for each row r: x_r * A = b_r; Gaussian elimination on A^T
  int n = static_cast<int>(a.size());
  if (n == 0) return b;
  // transpose so we solve A^T x^T = b^T columnwise
  CMat at = cmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = a[j][i];
  int rows = static_cast<int>(b.size());
  CMat x = cmat_zero(rows, n);

  // LU factorization with partial pivoting on at
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(at[r][c]) > std::abs(at[p][c])) p = r;
    if (std::abs(at[p][c]) < 1e-14) throw std::runtime_error("cmat_solve_right: singular matrix");
    if (p != c) {
      std::swap(at[p], at[c]);
      std::swap(piv[p], piv[c]);
    }
    for (int r = c + 1; r < n; ++r) {
      at[r][c] /= at[c][c];
      for (int j = c + 1; j < n; ++j) at[r][j] -= at[r][c] * at[c][j];
    }
  }
  for (int r = 0; r < rows; ++r) {
    std::vector<cplx> y(n);
    for (int i = 0; i < n; ++i) y[i] = b[r][piv[i]];
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) y[i] -= at[i][j] * y[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) y[i] -= at[i][j] * y[j];
      y[i] /= at[i][i];
    }
    x[r] = std::move(y);
  }
  return x;
}

RowBasis cmat_row_basis(CMat a, double pivot_threshold) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  RowBasis out;
  int top = 0;
  for (;;) {
    int pi = -1, pj = -1;
    double best = pivot_threshold;
    for (int i = top; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(a[pi], a[top]);
    cplx inv = 1.0 / a[top][pj];
    for (int j = 0; j < cols; ++j) a[top][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == top) continue;
      cplx f = a[i][pj];
      if (f == cplx(0.0)) continue;
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[top][j];
    }
    out.rows.push_back(a[top]);
    out.cols.push_back(pj);
    ++top;
  }
  return out;
}

}  // namespace weilchar
