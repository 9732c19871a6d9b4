#include "weilchar/intmat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace weilchar {

// Intermediate entries in normal-form transforms can swell well past the
// inputs; all products run through 128-bit arithmetic and storage is
// checked against the i64 range.

namespace {

using i128 = __int128;

constexpr i64 kStoreLimit = (1LL << 62);

i64 store(i128 x) {
  if (x > kStoreLimit || x < -kStoreLimit)
    throw std::overflow_error("integer matrix arithmetic overflow");
  return static_cast<i64>(x);
}

i64 mul_add(i64 acc, i64 a, i64 b) {
  return store(static_cast<i128>(acc) + static_cast<i128>(a) * static_cast<i128>(b));
}

}  // namespace

IntMat imat_identity(int n) {
  IntMat e(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

IntMat imat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return IntMat(a.size());
  size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMat c(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("imat_mul: shape mismatch");
    for (size_t t = 0; t < k; ++t) {
      i64 x = a[i][t];
      if (x == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] = mul_add(c[i][j], x, b[t][j]);
    }
  }
  return c;
}

IntVec vec_mat(const IntVec& v, const IntMat& a) {
  if (a.empty()) return {};
  size_t m = a[0].size();
  std::vector<i128> acc(m, 0);
  for (size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    for (size_t j = 0; j < m; ++j)
      acc[j] += static_cast<i128>(v[t]) * static_cast<i128>(a[t][j]);
  }
  IntVec r(m, 0);
  for (size_t j = 0; j < m; ++j) r[j] = store(acc[j]);
  return r;
}

bool imat_equal(const IntMat& a, const IntMat& b) { return a == b; }

namespace {

struct SnfState {
  IntMat s, u, v, vinv;
  int rows, cols;

  void row_swap(int i, int j) {
    std::swap(s[i], s[j]);
    std::swap(u[i], u[j]);
  }
  // row i -= q * row t
  void row_sub(int i, int t, i64 q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) s[i][j] = mul_add(s[i][j], -q, s[t][j]);
    for (int j = 0; j < rows; ++j) u[i][j] = mul_add(u[i][j], -q, u[t][j]);
  }
  void row_add(int i, int t) {
    for (int j = 0; j < cols; ++j) s[i][j] = mul_add(s[i][j], 1, s[t][j]);
    for (int j = 0; j < rows; ++j) u[i][j] = mul_add(u[i][j], 1, u[t][j]);
  }
  void col_swap(int i, int j) {
    for (auto& row : s) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(vinv[i], vinv[j]);
  }
  // col j -= q * col t;  V <- V * E, Vinv <- E^{-1} * Vinv
  void col_sub(int j, int t, i64 q) {
    if (q == 0) return;
    for (auto& row : s) row[j] = mul_add(row[j], -q, row[t]);
    for (auto& row : v) row[j] = mul_add(row[j], -q, row[t]);
    for (int c = 0; c < cols; ++c) vinv[t][c] = mul_add(vinv[t][c], q, vinv[j][c]);
  }
  void row_negate(int i) {
    for (int j = 0; j < cols; ++j) s[i][j] = -s[i][j];
    for (int j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  }
};

// division rounded toward the nearest integer keeps remainders small
i64 round_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (2 * std::llabs(r) > std::llabs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

Smith smith_normal_form(IntMat a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (auto& r : a)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");

  SnfState st{std::move(a), imat_identity(rows), imat_identity(cols), imat_identity(cols),
              rows, cols};

  int t = 0;
  int limit = std::min(rows, cols);
  while (t < limit) {
    // smallest nonzero |entry| in the trailing submatrix, lex tie-break
    int pi = -1, pj = -1;
    i64 best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        i64 av = std::llabs(st.s[i][j]);
        if (av != 0 && (pi < 0 || av < best)) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) st.row_swap(pi, t);
    if (pj != t) st.col_swap(pj, t);

    bool settled = false;
    while (!settled) {
      settled = true;
      for (int i = t + 1; i < rows; ++i) {
        if (st.s[i][t] == 0) continue;
        i64 q = round_div(st.s[i][t], st.s[t][t]);
        st.row_sub(i, t, q);
        if (st.s[i][t] != 0) {
          st.row_swap(i, t);
          settled = false;
        }
      }
      if (!settled) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (st.s[t][j] == 0) continue;
        i64 q = round_div(st.s[t][j], st.s[t][t]);
        st.col_sub(j, t, q);
        if (st.s[t][j] != 0) {
          st.col_swap(j, t);
          settled = false;
        }
      }
      if (!settled) continue;
      // enforce the divisibility chain
      for (int i = t + 1; i < rows && settled; ++i)
        for (int j = t + 1; j < cols && settled; ++j)
          if (st.s[i][j] % st.s[t][t] != 0) {
            st.row_add(t, i);
            settled = false;
          }
    }
    if (st.s[t][t] < 0) st.row_negate(t);
    ++t;
  }

  Smith out;
  out.rows = rows;
  out.cols = cols;
  out.rank = t;
  out.u = std::move(st.u);
  out.v = std::move(st.v);
  out.vinv = std::move(st.vinv);
  out.s.assign(limit, 0);
  for (int i = 0; i < t; ++i) out.s[i] = st.s[i][i];
  return out;
}

// canonical row Hermite form: positive pivots, entries above a pivot
// reduced into [0, pivot)
IntMat lattice_basis(const IntMat& a) {
  if (a.empty()) return {};
  IntMat m = a;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      int pivot = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][c] != 0 && (pivot < 0 || std::llabs(m[i][c]) < std::llabs(m[pivot][c])))
          pivot = i;
      if (pivot < 0) break;
      if (pivot != r) std::swap(m[pivot], m[r]);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        i64 q = round_div(m[i][c], m[r][c]);
        for (int j = 0; j < cols; ++j) m[i][j] = mul_add(m[i][j], -q, m[r][j]);
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows && m[r][c] != 0) {
      if (m[r][c] < 0)
        for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
      for (int i = 0; i < r; ++i) {
        i64 q = m[i][c] / m[r][c];
        if (m[i][c] % m[r][c] < 0) --q;
        if (q != 0)
          for (int j = 0; j < cols; ++j) m[i][j] = mul_add(m[i][j], -q, m[r][j]);
      }
      ++r;
    }
  }
  m.resize(r);
  return m;
}

IntMat left_kernel(const IntMat& a) {
  if (a.empty()) return {};
  Smith dec = smith_normal_form(a);
  IntMat ker;
  for (int i = dec.rank; i < dec.rows; ++i) ker.push_back(dec.u[i]);
  return ker;
}

RowSolver::RowSolver(IntMat a) : dec_(smith_normal_form(std::move(a))) {}

std::optional<IntVec> RowSolver::solve(const IntVec& x) const {
  if (static_cast<int>(x.size()) != dec_.cols)
    throw std::invalid_argument("RowSolver: size mismatch");
  IntVec z = vec_mat(x, dec_.v);
  IntVec t(dec_.rows, 0);
  for (int j = 0; j < dec_.cols; ++j) {
    if (j < dec_.rank) {
      if (z[j] % dec_.s[j] != 0) return std::nullopt;
      t[j] = z[j] / dec_.s[j];
    } else if (z[j] != 0) {
      return std::nullopt;
    }
  }
  return vec_mat(t, dec_.u);
}

}  // namespace weilchar
