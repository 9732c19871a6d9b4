#include "weilchar/modsign.hpp"

#include <numeric>

namespace weilchar {

namespace {
constexpr i64 kDirectLimit = 1LL << 20;

i64 det_mod_p(IntMat a, i64 p) {
  int n = static_cast<int>(a.size());
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  i64 det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = p - det;
    }
    det = det * a[c][c] % p;
    i64 inv = mod_inverse(a[c][c], p);
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      i64 f = a[r][c] * inv % p;
      for (int j = c; j < n; ++j) a[r][j] = ((a[r][j] - f * a[c][j]) % p + p) % p;
    }
  }
  return det % p;
}

void require_endo(const ModuleHom& alpha) {
  if (!(alpha.dom == alpha.cod))
    throw std::invalid_argument("perm sign: endomorphism required");
}

}  // namespace

int perm_sign_direct(const ModuleHom& alpha) {
  require_endo(alpha);
  const FinModule& m = alpha.dom;
  i64 n = m.order();
  if (n > kDirectLimit) throw std::invalid_argument("perm_sign_direct: module too large");
  if (kernel(alpha).order() != 1)
    throw std::invalid_argument("perm_sign_direct: map is not invertible");

  std::vector<i64> perm(n);
  for (i64 idx = 0; idx < n; ++idx) perm[idx] = m.index_of(alpha.apply(m.element_at(idx)));
  std::vector<bool> seen(n, false);
  i64 transpositions = 0;
  for (i64 start = 0; start < n; ++start) {
    if (seen[start]) continue;
    i64 len = 0;
    for (i64 at = start; !seen[at]; at = perm[at]) {
      seen[at] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

int perm_sign_fast(const ModuleHom& alpha) {
  require_endo(alpha);
  std::vector<i64> orders = alpha.dom.divisors;
  const IntMat& a = alpha.mat;
  int sign = 1;
  for (;;) {
    i64 p = 0;
    for (i64 e : orders)
      if (e > 1) {
        i64 q = e;
        for (i64 f = 2; f * f <= q; ++f)
          if (q % f == 0) {
            q = f;
            break;
          }
        p = (p == 0) ? q : std::min(p, q);
      }
    if (p == 0) break;
    std::vector<int> layer;
    for (size_t i = 0; i < orders.size(); ++i)
      if (orders[i] % p == 0) layer.push_back(static_cast<int>(i));
    IntMat block(layer.size(), IntVec(layer.size(), 0));
    for (size_t i = 0; i < layer.size(); ++i)
      for (size_t j = 0; j < layer.size(); ++j) block[i][j] = a[layer[i]][layer[j]];
    i64 det = det_mod_p(block, p);
    if (det == 0) throw std::invalid_argument("perm_sign_fast: map is not invertible");
    sign *= jacobi(det, p);
    for (int i : layer) orders[i] /= p;
  }
  return sign;
}

int gauss_schering_sign(const ModuleHom& alpha) {
  require_endo(alpha);
  const FinModule& m = alpha.dom;
  if (m.order() > kDirectLimit)
    throw std::invalid_argument("gauss_schering_sign: module too large");
  auto in_half_set = [&](const Element& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return 2 * v[i] < m.divisors[i];
    return false;  // zero element
  };
  i64 count = 0;
  Submodule all = Submodule::full(m);
  all.enumerate([&](const Element& v) {
    if (!in_half_set(v)) return;
    Element img = alpha.apply(v);
    if (!m.is_zero(img) && !in_half_set(img)) ++count;
  });
  return count % 2 == 0 ? 1 : -1;
}

int sign_ratio(const BilinearForm& q, const BilinearForm& b) {
  return perm_sign_fast(relating_automorphism(q, b));
}

int scalar_sign_orders(const std::vector<i64>& orders, i64 s) {
  int sign = 1;
  for (i64 e : orders) {
    if (std::gcd(s % e, e) != 1)
      throw std::invalid_argument("scalar_sign: s is not a unit on the module");
    sign *= jacobi(s, e);
  }
  return sign;
}

int scalar_sign(const Submodule& x, i64 s) {
  if (std::gcd(s, x.ring().m) != 1)
    throw std::invalid_argument("scalar_sign: s is not a unit");
  return scalar_sign_orders(x.orders(), s);
}

}  // namespace weilchar
