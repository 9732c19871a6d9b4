#include "weilchar/gauss.hpp"

#include <cmath>

namespace weilchar {

namespace {
constexpr i64 kSumLimit = 1LL << 20;
constexpr i64 kReductionThreshold = 100000;
constexpr i64 kSchurLimit = 512;

void require_symmetric_nondeg(const BilinearForm& q) {
  if (!q.symmetric) throw std::invalid_argument("gauss_sum: form not symmetric");
  if (!is_nondegenerate(q)) throw std::invalid_argument("gauss_sum: form degenerate");
}

FourthRoot finish_sum(cplx acc, i64 size) {
  cplx g = acc / std::sqrt(static_cast<double>(size));
  FourthRoot root = snap_fourth_root(g);
  // gamma^2 = (-1)^{(|X|-1)/2}; a mismatch means an upstream contract broke
  int expected_square = jacobi(-1, size);
  if ((root * root).real_sign() != expected_square)
    throw SnapFailure("gauss_sum: snapped value violates the square law");
  return root;
}

cplx raw_gauss_sum(const BilinearForm& q, const AdditiveCharacter& lambda) {
  const Ring& ring = q.ring();
  std::vector<cplx> table(ring.m);
  for (i64 r = 0; r < ring.m; ++r) table[r] = lambda.eval(r);
  cplx acc = 0.0;
  const auto& orders = q.domain.orders();
  IntVec c(orders.size(), 0);
  for (;;) {
    acc += table[ring.reduce(ring.half * q.eval_coords(c, c))];
    size_t i = c.size();
    bool done = c.empty();
    while (i > 0) {
      --i;
      if (++c[i] < orders[i]) break;
      c[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return acc;
}

}  // namespace

cplx FourthRoot::value() const {
  switch (k) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

const char* FourthRoot::str() const {
  switch (k) {
    case 0: return "+1";
    case 1: return "+i";
    case 2: return "-1";
    default: return "-i";
  }
}

FourthRoot snap_fourth_root(cplx z, double tol) {
  int best = 0;
  double dist = std::abs(z - FourthRoot{0}.value());
  for (int k = 1; k < 4; ++k) {
    double d = std::abs(z - FourthRoot{k}.value());
    if (d < dist) {
      dist = d;
      best = k;
    }
  }
  if (dist > tol)
    throw SnapFailure("value " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) +
                      "i is not a fourth root of unity (residual " + std::to_string(dist) + ")");
  return {best};
}

FourthRoot gauss_sum(const BilinearForm& q, const AdditiveCharacter& lambda) {
  require_symmetric_nondeg(q);
  i64 size = q.domain.order();
  if (size > kSumLimit) throw std::invalid_argument("gauss_sum: domain too large");
  if (size > kReductionThreshold) return gauss_sum_reduced(q, lambda);
  return finish_sum(raw_gauss_sum(q, lambda), size);
}

FourthRoot gauss_sum_reduced(const BilinearForm& q, const AdditiveCharacter& lambda) {
  require_symmetric_nondeg(q);
  const Submodule& x = q.domain;
  i64 size = x.order();
  if (size > kSumLimit) throw std::invalid_argument("gauss_sum_reduced: domain too large");

  // first isotropic vector in coordinate order
  std::optional<Element> isotropic;
  {
    const auto& orders = x.orders();
    IntVec c(orders.size(), 0);
    while (!c.empty()) {
      size_t i = c.size();
      bool wrapped = false;
      while (i > 0) {
        --i;
        if (++c[i] < orders[i]) break;
        c[i] = 0;
        if (i == 0) wrapped = true;
      }
      if (wrapped) break;
      if (q.eval_coords(c, c) == 0) {
        isotropic = x.element_from_coords(c);
        break;
      }
    }
  }
  if (!isotropic) return finish_sum(raw_gauss_sum(q, lambda), size);

  // reduce to the induced form on U^q / U for U = R * isotropic
  Submodule u = Submodule::from_generators(x.ambient(), {*isotropic});
  Submodule uq = perp(u, q, Side::right);
  IntMat small = u.lattice();
  Submodule quotient = Submodule::from_lattices(x.ambient(), uq.lattice(), small);
  int r = quotient.rank();
  IntMat gram(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram[i][j] = q.eval(quotient.basis()[i], quotient.basis()[j]);
  BilinearForm reduced(quotient, std::move(gram));
  return gauss_sum_reduced(reduced, lambda);
}

SchurReport schur_matrix_checks(const BilinearForm& q, const AdditiveCharacter& lambda) {
  require_symmetric_nondeg(q);
  const Ring& ring = q.ring();
  i64 size = q.domain.order();
  if (size > kSchurLimit) throw std::invalid_argument("schur_matrix_checks: domain too large");

  std::vector<Element> elems = q.domain.elements();
  std::vector<IntVec> coords(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) coords[i] = q.domain.coords(elems[i]);

  int n = static_cast<int>(elems.size());
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMat f = cmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f[i][j] = scale * lambda.eval(ring.reduce(ring.half * q.eval_coords(coords[i], coords[j])));

  // negation permutation matrix
  const FinModule& amb = q.domain.ambient();
  std::vector<int> neg_index(n);
  for (int i = 0; i < n; ++i) {
    Element nv = amb.neg(elems[i]);
    for (int j = 0; j < n; ++j)
      if (elems[j] == nv) {
        neg_index[i] = j;
        break;
      }
  }
  CMat negperm = cmat_zero(n, n);
  for (int i = 0; i < n; ++i) negperm[i][neg_index[i]] = 1.0;

  SchurReport rep;
  rep.n = n;
  CMat f2 = cmat_mul(f, f);
  rep.residual_f2 = cmat_max_abs_diff(f2, negperm);
  rep.residual_f4 = cmat_max_abs_diff(cmat_mul(f2, f2), cmat_identity(n));
  FourthRoot gamma = gauss_sum(q, lambda);
  rep.residual_trace = std::abs(cmat_trace(f) - gamma.value());
  cplx det = cmat_det(f);
  double factor = jacobi(2, size);  // (-1)^{(|X|^2-1)/8}
  rep.residual_det = std::abs(gamma.value() - factor * det);
  rep.pass = rep.residual_f2 < 1e-8 && rep.residual_f4 < 1e-8 && rep.residual_trace < 1e-8 &&
             rep.residual_det < 1e-8;
  return rep;
}

}  // namespace weilchar
