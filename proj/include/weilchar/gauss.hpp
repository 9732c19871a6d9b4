#pragma once

// Normalized quadratic Gauss sums of symmetric non-degenerate forms,
// snapped to exact fourth roots of unity, with Schur-matrix cross-checks.

#include "weilchar/bforms.hpp"
#include "weilchar/cmat.hpp"

namespace weilchar {

struct SnapFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// i^k for k in 0..3
struct FourthRoot {
  int k = 0;

  static FourthRoot one() { return {0}; }
  static FourthRoot imag_unit() { return {1}; }
  static FourthRoot minus_one() { return {2}; }

  cplx value() const;
  FourthRoot operator*(FourthRoot o) const { return {(k + o.k) % 4}; }
  FourthRoot conj() const { return {(4 - k) % 4}; }
  bool operator==(FourthRoot o) const { return k == o.k; }
  bool is_real() const { return k % 2 == 0; }
  int real_sign() const { return k == 0 ? 1 : k == 2 ? -1 : 0; }
  const char* str() const;
};

/// Nearest fourth root of unity; throws SnapFailure beyond tol.
FourthRoot snap_fourth_root(cplx z, double tol = 1e-6);

/// gamma_lambda(q) = |X|^{-1/2} sum_x lambda(q(x,x)/2), snapped exactly.
/// q must be symmetric and non-degenerate, |X| <= 2^20.
FourthRoot gauss_sum(const BilinearForm& q, const AdditiveCharacter& lambda);

/// Same value through one isotropic reduction step (chosen automatically
/// above ~1e5 elements); exposed for cross-checking both paths.
FourthRoot gauss_sum_reduced(const BilinearForm& q, const AdditiveCharacter& lambda);

struct SchurReport {
  i64 n = 0;
  double residual_f2 = 0, residual_f4 = 0, residual_trace = 0, residual_det = 0;
  bool pass = false;
};

/// Schur matrix F = |X|^{-1/2} (lambda(q(x,y)/2)): verifies F^2 is the
/// negation permutation, F^4 = I, tr F = gamma and the determinant
/// identity, all within 1e-8.  |X| <= 512.
SchurReport schur_matrix_checks(const BilinearForm& q, const AdditiveCharacter& lambda);

}  // namespace weilchar
