#pragma once

// Small dense complex matrices for the oracle kernel.  Row vectors act on
// the right, so operators compose left to right.

#include <vector>

#include "weilchar/zmod.hpp"

namespace weilchar {

using CMat = std::vector<std::vector<cplx>>;

CMat cmat_zero(int rows, int cols);
CMat cmat_identity(int n);
CMat cmat_mul(const CMat& a, const CMat& b);
CMat cmat_add(const CMat& a, const CMat& b);
CMat cmat_scale(cplx c, const CMat& a);
cplx cmat_trace(const CMat& a);
double cmat_max_abs_diff(const CMat& a, const CMat& b);
double cmat_frobenius(const CMat& a);

/// Determinant by partially pivoted LU.
cplx cmat_det(CMat a);

/// Solves X * A = B for X (A square, B with matching column count).
CMat cmat_solve_right(CMat a, CMat b);

/// Row-space basis of a via full-pivot Gaussian elimination.
struct RowBasis {
  CMat rows;              // basis rows
  std::vector<int> cols;  // pivot column per basis row
};
RowBasis cmat_row_basis(CMat a, double pivot_threshold);

}  // namespace weilchar
