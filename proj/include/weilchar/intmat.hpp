#pragma once

// Exact integer matrix kernel: Smith normal form with transforms,
// lattice bases, left kernels and linear congruence solving.
// Sizes here are tiny (module ranks), entries stay desk-scale.

#include <optional>
#include <vector>

#include "weilchar/zmod.hpp"

namespace weilchar {

using IntVec = std::vector<i64>;
using IntMat = std::vector<IntVec>;  // row major

IntMat imat_identity(int n);
IntMat imat_mul(const IntMat& a, const IntMat& b);
IntVec vec_mat(const IntVec& v, const IntMat& a);
bool imat_equal(const IntMat& a, const IntMat& b);

// S = U * A * V with S diagonal (rank many positive entries, divisibility
// chain s_1 | s_2 | ...), U and V unimodular.  vinv = V^{-1}.
struct Smith {
  IntMat u, v, vinv;
  IntVec s;  // length min(rows, cols), zeros past the rank
  int rank = 0;
  int rows = 0, cols = 0;
};

Smith smith_normal_form(IntMat a);

// Basis (full row rank, deterministic) of the lattice spanned by the rows.
IntMat lattice_basis(const IntMat& a);

// Basis of { y : y * A = 0 }.
IntMat left_kernel(const IntMat& a);

// Solves y * A = x over the integers for fixed A.
class RowSolver {
 public:
  explicit RowSolver(IntMat a);
  // Returns a deterministic solution, or nullopt when none exists.
  std::optional<IntVec> solve(const IntVec& x) const;

 private:
  Smith dec_;
};

}  // namespace weilchar
