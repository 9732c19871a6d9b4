#pragma once

// Sign of the permutation a module automorphism induces: a direct path
// by cycle decomposition and a fast path through prime-field layers.

#include "weilchar/bforms.hpp"

namespace weilchar {

/// Cycle-count sign of an automorphism (endomorphism with trivial kernel)
/// acting on its module; rejects |X| > 2^20.
int perm_sign_direct(const ModuleHom& alpha);

/// Same value, computed by filtering through the chain X > pX > p^2 X ...
/// and taking determinant signs on the elementary-abelian layers.
int perm_sign_fast(const ModuleHom& alpha);

/// Gauss-Schering half-set evaluation: (-1)^{|P alpha meet -P|} with P the
/// elements whose first nonzero coordinate c satisfies 2c < order.
int gauss_schering_sign(const ModuleHom& alpha);

/// sign of the alpha relating two non-degenerate forms on one domain:
/// q(x, y) = B(alpha(x), y).
int sign_ratio(const BilinearForm& q, const BilinearForm& b);

/// Parity of multiplication by the unit s on X.
int scalar_sign(const Submodule& x, i64 s);
int scalar_sign_orders(const std::vector<i64>& orders, i64 s);

}  // namespace weilchar
