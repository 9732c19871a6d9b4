#pragma once

// Z/m-valued bilinear forms on modules and submodules: the symplectic
// form, the displacement form B_g and its symmetric part Q_g, orthogonal
// splittings over the principal ideal ring Z/m, and symmetric
// non-degenerate companion forms q.

#include "weilchar/finmod.hpp"

namespace weilchar {

struct BilinearForm {
  Submodule domain;
  IntMat gram;  // gram[i][j] = B(b_i, b_j) mod m on the domain basis
  bool symmetric = true;
  bool alternating = true;

  BilinearForm() = default;
  BilinearForm(Submodule dom, IntMat g);

  const Ring& ring() const { return domain.ring(); }
  /// B(x, y) for ambient elements of the domain.
  i64 eval(const Element& x, const Element& y) const;
  /// B on basis coordinates of the domain.
  i64 eval_coords(const IntVec& cx, const IntVec& cy) const;

  BilinearForm negate() const;
  BilinearForm scale(i64 c) const;
  BilinearForm transpose() const;
};

/// Hyperbolic module on divisors d_1..d_k: V = (+) Z/d_i e_i (+) Z/d_i f_i
/// with omega(e_i, f_i) = m/d_i.  The divisor list is canonicalized
/// ascending before pairing.
std::pair<FinModule, BilinearForm> omega_hyperbolic(const Ring& ring, std::vector<i64> d);

enum class Side { left, right };

/// Annihilator {v : B(x, v) = 0 for all x in X} (right) or the mirrored
/// left version; X must lie inside the form's domain.
Submodule perp(const Submodule& x, const BilinearForm& b, Side side = Side::right);

bool is_nondegenerate(const BilinearForm& b);

/// omega(g(v), g(w)) = omega(v, w) on all basis pairs of the ambient module.
bool preserves_form(const ModuleHom& g, const BilinearForm& omega);

/// Wall form B_g on X = V(1-g):  B_g(v(1-g), w(1-g)) = omega(v, w(1-g)).
/// The hom g must preserve omega.
BilinearForm bg_form(const ModuleHom& g, const BilinearForm& omega);

/// Symmetric part Q_g of B_g (Cayley form).
BilinearForm qg_form(const ModuleHom& g, const BilinearForm& omega);

enum class SplitKind { diagonal, hyperbolic, dual };

struct SplitPair {
  Element u, w;
  i64 d;
};

struct OrthSplit {
  SplitKind kind = SplitKind::diagonal;
  std::vector<SplitPair> pairs;
};

/// Orthogonal splitting of a non-degenerate form along ideal-maximal
/// pivots:  symmetric forms diagonalize (u_i = w_i), alternating forms
/// split into hyperbolic planes, anything else falls back to dual bases
/// with B(u_i, w_j) = delta_ij d_i.
OrthSplit orth_split(const BilinearForm& b);

/// Canonical diagonal symmetric non-degenerate form on X:
/// q(x_i, x_j) = delta_ij * (m / e_i) on the internal basis.
BilinearForm symmetric_q(const Submodule& x);

/// Unique alpha with q(x, y) = B(alpha(x), y), as an endomorphism of the
/// abstract module on the common domain basis.
ModuleHom relating_automorphism(const BilinearForm& q, const BilinearForm& b);

/// Block sum of two forms on independent submodules of the same ambient.
BilinearForm form_direct_sum(const BilinearForm& bx, const BilinearForm& by);

/// Pullback q(sigma(x), sigma(y)) along an automorphism of the domain
/// (matrix in domain-basis coordinates).
BilinearForm form_pullback(const BilinearForm& q, const ModuleHom& sigma);

}  // namespace weilchar
