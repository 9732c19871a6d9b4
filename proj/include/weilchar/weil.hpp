#pragma once

// Both computation paths for the Weil character psi: the brute-force
// oracle (symplectic algebra, Lagrangian matrix units, Ward's operator
// P(g), canonical eta-normalization, numeric trace) and the exact closed
// formulas, plus the identity battery.

#include <map>
#include <string>

#include "weilchar/cmat.hpp"
#include "weilchar/gauss.hpp"
#include "weilchar/modsign.hpp"
#include "weilchar/spgroup.hpp"

namespace weilchar {

struct WeilContext {
  SymplecticSpace space;
  AdditiveCharacter lambda;

  WeilContext(SymplecticSpace s, AdditiveCharacter l);
  const Ring& ring() const { return space.v.ring; }
  WeilContext with_twist(i64 t) const { return {space, lambda.twist(t)}; }
};

// Sparse element of the twisted group algebra of V, coefficients indexed
// by the mixed-radix rank of the group element.
struct AlgebraElement {
  FinModule v;
  std::map<i64, cplx> coeffs;

  static AlgebraElement zero(const FinModule& m) { return {m, {}}; }
  static AlgebraElement basis(const FinModule& m, const Element& x);
  AlgebraElement& accumulate(i64 index, cplx c);
  AlgebraElement scaled(cplx c) const;
  cplx coefficient(const Element& x) const;
  double max_abs_diff(const AlgebraElement& o) const;
};

/// Twisted convolution b_v b_w = lambda(omega(v,w)/2) b_{v+w}.
AlgebraElement alg_mult(const WeilContext& ctx, const AlgebraElement& a,
                        const AlgebraElement& b);

/// Ward operator P(g) = sum over x in V(1-g) of lambda(B_g(x,x)/2) b_x.
AlgebraElement p_operator(const WeilContext& ctx, const SpElement& g);

/// Cocycle c(g,h) with P(g)P(h) = c(g,h)P(gh).
cplx conv_coeff(const WeilContext& ctx, const SpElement& g, const SpElement& h);

/// A Lagrangian submodule (L = L^perp), built from the hyperbolic split.
Submodule lagrangian(const SymplecticSpace& s);

// psi(g) = eps * sqrt(c) with c = |C_V(g)| and eps a fourth root of unity.
struct CharacterValue {
  i64 c = 1;
  FourthRoot eps;

  cplx to_complex() const;
  CharacterValue operator*(const CharacterValue& o) const { return {c * o.c, eps * o.eps}; }
  bool operator==(const CharacterValue& o) const { return c == o.c && eps == o.eps; }
  std::string str() const;
};

// Dense matrix model of the symplectic algebra through matrix units over
// a Lagrangian; carries the canonical T-eigenspace normalization.
class Oracle {
 public:
  explicit Oracle(WeilContext ctx);  // |V| <= 2^16

  int n() const { return n_; }
  const WeilContext& context() const { return ctx_; }
  const CMat& tmat() const { return tmat_; }
  int dim_plus() const { return static_cast<int>(eplus_.rows.size()); }
  int dim_minus() const { return static_cast<int>(eminus_.rows.size()); }
  const std::vector<Element>& reps() const { return reps_; }

  /// Matrix-unit image of an algebra element (an algebra homomorphism).
  CMat rho(const AlgebraElement& a) const;
  /// Balanced determinant ratio det(c|E+) / det(c|E-) for c commuting with T.
  cplx eta(const CMat& c) const;
  /// psi(g) = sqrt(|V|) / eta(rho(P(g))).
  cplx trace(const SpElement& g) const;
  /// Canonically normalized Weil operator W(g) = rho(P(g)) / eta.
  CMat wmat(const SpElement& g) const;

 private:
  WeilContext ctx_;
  int n_;
  std::vector<Element> reps_;
  std::vector<int> coset_of_;
  std::vector<cplx> table_;
  CMat tmat_;
  RowBasis eplus_, eminus_;
};

/// General closed formula: c = |Ker(1-g)|,
/// eps = sign(q/B_g) * gamma_lambda(-q) with q the canonical diagonal form.
CharacterValue closed_value(const WeilContext& ctx, const SpElement& g);

/// Odd-order summation formula |V|^{-1/2} sum_v lambda(omega(v,vg)/2).
CharacterValue value_odd(const WeilContext& ctx, const SpElement& g);

/// Involution formula (-1)^{(d-1)/2} sqrt(|C_V(t)|), d = sqrt(|V(1-t)|).
CharacterValue value_involution(const WeilContext& ctx, const SpElement& t);

/// For Ker(1-g) meet V(1-g) = 0:
/// (-1)^{(sqrt|U|-1)/2} sign_U(1-g) sqrt(|C_V(g)|).
CharacterValue value_invertible(const WeilContext& ctx, const SpElement& g);

/// Eigenspace characters (psi_+, psi_-) on the T-eigenspaces.
std::pair<cplx, cplx> psi_pm(const WeilContext& ctx, const SpElement& g);

i64 isqrt_exact(i64 n);  // throws when n is not a perfect square

struct CheckResult {
  std::string check;
  std::string params;
  std::string expected;
  std::string got;
  double residual = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  int failures() const;
};

/// Runs the identity battery on sampled elements (forced: 1, -1, the
/// DFT-type element, transvections, small powers).
Report verify_identities(const WeilContext& ctx, unsigned long long seed, int samples);

/// CRT decomposition of the context into prime-power components together
/// with the reduction of g; product of component values equals psi(g).
std::vector<std::pair<WeilContext, SpElement>> crt_components(const WeilContext& ctx,
                                                              const SpElement& g);

}  // namespace weilchar
