#pragma once

// Symplectic elements: membership, Cayley-type parametrization by forms,
// factorization along orthogonal splittings, orders and random sampling.

#include <random>

#include "weilchar/bforms.hpp"

namespace weilchar {

struct SymplecticSpace {
  FinModule v;
  BilinearForm omega;  // non-degenerate alternating, domain = full module

  SymplecticSpace() = default;
  SymplecticSpace(FinModule mod, BilinearForm form);
  bool operator==(const SymplecticSpace& o) const {
    return v == o.v && omega.gram == o.omega.gram;
  }
};

/// Hyperbolic space on pair divisors d_1..d_k.
SymplecticSpace hyperbolic_space(const Ring& ring, std::vector<i64> d);

struct SpElement {
  SymplecticSpace space;
  ModuleHom hom;

  static SpElement make(SymplecticSpace s, ModuleHom h);  // validates
  SpElement operator*(const SpElement& o) const;          // apply this, then o
  SpElement inverse() const;
  SpElement negated() const;  // -g
  SpElement power(i64 e) const;
  static SpElement identity(const SymplecticSpace& s);
  static SpElement minus_one(const SymplecticSpace& s);
  bool operator==(const SpElement& o) const { return hom == o.hom; }
};

bool sp_check(const SymplecticSpace& s, const ModuleHom& hom);

/// Multiplicative order, found by iterating powers (desk-scale orders).
i64 element_order(const SpElement& g);

/// The unique g with V(1-g) = X and B_g = B; B must be non-degenerate
/// with B(x,y) - B(y,x) = omega(x,y) on X.
SpElement cayley_param(const SymplecticSpace& s, const Submodule& x, const BilinearForm& b);

/// For image(1-g) = X (+) Y with B_g(Y, X) = 0: the unique h, k with
/// V(1-h) = X, V(1-k) = Y, B_h, B_k the restrictions, and g = h * k.
std::pair<SpElement, SpElement> factorize(const SpElement& g, const Submodule& x,
                                          const Submodule& y);

/// Product of `steps` Cayley-parametrized elements with X = V and random
/// symmetric perturbation of omega/2; deterministic per generator state.
SpElement sp_random(const SymplecticSpace& s, std::mt19937_64& rng, int steps = 3);

/// Symplectic transvection v -> v + c * omega(v, u) * u.
SpElement transvection(const SymplecticSpace& s, const Element& u, i64 c);

/// All of Sp(V) by brute-force filtering (throws when the candidate count
/// exceeds the cap); deterministic order.
std::vector<SpElement> enumerate_sp(const SymplecticSpace& s, i64 candidate_cap = 1LL << 26);

}  // namespace weilchar
