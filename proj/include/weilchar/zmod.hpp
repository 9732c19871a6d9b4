#pragma once

// Arithmetic in Z/m for odd m: primitive additive characters, Jacobi
// symbols, and the multiplicative sign character on the ring.

#include <complex>
#include <stdexcept>

namespace weilchar {

using i64 = long long;
using cplx = std::complex<double>;

struct Ring {
  i64 m = 3;
  i64 half = 2;  // inverse of 2 mod m

  Ring() = default;
  explicit Ring(i64 modulus);

  i64 reduce(i64 x) const {
    x %= m;
    return x < 0 ? x + m : x;
  }
  bool operator==(const Ring& o) const { return m == o.m; }
};

/// Inverse of a mod m; throws std::invalid_argument when gcd(a, m) != 1.
i64 mod_inverse(i64 a, i64 m);

/// Jacobi symbol (a/n) for odd n >= 1; returns 0 when gcd(a, n) > 1.
int jacobi(i64 a, i64 n);

/// Sign of the permutation r -> ra of Z/m; equals jacobi(a, m).
/// Rejects non-units (the sign is only defined on units).
int ring_sign(const Ring& ring, i64 a);

/// Unit u mod m with u*d = gcd(d, m) mod m, for d != 0 mod m.
i64 unit_scaling_to_gcd(i64 d, i64 m);

// lambda_s(r) = exp(2*pi*i*s*r/m), primitive since gcd(s, m) = 1.
struct AdditiveCharacter {
  Ring ring;
  i64 s = 1;

  AdditiveCharacter(Ring r, i64 twist);
  cplx eval(i64 r) const;
  /// lambda_{s*t}; t must again be a unit.
  AdditiveCharacter twist(i64 t) const { return {ring, ring.reduce(s * t)}; }
};

}  // namespace weilchar
