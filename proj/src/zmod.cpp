#include "weilchar/zmod.hpp"

#include <cmath>
#include <numeric>

namespace weilchar {

Ring::Ring(i64 modulus) : m(modulus) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("Ring: modulus must be odd and >= 3");
  half = (m + 1) / 2;
}

i64 mod_inverse(i64 a, i64 m) {
  i64 r0 = m, r1 = ((a % m) + m) % m;
  i64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    i64 t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return ((t0 % m) + m) % m;
}

int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0)
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  if (n == 1) return 1;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int ring_sign(const Ring& ring, i64 a) {
  a = ring.reduce(a);
  if (std::gcd(a, ring.m) != 1)
    throw std::invalid_argument("ring_sign: argument is not a unit");
  return jacobi(a, ring.m);
}

i64 unit_scaling_to_gcd(i64 d, i64 m) {
  d = ((d % m) + m) % m;
  if (d == 0) throw std::invalid_argument("unit_scaling_to_gcd: d = 0");
  i64 g = std::gcd(d, m);
  i64 cof = m / g;
  i64 t = d / g;  // coprime to cof
  i64 u0 = (cof == 1) ? 0 : mod_inverse(t % cof, cof);
  for (i64 k = 0;; ++k) {
    i64 u = (u0 + k * cof) % m;
    if (u > 0 && std::gcd(u, m) == 1) return u;
    if (k > m) throw std::logic_error("unit_scaling_to_gcd: no unit found");
  }
}

AdditiveCharacter::AdditiveCharacter(Ring r, i64 twist) : ring(r), s(ring.reduce(twist)) {
  if (std::gcd(s, ring.m) != 1)
    throw std::invalid_argument("AdditiveCharacter: twist must be a unit");
}

cplx AdditiveCharacter::eval(i64 r) const {
  i64 e = ring.reduce(s * ring.reduce(r));
  double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(ring.m);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace weilchar
