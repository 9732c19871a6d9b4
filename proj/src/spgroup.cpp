#include "weilchar/spgroup.hpp"

#include <numeric>

namespace weilchar {

SymplecticSpace::SymplecticSpace(FinModule mod, BilinearForm form)
    : v(std::move(mod)), omega(std::move(form)) {
  if (!(omega.domain.ambient() == v) || omega.domain.rank() != v.rank())
    throw std::invalid_argument("SymplecticSpace: omega must live on the full module");
  if (!omega.alternating) throw std::invalid_argument("SymplecticSpace: omega not alternating");
  if (!is_nondegenerate(omega)) throw std::invalid_argument("SymplecticSpace: omega degenerate");
}

SymplecticSpace hyperbolic_space(const Ring& ring, std::vector<i64> d) {
  auto [mod, omega] = omega_hyperbolic(ring, std::move(d));
  return {mod, omega};
}

bool sp_check(const SymplecticSpace& s, const ModuleHom& hom) {
  if (!(hom.dom == s.v) || !(hom.cod == s.v)) return false;
  // form preservation forces injectivity, hence bijectivity
  return preserves_form(hom, s.omega);
}

SpElement SpElement::make(SymplecticSpace s, ModuleHom h) {
  if (!sp_check(s, h)) throw std::invalid_argument("SpElement: hom is not symplectic");
  return {std::move(s), std::move(h)};
}

SpElement SpElement::operator*(const SpElement& o) const {
  if (!(space == o.space)) throw std::invalid_argument("SpElement: context mismatch");
  return {space, compose(hom, o.hom)};
}

SpElement SpElement::inverse() const { return {space, hom_inverse(hom)}; }

SpElement SpElement::negated() const {
  return {space, compose(hom, ModuleHom::scalar(space.v, -1))};
}

SpElement SpElement::power(i64 e) const {
  if (e < 0) return inverse().power(-e);
  SpElement acc = identity(space);
  SpElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

SpElement SpElement::identity(const SymplecticSpace& s) {
  return {s, ModuleHom::identity(s.v)};
}

SpElement SpElement::minus_one(const SymplecticSpace& s) {
  return {s, ModuleHom::scalar(s.v, -1)};
}

i64 element_order(const SpElement& g) {
  constexpr i64 kOrderCap = 1 << 20;
  ModuleHom id = ModuleHom::identity(g.space.v);
  ModuleHom p = g.hom;
  for (i64 k = 1; k <= kOrderCap; ++k) {
    if (p == id) return k;
    p = compose(p, g.hom);
  }
  throw std::runtime_error("element_order: order exceeds cap");
}

SpElement cayley_param(const SymplecticSpace& s, const Submodule& x, const BilinearForm& b) {
  if (!(b.domain.same_as(x)) || b.domain.basis() != x.basis())
    throw std::invalid_argument("cayley_param: form must live on X");
  if (!is_nondegenerate(b)) throw std::invalid_argument("cayley_param: B degenerate");
  const Ring& ring = s.v.ring;
  int r = x.rank();
  // B(x,y) - B(y,x) = omega(x,y) on the basis
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (ring.reduce(b.gram[i][j] - b.gram[j][i]) !=
          s.omega.eval(x.basis()[i], x.basis()[j]))
        throw std::invalid_argument("cayley_param: B does not antisymmetrize to omega");

  int k = s.v.rank();
  if (r == 0) return SpElement::identity(s);

  // alpha(v) in X with B(alpha(v), x_j) = omega(v, x_j) for all j
  IntMat n = b.gram;
  for (int j = 0; j < r; ++j) {
    IntVec row(r, 0);
    row[j] = ring.m;
    n.push_back(std::move(row));
  }
  RowSolver solver(std::move(n));
  IntMat gmat(k, IntVec(k, 0));
  for (int i = 0; i < k; ++i) {
    Element ei(k, 0);
    ei[i] = 1;
    IntVec rhs(r, 0);
    for (int j = 0; j < r; ++j) rhs[j] = s.omega.eval(ei, x.basis()[j]);
    auto y = solver.solve(rhs);
    if (!y) throw std::invalid_argument("cayley_param: inconsistent system");
    Element img = x.element_from_coords(IntVec(y->begin(), y->begin() + r));
    for (int j = 0; j < k; ++j) gmat[i][j] = (i == j ? 1 : 0) - img[j];
  }
  SpElement g = SpElement::make(s, ModuleHom(s.v, s.v, std::move(gmat)));

  // uniqueness contract: V(1-g) = X and B_g = B
  ModuleHom alpha = ModuleHom::identity(s.v).sub(g.hom);
  if (!image(alpha).same_as(x))
    throw std::logic_error("cayley_param: displacement module mismatch");
  for (int i = 0; i < r; ++i) {
    Element vi = section(alpha, x.basis()[i]);
    for (int j = 0; j < r; ++j)
      if (s.omega.eval(vi, x.basis()[j]) != b.gram[i][j])
        throw std::logic_error("cayley_param: form roundtrip mismatch");
  }
  return g;
}

std::pair<SpElement, SpElement> factorize(const SpElement& g, const Submodule& x,
                                          const Submodule& y) {
  const SymplecticSpace& s = g.space;
  ModuleHom alpha = ModuleHom::identity(s.v).sub(g.hom);
  Submodule disp = image(alpha);
  if (intersect(x, y).order() != 1 || !sum(x, y).same_as(disp))
    throw std::invalid_argument("factorize: image(1-g) is not X (+) Y");
  BilinearForm bg = bg_form(g.hom, s.omega);
  auto bg_eval = [&](const Element& a, const Element& b2) {
    return s.omega.eval(section(alpha, a), b2);
  };
  for (const auto& yb : y.basis())
    for (const auto& xb : x.basis())
      if (bg_eval(yb, xb) != 0)
        throw std::invalid_argument("factorize: B_g(Y, X) != 0");

  auto restricted = [&](const Submodule& sub) {
    int r = sub.rank();
    IntMat gram(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) gram[i][j] = bg_eval(sub.basis()[i], sub.basis()[j]);
    return BilinearForm(sub, std::move(gram));
  };
  SpElement h = cayley_param(s, x, restricted(x));
  SpElement k = cayley_param(s, y, restricted(y));
  if (!((h * k) == g)) throw std::logic_error("factorize: h * k != g");
  return {h, k};
}

SpElement sp_random(const SymplecticSpace& s, std::mt19937_64& rng, int steps) {
  if (steps < 1) throw std::invalid_argument("sp_random: steps must be >= 1");
  const Ring& ring = s.v.ring;
  int k = s.v.rank();
  Submodule full = Submodule::full(s.v);
  SpElement acc = SpElement::identity(s);
  for (int step = 0; step < steps; ++step) {
    bool made = false;
    for (int attempt = 0; attempt < 64 && !made; ++attempt) {
      IntMat gram(k, IntVec(k, 0));
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          i64 g = std::gcd(s.v.divisors[i], s.v.divisors[j]);
          i64 step_val = ring.m / g;
          i64 sym = step_val * static_cast<i64>(rng() % static_cast<unsigned long long>(g));
          gram[i][j] = ring.reduce(gram[i][j] + sym);
          if (j > i) gram[j][i] = ring.reduce(gram[j][i] + sym);
        }
      // B = omega/2 + S
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          gram[i][j] = ring.reduce(gram[i][j] + ring.half * s.omega.gram[i][j]);
      BilinearForm b(full, std::move(gram));
      if (!is_nondegenerate(b)) continue;
      acc = acc * cayley_param(s, full, b);
      made = true;
    }
    if (!made) throw std::runtime_error("sp_random: retry budget exhausted");
  }
  return acc;
}

SpElement transvection(const SymplecticSpace& s, const Element& u, i64 c) {
  int k = s.v.rank();
  IntMat mat(k, IntVec(k, 0));
  for (int i = 0; i < k; ++i) {
    Element ei(k, 0);
    ei[i] = 1;
    i64 w = s.omega.eval(ei, u);
    for (int j = 0; j < k; ++j) mat[i][j] = (i == j ? 1 : 0) + c * w * u[j];
  }
  return SpElement::make(s, ModuleHom(s.v, s.v, std::move(mat)));
}

std::vector<SpElement> enumerate_sp(const SymplecticSpace& s, i64 candidate_cap) {
  const FinModule& v = s.v;
  int k = v.rank();
  // entry (i, j) ranges over gcd(d_i, d_j) admissible values
  std::vector<std::vector<i64>> steps(k, std::vector<i64>(k));
  std::vector<std::vector<i64>> counts(k, std::vector<i64>(k));
  i64 total = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      i64 g = std::gcd(v.divisors[i], v.divisors[j]);
      steps[i][j] = v.divisors[j] / g;
      counts[i][j] = g;
      if (total > candidate_cap / std::max<i64>(g, 1))
        throw std::invalid_argument("enumerate_sp: candidate count exceeds cap");
      total *= g;
    }

  // gram targets for early rejection
  std::vector<SpElement> out;
  IntMat mat(k, IntVec(k, 0));
  std::vector<i64> digit(k * k, 0);
  for (;;) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) mat[i][j] = digit[i * k + j] * steps[i][j];
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i; j < k && ok; ++j) {
        i64 acc = 0;
        for (int a = 0; a < k; ++a) {
          if (mat[i][a] == 0) continue;
          for (int b = 0; b < k; ++b)
            acc += mat[i][a] % v.ring.m * (s.omega.gram[a][b] * (mat[j][b] % v.ring.m) % v.ring.m);
        }
        if (v.ring.reduce(acc) != v.ring.reduce(s.omega.gram[i][j])) ok = false;
      }
    if (ok) out.push_back(SpElement{s, ModuleHom(v, v, mat)});
    // next candidate
    int pos = k * k;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < counts[pos / k][pos % k]) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace weilchar
