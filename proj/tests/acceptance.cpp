// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria run the exact identities at the stated tolerances.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "weilchar/json_io.hpp"
#include "weilchar/weil.hpp"

using namespace weilchar;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << " ["
       << std::fixed;
  line.precision(2);
  line << secs << "s]";
  if (!detail.empty()) line << " -- " << detail;
  std::cout << line.str() << "\n";
  if (!ok) ++failures;
}

struct Fixture {
  std::string name;
  WeilContext ctx;
  std::vector<SpElement> elements;
};

Fixture make_fixture(const std::string& name, i64 m, std::vector<i64> pairs, i64 lambda_s = 1) {
  SymplecticSpace s = hyperbolic_space(Ring(m), std::move(pairs));
  return {name, WeilContext(s, AdditiveCharacter(Ring(m), lambda_s)), {}};
}

bool exact_equal(const CharacterValue& a, const CharacterValue& b) { return a == b; }

SpElement dft_element(const SymplecticSpace& s) {
  int k = s.v.rank() / 2;
  IntMat mat(2 * k, IntVec(2 * k, 0));
  for (int i = 0; i < k; ++i) {
    mat[i][k + i] = 1;
    mat[k + i][i] = -1;
  }
  return SpElement::make(s, ModuleHom(s.v, s.v, mat));
}

BilinearForm random_symmetric_nondeg(const Submodule& x, std::mt19937_64& rng) {
  const Ring& ring = x.ring();
  for (;;) {
    int r = x.rank();
    IntMat gram(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        i64 g = std::gcd(x.orders()[i], x.orders()[j]);
        i64 val = (ring.m / g) * static_cast<i64>(rng() % g);
        gram[i][j] = val;
        gram[j][i] = val;
      }
    BilinearForm q(x, std::move(gram));
    if (is_nondegenerate(q)) return q;
  }
}

}  // namespace

int main() {
  // fixtures for criteria 1-3
  Fixture f1 = make_fixture("Sp((Z/3)^2)", 3, {3});
  Fixture f2 = make_fixture("SL(2, Z/9)", 9, {9});
  Fixture f3 = make_fixture("H(3,9)", 9, {3, 9});
  Fixture f5a = make_fixture("(Z/5)^2", 5, {5});
  Fixture f15 = make_fixture("(Z/15)^2", 15, {15});

  f1.elements = enumerate_sp(f1.ctx.space);
  f2.elements = enumerate_sp(f2.ctx.space);
  {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) f3.elements.push_back(sp_random(f3.ctx.space, rng, 3));
  }

  criterion(1, "exhaustive oracle/formula agreement on Sp((Z/3)^2), 24 elements, <1e-6, <1s",
            [&](std::string& detail) {
              if (f1.elements.size() != 24) {
                detail = "expected 24 elements, got " + std::to_string(f1.elements.size());
                return false;
              }
              auto start = std::chrono::steady_clock::now();
              Oracle oracle(f1.ctx);
              double worst = 0;
              for (const auto& g : f1.elements) {
                double res =
                    std::abs(oracle.trace(g) - closed_value(f1.ctx, g).to_complex());
                worst = std::max(worst, res);
              }
              double secs =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
              detail = "max residual " + std::to_string(worst);
              return worst < 1e-6 && secs < 1.0;
            });

  criterion(2, "exhaustive oracle/formula agreement on SL(2, Z/9), 648 elements, <1e-6, <60s",
            [&](std::string& detail) {
              if (f2.elements.size() != 648) {
                detail = "expected 648 elements, got " + std::to_string(f2.elements.size());
                return false;
              }
              auto start = std::chrono::steady_clock::now();
              Oracle oracle(f2.ctx);
              double worst = 0;
              for (const auto& g : f2.elements)
                worst = std::max(worst,
                                 std::abs(oracle.trace(g) - closed_value(f2.ctx, g).to_complex()));
              double secs =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
              detail = "max residual " + std::to_string(worst);
              return worst < 1e-6 && secs < 60.0;
            });

  criterion(3, "oracle/formula agreement on 500 random elements of Sp(H(3,9)), <1e-6, <120s",
            [&](std::string& detail) {
              auto start = std::chrono::steady_clock::now();
              Oracle oracle(f3.ctx);
              double worst = 0;
              for (const auto& g : f3.elements)
                worst = std::max(worst,
                                 std::abs(oracle.trace(g) - closed_value(f3.ctx, g).to_complex()));
              double secs =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
              detail = "max residual " + std::to_string(worst);
              return worst < 1e-6 && secs < 120.0;
            });

  criterion(4, "psi(1) = sqrt|V| and psi(-1) = (-1)^((sqrt|V|-1)/2) on all fixtures; DFT values",
            [&](std::string& detail) {
              for (Fixture* f : {&f1, &f2, &f3, &f5a, &f15}) {
                i64 n = isqrt_exact(f->ctx.space.v.order());
                CharacterValue one = closed_value(f->ctx, SpElement::identity(f->ctx.space));
                if (one.c != n * n || !(one.eps == FourthRoot::one())) {
                  detail = f->name + ": psi(1) wrong";
                  return false;
                }
                CharacterValue minus = closed_value(f->ctx, SpElement::minus_one(f->ctx.space));
                if (minus.c != 1 || minus.eps.real_sign() != jacobi(-1, n)) {
                  detail = f->name + ": psi(-1) wrong";
                  return false;
                }
              }
              CharacterValue d3 = closed_value(f1.ctx, dft_element(f1.ctx.space));
              CharacterValue d5 = closed_value(f5a.ctx, dft_element(f5a.ctx.space));
              if (!(d3 == CharacterValue{1, FourthRoot::one()})) {
                detail = "DFT on (Z/3)^2 != +1";
                return false;
              }
              if (!(d5 == CharacterValue{1, FourthRoot::minus_one()})) {
                detail = "DFT on (Z/5)^2 != -1";
                return false;
              }
              return true;
            });

  criterion(5, "odd-order elements: value_odd == closed_value and psi(-g) == psi(-1), exact",
            [&](std::string& detail) {
              int count = 0;
              for (Fixture* f : {&f1, &f2, &f3}) {
                CharacterValue pm1 = closed_value(f->ctx, SpElement::minus_one(f->ctx.space));
                for (const auto& g : f->elements) {
                  if (element_order(g) % 2 == 0) continue;
                  ++count;
                  if (!exact_equal(value_odd(f->ctx, g), closed_value(f->ctx, g))) {
                    detail = f->name + ": value_odd mismatch";
                    return false;
                  }
                  if (!exact_equal(closed_value(f->ctx, g.negated()), pm1)) {
                    detail = f->name + ": psi(-g) != psi(-1)";
                    return false;
                  }
                }
              }
              detail = std::to_string(count) + " odd-order elements";
              return count > 0;
            });

  criterion(6, "invertible-displacement elements: value_invertible == closed_value, exact",
            [&](std::string& detail) {
              int count = 0;
              for (Fixture* f : {&f1, &f2, &f3}) {
                for (const auto& g : f->elements) {
                  ModuleHom alpha = ModuleHom::identity(f->ctx.space.v).sub(g.hom);
                  if (intersect(kernel(alpha), image(alpha)).order() != 1) continue;
                  ++count;
                  if (!exact_equal(value_invertible(f->ctx, g), closed_value(f->ctx, g))) {
                    detail = f->name + ": mismatch";
                    return false;
                  }
                }
              }
              detail = std::to_string(count) + " elements";
              return count > 0;
            });

  criterion(7, "involutions: value_involution == closed_value, exact", [&](std::string& detail) {
    int count = 0;
    for (Fixture* f : {&f1, &f2, &f3}) {
      for (const auto& g : f->elements) {
        if (!((g * g) == SpElement::identity(f->ctx.space))) continue;
        ++count;
        if (!exact_equal(value_involution(f->ctx, g), closed_value(f->ctx, g))) {
          detail = f->name + ": mismatch";
          return false;
        }
      }
    }
    detail = std::to_string(count) + " involutions";
    return count > 0;
  });

  criterion(8, "convolution formula on 200 random pairs per fixture, <1e-6",
            [&](std::string& detail) {
              std::mt19937_64 rng(8);
              double worst = 0;
              for (Fixture* f : {&f1, &f2, &f3}) {
                double sqn = std::sqrt(static_cast<double>(f->ctx.space.v.order()));
                for (int t = 0; t < 200; ++t) {
                  const SpElement& g = f->elements[rng() % f->elements.size()];
                  const SpElement& h = f->elements[rng() % f->elements.size()];
                  cplx lhs = closed_value(f->ctx, g * h).to_complex() * sqn;
                  cplx rhs = closed_value(f->ctx, g).to_complex() *
                             closed_value(f->ctx, h).to_complex() * conv_coeff(f->ctx, g, h);
                  worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
                }
              }
              detail = "max relative residual " + std::to_string(worst);
              return worst < 1e-6;
            });

  criterion(9, "GMT18 identity on 100 random elements per fixture, exact",
            [&](std::string& detail) {
              std::mt19937_64 rng(9);
              for (Fixture* f : {&f1, &f2, &f3}) {
                WeilContext twisted = f->ctx.with_twist(2);
                i64 n = isqrt_exact(f->ctx.space.v.order());
                FourthRoot sign =
                    jacobi(-1, n) == 1 ? FourthRoot::one() : FourthRoot::minus_one();
                for (int t = 0; t < 100; ++t) {
                  const SpElement& g = f->elements[rng() % f->elements.size()];
                  CharacterValue lhs =
                      closed_value(f->ctx, g) * closed_value(f->ctx, g.negated());
                  CharacterValue rhs = closed_value(twisted, g.power(2));
                  rhs.eps = rhs.eps * sign;
                  if (!(lhs == rhs)) {
                    detail = f->name + ": mismatch";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(10, "lambda-twist laws on (Z/9)^2: all units, exact; equality iff s is a square",
            [&](std::string& detail) {
              std::mt19937_64 rng(10);
              std::vector<SpElement> sample;
              const SymplecticSpace& s = f2.ctx.space;
              sample.push_back(SpElement::make(s, ModuleHom(s.v, s.v, {{1, 1}, {0, 1}})));
              sample.push_back(SpElement::make(s, ModuleHom(s.v, s.v, {{1, 3}, {0, 1}})));
              for (int t = 0; t < 60; ++t) sample.push_back(f2.elements[rng() % f2.elements.size()]);
              std::vector<i64> units;
              for (i64 u = 1; u < 9; ++u)
                if (std::gcd(u, 9LL) == 1) units.push_back(u);
              for (i64 u : units) {
                WeilContext twisted = f2.ctx.with_twist(u);
                bool all_equal = true;
                for (const auto& g : sample) {
                  Submodule x = image(ModuleHom::identity(s.v).sub(g.hom));
                  CharacterValue want = closed_value(f2.ctx, g);
                  if (scalar_sign(x, u) < 0) want.eps = want.eps * FourthRoot::minus_one();
                  CharacterValue got = closed_value(twisted, g);
                  if (!(want == got)) {
                    detail = "twist law failed at s=" + std::to_string(u);
                    return false;
                  }
                  if (!(got == closed_value(f2.ctx, g))) all_equal = false;
                }
                bool is_square = (u == 1 || u == 4 || u == 7);
                if (all_equal != is_square) {
                  detail = "square iff failed at s=" + std::to_string(u);
                  return false;
                }
              }
              return true;
            });

  criterion(11, "CRT multiplicativity on (Z/15)^2, exact", [&](std::string& detail) {
    std::mt19937_64 rng(11);
    std::vector<SpElement> sample = {SpElement::identity(f15.ctx.space),
                                     SpElement::minus_one(f15.ctx.space),
                                     dft_element(f15.ctx.space)};
    for (int t = 0; t < 60; ++t) sample.push_back(sp_random(f15.ctx.space, rng, 3));
    for (const auto& g : sample) {
      auto parts = crt_components(f15.ctx, g);
      if (parts.size() != 2) {
        detail = "expected 2 components";
        return false;
      }
      CharacterValue prod{1, FourthRoot::one()};
      for (auto& [cq, gq] : parts) prod = prod * closed_value(cq, gq);
      if (!(prod == closed_value(f15.ctx, g))) {
        detail = "product mismatch";
        return false;
      }
    }
    return true;
  });

  criterion(12, "gauss sum laws on 100 random symmetric nondegenerate forms, |X| <= 81",
            [&](std::string& detail) {
              std::mt19937_64 rng(12);
              std::vector<FinModule> shapes = {FinModule(Ring(3), {3, 3, 3, 3}),
                                               FinModule(Ring(9), {3, 9, 3, 9}),
                                               FinModule(Ring(15), {15, 3})};
              AdditiveCharacter lam3(Ring(3), 1), lam9(Ring(9), 1), lam15(Ring(15), 1);
              int done = 0;
              while (done < 100) {
                const FinModule& m = shapes[done % shapes.size()];
                AdditiveCharacter lam(m.ring, 1);
                ModuleHom h = random_hom(m, m, [&] { return static_cast<i64>(rng()); });
                Submodule x = image(h);
                if (x.order() > 81) continue;
                BilinearForm q = random_symmetric_nondeg(x, rng);
                FourthRoot gamma = gauss_sum(q, lam);
                if ((gamma * gamma).real_sign() != jacobi(-1, x.order())) {
                  detail = "square law failed";
                  return false;
                }
                // Lagrangian case and multiplicativity via q + (-q)
                if (x.rank() > 0) {
                  std::vector<i64> dd = x.orders();
                  dd.insert(dd.end(), x.orders().begin(), x.orders().end());
                  FinModule doubled(m.ring, dd);
                  int r = x.rank();
                  IntMat gram(2 * r, IntVec(2 * r, 0));
                  for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) {
                      gram[i][j] = q.gram[i][j];
                      gram[r + i][r + j] = m.ring.reduce(-q.gram[i][j]);
                    }
                  BilinearForm qq(Submodule::full(doubled), std::move(gram));
                  FourthRoot block = gauss_sum(qq, lam);
                  if (!(block == FourthRoot::one())) {
                    detail = "Lagrangian case != 1";
                    return false;
                  }
                  if (!(block == gamma * gauss_sum(q.negate(), lam))) {
                    detail = "multiplicativity failed";
                    return false;
                  }
                }
                if (x.order() <= 81) {
                  SchurReport rep = schur_matrix_checks(q, lam);
                  if (!rep.pass) {
                    detail = "schur residuals f2=" + std::to_string(rep.residual_f2) +
                             " det=" + std::to_string(rep.residual_det);
                    return false;
                  }
                }
                ++done;
              }
              return true;
            });

  criterion(13, "sign machinery: fast == direct (>=200), det law on free modules, Zolotarev m<=99",
            [&](std::string& detail) {
              std::mt19937_64 rng(13);
              int cases = 0;
              for (auto shape : {FinModule(Ring(9), {3, 9}), FinModule(Ring(15), {3, 5, 15}),
                                 FinModule(Ring(45), {15, 45}), FinModule(Ring(3), {3, 3, 3})}) {
                for (int t = 0; t < 60; ++t) {
                  ModuleHom h = random_hom(shape, shape, [&] { return static_cast<i64>(rng()); });
                  if (kernel(h).order() != 1) continue;
                  if (perm_sign_fast(h) != perm_sign_direct(h)) {
                    detail = "fast != direct";
                    return false;
                  }
                  ++cases;
                }
              }
              if (cases < 200) {
                detail = "only " + std::to_string(cases) + " automorphism cases";
                return false;
              }
              // det law on free modules (Z/m)^2
              for (i64 m : {9, 15}) {
                FinModule free2(Ring(m), {m, m});
                for (int t = 0; t < 50; ++t) {
                  ModuleHom h = random_hom(free2, free2, [&] { return static_cast<i64>(rng()); });
                  if (kernel(h).order() != 1) continue;
                  i64 det =
                      ((h.mat[0][0] * h.mat[1][1] - h.mat[0][1] * h.mat[1][0]) % m + m) % m;
                  if (perm_sign_fast(h) != ring_sign(Ring(m), det)) {
                    detail = "det law failed";
                    return false;
                  }
                }
              }
              for (i64 m = 3; m <= 99; m += 2) {
                FinModule line(Ring(m), {m});
                for (i64 a = 1; a < m; ++a) {
                  if (std::gcd(a, m) != 1) continue;
                  if (perm_sign_direct(ModuleHom::scalar(line, a)) != jacobi(a, m)) {
                    detail = "Zolotarev failed at m=" + std::to_string(m);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(14, "Cayley roundtrip (exhaustive on fixture 1) and factorize reassembly",
            [&](std::string& detail) {
              for (const auto& g : f1.elements) {
                BilinearForm bg = bg_form(g.hom, f1.ctx.space.omega);
                if (!(cayley_param(f1.ctx.space, bg.domain, bg) == g)) {
                  detail = "roundtrip failed on fixture 1";
                  return false;
                }
              }
              std::mt19937_64 rng(14);
              for (Fixture* f : {&f2, &f3}) {
                for (int t = 0; t < 40; ++t) {
                  const SpElement& g = f->elements[rng() % f->elements.size()];
                  BilinearForm bg = bg_form(g.hom, f->ctx.space.omega);
                  if (!(cayley_param(f->ctx.space, bg.domain, bg) == g)) {
                    detail = f->name + ": roundtrip failed";
                    return false;
                  }
                }
              }
              // factorize along splits found by orth_split
              int splits = 0;
              for (Fixture* f : {&f1, &f2, &f3}) {
                for (size_t i = 0; i < f->elements.size() && splits < 25; ++i) {
                  const SpElement& g = f->elements[i];
                  BilinearForm bg = bg_form(g.hom, f->ctx.space.omega);
                  if (bg.domain.rank() < 2) continue;
                  OrthSplit split;
                  try {
                    split = orth_split(bg);
                  } catch (const std::exception&) {
                    continue;
                  }
                  const FinModule& v = f->ctx.space.v;
                  Submodule x = Submodule::zero_sub(v), y = Submodule::zero_sub(v);
                  if (split.kind == SplitKind::diagonal && split.pairs.size() >= 2) {
                    x = Submodule::from_generators(v, {split.pairs[0].u});
                    std::vector<Element> rest;
                    for (size_t p = 1; p < split.pairs.size(); ++p)
                      rest.push_back(split.pairs[p].u);
                    y = Submodule::from_generators(v, rest);
                  } else if (split.kind == SplitKind::hyperbolic && split.pairs.size() >= 2) {
                    x = Submodule::from_generators(v, {split.pairs[0].u, split.pairs[0].w});
                    std::vector<Element> rest;
                    for (size_t p = 1; p < split.pairs.size(); ++p) {
                      rest.push_back(split.pairs[p].u);
                      rest.push_back(split.pairs[p].w);
                    }
                    y = Submodule::from_generators(v, rest);
                  } else {
                    continue;
                  }
                  auto [h, k] = factorize(g, x, y);
                  if (!((h * k) == g)) {
                    detail = "reassembly failed";
                    return false;
                  }
                  ModuleHom ah = ModuleHom::identity(v).sub(h.hom);
                  ModuleHom ak = ModuleHom::identity(v).sub(k.hom);
                  if (!image(ah).same_as(x) || !image(ak).same_as(y) ||
                      intersect(image(ah), image(ak)).order() != 1) {
                    detail = "split displacement structure violated";
                    return false;
                  }
                  ++splits;
                }
              }
              detail = std::to_string(splits) + " factorize splits";
              return splits > 0;
            });

  criterion(15, "oracle internals: T^2=I, tr T=1, dims, hom residual <1e-9, W mult <1e-6",
            [&](std::string& detail) {
              std::mt19937_64 rng(15);
              for (Fixture* f : {&f1, &f2, &f3}) {
                Oracle oracle(f->ctx);
                int n = oracle.n();
                const CMat& t = oracle.tmat();
                if (cmat_max_abs_diff(cmat_mul(t, t), cmat_identity(n)) > 1e-9) {
                  detail = f->name + ": T^2 != I";
                  return false;
                }
                if (std::abs(cmat_trace(t) - cplx(1, 0)) > 1e-9) {
                  detail = f->name + ": tr T != 1";
                  return false;
                }
                if (oracle.dim_plus() != (n + 1) / 2 || oracle.dim_minus() != (n - 1) / 2) {
                  detail = f->name + ": eigenspace dims wrong";
                  return false;
                }
                const FinModule& v = f->ctx.space.v;
                for (int trial = 0; trial < 10; ++trial) {
                  AlgebraElement a = AlgebraElement::zero(v), b = AlgebraElement::zero(v);
                  for (int i = 0; i < 5; ++i) {
                    a.accumulate(static_cast<i64>(rng() % v.order()),
                                 cplx(1.0 + rng() % 3, static_cast<double>(rng() % 3)));
                    b.accumulate(static_cast<i64>(rng() % v.order()),
                                 cplx(static_cast<double>(rng() % 3), 1.0 + rng() % 3));
                  }
                  if (cmat_max_abs_diff(oracle.rho(alg_mult(f->ctx, a, b)),
                                        cmat_mul(oracle.rho(a), oracle.rho(b))) > 1e-9) {
                    detail = f->name + ": matrixize homomorphism residual too large";
                    return false;
                  }
                }
              }
              // W multiplicativity on 100 random pairs
              Oracle oracle2(f2.ctx);
              for (int t = 0; t < 100; ++t) {
                const SpElement& g = f2.elements[rng() % f2.elements.size()];
                const SpElement& h = f2.elements[rng() % f2.elements.size()];
                CMat prod = cmat_mul(oracle2.wmat(g), oracle2.wmat(h));
                CMat wgh = oracle2.wmat(g * h);
                double res = 0;
                for (int i = 0; i < oracle2.n(); ++i)
                  for (int j = 0; j < oracle2.n(); ++j) res += std::norm(prod[i][j] - wgh[i][j]);
                if (std::sqrt(res) > 1e-6) {
                  detail = "W multiplicativity residual " + std::to_string(std::sqrt(res));
                  return false;
                }
              }
              return true;
            });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
