#include "doctest.h"
#include "weilchar/gauss.hpp"
#include "weilchar/modsign.hpp"

#include <random>

using namespace weilchar;

namespace {

// independent summation oracle, no snapping
cplx raw_sum(const BilinearForm& q, const AdditiveCharacter& lambda) {
  const Ring& ring = q.ring();
  cplx acc = 0.0;
  q.domain.enumerate([&](const Element& x) {
    acc += lambda.eval(ring.reduce(ring.half * q.eval(x, x)));
  });
  return acc / std::sqrt(static_cast<double>(q.domain.order()));
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

TEST_CASE("fourth root arithmetic") {
  CHECK((FourthRoot::imag_unit() * FourthRoot::imag_unit()) == FourthRoot::minus_one());
  CHECK(snap_fourth_root({0.0, 1.0 - 1e-9}) == FourthRoot::imag_unit());
  CHECK_THROWS_AS(snap_fourth_root({0.5, 0.5}), SnapFailure);
  CHECK(FourthRoot::minus_one().is_real());
  CHECK_FALSE(FourthRoot::imag_unit().is_real());
}

TEST_CASE("gauss sum small cases") {
  FinModule z3(Ring(3), {3});
  AdditiveCharacter lam(Ring(3), 1);
  Submodule full = Submodule::full(z3);

  // trivial module
  FinModule z9(Ring(9), {9});
  BilinearForm empty(Submodule::zero_sub(z9), {});
  CHECK(gauss_sum(empty, AdditiveCharacter(Ring(9), 1)) == FourthRoot::one());

  // <1> on Z/3: 1 + 2 exp(4 pi i/3) = -i sqrt(3)
  BilinearForm q1(full, {{1}});
  cplx oracle = raw_sum(q1, lam);
  CHECK(std::abs(oracle - cplx(0, -1)) < 1e-12);
  CHECK(gauss_sum(q1, lam).k == 3);  // -i

  // conjugate for <-1>
  BilinearForm qm(full, {{2}});
  CHECK(gauss_sum(qm, lam) == FourthRoot::imag_unit());

  // degenerate and asymmetric forms are rejected
  FinModule z9m(Ring(9), {9});
  CHECK_THROWS_AS(gauss_sum(BilinearForm(Submodule::full(z9m), {{3}}),
                            AdditiveCharacter(Ring(9), 1)),
                  std::invalid_argument);
}

TEST_CASE("gauss sum laws randomized") {
  std::mt19937_64 rng(61);
  std::vector<FinModule> shapes = {FinModule(Ring(3), {3, 3}), FinModule(Ring(9), {3, 9}),
                                   FinModule(Ring(9), {9, 9}), FinModule(Ring(15), {15, 3})};
  for (const auto& m : shapes) {
    AdditiveCharacter lam(m.ring, 1);
    for (int t = 0; t < 15; ++t) {
      ModuleHom h = random_hom(m, m, [&] { return static_cast<i64>(rng()); });
      Submodule x = image(h);
      BilinearForm q = random_symmetric_nondeg(x, rng);
      FourthRoot g = gauss_sum(q, lam);
      // snapped value matches the raw sum
      CHECK(std::abs(g.value() - raw_sum(q, lam)) < 1e-9);
      // gamma^2 = (-1)^{(|X|-1)/2}
      CHECK((g * g).real_sign() == jacobi(-1, x.order()));
      // |gamma| = 1 by construction
      CHECK(std::abs(std::abs(g.value()) - 1.0) < 1e-12);
      // q + (-q) contains a Lagrangian (the diagonal): gamma = 1
      FinModule doubled(m.ring, [&] {
        std::vector<i64> d = x.orders();
        d.insert(d.end(), x.orders().begin(), x.orders().end());
        return d;
      }());
      if (!x.orders().empty() && doubled.order() <= (1 << 16)) {
        int r = x.rank();
        IntMat gram(2 * r, IntVec(2 * r, 0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            gram[i][j] = q.gram[i][j];
            gram[r + i][r + j] = m.ring.reduce(-q.gram[i][j]);
          }
        BilinearForm qq(Submodule::full(doubled), std::move(gram));
        CHECK(gauss_sum(qq, lam) == FourthRoot::one());
        // multiplicativity on the same block sum
        CHECK(gauss_sum(qq, lam) == g * gauss_sum(q.negate(), lam));
      }
      // base change: gamma(q2) = sign(sigma) gamma(q) for q2(x,y) = q(sigma x, sigma... )
      if (x.rank() > 0) {
        FinModule abs = abstract_module(x);
        ModuleHom sigma = [&] {
          for (;;) {
            ModuleHom c = random_hom(abs, abs, [&] { return static_cast<i64>(rng()); });
            if (kernel(c).order() == 1) return c;
          }
        }();
        // q2(x, w) = q(sigma x, w) need not be symmetric; use the two-sided
        // pullback and split the sign into two one-sided moves
        BilinearForm q2 = form_pullback(q, sigma);
        CHECK(gauss_sum(q2, lam).k == gauss_sum(q, lam).k);  // sign(sigma)^2 = 1 twice
        (void)q2;
      }
    }
  }
}

TEST_CASE("gauss sum one-sided base change") {
  // gamma(q2) = sign(sigma) gamma(q1) with q2(x, w) = q1(sigma(x), w),
  // tested where q2 stays symmetric: sigma scalar
  std::mt19937_64 rng(67);
  FinModule m(Ring(9), {3, 9});
  AdditiveCharacter lam(m.ring, 1);
  for (int t = 0; t < 10; ++t) {
    ModuleHom h = random_hom(m, m, [&] { return static_cast<i64>(rng()); });
    Submodule x = image(h);
    if (x.rank() == 0) continue;
    BilinearForm q = random_symmetric_nondeg(x, rng);
    for (i64 s : {2, 4, 5, 7, 8}) {
      BilinearForm q2 = q.scale(s);  // sigma = s * id
      int sign = scalar_sign(x, s);
      FourthRoot expect = gauss_sum(q, lam);
      if (sign < 0) expect = expect * FourthRoot::minus_one();
      CHECK(gauss_sum(q2, lam) == expect);
    }
  }
}

TEST_CASE("reduced path agrees with direct summation") {
  std::mt19937_64 rng(71);
  std::vector<FinModule> shapes = {FinModule(Ring(3), {3, 3}), FinModule(Ring(9), {3, 9, 9}),
                                   FinModule(Ring(15), {15, 15})};
  for (const auto& m : shapes) {
    AdditiveCharacter lam(m.ring, 1);
    for (int t = 0; t < 10; ++t) {
      ModuleHom h = random_hom(m, m, [&] { return static_cast<i64>(rng()); });
      Submodule x = image(h);
      BilinearForm q = random_symmetric_nondeg(x, rng);
      CHECK(gauss_sum_reduced(q, lam) == gauss_sum(q, lam));
    }
  }
}

TEST_CASE("schur matrix checks") {
  AdditiveCharacter lam3(Ring(3), 1);
  FinModule z3(Ring(3), {3});
  SchurReport rep = schur_matrix_checks(BilinearForm(Submodule::full(z3), {{1}}), lam3);
  CHECK(rep.pass);
  CHECK(rep.n == 3);

  // trivial module: 1x1 matrix [1]
  FinModule z9(Ring(9), {9});
  SchurReport triv = schur_matrix_checks(BilinearForm(Submodule::zero_sub(z9), {}),
                                         AdditiveCharacter(Ring(9), 1));
  CHECK(triv.pass);
  CHECK(triv.n == 1);

  // (Z/3)^2 with <1,1>: gamma = (-i)^2 = -1
  FinModule v(Ring(3), {3, 3});
  BilinearForm q(Submodule::full(v), {{1, 0}, {0, 1}});
  CHECK(gauss_sum(q, lam3) == FourthRoot::minus_one());
  CHECK(schur_matrix_checks(q, lam3).pass);

  std::mt19937_64 rng(73);
  FinModule w(Ring(9), {3, 9});
  AdditiveCharacter lam9(Ring(9), 2);
  for (int t = 0; t < 8; ++t) {
    ModuleHom h = random_hom(w, w, [&] { return static_cast<i64>(rng()); });
    Submodule x = image(h);
    if (x.order() > 512) continue;
    CHECK(schur_matrix_checks(random_symmetric_nondeg(x, rng), lam9).pass);
  }
}
