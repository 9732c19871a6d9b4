#include "doctest.h"
#include "weilchar/spgroup.hpp"

#include <random>

using namespace weilchar;

namespace {

SymplecticSpace z3_space() { return hyperbolic_space(Ring(3), {3}); }

}  // namespace

TEST_CASE("sp membership") {
  SymplecticSpace s = z3_space();
  CHECK(sp_check(s, ModuleHom::identity(s.v)));
  CHECK(sp_check(s, ModuleHom(s.v, s.v, {{1, 1}, {0, 1}})));
  CHECK_FALSE(sp_check(s, ModuleHom(s.v, s.v, {{2, 0}, {0, 1}})));
  CHECK_THROWS_AS(SpElement::make(s, ModuleHom(s.v, s.v, {{2, 0}, {0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("element order") {
  SymplecticSpace s = z3_space();
  CHECK(element_order(SpElement::identity(s)) == 1);
  CHECK(element_order(SpElement::minus_one(s)) == 2);
  CHECK(element_order(SpElement::make(s, ModuleHom(s.v, s.v, {{1, 1}, {0, 1}}))) == 3);
  CHECK(element_order(SpElement::make(s, ModuleHom(s.v, s.v, {{0, 1}, {-1, 0}}))) == 4);
}

TEST_CASE("enumerate Sp((Z/3)^2) = SL(2,3)") {
  SymplecticSpace s = z3_space();
  std::vector<SpElement> all = enumerate_sp(s);
  CHECK(all.size() == 24);
  for (const auto& g : all) CHECK(sp_check(s, g.hom));
}

TEST_CASE("enumerate SL(2, Z/9)") {
  SymplecticSpace s = hyperbolic_space(Ring(9), {9});
  CHECK(enumerate_sp(s).size() == 648);
}

TEST_CASE("cayley parametrization examples") {
  SymplecticSpace s = z3_space();
  // X = 0 -> identity
  Submodule zero = Submodule::zero_sub(s.v);
  CHECK(cayley_param(s, zero, BilinearForm(zero, {})) == SpElement::identity(s));

  // X = V, B = omega/2 -> g = -1
  Submodule full = Submodule::full(s.v);
  BilinearForm half_omega = s.omega.scale(s.v.ring.half);
  CHECK(cayley_param(s, full, half_omega) == SpElement::minus_one(s));

  // X = second coordinate line with B = <-1> -> the shear [[1,1],[0,1]]
  Submodule line = Submodule::from_generators(s.v, {{0, 1}});
  BilinearForm b(line, {{2}});
  SpElement shear = cayley_param(s, line, b);
  CHECK(shear.hom.mat == IntMat{{1, 1}, {0, 1}});

  // violated antisymmetrization is rejected
  CHECK_THROWS_AS(cayley_param(s, full, BilinearForm(full, {{1, 0}, {0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("cayley roundtrip exhaustive on SL(2,3)") {
  SymplecticSpace s = z3_space();
  for (const auto& g : enumerate_sp(s)) {
    BilinearForm bg = bg_form(g.hom, s.omega);
    CHECK(cayley_param(s, bg.domain, bg) == g);
  }
}

TEST_CASE("cayley roundtrip randomized") {
  std::mt19937_64 rng(79);
  for (auto s : {hyperbolic_space(Ring(9), {3, 9}), hyperbolic_space(Ring(15), {15}),
                 hyperbolic_space(Ring(27), {27})}) {
    for (int t = 0; t < 20; ++t) {
      SpElement g = sp_random(s, rng, 3);
      CHECK(sp_check(s, g.hom));
      BilinearForm bg = bg_form(g.hom, s.omega);
      CHECK(cayley_param(s, bg.domain, bg) == g);
    }
  }
}

TEST_CASE("sp_random determinism") {
  SymplecticSpace s = hyperbolic_space(Ring(9), {3, 9});
  std::mt19937_64 a(123), b(123);
  CHECK(sp_random(s, a, 3) == sp_random(s, b, 3));
  // steps=1 with the zero perturbation can produce -1; at least confirm
  // outputs vary with the seed
  std::mt19937_64 c(5), d(6);
  bool differ = false;
  for (int t = 0; t < 5; ++t)
    if (!(sp_random(s, c, 3) == sp_random(s, d, 3))) differ = true;
  CHECK(differ);
}

TEST_CASE("factorize blockwise -1 on H(3,9)") {
  SymplecticSpace s = hyperbolic_space(Ring(9), {3, 9});
  SpElement m1 = SpElement::minus_one(s);
  // B_{-1} = omega/2 splits along the two hyperbolic planes
  OrthSplit split = orth_split(s.omega);
  REQUIRE(split.pairs.size() == 2);
  Submodule x = Submodule::from_generators(s.v, {split.pairs[0].u, split.pairs[0].w});
  Submodule y = Submodule::from_generators(s.v, {split.pairs[1].u, split.pairs[1].w});
  auto [h, k] = factorize(m1, x, y);
  CHECK((h * k) == m1);
  CHECK(image(ModuleHom::identity(s.v).sub(h.hom)).same_as(x));
  CHECK(image(ModuleHom::identity(s.v).sub(k.hom)).same_as(y));
  // the trivial split
  auto [g2, id2] = factorize(m1, Submodule::full(s.v), Submodule::zero_sub(s.v));
  CHECK(g2 == m1);
  CHECK(id2 == SpElement::identity(s));
}

TEST_CASE("factorize via diagonal pivots of B_g") {
  std::mt19937_64 rng(83);
  for (auto s : {z3_space(), hyperbolic_space(Ring(9), {3, 9})}) {
    int done = 0;
    for (int t = 0; t < 60 && done < 8; ++t) {
      SpElement g = sp_random(s, rng, 3);
      BilinearForm bg = bg_form(g.hom, s.omega);
      if (bg.domain.rank() == 0) continue;
      // a two-block split requires a self-paired pivot: B(U,U) = R B(x,x)
      OrthSplit split;
      try {
        split = orth_split(bg);
      } catch (const std::exception&) {
        continue;
      }
      if (split.kind != SplitKind::diagonal || split.pairs.size() < 2) continue;
      Submodule x = Submodule::from_generators(s.v, {split.pairs[0].u});
      std::vector<Element> rest;
      for (size_t i = 1; i < split.pairs.size(); ++i) rest.push_back(split.pairs[i].u);
      Submodule y = Submodule::from_generators(s.v, rest);
      auto [h, k] = factorize(g, x, y);
      CHECK((h * k) == g);
      // the lemma behind the factorization: displacement sum is direct
      ModuleHom ah = ModuleHom::identity(s.v).sub(h.hom);
      ModuleHom ak = ModuleHom::identity(s.v).sub(k.hom);
      CHECK(intersect(image(ah), image(ak)).order() == 1);
      ++done;
    }
    CHECK(done > 0);
  }
}

TEST_CASE("transvections are symplectic") {
  SymplecticSpace s = hyperbolic_space(Ring(9), {3, 9});
  for (i64 c : {1, 2, 3}) {
    SpElement t = transvection(s, {0, 1, 0, 0}, c);
    CHECK(sp_check(s, t.hom));
  }
}
