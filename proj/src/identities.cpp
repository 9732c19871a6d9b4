#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#include "weilchar/json_io.hpp"
#include "weilchar/weil.hpp"

namespace weilchar {

namespace {

struct Battery {
  const WeilContext& ctx;
  std::mt19937_64 rng;
  int samples;
  Report report;
  std::vector<SpElement> elements;
  std::optional<Oracle> oracle;

  Battery(const WeilContext& c, unsigned long long seed, int n)
      : ctx(c), rng(seed), samples(n) {}

  i64 rand_below(i64 bound) { return static_cast<i64>(rng() % static_cast<unsigned long long>(bound)); }

  void add(const std::string& check, const std::string& params, const std::string& expected,
           const std::string& got, double residual, bool pass) {
    report.checks.push_back({check, params, expected, got, residual, pass});
  }

  void add_exact(const std::string& check, const std::string& params, const CharacterValue& want,
                 const CharacterValue& have) {
    add(check, params, want.str(), have.str(), 0.0, want == have);
  }

  void add_numeric(const std::string& check, const std::string& params, cplx want, cplx have,
                   double tol) {
    double res = std::abs(want - have);
    add(check, params, format_complex(want), format_complex(have), res, res < tol);
  }

  std::string gstr(const SpElement& g) const { return format_matrix(g.hom.mat); }

  // DFT-type element (u_i -> w_i, w_i -> -u_i along the hyperbolic split).
  std::optional<SpElement> dft_element() const {
    OrthSplit split = orth_split(ctx.space.omega);
    int k = static_cast<int>(split.pairs.size());
    const FinModule& v = ctx.space.v;
    std::vector<i64> orders;
    IntMat rows;
    for (const auto& p : split.pairs) {
      if (v.element_order(p.u) != v.element_order(p.w)) return std::nullopt;
      orders.push_back(v.element_order(p.u));
      rows.push_back(p.u);
    }
    for (const auto& p : split.pairs) {
      orders.push_back(v.element_order(p.w));
      rows.push_back(p.w);
    }
    FinModule pieces(v.ring, orders);
    ModuleHom assemble(pieces, v, rows);
    IntMat to_pieces;
    for (int i = 0; i < v.rank(); ++i) {
      Element e(v.rank(), 0);
      e[i] = 1;
      to_pieces.push_back(section(assemble, e));
    }
    ModuleHom top(v, pieces, std::move(to_pieces));
    IntMat jp(2 * k, IntVec(2 * k, 0));
    for (int i = 0; i < k; ++i) {
      jp[i][k + i] = 1;
      jp[k + i][i] = orders[k + i] - 1;  // -1
    }
    ModuleHom j = compose(compose(top, ModuleHom(pieces, pieces, std::move(jp))), assemble);
    if (!sp_check(ctx.space, j)) return std::nullopt;
    return SpElement{ctx.space, j};
  }

  void collect_elements() {
    elements.push_back(SpElement::identity(ctx.space));
    elements.push_back(SpElement::minus_one(ctx.space));
    if (auto j = dft_element()) elements.push_back(*j);
    // transvections along the first split vector, varying displacement size
    OrthSplit split = orth_split(ctx.space.omega);
    if (!split.pairs.empty()) {
      const Element& u = split.pairs[0].u;
      elements.push_back(transvection(ctx.space, u, 1));
      for (i64 p = 3; p <= ctx.ring().m; p += 2)
        if (ctx.ring().m % p == 0) elements.push_back(transvection(ctx.space, u, p));
    }
    for (int i = 0; i < samples; ++i) elements.push_back(sp_random(ctx.space, rng, 3));
    size_t base = elements.size();
    for (size_t i = 0; i < std::min<size_t>(4, base); ++i) {
      elements.push_back(elements[i].power(2));
      elements.push_back(elements[i].power(3));
    }
    if (ctx.space.v.order() <= (1LL << 16)) oracle.emplace(ctx);
  }

  void check_oracle_agreement() {
    if (!oracle) return;
    for (const auto& g : elements) {
      CharacterValue cv = closed_value(ctx, g);
      cplx tr = oracle->trace(g);
      double tol = 1e-6 * (1.0 + std::sqrt(static_cast<double>(cv.c)));
      add_numeric("oracle_closed_agreement", "g=" + gstr(g), cv.to_complex(), tr, tol);
    }
  }

  void check_abs_value() {
    if (!oracle) return;
    for (const auto& g : elements) {
      i64 cent = kernel(ModuleHom::identity(ctx.space.v).sub(g.hom)).order();
      double got = std::norm(oracle->trace(g));
      add("abs_value", "g=" + gstr(g), std::to_string(cent), format_complex(got),
          std::abs(got - cent), std::abs(got - cent) < 1e-6 * (1 + cent));
    }
  }

  void check_convolution() {
    double sqn = std::sqrt(static_cast<double>(ctx.space.v.order()));
    for (int t = 0; t < samples * 2; ++t) {
      const SpElement& g = elements[rand_below(elements.size())];
      const SpElement& h = elements[rand_below(elements.size())];
      cplx lhs = closed_value(ctx, g * h).to_complex() * sqn;
      cplx rhs =
          closed_value(ctx, g).to_complex() * closed_value(ctx, h).to_complex() * conv_coeff(ctx, g, h);
      add_numeric("convolution", "g=" + gstr(g) + ",h=" + gstr(h), lhs, rhs, 1e-6 * (1.0 + std::abs(lhs)));
    }
  }

  void check_odd_order() {
    CharacterValue at_minus_one = closed_value(ctx, SpElement::minus_one(ctx.space));
    for (const auto& g : elements) {
      if (element_order(g) % 2 == 0) continue;
      add_exact("odd_order_sum", "g=" + gstr(g), value_odd(ctx, g), closed_value(ctx, g));
      add_exact("odd_order_psi_minus_g", "g=" + gstr(g), at_minus_one,
                closed_value(ctx, g.negated()));
      int s = perm_sign_fast(ModuleHom::identity(ctx.space.v).add(g.hom));
      add("odd_order_sign_one_plus_g", "g=" + gstr(g), "+1", s > 0 ? "+1" : "-1", 0.0, s == 1);
    }
  }

  void check_involutions() {
    for (const auto& g : elements) {
      if (!((g * g) == SpElement::identity(ctx.space))) continue;
      add_exact("involution_value", "t=" + gstr(g), closed_value(ctx, g), value_involution(ctx, g));
    }
  }

  void check_invertible() {
    for (const auto& g : elements) {
      ModuleHom alpha = ModuleHom::identity(ctx.space.v).sub(g.hom);
      if (intersect(kernel(alpha), image(alpha)).order() != 1) continue;
      add_exact("invertible_displacement_value", "g=" + gstr(g), closed_value(ctx, g),
                value_invertible(ctx, g));
    }
  }

  // psi as an exact integer, valid when the value is rational
  std::optional<i64> psi_integer(const WeilContext& c, const SpElement& g) {
    CharacterValue v = closed_value(c, g);
    if (!v.eps.is_real()) return std::nullopt;
    i64 root;
    try {
      root = isqrt_exact(v.c);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    return v.eps.real_sign() * root;
  }

  void check_two_power() {
    for (const auto& g : elements) {
      i64 ord = element_order(g);
      if (ord < 2 || (ord & (ord - 1)) != 0) continue;
      SpElement h = g.power(2);
      i64 r = element_order(h);
      i64 acc = 0;
      bool exact = true;
      SpElement p = SpElement::identity(ctx.space);
      for (i64 j = 0; j < r; ++j) {
        auto val = psi_integer(ctx, p);
        if (!val) {
          exact = false;
          break;
        }
        acc += *val;
        p = p * h;
      }
      auto pg = psi_integer(ctx, g);
      if (!exact || !pg || acc % r != 0) {
        add("two_power_congruence", "g=" + gstr(g), "rational values", "non-rational", 1.0, false);
        continue;
      }
      i64 mult = acc / r;
      bool pass = ((*pg - mult) % 4 + 4) % 4 == 0;
      add("two_power_congruence", "g=" + gstr(g), "psi == " + std::to_string(mult) + " mod 4",
          std::to_string(*pg), 0.0, pass);
    }
  }

  void check_gmt18() {
    WeilContext ctx2 = ctx.with_twist(2);
    i64 n = isqrt_exact(ctx.space.v.order());
    FourthRoot sign = jacobi(-1, n) == 1 ? FourthRoot::one() : FourthRoot::minus_one();
    for (const auto& g : elements) {
      CharacterValue lhs = closed_value(ctx, g) * closed_value(ctx, g.negated());
      CharacterValue rhs = closed_value(ctx2, g.power(2));
      rhs.eps = rhs.eps * sign;
      add_exact("gmt18", "g=" + gstr(g), lhs, rhs);
    }
  }

  void check_lambda_twists() {
    const Ring& ring = ctx.ring();
    for (const auto& g : elements) {
      Submodule x = image(ModuleHom::identity(ctx.space.v).sub(g.hom));
      CharacterValue base = closed_value(ctx, g);
      for (i64 s = 2; s < ring.m; ++s) {
        if (std::gcd(s, ring.m) != 1) continue;
        CharacterValue expected = base;
        if (scalar_sign(x, s) < 0) expected.eps = expected.eps * FourthRoot::minus_one();
        add_exact("change_lambda",
                  "g=" + gstr(g) + ",s=" + std::to_string(s), expected,
                  closed_value(ctx.with_twist(s), g));
      }
      // psi_lambda(-g^2) does not depend on lambda
      SpElement mg2 = g.power(2).negated();
      CharacterValue ref = closed_value(ctx, mg2);
      for (i64 s = 2; s < ring.m; ++s) {
        if (std::gcd(s, ring.m) != 1) continue;
        add_exact("minus_g_square_lambda_free", "g=" + gstr(g) + ",s=" + std::to_string(s), ref,
                  closed_value(ctx.with_twist(s), mg2));
      }
    }
  }

  void check_rationality() {
    for (const auto& g : elements) {
      Submodule x = image(ModuleHom::identity(ctx.space.v).sub(g.hom));
      bool square = true;
      try {
        isqrt_exact(x.order());
      } catch (const std::invalid_argument&) {
        square = false;
      }
      bool real = closed_value(ctx, g).eps.is_real();
      add("rationality", "g=" + gstr(g), square ? "rational" : "irrational",
          real ? "rational" : "irrational", 0.0, square == real);
    }
  }

  void check_q_independence() {
    for (const auto& g : elements) {
      BilinearForm bg = bg_form(g.hom, ctx.space.omega);
      if (bg.domain.rank() == 0) continue;
      BilinearForm q1 = symmetric_q(bg.domain);
      FourthRoot ref = (sign_ratio(q1, bg) == 1 ? FourthRoot::one() : FourthRoot::minus_one()) *
                       gauss_sum(q1.negate(), ctx.lambda);
      // pullback along a random basis automorphism
      FinModule abs = abstract_module(bg.domain);
      std::optional<ModuleHom> sigma;
      for (int attempt = 0; attempt < 64 && !sigma; ++attempt) {
        ModuleHom cand = random_hom(abs, abs, [&] { return static_cast<i64>(rng()); });
        if (kernel(cand).order() == 1) sigma = cand;
      }
      std::vector<BilinearForm> variants;
      if (sigma) variants.push_back(form_pullback(q1, *sigma));
      for (i64 s = 2; s < ctx.ring().m; ++s)
        if (std::gcd(s, ctx.ring().m) == 1) {
          variants.push_back(q1.scale(s));
          break;
        }
      for (const auto& q2 : variants) {
        FourthRoot alt = (sign_ratio(q2, bg) == 1 ? FourthRoot::one() : FourthRoot::minus_one()) *
                         gauss_sum(q2.negate(), ctx.lambda);
        add("q_independence", "g=" + gstr(g), ref.str(), alt.str(), 0.0, ref == alt);
      }
    }
  }

  void check_oracle_internals() {
    if (!oracle) return;
    int n = oracle->n();
    const CMat& t = oracle->tmat();
    add("tmat_involution", "", "T^2 = I", "",
        cmat_max_abs_diff(cmat_mul(t, t), cmat_identity(n)),
        cmat_max_abs_diff(cmat_mul(t, t), cmat_identity(n)) < 1e-9);
    add("tmat_trace", "", "1", format_complex(cmat_trace(t)), std::abs(cmat_trace(t) - 1.0),
        std::abs(cmat_trace(t) - 1.0) < 1e-9);
    add("tmat_eigendims", "",
        std::to_string((n + 1) / 2) + "/" + std::to_string((n - 1) / 2),
        std::to_string(oracle->dim_plus()) + "/" + std::to_string(oracle->dim_minus()), 0.0,
        oracle->dim_plus() == (n + 1) / 2 && oracle->dim_minus() == (n - 1) / 2);

    const FinModule& v = ctx.space.v;
    // trace of basis elements
    Element nonzero = v.element_at(1 % v.order());
    add("matrixize_traces", "", "n and 0",
        format_complex(cmat_trace(oracle->rho(AlgebraElement::basis(v, v.zero())))) + "," +
            format_complex(cmat_trace(oracle->rho(AlgebraElement::basis(v, nonzero)))),
        0.0,
        std::abs(cmat_trace(oracle->rho(AlgebraElement::basis(v, v.zero()))) -
                 cplx(static_cast<double>(n))) < 1e-9 &&
            std::abs(cmat_trace(oracle->rho(AlgebraElement::basis(v, nonzero)))) < 1e-9);

    // algebra homomorphism on random sparse elements
    for (int t2 = 0; t2 < 4; ++t2) {
      AlgebraElement a = AlgebraElement::zero(v), b = AlgebraElement::zero(v);
      for (int i = 0; i < 5; ++i) {
        a.accumulate(rand_below(v.order()), cplx(1.0 + (rng() % 7), static_cast<double>(rng() % 5)));
        b.accumulate(rand_below(v.order()), cplx(static_cast<double>(rng() % 5), 1.0 + (rng() % 7)));
      }
      double res = cmat_max_abs_diff(oracle->rho(alg_mult(ctx, a, b)),
                                     cmat_mul(oracle->rho(a), oracle->rho(b)));
      double scale = cmat_frobenius(oracle->rho(a)) * cmat_frobenius(oracle->rho(b)) + 1.0;
      add("matrixize_homomorphism", "", "0", format_complex(res), res, res < 1e-9 * scale);
    }
  }

  void check_p_operator() {
    const FinModule& v = ctx.space.v;
    for (size_t gi = 0; gi < elements.size() && gi < 6; ++gi) {
      const SpElement& g = elements[gi];
      AlgebraElement pg = p_operator(ctx, g);
      // b_v P(g) = P(g) b_{vg}
      Element x = v.element_at(rand_below(v.order()));
      AlgebraElement lhs = alg_mult(ctx, AlgebraElement::basis(v, x), pg);
      AlgebraElement rhs = alg_mult(ctx, pg, AlgebraElement::basis(v, g.hom.apply(x)));
      double res = lhs.max_abs_diff(rhs);
      add("p_operator_intertwines", "g=" + gstr(g), "0", format_complex(res), res, res < 1e-9);

      i64 disp = image(ModuleHom::identity(v).sub(g.hom)).order();
      cplx c = conv_coeff(ctx, g, g.inverse());
      add_numeric("cocycle_g_ginv", "g=" + gstr(g), cplx(static_cast<double>(disp), 0.0), c,
                  1e-7 * (1.0 + disp));
    }
  }

  void check_wmat() {
    if (!oracle) return;
    for (int t = 0; t < std::max(4, samples / 2); ++t) {
      const SpElement& g = elements[rand_below(elements.size())];
      const SpElement& h = elements[rand_below(elements.size())];
      CMat wg = oracle->wmat(g), wh = oracle->wmat(h), wgh = oracle->wmat(g * h);
      CMat prod = cmat_mul(wg, wh);
      double res = 0.0;
      for (int i = 0; i < oracle->n(); ++i)
        for (int j = 0; j < oracle->n(); ++j) res += std::norm(prod[i][j] - wgh[i][j]);
      res = std::sqrt(res);
      add("wmat_multiplicative", "g=" + gstr(g) + ",h=" + gstr(h), "0", format_complex(res), res,
          res < 1e-6);
    }
    const FinModule& v = ctx.space.v;
    for (int t = 0; t < 4; ++t) {
      const SpElement& g = elements[rand_below(elements.size())];
      Element x = v.element_at(rand_below(v.order()));
      CMat w = oracle->wmat(g);
      CMat lhs = cmat_mul(oracle->rho(AlgebraElement::basis(v, x)), w);
      CMat rhs = cmat_mul(w, oracle->rho(AlgebraElement::basis(v, g.hom.apply(x))));
      double res = cmat_max_abs_diff(lhs, rhs);
      add("wmat_conjugation", "g=" + gstr(g), "0", format_complex(res), res, res < 1e-8);
    }
    for (int t = 0; t < 4; ++t) {
      const SpElement& g = elements[rand_below(elements.size())];
      cplx det = cmat_det(oracle->wmat(g));
      i64 m = ctx.ring().m;
      double arg = std::arg(det);
      i64 k = static_cast<i64>(std::llround(arg * m / (2.0 * M_PI)));
      cplx root = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m));
      add_numeric("det_wmat_root_of_unity", "g=" + gstr(g), root, det, 1e-6);
    }
  }

  void check_psi_pm() {
    i64 n = isqrt_exact(ctx.space.v.order());
    auto [p1, m1] = psi_pm(ctx, SpElement::identity(ctx.space));
    add_numeric("psi_pm_dims", "g=1", cplx((n + 1) / 2.0, 0.0), p1, 1e-9);
    add_numeric("psi_pm_dims_minus", "g=1", cplx((n - 1) / 2.0, 0.0), m1, 1e-9);
    for (const auto& g : elements) {
      if (element_order(g) % 2 == 0) continue;
      auto [pp, pm] = psi_pm(ctx, g);
      add_numeric("psi_pm_odd_difference", "g=" + gstr(g), cplx(1.0, 0.0), pp - pm, 1e-9);
    }
  }

  void check_crt() {
    for (size_t gi = 0; gi < elements.size(); ++gi) {
      const SpElement& g = elements[gi];
      auto parts = crt_components(ctx, g);
      if (parts.size() < 2) return;  // prime-power modulus: nothing to do
      CharacterValue prod{1, FourthRoot::one()};
      for (const auto& [cq, gq] : parts) prod = prod * closed_value(cq, gq);
      add_exact("crt_product", "g=" + gstr(g), closed_value(ctx, g), prod);
    }
  }

  // block tests on spaces with at least two hyperbolic planes
  struct Blocks {
    SymplecticSpace s1, s2;
    ModuleHom to_pieces, assemble;  // V <-> pieces in (u..., w...) order
    int k = 0;                      // number of planes
    std::vector<i64> orders;
  };

  std::optional<Blocks> split_blocks() {
    OrthSplit split = orth_split(ctx.space.omega);
    int k = static_cast<int>(split.pairs.size());
    if (k < 2) return std::nullopt;
    const FinModule& v = ctx.space.v;
    Blocks b;
    b.k = k;
    IntMat rows;
    for (const auto& p : split.pairs) {
      b.orders.push_back(v.element_order(p.u));
      rows.push_back(p.u);
    }
    for (const auto& p : split.pairs) {
      b.orders.push_back(v.element_order(p.w));
      rows.push_back(p.w);
    }
    FinModule pieces(v.ring, b.orders);
    b.assemble = ModuleHom(pieces, v, rows);
    IntMat top;
    for (int i = 0; i < v.rank(); ++i) {
      Element e(v.rank(), 0);
      e[i] = 1;
      top.push_back(section(b.assemble, e));
    }
    b.to_pieces = ModuleHom(v, pieces, std::move(top));

    auto subspace = [&](std::vector<int> planes) {
      std::vector<i64> divs;
      for (int p : planes) divs.push_back(b.orders[p]);
      for (int p : planes) divs.push_back(b.orders[k + p]);
      FinModule sub(v.ring, divs);
      int r = static_cast<int>(planes.size());
      IntMat gram(2 * r, IntVec(2 * r, 0));
      for (int i = 0; i < r; ++i) {
        i64 d = split.pairs[planes[i]].d;
        gram[i][r + i] = d;
        gram[r + i][i] = v.ring.reduce(-d);
      }
      return SymplecticSpace(sub, BilinearForm(Submodule::full(sub), std::move(gram)));
    };
    b.s1 = subspace({0});
    std::vector<int> rest;
    for (int i = 1; i < k; ++i) rest.push_back(i);
    b.s2 = subspace(rest);
    return b;
  }

  SpElement embed_blocks(const Blocks& b, const SpElement& g1, const SpElement& g2) {
    int k = b.k;
    IntMat gp(2 * k, IntVec(2 * k, 0));
    // block 1 occupies piece slots {0, k}; block 2 the rest
    std::vector<int> slots1 = {0, k};
    std::vector<int> slots2;
    for (int i = 1; i < k; ++i) slots2.push_back(i);
    for (int i = 1; i < k; ++i) slots2.push_back(k + i);
    for (size_t i = 0; i < slots1.size(); ++i)
      for (size_t j = 0; j < slots1.size(); ++j) gp[slots1[i]][slots1[j]] = g1.hom.mat[i][j];
    for (size_t i = 0; i < slots2.size(); ++i)
      for (size_t j = 0; j < slots2.size(); ++j) gp[slots2[i]][slots2[j]] = g2.hom.mat[i][j];
    FinModule pieces(ctx.space.v.ring, b.orders);
    ModuleHom hom =
        compose(compose(b.to_pieces, ModuleHom(pieces, pieces, std::move(gp))), b.assemble);
    return SpElement::make(ctx.space, hom);
  }

  void check_blocks() {
    auto blocks = split_blocks();
    if (!blocks) return;
    WeilContext c1(blocks->s1, ctx.lambda);
    WeilContext c2(blocks->s2, ctx.lambda);
    for (int t = 0; t < std::max(2, samples / 4); ++t) {
      SpElement g1 = sp_random(blocks->s1, rng, 2);
      SpElement g2 = sp_random(blocks->s2, rng, 2);
      SpElement g = embed_blocks(*blocks, g1, g2);
      CharacterValue want = closed_value(c1, g1) * closed_value(c2, g2);
      add_exact("orthogonal_block_product", "g=" + gstr(g), want, closed_value(ctx, g));

      // rescale omega blockwise: omega'(v, w) = omega(a v, w), a = (alpha, beta)
      const Ring& ring = ctx.ring();
      i64 alpha = 1, beta = 1;
      for (i64 s = 2; s < ring.m; ++s)
        if (std::gcd(s, ring.m) == 1) {
          alpha = s;
          break;
        }
      for (i64 s = alpha + 1; s < ring.m; ++s)
        if (std::gcd(s, ring.m) == 1) {
          beta = s;
          break;
        }
      int k = blocks->k;
      IntMat ap(2 * k, IntVec(2 * k, 0));
      ap[0][0] = alpha;
      ap[k][k] = alpha;
      for (int i = 1; i < k; ++i) {
        ap[i][i] = beta;
        ap[k + i][k + i] = beta;
      }
      FinModule pieces(ctx.space.v.ring, blocks->orders);
      ModuleHom a = compose(compose(blocks->to_pieces, ModuleHom(pieces, pieces, std::move(ap))),
                            blocks->assemble);
      int r = ctx.space.v.rank();
      IntMat gram2(r, IntVec(r, 0));
      for (int i = 0; i < r; ++i) {
        Element e(r, 0);
        e[i] = 1;
        Element ae = a.apply(e);
        for (int j = 0; j < r; ++j) {
          Element f(r, 0);
          f[j] = 1;
          gram2[i][j] = ctx.space.omega.eval(ae, f);
        }
      }
      SymplecticSpace twisted(ctx.space.v, BilinearForm(Submodule::full(ctx.space.v), gram2));
      WeilContext ctw(twisted, ctx.lambda);
      SpElement gtw = SpElement::make(twisted, g.hom);
      Submodule x1 = image(ModuleHom::identity(blocks->s1.v).sub(g1.hom));
      Submodule x2 = image(ModuleHom::identity(blocks->s2.v).sub(g2.hom));
      CharacterValue want2 = closed_value(ctx, g);
      if (scalar_sign(x1, alpha) * scalar_sign(x2, beta) < 0)
        want2.eps = want2.eps * FourthRoot::minus_one();
      add_exact("change_omega_blocks", "g=" + gstr(g), want2, closed_value(ctw, gtw));
    }
  }

  Report run() {
    collect_elements();
    check_oracle_agreement();
    check_abs_value();
    check_convolution();
    check_odd_order();
    check_involutions();
    check_invertible();
    check_two_power();
    check_gmt18();
    check_lambda_twists();
    check_rationality();
    check_q_independence();
    check_oracle_internals();
    check_p_operator();
    check_wmat();
    check_psi_pm();
    check_crt();
    check_blocks();
    return std::move(report);
  }
};

}  // namespace

Report verify_identities(const WeilContext& ctx, unsigned long long seed, int samples) {
  Battery battery(ctx, seed, samples);
  return battery.run();
}

}  // namespace weilchar
