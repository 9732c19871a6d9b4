#include "weilchar/weil.hpp"

#include <cmath>
#include <numeric>

namespace weilchar {

namespace {
constexpr i64 kOracleLimit = 1LL << 16;
}

WeilContext::WeilContext(SymplecticSpace s, AdditiveCharacter l)
    : space(std::move(s)), lambda(std::move(l)) {
  if (!(space.v.ring == lambda.ring))
    throw std::invalid_argument("WeilContext: ring mismatch between space and character");
}

AlgebraElement AlgebraElement::basis(const FinModule& m, const Element& x) {
  AlgebraElement a{m, {}};
  a.coeffs[m.index_of(m.reduce(x))] = 1.0;
  return a;
}

AlgebraElement& AlgebraElement::accumulate(i64 index, cplx c) {
  auto it = coeffs.find(index);
  if (it == coeffs.end()) {
    coeffs.emplace(index, c);
  } else {
    it->second += c;
    if (std::abs(it->second) < 1e-15) coeffs.erase(it);
  }
  return *this;
}

AlgebraElement AlgebraElement::scaled(cplx c) const {
  AlgebraElement out{v, coeffs};
  for (auto& [k, val] : out.coeffs) val *= c;
  return out;
}

cplx AlgebraElement::coefficient(const Element& x) const {
  auto it = coeffs.find(v.index_of(x));
  return it == coeffs.end() ? cplx(0.0) : it->second;
}

double AlgebraElement::max_abs_diff(const AlgebraElement& o) const {
  double m = 0.0;
  for (const auto& [k, val] : coeffs) {
    auto it = o.coeffs.find(k);
    m = std::max(m, std::abs(val - (it == o.coeffs.end() ? cplx(0.0) : it->second)));
  }
  for (const auto& [k, val] : o.coeffs)
    if (!coeffs.count(k)) m = std::max(m, std::abs(val));
  return m;
}

AlgebraElement alg_mult(const WeilContext& ctx, const AlgebraElement& a,
                        const AlgebraElement& b) {
  if (!(a.v == ctx.space.v) || !(b.v == ctx.space.v))
    throw std::invalid_argument("alg_mult: context mismatch");
  const FinModule& m = ctx.space.v;
  const Ring& ring = ctx.ring();
  AlgebraElement out = AlgebraElement::zero(m);
  for (const auto& [ka, ca] : a.coeffs) {
    Element va = m.element_at(ka);
    for (const auto& [kb, cb] : b.coeffs) {
      Element vb = m.element_at(kb);
      cplx factor = ctx.lambda.eval(ring.reduce(ring.half * ctx.space.omega.eval(va, vb)));
      out.accumulate(m.index_of(m.add(va, vb)), ca * cb * factor);
    }
  }
  return out;
}

AlgebraElement p_operator(const WeilContext& ctx, const SpElement& g) {
  const FinModule& m = ctx.space.v;
  const Ring& ring = ctx.ring();
  BilinearForm bg = bg_form(g.hom, ctx.space.omega);
  AlgebraElement out = AlgebraElement::zero(m);
  const auto& orders = bg.domain.orders();
  IntVec c(orders.size(), 0);
  for (;;) {
    Element x = bg.domain.element_from_coords(c);
    cplx coeff = ctx.lambda.eval(ring.reduce(ring.half * bg.eval_coords(c, c)));
    out.accumulate(m.index_of(x), coeff);
    size_t i = c.size();
    bool done = c.empty();
    while (i > 0) {
      --i;
      if (++c[i] < orders[i]) break;
      c[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

cplx conv_coeff(const WeilContext& ctx, const SpElement& g, const SpElement& h) {
  const Ring& ring = ctx.ring();
  ModuleHom ag = ModuleHom::identity(ctx.space.v).sub(g.hom);
  ModuleHom ah = ModuleHom::identity(ctx.space.v).sub(h.hom);
  BilinearForm bg = bg_form(g.hom, ctx.space.omega);
  BilinearForm bh = bg_form(h.hom, ctx.space.omega);
  Submodule common = intersect(image(ag), image(ah));
  cplx acc = 0.0;
  common.enumerate([&](const Element& x) {
    i64 e = ring.reduce(ring.half * (bg.eval(x, x) + bh.eval(x, x)));
    acc += ctx.lambda.eval(e);
  });
  return acc;
}

Submodule lagrangian(const SymplecticSpace& s) {
  OrthSplit split = orth_split(s.omega);
  std::vector<Element> gens;
  for (const auto& pair : split.pairs) gens.push_back(pair.u);
  Submodule l = Submodule::from_generators(s.v, gens);
  if (l.order() * l.order() != s.v.order())
    throw std::logic_error("lagrangian: |L|^2 != |V|");
  return l;
}

cplx CharacterValue::to_complex() const {
  return eps.value() * std::sqrt(static_cast<double>(c));
}

std::string CharacterValue::str() const {
  return std::string(eps.str()) + "*sqrt(" + std::to_string(c) + ")";
}

i64 isqrt_exact(i64 n) {
  if (n < 0) throw std::invalid_argument("isqrt_exact: negative");
  i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) throw std::invalid_argument("isqrt_exact: not a perfect square");
  return r;
}

Oracle::Oracle(WeilContext ctx) : ctx_(std::move(ctx)) {
  const FinModule& v = ctx_.space.v;
  const Ring& ring = ctx_.ring();
  i64 size = v.order();
  if (size > kOracleLimit) throw std::invalid_argument("Oracle: |V| > 2^16");
  n_ = static_cast<int>(isqrt_exact(size));

  table_.resize(ring.m);
  for (i64 r = 0; r < ring.m; ++r) table_[r] = ctx_.lambda.eval(r);

  // hyperbolic split of omega: L = span of the u side, transversal from
  // the w side in mixed-radix order
  OrthSplit split = orth_split(ctx_.space.omega);
  int pairs = static_cast<int>(split.pairs.size());
  std::vector<i64> uorders(pairs), worders(pairs);
  IntMat rows;
  for (int i = 0; i < pairs; ++i) {
    uorders[i] = v.element_order(split.pairs[i].u);
    rows.push_back(split.pairs[i].u);
  }
  for (int i = 0; i < pairs; ++i) {
    worders[i] = v.element_order(split.pairs[i].w);
    rows.push_back(split.pairs[i].w);
  }
  std::vector<i64> all_orders = uorders;
  all_orders.insert(all_orders.end(), worders.begin(), worders.end());
  FinModule pieces(ring, all_orders);
  ModuleHom assemble(pieces, v, std::move(rows));

  FinModule wshape(ring, worders);
  i64 reps_count = wshape.order();
  if (reps_count != n_) throw std::logic_error("Oracle: transversal size mismatch");
  reps_.reserve(reps_count);
  for (i64 idx = 0; idx < reps_count; ++idx) {
    IntVec wc = wshape.element_at(idx);
    IntVec pc(pairs, 0);
    pc.insert(pc.end(), wc.begin(), wc.end());
    reps_.push_back(assemble.apply(pc));
  }

  coset_of_.assign(size, 0);
  for (i64 idx = 0; idx < size; ++idx) {
    IntVec split_coords = section(assemble, v.element_at(idx));
    IntVec wc(split_coords.begin() + pairs, split_coords.end());
    coset_of_[idx] = static_cast<int>(wshape.index_of(wshape.reduce(wc)));
  }

  tmat_ = cmat_scale(1.0 / n_, rho(p_operator(ctx_, SpElement::minus_one(ctx_.space))));

  CMat projector_plus = cmat_scale(0.5, cmat_add(cmat_identity(n_), tmat_));
  CMat projector_minus = cmat_scale(0.5, cmat_add(cmat_identity(n_), cmat_scale(-1.0, tmat_)));
  eplus_ = cmat_row_basis(projector_plus, 1e-8);
  eminus_ = cmat_row_basis(projector_minus, 1e-8);
  if (dim_plus() != (n_ + 1) / 2 || dim_minus() != (n_ - 1) / 2)
    throw std::runtime_error("Oracle: T eigenspace extraction ill-conditioned");
}

CMat Oracle::rho(const AlgebraElement& a) const {
  if (!(a.v == ctx_.space.v)) throw std::invalid_argument("Oracle::rho: context mismatch");
  const FinModule& v = ctx_.space.v;
  const Ring& ring = ctx_.ring();
  const BilinearForm& omega = ctx_.space.omega;
  CMat out = cmat_zero(n_, n_);
  for (const auto& [key, coeff] : a.coeffs) {
    Element x = v.element_at(key);
    for (int t = 0; t < n_; ++t) {
      const Element& rep = reps_[t];
      Element moved = v.add(rep, x);
      int s = coset_of_[v.index_of(moved)];
      Element xprime = v.sub(moved, reps_[s]);
      i64 e = ring.reduce(ring.half * (omega.eval(rep, x) - omega.eval(xprime, reps_[s])));
      out[t][s] += coeff * table_[e];
    }
  }
  return out;
}

cplx Oracle::eta(const CMat& c) const {
  auto restricted_det = [&](const RowBasis& basis) {
    int d = static_cast<int>(basis.rows.size());
    CMat rc = cmat_mul(basis.rows, c);
    CMat a = cmat_zero(d, d), b = cmat_zero(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        a[i][j] = basis.rows[i][basis.cols[j]];
        b[i][j] = rc[i][basis.cols[j]];
      }
    CMat m = cmat_solve_right(a, b);
    return cmat_det(std::move(m));
  };
  cplx dp = restricted_det(eplus_);
  cplx dm = restricted_det(eminus_);
  if (std::abs(dm) < 1e-12) throw std::runtime_error("Oracle::eta: singular restriction");
  return dp / dm;
}

cplx Oracle::trace(const SpElement& g) const {
  return static_cast<double>(n_) / eta(rho(p_operator(ctx_, g)));
}

CMat Oracle::wmat(const SpElement& g) const {
  CMat p = rho(p_operator(ctx_, g));
  return cmat_scale(1.0 / eta(p), p);
}

CharacterValue closed_value(const WeilContext& ctx, const SpElement& g) {
  ModuleHom alpha = ModuleHom::identity(ctx.space.v).sub(g.hom);
  i64 c = kernel(alpha).order();
  BilinearForm bg = bg_form(g.hom, ctx.space.omega);
  if (bg.domain.rank() == 0) return {c, FourthRoot::one()};
  BilinearForm q = symmetric_q(bg.domain);
  int sign = sign_ratio(q, bg);
  FourthRoot gamma = gauss_sum(q.negate(), ctx.lambda);
  FourthRoot eps = (sign == 1 ? FourthRoot::one() : FourthRoot::minus_one()) * gamma;
  return {c, eps};
}

CharacterValue value_odd(const WeilContext& ctx, const SpElement& g) {
  if (element_order(g) % 2 == 0)
    throw std::invalid_argument("value_odd: element order must be odd");
  const FinModule& v = ctx.space.v;
  const Ring& ring = ctx.ring();
  i64 size = v.order();
  if (size > (1LL << 24)) throw std::invalid_argument("value_odd: module too large");
  std::vector<cplx> table(ring.m);
  for (i64 r = 0; r < ring.m; ++r) table[r] = ctx.lambda.eval(r);
  cplx acc = 0.0;
  for (i64 idx = 0; idx < size; ++idx) {
    Element x = v.element_at(idx);
    acc += table[ring.reduce(ring.half * ctx.space.omega.eval(x, g.hom.apply(x)))];
  }
  cplx psi = acc / std::sqrt(static_cast<double>(size));
  i64 c = kernel(ModuleHom::identity(v).sub(g.hom)).order();
  FourthRoot eps = snap_fourth_root(psi / std::sqrt(static_cast<double>(c)));
  return {c, eps};
}

CharacterValue value_involution(const WeilContext& ctx, const SpElement& t) {
  if (!((t * t) == SpElement::identity(t.space)))
    throw std::invalid_argument("value_involution: t^2 != 1");
  ModuleHom alpha = ModuleHom::identity(ctx.space.v).sub(t.hom);
  i64 c = kernel(alpha).order();
  i64 d = isqrt_exact(image(alpha).order());
  FourthRoot eps = ((d - 1) / 2) % 2 == 0 ? FourthRoot::one() : FourthRoot::minus_one();
  return {c, eps};
}

CharacterValue value_invertible(const WeilContext& ctx, const SpElement& g) {
  ModuleHom alpha = ModuleHom::identity(ctx.space.v).sub(g.hom);
  Submodule u = image(alpha);
  Submodule fixed = kernel(alpha);
  if (intersect(fixed, u).order() != 1)
    throw std::invalid_argument("value_invertible: Ker(1-g) meets V(1-g)");
  i64 d = isqrt_exact(u.order());
  int sgn = perm_sign_fast(restrict_to(alpha, u));
  int par = ((d - 1) / 2) % 2 == 0 ? 1 : -1;
  FourthRoot eps = (par * sgn == 1) ? FourthRoot::one() : FourthRoot::minus_one();
  return {fixed.order(), eps};
}

std::pair<cplx, cplx> psi_pm(const WeilContext& ctx, const SpElement& g) {
  cplx pg = closed_value(ctx, g).to_complex();
  cplx pmg = closed_value(ctx, g.negated()).to_complex();
  cplx pm1 = closed_value(ctx, SpElement::minus_one(ctx.space)).to_complex();
  return {(pg + pm1 * pmg) / 2.0, (pg - pm1 * pmg) / 2.0};
}

std::vector<std::pair<WeilContext, SpElement>> crt_components(const WeilContext& ctx,
                                                              const SpElement& g) {
  const Ring& ring = ctx.ring();
  const FinModule& v = ctx.space.v;
  i64 m = ring.m;
  std::vector<i64> qs;
  {
    i64 rest = m;
    for (i64 p = 3; p * p <= rest; p += 2)
      if (rest % p == 0) {
        i64 q = 1;
        while (rest % p == 0) {
          rest /= p;
          q *= p;
        }
        qs.push_back(q);
      }
    if (rest > 1) qs.push_back(rest);
  }

  std::vector<std::pair<WeilContext, SpElement>> out;
  for (i64 q : qs) {
    Ring rq(q);
    std::vector<int> kept;
    std::vector<i64> divisors;
    for (int i = 0; i < v.rank(); ++i) {
      i64 dq = std::gcd(v.divisors[i], q);
      if (dq > 1) {
        kept.push_back(i);
        divisors.push_back(dq);
      }
    }
    FinModule vq(rq, divisors);
    int k = static_cast<int>(kept.size());
    IntMat gram(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) gram[i][j] = rq.reduce(ctx.space.omega.gram[kept[i]][kept[j]]);
    SymplecticSpace sq(vq, BilinearForm(Submodule::full(vq), std::move(gram)));
    i64 u = mod_inverse((m / q) % q, q);
    AdditiveCharacter lq(rq, rq.reduce(ctx.lambda.s * u));
    IntMat mat(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) mat[i][j] = g.hom.mat[kept[i]][kept[j]];
    SpElement gq = SpElement::make(sq, ModuleHom(vq, vq, std::move(mat)));
    out.emplace_back(WeilContext(sq, lq), gq);
  }
  return out;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

}  // namespace weilchar
