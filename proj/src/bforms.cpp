#include "weilchar/bforms.hpp"

#include <algorithm>
#include <numeric>

namespace weilchar {

namespace {

struct PrimePower {
  i64 p, a, q;  // q = p^a exactly dividing m
};

std::vector<PrimePower> prime_powers(i64 m) {
  std::vector<PrimePower> out;
  for (i64 p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    PrimePower pp{p, 0, 1};
    while (m % p == 0) {
      m /= p;
      pp.a++;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (m > 1) out.push_back({m, 1, m});
  return out;
}

i64 valuation(i64 x, i64 p, i64 cap) {
  if (x == 0) return cap;
  i64 v = 0;
  while (v < cap && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// CRT coefficient: 1 mod q, 0 mod m/q.
i64 crt_coefficient(i64 q, i64 m) {
  i64 cof = m / q;
  if (cof == 1) return 1;
  return (cof % m) * mod_inverse(cof % q, q) % m;
}

}  // namespace

BilinearForm::BilinearForm(Submodule dom, IntMat g) : domain(std::move(dom)), gram(std::move(g)) {
  int r = domain.rank();
  i64 m = ring().m;
  if (static_cast<int>(gram.size()) != r)
    throw std::invalid_argument("BilinearForm: gram row count mismatch");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(gram[i].size()) != r)
      throw std::invalid_argument("BilinearForm: gram column count mismatch");
    for (int j = 0; j < r; ++j) {
      gram[i][j] = ring().reduce(gram[i][j]);
      if ((domain.orders()[i] * gram[i][j]) % m != 0 ||
          (domain.orders()[j] * gram[i][j]) % m != 0)
        throw std::invalid_argument("BilinearForm: gram not compatible with basis orders");
    }
  }
  symmetric = true;
  alternating = true;
  for (int i = 0; i < r && (symmetric || alternating); ++i)
    for (int j = 0; j < r; ++j) {
      if (gram[i][j] != gram[j][i]) symmetric = false;
      if (ring().reduce(gram[i][j] + gram[j][i]) != 0 || (i == j && gram[i][i] != 0))
        alternating = false;
    }
}

i64 BilinearForm::eval(const Element& x, const Element& y) const {
  return eval_coords(domain.coords(x), domain.coords(y));
}

i64 BilinearForm::eval_coords(const IntVec& cx, const IntVec& cy) const {
  i64 m = ring().m;
  i64 acc = 0;
  for (size_t i = 0; i < cx.size(); ++i) {
    if (cx[i] == 0) continue;
    i64 row = 0;
    for (size_t j = 0; j < cy.size(); ++j)
      row = (row + (cy[j] % m) * gram[i][j]) % m;
    acc = (acc + (cx[i] % m) * row) % m;
  }
  return ring().reduce(acc);
}

BilinearForm BilinearForm::negate() const {
  IntMat g = gram;
  for (auto& row : g)
    for (auto& x : row) x = ring().reduce(-x);
  return {domain, std::move(g)};
}

BilinearForm BilinearForm::scale(i64 c) const {
  IntMat g = gram;
  for (auto& row : g)
    for (auto& x : row) x = ring().reduce(c * x);
  return {domain, std::move(g)};
}

BilinearForm BilinearForm::transpose() const {
  int r = domain.rank();
  IntMat g(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = gram[j][i];
  return {domain, std::move(g)};
}

std::pair<FinModule, BilinearForm> omega_hyperbolic(const Ring& ring, std::vector<i64> d) {
  std::sort(d.begin(), d.end());
  int k = static_cast<int>(d.size());
  std::vector<i64> divisors = d;
  divisors.insert(divisors.end(), d.begin(), d.end());
  FinModule v(ring, divisors);
  IntMat gram(2 * k, IntVec(2 * k, 0));
  for (int i = 0; i < k; ++i) {
    gram[i][k + i] = ring.m / d[i];
    gram[k + i][i] = ring.reduce(-(ring.m / d[i]));
  }
  BilinearForm omega(Submodule::full(v), std::move(gram));
  return {std::move(v), std::move(omega)};
}

Submodule perp(const Submodule& x, const BilinearForm& b, Side side) {
  const Submodule& dom = b.domain;
  if (!(x.ambient() == dom.ambient()))
    throw std::invalid_argument("perp: ambient module mismatch");
  if (!dom.contains_sub(x)) throw std::invalid_argument("perp: X not inside the form domain");
  int r = dom.rank();
  if (r == 0) return dom;
  int t = x.rank();
  if (t == 0) return dom;

  FinModule target(dom.ring(), std::vector<i64>(t, dom.ring().m));
  IntMat mat(r, IntVec(t, 0));
  for (int g = 0; g < t; ++g) {
    IntVec cg = dom.coords(x.basis()[g]);
    for (int j = 0; j < r; ++j) {
      IntVec ej(r, 0);
      ej[j] = 1;
      mat[j][g] = (side == Side::right) ? b.eval_coords(cg, ej) : b.eval_coords(ej, cg);
    }
  }
  ModuleHom pairing(abstract_module(dom), target, std::move(mat));
  Submodule ker = kernel(pairing);
  std::vector<Element> gens;
  for (const auto& kb : ker.basis()) gens.push_back(dom.element_from_coords(kb));
  return Submodule::from_generators(dom.ambient(), gens);
}

bool is_nondegenerate(const BilinearForm& b) {
  if (b.domain.rank() == 0) return true;
  Submodule right = perp(b.domain, b, Side::right);
  if (right.order() != 1) return false;
  Submodule left = perp(b.domain, b, Side::left);
  return left.order() == 1;
}

bool preserves_form(const ModuleHom& g, const BilinearForm& omega) {
  const FinModule& v = g.dom;
  if (!(g.dom == g.cod) || !(v == omega.domain.ambient())) return false;
  int k = v.rank();
  for (int i = 0; i < k; ++i) {
    Element ei(k, 0);
    ei[i] = 1;
    Element gi = g.apply(ei);
    for (int j = 0; j < k; ++j) {
      Element ej(k, 0);
      ej[j] = 1;
      if (omega.eval(gi, g.apply(ej)) != omega.eval(ei, ej)) return false;
    }
  }
  return true;
}

BilinearForm bg_form(const ModuleHom& g, const BilinearForm& omega) {
  if (!preserves_form(g, omega)) throw std::invalid_argument("bg_form: g is not symplectic");
  ModuleHom alpha = ModuleHom::identity(g.dom).sub(g);
  Submodule x = image(alpha);
  int r = x.rank();
  IntMat gram(r, IntVec(r, 0));
  std::vector<Element> sections;
  sections.reserve(r);
  for (int i = 0; i < r; ++i) sections.push_back(section(alpha, x.basis()[i]));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[i][j] = omega.eval(sections[i], x.basis()[j]);
  return {std::move(x), std::move(gram)};
}

BilinearForm qg_form(const ModuleHom& g, const BilinearForm& omega) {
  BilinearForm b = bg_form(g, omega);
  const Ring& ring = b.ring();
  int r = b.domain.rank();
  IntMat q(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      q[i][j] = ring.reduce(ring.half * (b.gram[i][j] + b.gram[j][i]));
  return {b.domain, std::move(q)};
}

namespace {

// {y in S : B(y, kill) = 0 for all kill} (or mirrored).
Submodule kill_within(const Submodule& s, const BilinearForm& b,
                      const std::vector<Element>& kills, Side side) {
  Submodule p = perp(Submodule::from_generators(s.ambient(), kills), b, side);
  return intersect(s, p);
}

struct PivotChoice {
  int i = 0, j = 0;
};

// Per prime-power, the lexicographically first basis pair attaining the
// minimal p-valuation of the gram ideal.
PivotChoice prime_pivot(const IntMat& gram, const PrimePower& pp, bool diagonal_only) {
  i64 best = pp.a + 1;
  PivotChoice out;
  int r = static_cast<int>(gram.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (diagonal_only && i != j) continue;
      i64 v = valuation(gram[i][j], pp.p, pp.a);
      if (v < best) {
        best = v;
        out = {i, j};
      }
    }
  return out;
}

i64 min_valuation(const IntMat& gram, const PrimePower& pp) {
  i64 best = pp.a;
  for (const auto& row : gram)
    for (i64 x : row) best = std::min(best, valuation(x, pp.p, pp.a));
  return best;
}

}  // namespace

OrthSplit orth_split(const BilinearForm& b) {
  if (!is_nondegenerate(b)) throw std::invalid_argument("orth_split: degenerate form");
  const Ring& ring = b.ring();
  const FinModule& amb = b.domain.ambient();
  i64 m = ring.m;
  auto pps = prime_powers(m);

  OrthSplit out;
  if (b.domain.rank() == 0) return out;
  out.kind = b.alternating  ? SplitKind::hyperbolic
             : b.symmetric ? SplitKind::diagonal
                           : SplitKind::dual;

  auto stage_gram = [&](const Submodule& us, const Submodule& ws) {
    IntMat g(us.rank(), IntVec(ws.rank(), 0));
    for (int i = 0; i < us.rank(); ++i)
      for (int j = 0; j < ws.rank(); ++j) g[i][j] = b.eval(us.basis()[i], ws.basis()[j]);
    return g;
  };

  if (out.kind == SplitKind::diagonal) {
    Submodule stage = b.domain;
    while (stage.rank() > 0) {
      IntMat g = stage_gram(stage, stage);
      Element u = amb.zero();
      for (const auto& pp : pps) {
        i64 vstar = min_valuation(g, pp);
        PivotChoice diag = prime_pivot(g, pp, true);
        Element xp;
        if (valuation(g[diag.i][diag.i], pp.p, pp.a) == vstar) {
          xp = stage.basis()[diag.i];
        } else {
          // local chain argument: b_i + b_j attains when no diagonal does
          PivotChoice pair = prime_pivot(g, pp, false);
          xp = amb.add(stage.basis()[pair.i], stage.basis()[pair.j]);
        }
        u = amb.add(u, amb.scale(crt_coefficient(pp.q, m), xp));
      }
      i64 d = b.eval(u, u);
      out.pairs.push_back({u, u, d});
      Submodule next = kill_within(stage, b, {u}, Side::right);
      if (amb.element_order(u) * next.order() != stage.order())
        throw std::logic_error("orth_split: pivot failed to split off a direct summand");
      stage = std::move(next);
    }
    return out;
  }

  if (out.kind == SplitKind::hyperbolic) {
    Submodule stage = b.domain;
    while (stage.rank() > 0) {
      IntMat g = stage_gram(stage, stage);
      Element u = amb.zero(), w = amb.zero();
      for (const auto& pp : pps) {
        PivotChoice pc = prime_pivot(g, pp, false);
        i64 c = crt_coefficient(pp.q, m);
        u = amb.add(u, amb.scale(c, stage.basis()[pc.i]));
        w = amb.add(w, amb.scale(c, stage.basis()[pc.j]));
      }
      i64 draw = b.eval(u, w);
      w = amb.scale(unit_scaling_to_gcd(draw, m), w);
      i64 d = b.eval(u, w);
      out.pairs.push_back({u, w, d});
      Submodule next = kill_within(stage, b, {u, w}, Side::right);
      if (amb.element_order(u) * amb.element_order(w) * next.order() != stage.order())
        throw std::logic_error("orth_split: hyperbolic pivot failed to split");
      stage = std::move(next);
    }
    return out;
  }

  // dual bases: independent chains on the two sides
  Submodule ustage = b.domain, wstage = b.domain;
  while (ustage.rank() > 0) {
    IntMat g = stage_gram(ustage, wstage);
    Element u = amb.zero(), w = amb.zero();
    for (const auto& pp : pps) {
      PivotChoice pc = prime_pivot(g, pp, false);
      i64 c = crt_coefficient(pp.q, m);
      u = amb.add(u, amb.scale(c, ustage.basis()[pc.i]));
      w = amb.add(w, amb.scale(c, wstage.basis()[pc.j]));
    }
    i64 draw = b.eval(u, w);
    w = amb.scale(unit_scaling_to_gcd(draw, m), w);
    i64 d = b.eval(u, w);
    out.pairs.push_back({u, w, d});
    Submodule unext = kill_within(ustage, b, {w}, Side::left);
    Submodule wnext = kill_within(wstage, b, {u}, Side::right);
    if (amb.element_order(u) * unext.order() != ustage.order() ||
        amb.element_order(w) * wnext.order() != wstage.order())
      throw std::logic_error("orth_split: dual pivot failed to split");
    ustage = std::move(unext);
    wstage = std::move(wnext);
  }
  return out;
}

BilinearForm symmetric_q(const Submodule& x) {
  int r = x.rank();
  IntMat gram(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) gram[i][i] = x.ring().m / x.orders()[i];
  return {x, std::move(gram)};
}

ModuleHom relating_automorphism(const BilinearForm& q, const BilinearForm& b) {
  if (!(q.domain.same_as(b.domain)) || q.domain.basis() != b.domain.basis())
    throw std::invalid_argument("relating_automorphism: forms on different domains");
  const Ring& ring = q.ring();
  int r = q.domain.rank();
  FinModule m = abstract_module(q.domain);
  if (r == 0) return ModuleHom::identity(m);

  IntMat n = b.gram;
  for (int j = 0; j < r; ++j) {
    IntVec row(r, 0);
    row[j] = ring.m;
    n.push_back(std::move(row));
  }
  RowSolver solver(std::move(n));
  IntMat a(r);
  for (int i = 0; i < r; ++i) {
    auto y = solver.solve(q.gram[i]);
    if (!y)
      throw std::invalid_argument("relating_automorphism: inconsistent system (degenerate form?)");
    a[i] = IntVec(y->begin(), y->begin() + r);
  }
  ModuleHom alpha(m, m, std::move(a));
  if (kernel(alpha).order() != 1)
    throw std::invalid_argument("relating_automorphism: resulting map not invertible");
  // verify the defining identity on all basis pairs
  for (int i = 0; i < r; ++i) {
    Element ei(r, 0);
    ei[i] = 1;
    IntVec ai = alpha.apply(ei);
    for (int j = 0; j < r; ++j) {
      Element ej(r, 0);
      ej[j] = 1;
      if (q.eval_coords(ei, ej) != b.eval_coords(ai, ej))
        throw std::logic_error("relating_automorphism: identity check failed");
    }
  }
  return alpha;
}

BilinearForm form_direct_sum(const BilinearForm& bx, const BilinearForm& by) {
  const Submodule& x = bx.domain;
  const Submodule& y = by.domain;
  if (!(x.ambient() == y.ambient()))
    throw std::invalid_argument("form_direct_sum: different ambient modules");
  if (intersect(x, y).order() != 1)
    throw std::invalid_argument("form_direct_sum: overlapping domains");
  const FinModule& amb = x.ambient();
  Submodule s = sum(x, y);

  // decompose each basis element of S as x-part + y-part
  std::vector<i64> orders = x.orders();
  orders.insert(orders.end(), y.orders().begin(), y.orders().end());
  FinModule pieces(amb.ring, orders);
  IntMat rows;
  for (const auto& e : x.basis()) rows.push_back(e);
  for (const auto& e : y.basis()) rows.push_back(e);
  ModuleHom assemble(pieces, amb, std::move(rows));

  int r = s.rank();
  std::vector<IntVec> cx(r), cy(r);
  for (int i = 0; i < r; ++i) {
    IntVec split = section(assemble, s.basis()[i]);
    IntVec xi(split.begin(), split.begin() + x.rank());
    IntVec yi(split.begin() + x.rank(), split.end());
    cx[i] = x.coords(x.element_from_coords(xi));
    cy[i] = y.coords(y.element_from_coords(yi));
  }
  IntMat gram(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram[i][j] = amb.ring.reduce(bx.eval_coords(cx[i], cx[j]) + by.eval_coords(cy[i], cy[j]));
  return {std::move(s), std::move(gram)};
}

BilinearForm form_pullback(const BilinearForm& q, const ModuleHom& sigma) {
  int r = q.domain.rank();
  if (sigma.dom.rank() != r || !(sigma.dom == sigma.cod))
    throw std::invalid_argument("form_pullback: automorphism of the domain required");
  if (kernel(sigma).order() != 1)
    throw std::invalid_argument("form_pullback: sigma not invertible");
  IntMat gram(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) {
    Element ei(r, 0);
    ei[i] = 1;
    IntVec si = sigma.apply(ei);
    for (int j = 0; j < r; ++j) {
      Element ej(r, 0);
      ej[j] = 1;
      gram[i][j] = q.eval_coords(si, sigma.apply(ej));
    }
  }
  return {q.domain, std::move(gram)};
}

}  // namespace weilchar
