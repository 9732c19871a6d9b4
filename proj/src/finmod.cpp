#include "weilchar/finmod.hpp"

#include <algorithm>
#include <numeric>

namespace weilchar {

namespace {
constexpr i64 kEnumerateLimit = 1LL << 24;
}

FinModule::FinModule(Ring r, std::vector<i64> divs) : ring(r), divisors(std::move(divs)) {
  for (i64 d : divisors) {
    if (d <= 1) throw std::invalid_argument("FinModule: divisors must be > 1");
    if (ring.m % d != 0) throw std::invalid_argument("FinModule: divisor does not divide m");
  }
}

i64 FinModule::order() const {
  i64 n = 1;
  for (i64 d : divisors) n *= d;
  return n;
}

Element FinModule::reduce(Element v) const {
  if (v.size() != divisors.size()) throw std::invalid_argument("element rank mismatch");
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] %= divisors[i];
    if (v[i] < 0) v[i] += divisors[i];
  }
  return v;
}

Element FinModule::add(const Element& a, const Element& b) const {
  Element r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return reduce(std::move(r));
}

Element FinModule::sub(const Element& a, const Element& b) const {
  Element r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r));
}

Element FinModule::neg(const Element& a) const {
  Element r(a);
  for (auto& x : r) x = -x;
  return reduce(std::move(r));
}

Element FinModule::scale(i64 c, const Element& a) const {
  Element r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] = (c % divisors[i]) * r[i];
  return reduce(std::move(r));
}

bool FinModule::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

i64 FinModule::element_order(const Element& v) const {
  i64 ord = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    i64 c = ((v[i] % divisors[i]) + divisors[i]) % divisors[i];
    i64 o = divisors[i] / std::gcd(divisors[i], c);
    ord = std::lcm(ord, o);
  }
  return ord;
}

i64 FinModule::index_of(const Element& v) const {
  i64 idx = 0;
  for (size_t i = 0; i < divisors.size(); ++i) idx = idx * divisors[i] + v[i];
  return idx;
}

Element FinModule::element_at(i64 index) const {
  Element v(divisors.size(), 0);
  for (size_t i = divisors.size(); i-- > 0;) {
    v[i] = index % divisors[i];
    index /= divisors[i];
  }
  return v;
}

void FinModule::check_element(const Element& v) const {
  if (v.size() != divisors.size()) throw std::invalid_argument("element rank mismatch");
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || v[i] >= divisors[i])
      throw std::invalid_argument("element coordinate out of range");
}

ModuleHom::ModuleHom(FinModule d, FinModule c, IntMat m)
    : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
  if (static_cast<int>(mat.size()) != dom.rank())
    throw std::invalid_argument("ModuleHom: row count mismatch");
  for (int i = 0; i < dom.rank(); ++i) {
    if (static_cast<int>(mat[i].size()) != cod.rank())
      throw std::invalid_argument("ModuleHom: column count mismatch");
    for (int j = 0; j < cod.rank(); ++j) {
      mat[i][j] %= cod.divisors[j];
      if (mat[i][j] < 0) mat[i][j] += cod.divisors[j];
      if ((dom.divisors[i] * mat[i][j]) % cod.divisors[j] != 0)
        throw std::invalid_argument("ModuleHom: matrix not compatible with divisors");
    }
  }
}

Element ModuleHom::apply(const Element& v) const {
  dom.check_element(v);
  Element out(cod.rank(), 0);
  for (int i = 0; i < dom.rank(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cod.rank(); ++j) out[j] += v[i] * mat[i][j];
  }
  return cod.reduce(std::move(out));
}

ModuleHom ModuleHom::identity(const FinModule& m) {
  return {m, m, imat_identity(m.rank())};
}

ModuleHom ModuleHom::zero(const FinModule& d, const FinModule& c) {
  return {d, c, IntMat(d.rank(), IntVec(c.rank(), 0))};
}

ModuleHom ModuleHom::scalar(const FinModule& m, i64 c) {
  IntMat a(m.rank(), IntVec(m.rank(), 0));
  for (int i = 0; i < m.rank(); ++i) a[i][i] = ((c % m.divisors[i]) + m.divisors[i]) % m.divisors[i];
  return {m, m, std::move(a)};
}

ModuleHom ModuleHom::add(const ModuleHom& o) const {
  if (!(dom == o.dom) || !(cod == o.cod)) throw std::invalid_argument("hom_add: shape mismatch");
  IntMat a = mat;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += o.mat[i][j];
  return {dom, cod, std::move(a)};
}

ModuleHom ModuleHom::sub(const ModuleHom& o) const { return add(o.neg()); }

ModuleHom ModuleHom::neg() const {
  IntMat a = mat;
  for (auto& row : a)
    for (auto& x : row) x = -x;
  return {dom, cod, std::move(a)};
}

const RowSolver& ModuleHom::solver() const {
  std::call_once(*once_, [this] {
    // stacked system [mat; diag(cod divisors)]
    IntMat n = mat;
    for (int j = 0; j < cod.rank(); ++j) {
      IntVec row(cod.rank(), 0);
      row[j] = cod.divisors[j];
      n.push_back(std::move(row));
    }
    solver_ = std::make_shared<RowSolver>(std::move(n));
  });
  return *solver_;
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("compose: cod(f) != dom(g)");
  return {f.dom, g.cod, imat_mul(f.mat, g.mat)};
}

Submodule Submodule::full(const FinModule& m) {
  Submodule x;
  x.ambient_ = m;
  x.lattice_ = imat_identity(m.rank());
  x.membership_ = std::make_shared<RowSolver>(x.lattice_);
  x.vtrans_ = imat_identity(m.rank());
  x.full_orders_ = m.divisors;
  for (int i = 0; i < m.rank(); ++i) {
    x.kept_.push_back(i);
    x.orders_.push_back(m.divisors[i]);
    Element e(m.rank(), 0);
    e[i] = 1;
    x.basis_.push_back(std::move(e));
  }
  return x;
}

Submodule Submodule::zero_sub(const FinModule& m) {
  return from_generators(m, {});
}

Submodule Submodule::from_generators(const FinModule& m, const std::vector<Element>& gens) {
  IntMat rows;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != m.rank())
      throw std::invalid_argument("from_generators: element rank mismatch");
    rows.push_back(g);
  }
  for (int i = 0; i < m.rank(); ++i) {
    IntVec row(m.rank(), 0);
    row[i] = m.divisors[i];
    rows.push_back(std::move(row));
  }
  IntMat small(m.rank(), IntVec(m.rank(), 0));
  for (int i = 0; i < m.rank(); ++i) small[i][i] = m.divisors[i];
  return from_lattices(m, lattice_basis(rows), small);
}

Submodule Submodule::from_lattices(const FinModule& m, IntMat big, const IntMat& small) {
  int k = m.rank();
  if (k == 0) {
    Submodule x;
    x.ambient_ = m;
    return x;
  }
  big = lattice_basis(big);  // canonical Hermite basis, entries stay small
  if (static_cast<int>(big.size()) != k || static_cast<int>(small.size()) != k)
    throw std::invalid_argument("from_lattices: bases must have full rank");
  Submodule x;
  x.ambient_ = m;
  x.lattice_ = std::move(big);
  x.membership_ = std::make_shared<RowSolver>(x.lattice_);
  // relation matrix: rows of small in terms of the big basis
  IntMat rel;
  for (const auto& row : small) {
    auto y = x.membership_->solve(row);
    if (!y) throw std::invalid_argument("from_lattices: lattices not nested");
    rel.push_back(std::move(*y));
  }
  Smith dec = smith_normal_form(rel);
  if (dec.rank != k) throw std::invalid_argument("from_lattices: small lattice not full rank");
  x.vtrans_ = dec.v;
  x.full_orders_ = dec.s;
  for (int i = 0; i < k; ++i) {
    if (dec.s[i] <= 1) continue;
    x.kept_.push_back(i);
    x.orders_.push_back(dec.s[i]);
    // basis element: (row i of V^{-1}) * B, reduced into the module
    x.basis_.push_back(m.reduce(vec_mat(dec.vinv[i], x.lattice_)));
  }
  return x;
}

i64 Submodule::order() const {
  i64 n = 1;
  for (i64 e : orders_) n *= e;
  return n;
}

bool Submodule::contains(const Element& v) const {
  ambient_.check_element(v);
  if (ambient_.rank() == 0) return true;
  return membership_->solve(v).has_value();
}

IntVec Submodule::coords(const Element& v) const {
  ambient_.check_element(v);
  if (ambient_.rank() == 0) return {};
  auto y = membership_->solve(v);
  if (!y) throw std::invalid_argument("Submodule::coords: element not in submodule");
  IntVec z = vec_mat(*y, vtrans_);
  IntVec c(kept_.size(), 0);
  for (size_t t = 0; t < kept_.size(); ++t) {
    i64 e = full_orders_[kept_[t]];
    c[t] = ((z[kept_[t]] % e) + e) % e;
  }
  return c;
}

Element Submodule::element_from_coords(const IntVec& c) const {
  if (c.size() != orders_.size()) throw std::invalid_argument("coords rank mismatch");
  Element v = ambient_.zero();
  for (size_t t = 0; t < c.size(); ++t)
    v = ambient_.add(v, ambient_.scale(c[t], basis_[t]));
  return v;
}

void Submodule::enumerate(const std::function<void(const Element&)>& fn) const {
  if (order() > kEnumerateLimit)
    throw std::invalid_argument("Submodule::enumerate: more than 2^24 elements");
  IntVec c(orders_.size(), 0);
  for (;;) {
    fn(element_from_coords(c));
    size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] < orders_[i]) break;
      c[i] = 0;
      if (i == 0) return;
    }
    if (c.empty()) return;
  }
}

std::vector<Element> Submodule::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  enumerate([&](const Element& v) { out.push_back(v); });
  return out;
}

bool Submodule::contains_sub(const Submodule& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

bool Submodule::same_as(const Submodule& other) const {
  return order() == other.order() && contains_sub(other);
}

Submodule kernel(const ModuleHom& h) {
  int k = h.dom.rank(), l = h.cod.rank();
  IntMat n = h.mat;
  for (int j = 0; j < l; ++j) {
    IntVec row(l, 0);
    row[j] = h.cod.divisors[j];
    n.push_back(std::move(row));
  }
  IntMat ker = left_kernel(n);
  std::vector<Element> gens;
  for (const auto& row : ker) {
    Element v(row.begin(), row.begin() + k);
    gens.push_back(h.dom.reduce(std::move(v)));
  }
  return Submodule::from_generators(h.dom, gens);
}

Submodule image(const ModuleHom& h) {
  std::vector<Element> gens;
  for (const auto& row : h.mat) gens.push_back(h.cod.reduce(row));
  return Submodule::from_generators(h.cod, gens);
}

Element section(const ModuleHom& h, const Element& x) {
  h.cod.check_element(x);
  auto y = h.solver().solve(x);
  if (!y) throw NoPreimage("section: element not in image");
  Element v(y->begin(), y->begin() + h.dom.rank());
  return h.dom.reduce(std::move(v));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("intersect: different ambient modules");
  const FinModule& m = a.ambient();
  int k = m.rank();
  if (k == 0) return a;
  // rows (y_a | y_b) with y_a * Ba = y_b * Bb
  IntMat stacked = a.lattice();
  for (const auto& row : b.lattice()) {
    IntVec nrow(row);
    for (auto& x : nrow) x = -x;
    stacked.push_back(std::move(nrow));
  }
  IntMat ker = left_kernel(stacked);
  std::vector<Element> gens;
  int ra = static_cast<int>(a.lattice().size());
  for (const auto& row : ker) {
    IntVec ya(row.begin(), row.begin() + ra);
    gens.push_back(m.reduce(vec_mat(ya, a.lattice())));
  }
  return Submodule::from_generators(m, gens);
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("sum: different ambient modules");
  std::vector<Element> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Submodule::from_generators(a.ambient(), gens);
}

FinModule abstract_module(const Submodule& x) {
  return {x.ring(), x.orders()};
}

ModuleHom restrict_to(const ModuleHom& h, const Submodule& x) {
  if (!(h.dom == h.cod) || !(h.dom == x.ambient()))
    throw std::invalid_argument("restrict_to: endomorphism of the ambient module required");
  FinModule m = abstract_module(x);
  IntMat a;
  for (const auto& b : x.basis()) {
    Element img = h.apply(b);
    if (!x.contains(img))
      throw std::invalid_argument("restrict_to: submodule is not invariant");
    a.push_back(x.coords(img));
  }
  return {m, m, std::move(a)};
}

ModuleHom hom_inverse(const ModuleHom& h) {
  if (!(h.dom == h.cod)) throw std::invalid_argument("hom_inverse: endomorphism required");
  IntMat inv;
  for (int i = 0; i < h.dom.rank(); ++i) {
    Element e(h.dom.rank(), 0);
    e[i] = 1;
    inv.push_back(section(h, e));
  }
  ModuleHom g(h.dom, h.dom, std::move(inv));
  if (!(compose(h, g) == ModuleHom::identity(h.dom)) ||
      !(compose(g, h) == ModuleHom::identity(h.dom)))
    throw std::invalid_argument("hom_inverse: hom is not invertible");
  return g;
}

ModuleHom random_hom(const FinModule& dom, const FinModule& cod, std::function<i64()> rng) {
  IntMat a(dom.rank(), IntVec(cod.rank(), 0));
  for (int i = 0; i < dom.rank(); ++i)
    for (int j = 0; j < cod.rank(); ++j) {
      i64 g = std::gcd(dom.divisors[i], cod.divisors[j]);
      i64 step = cod.divisors[j] / g;
      a[i][j] = step * (((rng() % g) + g) % g);
    }
  return {dom, cod, std::move(a)};
}

}  // namespace weilchar
