#pragma once

// Finite Z/m-modules presented by divisor lists, their submodules
// (exact Smith bases via integer normal forms) and homomorphisms with
// exact kernels, images and sections.

#include <functional>
#include <memory>
#include <mutex>
#include <optional>

#include "weilchar/intmat.hpp"
#include "weilchar/zmod.hpp"

namespace weilchar {

using Element = IntVec;  // mixed-radix coordinates, one per divisor

struct FinModule {
  Ring ring;
  std::vector<i64> divisors;  // each > 1 and dividing m

  FinModule() = default;
  FinModule(Ring r, std::vector<i64> divs);

  int rank() const { return static_cast<int>(divisors.size()); }
  i64 order() const;
  bool operator==(const FinModule& o) const {
    return ring == o.ring && divisors == o.divisors;
  }

  Element reduce(Element v) const;
  Element zero() const { return Element(divisors.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(i64 c, const Element& a) const;
  bool is_zero(const Element& a) const;
  /// Additive order of v.
  i64 element_order(const Element& v) const;

  i64 index_of(const Element& v) const;  // mixed-radix rank
  Element element_at(i64 index) const;
  void check_element(const Element& v) const;
};

struct ModuleHom {
  FinModule dom, cod;
  IntMat mat;  // generator i of dom -> sum_j mat[i][j] * generator j of cod

  ModuleHom() = default;
  ModuleHom(FinModule d, FinModule c, IntMat m);

  Element apply(const Element& v) const;
  static ModuleHom identity(const FinModule& m);
  static ModuleHom zero(const FinModule& d, const FinModule& c);
  static ModuleHom scalar(const FinModule& m, i64 c);

  ModuleHom add(const ModuleHom& o) const;
  ModuleHom sub(const ModuleHom& o) const;
  ModuleHom neg() const;
  bool operator==(const ModuleHom& o) const {
    return dom == o.dom && cod == o.cod && mat == o.mat;
  }

  /// Lazily built solver for v * mat = x (mod cod divisors); shared and
  /// write-once, so concurrent readers are fine after first use.
  const RowSolver& solver() const;

 private:
  mutable std::shared_ptr<RowSolver> solver_;
  mutable std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
};

/// apply f, then g.
ModuleHom compose(const ModuleHom& f, const ModuleHom& g);

class Submodule {
 public:
  static Submodule full(const FinModule& m);
  static Submodule zero_sub(const FinModule& m);
  static Submodule from_generators(const FinModule& m, const std::vector<Element>& gens);
  /// Quotient L(big)/L(small) of two nested lattices presented by row bases;
  /// both must contain diag(divisors). Used for submodules and form reduction.
  static Submodule from_lattices(const FinModule& m, IntMat big, const IntMat& small);

  const FinModule& ambient() const { return ambient_; }
  const Ring& ring() const { return ambient_.ring; }
  i64 order() const;
  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<i64>& orders() const { return orders_; }
  const std::vector<Element>& basis() const { return basis_; }
  const IntMat& lattice() const { return lattice_; }

  bool contains(const Element& v) const;
  /// Coordinates of v in the internal basis; throws when v is outside.
  IntVec coords(const Element& v) const;
  Element element_from_coords(const IntVec& c) const;

  /// Visits every element; rejects |X| > 2^24.
  void enumerate(const std::function<void(const Element&)>& fn) const;
  std::vector<Element> elements() const;

  bool contains_sub(const Submodule& other) const;
  bool same_as(const Submodule& other) const;

 private:
  FinModule ambient_;
  IntMat lattice_;               // row basis B of the defining lattice
  std::shared_ptr<RowSolver> membership_;  // solves y * B = x
  IntMat vtrans_;                // coordinate transform from the quotient SNF
  IntVec full_orders_;           // all SNF invariants (with 1s)
  std::vector<int> kept_;        // indices with order > 1
  std::vector<i64> orders_;      // kept cyclic orders
  std::vector<Element> basis_;   // kept basis elements (ambient coordinates)
};

Submodule kernel(const ModuleHom& h);
Submodule image(const ModuleHom& h);

struct NoPreimage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Some v with h(v) = x; deterministic for a fixed h. Throws NoPreimage.
Element section(const ModuleHom& h, const Element& x);

Submodule intersect(const Submodule& a, const Submodule& b);
Submodule sum(const Submodule& a, const Submodule& b);

/// Matrix of h restricted to X (h must map X into X), as an endomorphism
/// of the abstract module with X's cyclic orders.
ModuleHom restrict_to(const ModuleHom& h, const Submodule& x);

/// Abstract module carrying a submodule's invariants.
FinModule abstract_module(const Submodule& x);

/// Inverse of an invertible endomorphism.
ModuleHom hom_inverse(const ModuleHom& h);

/// Deterministic random hom dom -> cod (entries compatible with divisors).
ModuleHom random_hom(const FinModule& dom, const FinModule& cod, std::function<i64()> rng);

}  // namespace weilchar
