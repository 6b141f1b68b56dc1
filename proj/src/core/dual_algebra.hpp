#pragma once

#include <map>
#include <memory>
#include <vector>

#include "core/curv_basis.hpp"
#include "core/val_rings.hpp"

namespace hig {

enum class Generator { TBar, SBar, VBar };

// p1(tbar, sbar) + p2(tbar, sbar) vbar.
struct DualPresentation {
  ValElement p1;
  TildeValElement p2;

  friend bool operator==(const DualPresentation&, const DualPresentation&) = default;
};

// Product with v^2 = -2 t u v - (t u)^2, reduced in both rings.
DualPresentation operator*(const DualPresentation& a, const DualPresentation& b);

// Curv^U(n)* with its product, for a fixed n.
class DualAlgebra {
 public:
  static std::shared_ptr<const DualAlgebra> create(int n);
  static std::shared_ptr<const DualAlgebra> create(RingContextPtr rings);

  int n() const { return rings_->n(); }
  const RingContextPtr& rings() const { return rings_; }
  const CurvBasisPtr& basis() const { return basis_; }

  DualElement zero() const { return DualElement(basis_); }
  // Delta*_{2n,n}
  DualElement unit() const;
  DualElement element(const Label& label, const Scalar& c = Scalar(1)) const;
  DualElement generator(Generator g) const;

  // Multiplication tables for tbar, sbar, vbar in the dual basis.
  DualElement mul_generator(Generator g, const DualElement& x) const;
  // p(tbar, sbar, vbar) x by iterated table application; p may contain v.
  DualElement apply_polynomial(const WeightedPoly& p, const DualElement& x) const;
  DualElement evaluate(const WeightedPoly& p) const { return apply_polynomial(p, unit()); }
  // Matrix of mul_generator(g, .) in the dual basis (column j = image of j).
  Matrix generator_matrix(Generator g) const;

  DualPresentation to_presentation(const DualElement& x) const;
  DualElement from_presentation(const DualPresentation& p) const;
  DualPresentation presentation(const WeightedPoly& p1, const WeightedPoly& p2) const;
  // Cached to_presentation of the j-th dual basis vector.
  const DualPresentation& basis_presentation(std::size_t j) const {
    return basis_presentations_.at(j);
  }

  // Product through the polynomial presentation.
  DualElement multiply(const DualElement& x, const DualElement& y) const;
  // Product by writing x in the generators and applying the tables to y.
  DualElement table_multiply(const DualElement& x, const DualElement& y) const;

 private:
  explicit DualAlgebra(RingContextPtr rings);
  void add_generator_image(Generator g, const Label& label, const Scalar& c,
                           DualElement& out) const;

  RingContextPtr rings_;
  CurvBasisPtr basis_;
  DualElement vbar_;
  std::map<Monomial, DualElement> val_images_;    // m * unit
  std::map<Monomial, DualElement> tilde_images_;  // m * vbar
  // Per codegree d: inverse of the map (Val_d coords, Tilde_{d-3} coords) ->
  // Curv*-coordinates of degree 2n - d.
  std::vector<Matrix> presentation_inverse_;
  std::vector<DualPresentation> basis_presentations_;
};

using DualAlgebraPtr = std::shared_ptr<const DualAlgebra>;

// Constants in the cleared form of vbar.
Scalar vbar_coefficient_a(int n);
Scalar vbar_coefficient_b(int n);

// c^j_{k,l} = <B*_k B*_l, B_j>; K(B_j) = sum c^j_{k,l} B_k (x) B_l.
struct LocalKinematic {
  CurvBasisPtr basis;
  std::vector<Matrix> by_target;  // by_target[j](k, l)

  const Scalar& operator()(std::size_t j, std::size_t k, std::size_t l) const {
    return by_target[j](k, l);
  }
};

LocalKinematic local_kinematic(const DualAlgebra& algebra);

// k(e_i) = sum K_i(c, d) e_c (x) e_d over the normal monomials e of Val,
// determined by (PD (x) PD) k = m* PD.
struct GlobalKinematic {
  RingContextPtr rings;
  std::vector<Monomial> basis;
  std::vector<Matrix> by_source;

  // Coefficient matrix of k(p).
  Matrix apply(const ValElement& p) const;
};

GlobalKinematic global_kinematic(const RingContextPtr& rings);

// Coordinates of p over the degree-major normal monomials of Val.
ScalarVector val_coordinates(const ValElement& p);
ValElement val_from_coordinates(const RingContextPtr& rings, std::span<const Scalar> coords);

}  // namespace hig
