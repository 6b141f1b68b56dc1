#pragma once

#include <map>
#include <memory>
#include <vector>

#include "core/dual_algebra.hpp"

namespace hig {

// The printed module formulas for t and s on the Delta/N basis; labels
// outside the legal ranges are dropped.
CurvElement module_mul_flat_t(const CurvElement& phi);
CurvElement module_mul_flat_s(const CurvElement& phi);
CurvElement module_mul_flat(const ValElement& p, const CurvElement& phi);

struct CurvDecomposition {
  ValElement p;
  TildeValElement q;
};

// Curv^U(n) as a module over Val^U(n). The action is the transpose of
// multiplication in the dual algebra: <L, phi Phi> = <phibar L, Phi>.
class CurvSpace {
 public:
  static std::shared_ptr<const CurvSpace> create(int n);
  static std::shared_ptr<const CurvSpace> create(DualAlgebraPtr dual);

  int n() const { return dual_->n(); }
  const DualAlgebra& dual() const { return *dual_; }
  const DualAlgebraPtr& dual_ptr() const { return dual_; }
  const RingContextPtr& rings() const { return dual_->rings(); }
  const CurvBasisPtr& basis() const { return dual_->basis(); }

  CurvElement zero() const { return CurvElement(basis()); }
  CurvElement element(const Label& label, const Scalar& c = Scalar(1)) const {
    return CurvElement::of(basis(), label, c);
  }

  CurvElement module_mul(const DualElement& phibar, const CurvElement& phi) const;
  CurvElement module_mul(const ValElement& p, const CurvElement& phi) const;

  // p Delta_{0,0}
  CurvElement ell_map(const ValElement& p) const;
  // q N_{1,0}; needs n >= 2.
  CurvElement en_map(const TildeValElement& q) const;
  // The unique (p, q) with phi = ell_map(p) + en_map(q).
  CurvDecomposition decompose(const CurvElement& phi) const;
  ValElement globalize(const CurvElement& phi) const { return decompose(phi).p; }

 private:
  explicit CurvSpace(DualAlgebraPtr dual);

  DualAlgebraPtr dual_;
  std::map<Monomial, CurvElement> ell_images_;
  std::map<Monomial, CurvElement> en_images_;
  std::vector<Matrix> decomposition_inverse_;  // per degree k
};

using CurvSpacePtr = std::shared_ptr<const CurvSpace>;

}  // namespace hig
