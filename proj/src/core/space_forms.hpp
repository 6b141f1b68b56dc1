#pragma once

#include <memory>
#include <optional>

#include "core/curv_space.hpp"

namespace hig {

// An element p1 + p2 wbar of the dual algebra, wbar = vbar + tbar ubar.
// p2 stays a plain polynomial: tu times the tilde ideal is not zero in Val,
// so p2 wbar depends on more than the tilde class of p2.
struct WPresentation {
  ValElement p1;
  WeightedPoly p2;
};

DualPresentation to_v_form(const WPresentation& w);
WPresentation to_w_form(const DualPresentation& v);

struct ImageCheck {
  bool member = false;
  // (dp1/dt) lambda/4 - (1 - lambda s) p2 in the tilde ring.
  TildeValElement defect;
  // q with q(tbar_lambda, sbar) equal to the input; set when member.
  std::optional<WeightedPoly> preimage;
};

// Invariant valuations on the complex space form of holomorphic sectional
// curvature 4 lambda, seen inside the dual algebra via t -> tbar_lambda.
class LambdaContext {
 public:
  LambdaContext(CurvSpacePtr space, Rational lambda);
  static LambdaContext create(int n, const Rational& lambda);

  int n() const { return space_->n(); }
  const Rational& lambda() const { return lambda_; }
  const CurvSpace& curv() const { return *space_; }
  const CurvSpacePtr& curv_ptr() const { return space_; }
  const DualAlgebra& dual() const { return space_->dual(); }
  const RingContextPtr& rings() const { return space_->rings(); }

  // (1 - lambda s)^alpha, cut beyond weight 2n.
  WeightedPoly one_minus_lambda_s(const Rational& alpha) const;

  // (tbar - lambda tbar^3/4)(1 - lambda sbar)^(-3/2) + lambda/4 (1 - lambda sbar)^(-3/2) vbar
  DualPresentation t_lambda_presentation() const;
  // tbar (1 - lambda sbar)^(-1/2) + lambda/4 (1 - lambda sbar)^(-3/2) wbar
  WPresentation t_lambda_w_form() const;
  DualElement t_lambda_bar() const;

  // p(tbar_lambda, sbar) = p(a, sbar) + (dp/dt)(a, sbar) b wbar with
  // tbar_lambda = a + b wbar. p is taken as a polynomial, not a class in Val.
  WPresentation evaluate_valuation_w(const WeightedPoly& p) const;
  DualElement evaluate_valuation(const WeightedPoly& p) const;

  ImageCheck image_membership(const WPresentation& w) const;

  // Qp = p + lambda/(4(1 - lambda s)) d(tup)/dt on the tilde ring.
  TildeValElement q_operator(const TildeValElement& p) const;
  // Matrix over the degree-major tilde normal monomials.
  Matrix q_operator_matrix() const;
  std::optional<Matrix> q_operator_inverse() const { return inverse(q_operator_matrix()); }

 private:
  CurvSpacePtr space_;
  Rational lambda_;
};

// d/dlambda at lambda = 0 of tbar_lambda, by exact interpolation in lambda.
DualElement t_lambda_derivative_at_zero(const CurvSpacePtr& space);

// D1 p = ((t^2 - 2s)/2) p - (tu/4) dp/dt
WeightedPoly d1_operator(const WeightedPoly& p);
// D2 p = -(3 pi u t/8) p + (pi u^2/8) dp/dt
WeightedPoly d2_operator(const WeightedPoly& p);
// H'_0: decompose phi = l(p) + n(q) and return D1 p + D2 q in Val.
ValElement h0_prime(const CurvSpace& space, const CurvElement& phi);

ScalarVector tilde_coordinates(const TildeValElement& p);

}  // namespace hig
