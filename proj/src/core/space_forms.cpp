#include "core/space_forms.hpp"

#include "core/errors.hpp"

namespace hig {

namespace {

const WeightedPoly& tu_poly() {
  static const WeightedPoly tu = WeightedPoly::t() * WeightedPoly::u();
  return tu;
}

}  // namespace

DualPresentation to_v_form(const WPresentation& w) {
  const RingContextPtr& ctx = w.p1.context();
  return {ValElement(ctx, w.p1.poly() + tu_poly() * w.p2), TildeValElement(ctx, w.p2)};
}

WPresentation to_w_form(const DualPresentation& v) {
  const RingContextPtr& ctx = v.p1.context();
  return {ValElement(ctx, v.p1.poly() - tu_poly() * v.p2.poly()), v.p2.poly()};
}

ScalarVector tilde_coordinates(const TildeValElement& p) {
  const RingContext& ctx = *p.context();
  ScalarVector out;
  for (int k = 0; k <= ctx.top_degree(Quotient::Tilde); ++k) {
    const ScalarVector c = p.coordinates(k);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

LambdaContext::LambdaContext(CurvSpacePtr space, Rational lambda)
    : space_(std::move(space)), lambda_(std::move(lambda)) {
  lambda_.canonicalize();
}

LambdaContext LambdaContext::create(int n, const Rational& lambda) {
  return LambdaContext(CurvSpace::create(n), lambda);
}

WeightedPoly LambdaContext::one_minus_lambda_s(const Rational& alpha) const {
  return one_minus_lambda_s_power(lambda_, alpha, 2 * n());
}

DualPresentation LambdaContext::t_lambda_presentation() const {
  const WeightedPoly t = WeightedPoly::t();
  const WeightedPoly d = one_minus_lambda_s(Rational(-3, 2));
  const Scalar quarter_lambda(Rational(lambda_ / 4));
  return dual().presentation((t - quarter_lambda * pow(t, 3)) * d, quarter_lambda * d);
}

WPresentation LambdaContext::t_lambda_w_form() const {
  const Scalar quarter_lambda(Rational(lambda_ / 4));
  return {ValElement(rings(), WeightedPoly::t() * one_minus_lambda_s(Rational(-1, 2))),
          quarter_lambda * one_minus_lambda_s(Rational(-3, 2))};
}

DualElement LambdaContext::t_lambda_bar() const {
  return dual().from_presentation(t_lambda_presentation());
}

WPresentation LambdaContext::evaluate_valuation_w(const WeightedPoly& p) const {
  if (p.has_v()) throw DomainError("valuation polynomial must not contain v");
  const int top = 2 * n();
  const WeightedPoly a_part = substitute_rescaled(p, lambda_, -1, top);
  const WeightedPoly dt_part = substitute_rescaled(differentiate(p, Variable::T), lambda_, -1, top);
  const WeightedPoly b = Scalar(Rational(lambda_ / 4)) * one_minus_lambda_s(Rational(-3, 2));
  return {ValElement(rings(), a_part),
          WeightedPoly::multiply_truncated(dt_part, b, 2 * n())};
}

DualElement LambdaContext::evaluate_valuation(const WeightedPoly& p) const {
  return dual().from_presentation(to_v_form(evaluate_valuation_w(p)));
}

ImageCheck LambdaContext::image_membership(const WPresentation& w) const {
  const WeightedPoly lhs =
      Scalar(Rational(lambda_ / 4)) * differentiate(w.p1.poly(), Variable::T) -
      (WeightedPoly(1) - Scalar(lambda_) * WeightedPoly::s()) * w.p2;
  ImageCheck out{false, TildeValElement(rings(), lhs), std::nullopt};
  if (!out.defect.is_zero()) return out;

  // q -> v-form p1 of q(tbar_lambda, sbar) is the identity plus a part that
  // raises the weight, so the fixpoint iteration ends after at most 2n + 1
  // steps.
  const ValElement target = to_v_form(w).p1;
  WeightedPoly q = target.poly();
  for (int step = 0; step <= 2 * n() + 1; ++step) {
    const ValElement miss = target - to_v_form(evaluate_valuation_w(q)).p1;
    if (miss.is_zero()) {
      const DualPresentation want = to_v_form(w);
      if (!(dual().from_presentation(to_v_form(evaluate_valuation_w(q))) ==
            dual().from_presentation(want))) {
        throw InconsistencyError("preimage does not reproduce the element");
      }
      out.member = true;
      out.preimage = q;
      return out;
    }
    q += miss.poly();
  }
  throw InconsistencyError("preimage iteration did not terminate");
}

TildeValElement LambdaContext::q_operator(const TildeValElement& p) const {
  const WeightedPoly dt = differentiate(WeightedPoly::t() * WeightedPoly::u() * p.poly(),
                                        Variable::T);
  return {rings(), p.poly() + Scalar(Rational(lambda_ / 4)) * one_minus_lambda_s(Rational(-1)) * dt};
}

Matrix LambdaContext::q_operator_matrix() const {
  const auto basis = rings()->all_normal_monomials(Quotient::Tilde);
  std::vector<ScalarVector> columns;
  for (const Monomial& m : basis) {
    columns.push_back(tilde_coordinates(q_operator(TildeValElement(rings(), WeightedPoly::monomial(m)))));
  }
  return Matrix::from_columns(columns, basis.size());
}

DualElement t_lambda_derivative_at_zero(const CurvSpacePtr& space) {
  // Each coordinate of tbar_lambda is a polynomial in lambda of degree at
  // most n + 1; differentiate its interpolant through lambda = 0..n+1.
  const int nodes = space->n() + 2;
  DualElement out = space->dual().zero();
  for (int i = 0; i < nodes; ++i) {
    // L_i'(0) = sum_{m != i} prod_{j != i, m} (0 - j) / prod_{j != i} (i - j)
    Rational denom(1);
    for (int j = 0; j < nodes; ++j) {
      if (j != i) denom *= Rational(i - j);
    }
    Rational weight(0);
    for (int m = 0; m < nodes; ++m) {
      if (m == i) continue;
      Rational prod(1);
      for (int j = 0; j < nodes; ++j) {
        if (j != i && j != m) prod *= Rational(-j);
      }
      weight += prod;
    }
    weight /= denom;
    if (sgn(weight) == 0) continue;
    out += Scalar(weight) * LambdaContext(space, Rational(i)).t_lambda_bar();
  }
  return out;
}

WeightedPoly d1_operator(const WeightedPoly& p) {
  const WeightedPoly t = WeightedPoly::t();
  const WeightedPoly s = WeightedPoly::s();
  return Scalar(Rational(1, 2)) * (t * t - Scalar(2) * s) * p -
         Scalar(Rational(1, 4)) * tu_poly() * differentiate(p, Variable::T);
}

WeightedPoly d2_operator(const WeightedPoly& p) {
  const WeightedPoly u = WeightedPoly::u();
  return Scalar::pi_power(1, Rational(-3, 8)) * tu_poly() * p +
         Scalar::pi_power(1, Rational(1, 8)) * u * u * differentiate(p, Variable::T);
}

ValElement h0_prime(const CurvSpace& space, const CurvElement& phi) {
  if (space.n() < 2) throw DomainError("h0_prime requires n >= 2");
  const CurvDecomposition dec = space.decompose(phi);
  return {space.rings(), d1_operator(dec.p.poly()) + d2_operator(dec.q.poly())};
}

}  // namespace hig
