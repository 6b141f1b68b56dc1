#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "core/errors.hpp"
#include "support/checks.hpp"

namespace hig {
namespace {

using namespace hig::testing;

Label D(int k, int q) { return Label::delta(k, q); }

WeightedPoly quartic_example() {
  return pow(T(), 4) - rational_poly(6) * S() * T() * T() + rational_poly(6) * S() * S();
}

TEST(AngularDual, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const auto a = DualAlgebra::create(n);
    for (AngularityMode mode : {AngularityMode::Full, AngularityMode::Fast}) {
      EXPECT_TRUE(is_angular_dual(*a, a->unit(), mode).angular);
      EXPECT_TRUE(is_angular_dual(*a, a->generator(Generator::TBar), mode).angular);
    }
  }
  const auto a3 = DualAlgebra::create(3);
  const AngularityReport v = is_angular_dual(*a3, a3->generator(Generator::VBar));
  EXPECT_FALSE(v.angular);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->n_star.kind, BasisKind::N);
  EXPECT_EQ(v.witness->delta_star.kind, BasisKind::Delta);
  EXPECT_FALSE(v.witness->coefficient.is_zero());
  EXPECT_EQ(v.residue.poly(), rational_poly(-3, 5) * pow(T(), 6));
  EXPECT_THROW(is_angular_dual(*DualAlgebra::create(1), DualAlgebra::create(1)->unit()), DomainError);
}

TEST(AngularDual, WitnessIsAnOffendingComponent) {
  for (int n = 2; n <= 4; ++n) {
    const auto a = DualAlgebra::create(n);
    for (const Label& l : a->basis()->labels()) {
      const AngularityReport r = is_angular_dual(*a, a->element(l));
      EXPECT_EQ(r.angular, !r.witness.has_value());
      EXPECT_EQ(r.angular, r.residue.is_zero());
      if (!r.witness) continue;
      const DualElement product = a->multiply(a->element(l), a->element(r.witness->n_star));
      EXPECT_EQ(product.coeff(r.witness->delta_star), r.witness->coefficient);
    }
  }
}

TEST(AngularPresentation, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const auto a = DualAlgebra::create(n);
    const auto r = a->rings();
    for (int k = 0; k <= 2 * n; ++k) {
      const AngularityReport rep = is_angular_presentation(
          *a, ValElement(r, pow(T(), static_cast<unsigned>(k))), TildeValElement::zero(r), PresentationForm::V);
      EXPECT_TRUE(rep.angular);
      EXPECT_TRUE(rep.residue.is_zero());
    }
  }
  const auto a2 = DualAlgebra::create(2);
  EXPECT_TRUE(is_angular_presentation(*a2, ValElement::zero(a2->rings()), TildeValElement::one(a2->rings()),
                                      PresentationForm::V).angular);
  const auto a3 = DualAlgebra::create(3);
  EXPECT_FALSE(is_angular_presentation(*a3, ValElement::zero(a3->rings()), TildeValElement::one(a3->rings()),
                                       PresentationForm::V).angular);
}

TEST(AngularPresentation, VAndWFormsAgree) {
  Sampler rng(51);
  for (int n = 2; n <= 5; ++n) {
    const auto a = DualAlgebra::create(n);
    const auto r = a->rings();
    for (int i = 0; i < 30; ++i) {
      const ValElement p1(r, rng.poly(2 * n, 3));
      const TildeValElement p2(r, rng.poly(2 * n, 2));
      const WPresentation w = to_w_form({p1, p2});
      EXPECT_EQ(is_angular_presentation(*a, p1, p2, PresentationForm::V).angular,
                is_angular_presentation(*a, w.p1, p2, PresentationForm::W).angular);
      EXPECT_EQ(angularity_residue_v(p1, p2), angularity_residue_w(w.p1, p2));
    }
  }
}

TEST(AngularValuation, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    for (const Rational& lambda : sample_lambdas()) {
      const LambdaContext ctx(cs, lambda);
      for (int k = 0; k <= 2 * n; ++k) {
        EXPECT_TRUE(is_angular_valuation(pow(T(), static_cast<unsigned>(k)), ctx).angular);
      }
      EXPECT_TRUE(is_angular_dual(ctx.dual(), ctx.t_lambda_bar()).angular);
    }
  }
  const LambdaContext ctx4 = LambdaContext::create(4, Rational(0));
  EXPECT_TRUE(is_angular_valuation(quartic_example(), ctx4).angular);

  const LambdaContext ctx3 = LambdaContext::create(3, Rational(0));
  const AngularityReport s = is_angular_valuation(S(), ctx3);
  EXPECT_FALSE(s.angular);
  EXPECT_EQ(s.residue.poly(), rational_poly(1, 10) * pow(T(), 5));
}

TEST(AngularValuation, QuarticExampleNotProportionalToT4) {
  const auto r = RingContext::create(4);
  const ValElement p(r, quartic_example());
  const ValElement t4(r, pow(T(), 4));
  const ScalarVector a = p.coordinates(4), b = t4.coordinates(4);
  ASSERT_EQ(a.size(), 3u);
  Matrix m(2, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  EXPECT_EQ(rank(m), 2u);
}

TEST(AngularValuation, ThreeWayAgreement) {
  for (int n = 2; n <= 3; ++n) {
    const auto cs = CurvSpace::create(n);
    for (const Rational& lambda : sample_lambdas()) {
      const AngularityTally tally = angularity_agreement(LambdaContext(cs, lambda), 1000 + n, 20);
      EXPECT_EQ(tally.disagreements, 0u) << n << " " << lambda.get_str();
      // At n = 2 the annihilator is spanned by N*_10 alone and every element is angular.
      if (n == 2) {
        EXPECT_EQ(tally.angular, tally.checked);
      } else {
        EXPECT_GT(tally.angular, 0u);
        EXPECT_LT(tally.angular, tally.checked);
      }
    }
  }
}

TEST(AngularMeasure, FromPotential) {
  for (int n = 3; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    const auto r = cs->rings();
    EXPECT_EQ(angular_measure_from_potential(*cs, rational_poly(1)), cs->element(D(0, 0)));
    for (int k = 0; k <= 2 * n; ++k) {
      const WeightedPoly g = pow(T(), static_cast<unsigned>(k));
      EXPECT_EQ(angular_measure_from_potential(*cs, g), cs->ell_map(ValElement(r, g)));
    }
    EXPECT_EQ(angular_measure_from_potential(*cs, U()),
              cs->element(D(2, 1), Scalar::pi_power(-1, Rational(6))));
  }
  Sampler rng(52);
  for (int n = 2; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    for (int i = 0; i < 20; ++i) {
      const CurvElement x = angular_measure_from_potential(*cs, rng.poly(2 * n, 4));
      for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
        if ((*cs->basis())[j].kind != BasisKind::N) continue;
        EXPECT_TRUE(x[j].is_zero());
      }
    }
  }
}

TEST(AngularBasis, Examples) {
  for (int n = 2; n <= 5; ++n) {
    for (const Rational& lambda : sample_lambdas()) {
      const LambdaContext ctx = LambdaContext::create(n, lambda);
      const auto b0 = angular_valuation_basis(ctx, 0);
      ASSERT_EQ(b0.size(), 1u);
      EXPECT_EQ(ValElement(ctx.rings(), b0[0]).poly().terms().size(), 1u);
      EXPECT_EQ(b0[0].max_weight(), 0);
      const auto b1 = angular_valuation_basis(ctx, 1);
      ASSERT_EQ(b1.size(), 1u);
      EXPECT_EQ(b1[0].terms().size(), 1u);
      EXPECT_EQ(b1[0].terms().begin()->first, (Monomial{1, 0, 0}));
      for (int k = 0; k <= 2 * n; ++k) {
        for (const WeightedPoly& p : angular_valuation_basis(ctx, k)) {
          EXPECT_TRUE(is_angular_valuation(p, ctx).angular);
        }
      }
    }
  }
}

TEST(AngularBasis, ContainsQuarticExample) {
  const LambdaContext ctx = LambdaContext::create(4, Rational(0));
  const auto basis = angular_valuation_basis(ctx, 4);
  std::vector<ScalarVector> cols;
  for (const WeightedPoly& p : basis) cols.push_back(ValElement(ctx.rings(), p).coordinates(4));
  const std::size_t rows = ctx.rings()->dimension(Quotient::Val, 4);
  const std::size_t r0 = rank(Matrix::from_columns(cols, rows));
  cols.push_back(ValElement(ctx.rings(), quartic_example()).coordinates(4));
  EXPECT_EQ(rank(Matrix::from_columns(cols, rows)), r0);
}

}  // namespace
}  // namespace hig
