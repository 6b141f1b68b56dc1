#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "core/errors.hpp"
#include "support/oracles.hpp"

namespace hig {
namespace {

using testing::Sampler;

const WeightedPoly T = WeightedPoly::t();
const WeightedPoly S = WeightedPoly::s();
const WeightedPoly U = WeightedPoly::u();

Scalar pi(int e, long num = 1, long den = 1) { return Scalar::pi_power(e, make_rational(num, den)); }
Label D(int k, int q) { return Label::delta(k, q); }
Label N(int k, int q) { return Label::nu(k, q); }

// Brute-force legality straight from the index inequalities.
std::vector<Label> labels_by_search(int n) {
  std::vector<Label> out;
  for (int k = 0; k <= 2 * n + 2; ++k) {
    for (int q = -1; q <= k + 1; ++q) {
      if (k <= 2 * n && q >= 0 && q >= k - n && 2 * q <= k) out.push_back(D(k, q));
      if (k >= 1 && k <= 2 * n - 3 && q >= 0 && q >= k - n + 1 && 2 * q < k) out.push_back(N(k, q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(CurvBasis, Examples) {
  EXPECT_EQ(enumerate_basis(1), (std::vector<Label>{D(0, 0), D(1, 0), D(2, 1)}));
  const auto b2 = enumerate_basis(2);
  EXPECT_EQ(b2.size(), 7u);
  EXPECT_EQ(std::count_if(b2.begin(), b2.end(), [](const Label& l) { return l.kind == BasisKind::N; }), 1);
  const auto b3 = enumerate_basis(3);
  EXPECT_EQ(b3.size(), 13u);
  std::vector<Label> ns;
  for (const Label& l : b3) {
    if (l.kind == BasisKind::N) ns.push_back(l);
  }
  EXPECT_EQ(ns, (std::vector<Label>{N(1, 0), N(2, 0), N(3, 1)}));
}

TEST(CurvBasis, MatchesIndexSearch) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_basis(n), labels_by_search(n)) << n;
}

TEST(CurvBasis, IllegalLabels) {
  const auto basis = CurvBasis::create(3);
  EXPECT_THROW(basis->index(D(9, 0)), RangeError);
  EXPECT_THROW(basis->index(N(4, 2)), RangeError);
  EXPECT_FALSE(basis->find(N(0, 0)).has_value());
  CurvElement x(basis);
  x.add_if_legal(D(2, 5), Scalar(1));
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(label_name(N(3, 1)), "N(3,1)");
  EXPECT_EQ(label_name(D(2, 1), true), "DeltaStar(2,1)");
}

TEST(CurvSpace, DimensionSplit) {
  for (int n = 1; n <= 6; ++n) {
    const auto cs = CurvSpace::create(n);
    EXPECT_EQ(cs->basis()->size(), cs->rings()->total_dimension(Quotient::Val) +
                                       cs->rings()->total_dimension(Quotient::Tilde));
  }
  EXPECT_EQ(CurvSpace::create(2)->basis()->size(), 7u);
  EXPECT_EQ(CurvSpace::create(3)->basis()->size(), 13u);
}

TEST(ModuleMulFlat, Examples) {
  const auto b = CurvBasis::create(4);
  EXPECT_EQ(module_mul_flat_t(CurvElement::of(b, D(0, 0))), CurvElement::of(b, D(1, 0), pi(-1, 2)));
  const CurvElement s21 = CurvElement::of(b, D(4, 1), pi(-1, 1, 4)) +
                          CurvElement::of(b, D(4, 2), pi(-1, 2)) +
                          CurvElement::of(b, N(4, 1), pi(-1, -1, 12));
  EXPECT_EQ(module_mul_flat_s(CurvElement::of(b, D(2, 1))), s21);
  const auto b3 = CurvBasis::create(3);
  EXPECT_EQ(module_mul_flat_t(CurvElement::of(b3, N(1, 0))), CurvElement::of(b3, N(2, 0), Scalar(3, 4)));
}

TEST(ModuleMul, Examples) {
  const auto cs2 = CurvSpace::create(2);
  const auto r2 = cs2->rings();
  Sampler rng(5);
  const CurvElement x = rng.element<CurvTag>(cs2->basis(), 5);
  EXPECT_EQ(cs2->module_mul(ValElement::one(r2), x), x);
  EXPECT_TRUE(cs2->module_mul(ValElement(r2, S), cs2->element(D(2, 0))).is_zero());
  EXPECT_EQ(cs2->module_mul(ValElement(r2, T), cs2->element(D(0, 0))), cs2->element(D(1, 0), pi(-1, 2)));
}

// The module action is the transpose of the dual tables, so it matches the
// printed formulas wherever they stay in range.
TEST(ModuleMul, TransposeOfDualTables) {
  for (int n = 1; n <= 6; ++n) {
    const auto cs = CurvSpace::create(n);
    const Matrix mt = cs->dual().generator_matrix(Generator::TBar).transposed();
    const Matrix ms = cs->dual().generator_matrix(Generator::SBar).transposed();
    for (std::size_t j = 0; j < cs->basis()->size(); ++j) {
      const CurvElement e = cs->element((*cs->basis())[j]);
      const CurvElement ft = module_mul_flat_t(e), fs = module_mul_flat_s(e);
      for (std::size_t i = 0; i < cs->basis()->size(); ++i) {
        EXPECT_EQ(ft[i], mt(i, j)) << n;
        EXPECT_EQ(fs[i], ms(i, j)) << n;
      }
    }
  }
}

TEST(ModuleMul, AgreesAcrossRepresentations) {
  Sampler rng(11);
  for (int n = 1; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    for (int i = 0; i < 20; ++i) {
      const ValElement p(cs->rings(), rng.poly(2 * n, 3, true));
      const CurvElement x = rng.element<CurvTag>(cs->basis());
      EXPECT_EQ(cs->module_mul(p, x), module_mul_flat(p, x));
      EXPECT_EQ(cs->module_mul(cs->dual().evaluate(p.poly()), x), cs->module_mul(p, x));
    }
  }
}

TEST(ModuleMulProperty, Associative) {
  Sampler rng(12);
  for (int n = 2; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    for (int i = 0; i < 20; ++i) {
      const ValElement p(cs->rings(), rng.poly(2 * n, 3, true));
      const ValElement q(cs->rings(), rng.poly(2 * n, 3));
      const CurvElement x = rng.element<CurvTag>(cs->basis());
      EXPECT_EQ(cs->module_mul(p * q, x), cs->module_mul(p, cs->module_mul(q, x)));
      EXPECT_EQ(cs->module_mul(p + q, x), cs->module_mul(p, x) + cs->module_mul(q, x));
    }
  }
}

TEST(EllAndEnMaps, SpecialValues) {
  for (int n = 3; n <= 6; ++n) {
    const auto cs = CurvSpace::create(n);
    const auto r = cs->rings();
    EXPECT_EQ(cs->ell_map(ValElement::one(r)), cs->element(D(0, 0)));

    Rational two_pow(1);
    for (int i = 0; i < 2 * n - 3; ++i) two_pow *= 2;
    const Scalar ell_scale = Scalar::pi_power(-(n - 1), two_pow * factorial(static_cast<unsigned>(n - 2)));
    EXPECT_EQ(cs->ell_map(ValElement(r, pow(T, 2 * n - 3))),
              ell_scale * (cs->element(D(2 * n - 3, n - 3)) + cs->element(D(2 * n - 3, n - 2))))
        << n;

    const CurvElement ell_t_u =
        ell_scale * Scalar(1, 2 * n - 3) *
        (Scalar(make_rational(n - 3, n - 2)) * cs->element(D(2 * n - 3, n - 3)) +
         cs->element(D(2 * n - 3, n - 2)) - Scalar(2, 2 * n - 1) * cs->element(N(2 * n - 3, n - 2)));
    EXPECT_EQ(cs->ell_map(ValElement(r, pow(T, 2 * n - 5) * U)), ell_t_u) << n;

    const Scalar c13 = Scalar(3, 4) * Scalar(factorial(static_cast<unsigned>(2 * n - 4))) *
                       ball_volume(2 * n - 1) / Scalar::pi_power(2 * n - 3);
    EXPECT_EQ(cs->en_map(TildeValElement(r, pow(T, 2 * n - 4))),
              cs->element(N(2 * n - 3, n - 2), c13))
        << n;
  }
  EXPECT_EQ(CurvSpace::create(3)->en_map(TildeValElement(RingContext::create(3), T * T)),
            CurvSpace::create(3)->element(N(3, 1), pi(-1, 4, 5)));
  EXPECT_THROW(CurvSpace::create(1)->en_map(TildeValElement::one(RingContext::create(1))),
               DomainError);
}

TEST(Decompose, Examples) {
  for (int n = 3; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    const auto r = cs->rings();
    const auto d0 = cs->decompose(cs->element(D(0, 0)));
    EXPECT_EQ(d0.p, ValElement::one(r));
    EXPECT_TRUE(d0.q.is_zero());
    const auto d1 = cs->decompose(cs->element(N(1, 0)));
    EXPECT_TRUE(d1.p.is_zero());
    EXPECT_EQ(d1.q, TildeValElement::one(r));
    const auto d2 = cs->decompose(cs->element(D(2, 1), pi(-1, 6)));
    EXPECT_EQ(d2.p, ValElement(r, Scalar(3) * U));
    EXPECT_EQ(d2.q, TildeValElement(r, pi(-1, 4) * T));
    EXPECT_EQ(cs->globalize(cs->element(D(2, 1), pi(-1, 6))), ValElement(r, Scalar(3) * U));
  }
}

TEST(Globalize, KillsNAndInvertsEll) {
  Sampler rng(13);
  for (int n = 2; n <= 5; ++n) {
    const auto cs = CurvSpace::create(n);
    for (const Label& l : cs->basis()->labels()) {
      if (l.kind != BasisKind::N) continue;
      EXPECT_TRUE(cs->globalize(cs->element(l)).is_zero());
    }
    for (int i = 0; i < 20; ++i) {
      const ValElement p(cs->rings(), rng.poly(2 * n, 4, true));
      const TildeValElement q(cs->rings(), rng.poly(2 * n, 4, true));
      EXPECT_EQ(cs->globalize(cs->ell_map(p)), p);
      const auto d = cs->decompose(cs->ell_map(p) + cs->en_map(q));
      EXPECT_EQ(d.p, p);
      EXPECT_EQ(d.q, q);
    }
  }
}

}  // namespace
}  // namespace hig
