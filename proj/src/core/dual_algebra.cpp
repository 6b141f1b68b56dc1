#include "core/dual_algebra.hpp"

#include "core/errors.hpp"

namespace hig {

namespace {

Scalar pi_inv(const Rational& c, int power = 1) { return Scalar::pi_power(-power, c); }

Rational frac(long num, long den) { return make_rational(num, den); }

Rational choose2(int q) { return make_rational(static_cast<long>(q) * (q - 1), 2); }

Rational choose3(int q) { return make_rational(static_cast<long>(q) * (q - 1) * (q - 2), 6); }

}  // namespace

Scalar vbar_coefficient_a(int n) {
  return Scalar(16L * n * (n - 1) * (n - 2)) * ball_volume(2 * n) /
         (ball_volume(2 * n - 1) * Scalar(2L * n - 1)) * pi_inv(1, 2);
}

Scalar vbar_coefficient_b(int n) {
  return Scalar(8L * n * (n - 1)) * ball_volume(2 * n) / ball_volume(2 * n - 1) * pi_inv(1, 2);
}

DualPresentation operator*(const DualPresentation& a, const DualPresentation& b) {
  const RingContextPtr& ctx = a.p1.context();
  const WeightedPoly tu = WeightedPoly::t() * WeightedPoly::u();
  const WeightedPoly cross = a.p2.poly() * b.p2.poly();
  return {
      ValElement(ctx, a.p1.poly() * b.p1.poly() - tu * tu * cross),
      TildeValElement(ctx, a.p1.poly() * b.p2.poly() + a.p2.poly() * b.p1.poly() -
                               Scalar(2) * tu * cross),
  };
}

std::shared_ptr<const DualAlgebra> DualAlgebra::create(int n) {
  return create(RingContext::create(n));
}

std::shared_ptr<const DualAlgebra> DualAlgebra::create(RingContextPtr rings) {
  return std::shared_ptr<const DualAlgebra>(new DualAlgebra(std::move(rings)));
}

DualAlgebra::DualAlgebra(RingContextPtr rings)
    : rings_(std::move(rings)), basis_(CurvBasis::create(rings_->n())), vbar_(basis_) {
  const int n = rings_->n();
  vbar_ = generator(Generator::VBar);

  const DualElement one = unit();
  for (const Monomial& m : rings_->all_normal_monomials(Quotient::Val)) {
    val_images_.emplace(m, apply_polynomial(WeightedPoly::monomial(m), one));
  }
  for (const Monomial& m : rings_->all_normal_monomials(Quotient::Tilde)) {
    tilde_images_.emplace(m, apply_polynomial(WeightedPoly::monomial(m), vbar_));
  }

  for (int d = 0; d <= 2 * n; ++d) {
    const auto rows = basis_->indices_of_degree(2 * n - d);
    std::vector<ScalarVector> columns;
    auto restrict = [&rows](const DualElement& x) {
      ScalarVector col;
      for (std::size_t i : rows) col.push_back(x[i]);
      return col;
    };
    for (const Monomial& m : rings_->normal_basis(Quotient::Val, d)) {
      columns.push_back(restrict(val_images_.at(m)));
    }
    for (const Monomial& m : rings_->normal_basis(Quotient::Tilde, d - 3)) {
      columns.push_back(restrict(tilde_images_.at(m)));
    }
    if (columns.size() != rows.size()) {
      throw InconsistencyError("presentation does not match the dual basis in codegree " +
                               std::to_string(d));
    }
    auto inv = inverse(Matrix::from_columns(columns, rows.size()));
    if (!inv) {
      throw InconsistencyError("presentation map is singular in codegree " + std::to_string(d));
    }
    presentation_inverse_.push_back(std::move(*inv));
  }
  for (const Label& label : basis_->labels()) {
    basis_presentations_.push_back(to_presentation(element(label)));
  }
}

DualElement DualAlgebra::unit() const {
  return element(Label::delta(2 * n(), n()));
}

DualElement DualAlgebra::element(const Label& label, const Scalar& c) const {
  return DualElement::of(basis_, label, c);
}

DualElement DualAlgebra::generator(Generator g) const {
  const int n = this->n();
  DualElement out = zero();
  switch (g) {
    case Generator::TBar:
      out.add(Label::delta(2 * n - 1, n - 1),
              Scalar(2L * n) * ball_volume(2 * n) / ball_volume(2 * n - 1) * pi_inv(1));
      break;
    case Generator::SBar:
      out.add(Label::delta(2 * n - 2, n - 1), pi_inv(n));
      break;
    case Generator::VBar: {
      const Scalar a = vbar_coefficient_a(n);
      out.add_if_legal(Label::delta(2 * n - 3, n - 3), a);
      out.add_if_legal(Label::delta(2 * n - 3, n - 2), -a);
      out.add_if_legal(Label::nu(2 * n - 3, n - 2), -vbar_coefficient_b(n));
      break;
    }
  }
  return out;
}

// One basis vector (label, coefficient c) multiplied by a generator.
void DualAlgebra::add_generator_image(Generator g, const Label& label, const Scalar& c,
                                      DualElement& out) const {
  const int k = label.k;
  const int q = label.q;
  const bool delta = label.kind == BasisKind::Delta;
  auto emit = [&](BasisKind kind, int kk, int qq, const Scalar& coeff) {
    if (!coeff.is_zero()) out.add_if_legal({kind, kk, qq}, c * coeff);
  };
  constexpr BasisKind D = BasisKind::Delta;
  constexpr BasisKind N = BasisKind::N;

  switch (g) {
    case Generator::TBar: {
      if (k < 1) return;
      const Scalar f = ball_volume(k) / ball_volume(k - 1) * pi_inv(1);
      if (delta) {
        emit(D, k - 1, q, f * Scalar(k - 2 * q));
        emit(D, k - 1, q - 1, f * Scalar(2 * q));
      } else {
        const Scalar h = f * Scalar(frac(k + 1, k + 2));
        emit(N, k - 1, q, h * Scalar(k - 2 * q));
        emit(N, k - 1, q - 1, h * Scalar(frac(2L * q * (k - 2 * q), k - 2 * q + 1)));
      }
      return;
    }
    case Generator::SBar: {
      if (k < 2) return;
      const long a = k - 2 * q;
      if (delta) {
        emit(D, k - 2, q, pi_inv(frac(a * (a - 1), 2L * k)));
        emit(D, k - 2, q - 1, pi_inv(frac(2L * q * (k - q), k)));
      } else {
        const long kk2 = static_cast<long>(k) * (k + 2);
        emit(D, k - 2, q, pi_inv(frac(-a * (a - 1), kk2)));
        emit(D, k - 2, q - 1, pi_inv(frac(-2L * q * a, kk2)));
        emit(N, k - 2, q, pi_inv(frac(a * (a - 1), 2L * (k + 2))));
        emit(N, k - 2, q - 1, pi_inv(frac(2L * q * (k - q + 1), k + 2)));
      }
      return;
    }
    case Generator::VBar: {
      if (k < 3) return;
      const long a = k - 2 * q;
      const Scalar ratio = ball_volume(k) / ball_volume(k - 1) * pi_inv(1, 2);
      if (delta) {
        const Scalar f = ratio * Scalar(frac(16, k - 1));
        emit(D, k - 3, q - 3, f * Scalar(6 * choose3(q)));
        emit(D, k - 3, q - 2, f * Scalar(choose2(q) * (k - 4 * q + 4)));
        emit(D, k - 3, q - 1, f * Scalar(-choose2(q) * a));
        emit(N, k - 3, q - 2, f * Scalar(-frac(k - 1, a + 1) * choose2(q)));
      } else {
        const Scalar f = ratio * Scalar(frac(a, k + 2));
        emit(D, k - 3, q, f * Scalar(frac(6 * (a - 1) * (a - 2), k - 1)));
        emit(D, k - 3, q - 1, f * Scalar(frac(12 * (2 * a - 1) * q, k - 1)));
        emit(D, k - 3, q - 2, f * Scalar(frac(24L * q * (q - 1), k - 1)));
        emit(N, k - 3, q - 3, f * Scalar(32 * frac(q - 2, a + 3) * choose2(q)));
        emit(N, k - 3, q - 2, f * Scalar(16 * frac(k - 4 * q - 3, a + 1) * choose2(q)));
        // C(q,2)(q+2)/(q-1) written as q(q+2)/2
        emit(N, k - 3, q - 1, f * Scalar(-8L * q * (q + 2)));
      }
      return;
    }
  }
}

DualElement DualAlgebra::mul_generator(Generator g, const DualElement& x) const {
  if (x.n() != n()) throw DomainError("dual element from a different n");
  DualElement out = zero();
  for (std::size_t i = 0; i < basis_->size(); ++i) {
    if (!x[i].is_zero()) add_generator_image(g, (*basis_)[i], x[i], out);
  }
  return out;
}

DualElement DualAlgebra::apply_polynomial(const WeightedPoly& p, const DualElement& x) const {
  DualElement out = zero();
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() > 2 * n()) continue;
    DualElement y = x;
    for (int i = 0; i < m.s && !y.is_zero(); ++i) y = mul_generator(Generator::SBar, y);
    for (int i = 0; i < m.t && !y.is_zero(); ++i) y = mul_generator(Generator::TBar, y);
    for (int i = 0; i < m.v && !y.is_zero(); ++i) y = mul_generator(Generator::VBar, y);
    if (!y.is_zero()) out += c * y;
  }
  return out;
}

Matrix DualAlgebra::generator_matrix(Generator g) const {
  const std::size_t dim = basis_->size();
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    DualElement image = zero();
    add_generator_image(g, (*basis_)[j], Scalar(1), image);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = image[i];
  }
  return m;
}

DualPresentation DualAlgebra::to_presentation(const DualElement& x) const {
  if (x.n() != n()) throw DomainError("dual element from a different n");
  WeightedPoly p1;
  WeightedPoly p2;
  for (int d = 0; d <= 2 * n(); ++d) {
    const auto rows = basis_->indices_of_degree(2 * n() - d);
    ScalarVector rhs;
    for (std::size_t i : rows) rhs.push_back(x[i]);
    if (is_zero(rhs)) continue;
    const ScalarVector sol = presentation_inverse_[static_cast<std::size_t>(d)].apply(rhs);
    const std::size_t split = rings_->dimension(Quotient::Val, d);
    const std::span<const Scalar> all(sol);
    p1 += rings_->from_coordinates(Quotient::Val, d, all.first(split));
    if (d >= 3) p2 += rings_->from_coordinates(Quotient::Tilde, d - 3, all.subspan(split));
  }
  return {ValElement(rings_, p1), TildeValElement(rings_, p2)};
}

DualElement DualAlgebra::from_presentation(const DualPresentation& p) const {
  if (p.p1.context()->n() != n() || p.p2.context()->n() != n()) {
    throw DomainError("presentation from a different n");
  }
  DualElement out = zero();
  for (const auto& [m, c] : p.p1.poly().terms()) out += c * val_images_.at(m);
  for (const auto& [m, c] : p.p2.poly().terms()) out += c * tilde_images_.at(m);
  return out;
}

DualPresentation DualAlgebra::presentation(const WeightedPoly& p1, const WeightedPoly& p2) const {
  return {ValElement(rings_, p1), TildeValElement(rings_, p2)};
}

DualElement DualAlgebra::multiply(const DualElement& x, const DualElement& y) const {
  return from_presentation(to_presentation(x) * to_presentation(y));
}

DualElement DualAlgebra::table_multiply(const DualElement& x, const DualElement& y) const {
  const DualPresentation px = to_presentation(x);
  return apply_polynomial(px.p1.poly() + px.p2.poly() * WeightedPoly::v(), y);
}

LocalKinematic local_kinematic(const DualAlgebra& algebra) {
  const CurvBasisPtr& basis = algebra.basis();
  const std::size_t dim = basis->size();
  LocalKinematic out{basis, std::vector<Matrix>(dim, Matrix(dim, dim))};
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = k; l < dim; ++l) {
      const DualElement prod = algebra.from_presentation(algebra.basis_presentation(k) *
                                                         algebra.basis_presentation(l));
      for (std::size_t j = 0; j < dim; ++j) {
        if (prod[j].is_zero()) continue;
        out.by_target[j](k, l) = prod[j];
        out.by_target[j](l, k) = prod[j];
      }
    }
  }
  return out;
}

ScalarVector val_coordinates(const ValElement& p) {
  const RingContext& ctx = *p.context();
  ScalarVector out;
  for (int k = 0; k <= ctx.top_degree(Quotient::Val); ++k) {
    const ScalarVector c = p.coordinates(k);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

ValElement val_from_coordinates(const RingContextPtr& rings, std::span<const Scalar> coords) {
  WeightedPoly out;
  const auto basis = rings->all_normal_monomials(Quotient::Val);
  if (coords.size() != basis.size()) throw DomainError("coordinate vector has wrong length");
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
  return {rings, out};
}

Matrix GlobalKinematic::apply(const ValElement& p) const {
  const ScalarVector c = val_coordinates(p);
  Matrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!by_source[i](a, b).is_zero()) out(a, b) += c[i] * by_source[i](a, b);
      }
    }
  }
  return out;
}

GlobalKinematic global_kinematic(const RingContextPtr& rings) {
  GlobalKinematic out{rings, rings->all_normal_monomials(Quotient::Val), {}};
  const std::size_t dim = out.basis.size();
  std::vector<WeightedPoly> e;
  for (const Monomial& m : out.basis) e.push_back(WeightedPoly::monomial(m));

  Matrix gram(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) gram(a, b) = rings->pd_pair(e[a], e[b]);
  }
  const auto gram_inv = inverse(gram);
  if (!gram_inv) throw InconsistencyError("Poincare duality pairing is degenerate");

  // sum_{c,d} G_ac K_cd G_bd = ev(phi e_a e_b), G symmetric.
  for (std::size_t i = 0; i < dim; ++i) {
    Matrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        m(a, b) = rings->top_evaluation(
            rings->normal_form(Quotient::Val, e[i] * e[a] * e[b]));
      }
    }
    out.by_source.push_back(*gram_inv * m * *gram_inv);
  }
  return out;
}

}  // namespace hig
