#include "core/curv_space.hpp"

#include "core/errors.hpp"

namespace hig {

namespace {

constexpr BasisKind D = BasisKind::Delta;
constexpr BasisKind N = BasisKind::N;

Scalar over_pi(long num, long den) { return Scalar::pi_power(-1, make_rational(num, den)); }

}  // namespace

CurvElement module_mul_flat_t(const CurvElement& phi) {
  CurvElement out(phi.basis_ptr());
  for (std::size_t i = 0; i < phi.basis().size(); ++i) {
    if (phi[i].is_zero()) continue;
    const auto [kind, k, q] = phi.basis()[i];
    const Scalar f = phi[i] * ball_volume(k + 1) / ball_volume(k) * Scalar::pi_power(-1, 1);
    if (kind == D) {
      out.add_if_legal({D, k + 1, q}, f * Scalar(k - 2 * q + 1));
      out.add_if_legal({D, k + 1, q + 1}, f * Scalar(2 * q + 2));
    } else {
      const Scalar g = f * Scalar(make_rational(k + 2, k + 3));
      out.add_if_legal({N, k + 1, q}, g * Scalar(k - 2 * q + 1));
      out.add_if_legal({N, k + 1, q + 1},
                       g * Scalar(make_rational(2L * (q + 1) * (k - 2 * q - 1), k - 2 * q)));
    }
  }
  return out;
}

CurvElement module_mul_flat_s(const CurvElement& phi) {
  CurvElement out(phi.basis_ptr());
  for (std::size_t i = 0; i < phi.basis().size(); ++i) {
    if (phi[i].is_zero()) continue;
    const auto [kind, k, q] = phi.basis()[i];
    const Scalar& c = phi[i];
    const long a = k - 2 * q;
    if (kind == D) {
      const long kk = static_cast<long>(k + 2) * (k + 4);
      out.add_if_legal({D, k + 2, q}, c * over_pi((a + 2) * (a + 1), 2L * (k + 2)));
      out.add_if_legal({D, k + 2, q + 1}, c * over_pi(2L * (q + 1) * (k - q + 1), k + 2));
      out.add_if_legal({N, k + 2, q}, c * over_pi(-(a + 2) * (a + 1), kk));
      out.add_if_legal({N, k + 2, q + 1}, c * over_pi(-2L * (q + 1) * a, kk));
    } else {
      out.add_if_legal({N, k + 2, q}, c * over_pi((a + 2) * (a + 1), 2L * (k + 4)));
      out.add_if_legal({N, k + 2, q + 1}, c * over_pi(2L * (q + 1) * (k - q + 2), k + 4));
    }
  }
  return out;
}

CurvElement module_mul_flat(const ValElement& p, const CurvElement& phi) {
  if (p.context()->n() != phi.n()) throw DomainError("module_mul_flat across different n");
  CurvElement out(phi.basis_ptr());
  for (const auto& [m, c] : p.poly().terms()) {
    CurvElement y = phi;
    for (int i = 0; i < m.s && !y.is_zero(); ++i) y = module_mul_flat_s(y);
    for (int i = 0; i < m.t && !y.is_zero(); ++i) y = module_mul_flat_t(y);
    if (!y.is_zero()) out += c * y;
  }
  return out;
}

std::shared_ptr<const CurvSpace> CurvSpace::create(int n) {
  return create(DualAlgebra::create(n));
}

std::shared_ptr<const CurvSpace> CurvSpace::create(DualAlgebraPtr dual) {
  return std::shared_ptr<const CurvSpace>(new CurvSpace(std::move(dual)));
}

CurvSpace::CurvSpace(DualAlgebraPtr dual) : dual_(std::move(dual)) {
  const int n = this->n();
  const RingContextPtr& ctx = rings();
  const CurvElement delta00 = element(Label::delta(0, 0));
  for (const Monomial& m : ctx->all_normal_monomials(Quotient::Val)) {
    ell_images_.emplace(m, module_mul(ValElement(ctx, WeightedPoly::monomial(m)), delta00));
  }
  if (n >= 2) {
    const CurvElement n10 = element(Label::nu(1, 0));
    for (const Monomial& m : ctx->all_normal_monomials(Quotient::Tilde)) {
      // The tilde ideal annihilates N_{1,0}, so any representative will do.
      en_images_.emplace(m, module_mul(ValElement(ctx, WeightedPoly::monomial(m)), n10));
    }
  }

  for (int k = 0; k <= 2 * n; ++k) {
    const auto rows = basis()->indices_of_degree(k);
    std::vector<ScalarVector> columns;
    auto restrict = [&rows](const CurvElement& x) {
      ScalarVector col;
      for (std::size_t i : rows) col.push_back(x[i]);
      return col;
    };
    for (const Monomial& m : ctx->normal_basis(Quotient::Val, k)) {
      columns.push_back(restrict(ell_images_.at(m)));
    }
    if (n >= 2) {
      for (const Monomial& m : ctx->normal_basis(Quotient::Tilde, k - 1)) {
        columns.push_back(restrict(en_images_.at(m)));
      }
    }
    if (columns.size() != rows.size()) {
      throw InconsistencyError("l/n images do not match the Curv basis in degree " +
                               std::to_string(k));
    }
    auto inv = inverse(Matrix::from_columns(columns, rows.size()));
    if (!inv) throw InconsistencyError("l/n images are dependent in degree " + std::to_string(k));
    decomposition_inverse_.push_back(std::move(*inv));
  }
}

CurvElement CurvSpace::module_mul(const DualElement& phibar, const CurvElement& phi) const {
  if (phibar.n() != n() || phi.n() != n()) throw DomainError("module_mul across different n");
  CurvElement out = zero();
  const DualPresentation pres = dual_->to_presentation(phibar);
  for (std::size_t j = 0; j < basis()->size(); ++j) {
    out[j] = pairing(dual_->from_presentation(pres * dual_->basis_presentation(j)), phi);
  }
  return out;
}

CurvElement CurvSpace::module_mul(const ValElement& p, const CurvElement& phi) const {
  if (p.context()->n() != n() || phi.n() != n()) throw DomainError("module_mul across different n");
  CurvElement out = zero();
  for (std::size_t j = 0; j < basis()->size(); ++j) {
    out[j] = pairing(dual_->apply_polynomial(p.poly(), dual_->element((*basis())[j])), phi);
  }
  return out;
}

CurvElement CurvSpace::ell_map(const ValElement& p) const {
  CurvElement out = zero();
  for (const auto& [m, c] : p.poly().terms()) out += c * ell_images_.at(m);
  return out;
}

CurvElement CurvSpace::en_map(const TildeValElement& q) const {
  if (n() < 2) throw DomainError("no N generators for n = 1");
  CurvElement out = zero();
  for (const auto& [m, c] : q.poly().terms()) out += c * en_images_.at(m);
  return out;
}

CurvDecomposition CurvSpace::decompose(const CurvElement& phi) const {
  if (phi.n() != n()) throw DomainError("decompose across different n");
  const RingContextPtr& ctx = rings();
  WeightedPoly p;
  WeightedPoly q;
  for (int k = 0; k <= 2 * n(); ++k) {
    const auto rows = basis()->indices_of_degree(k);
    ScalarVector rhs;
    for (std::size_t i : rows) rhs.push_back(phi[i]);
    if (is_zero(rhs)) continue;
    const ScalarVector sol = decomposition_inverse_[static_cast<std::size_t>(k)].apply(rhs);
    const std::size_t split = ctx->dimension(Quotient::Val, k);
    const std::span<const Scalar> all(sol);
    p += ctx->from_coordinates(Quotient::Val, k, all.first(split));
    if (n() >= 2 && k >= 1) q += ctx->from_coordinates(Quotient::Tilde, k - 1, all.subspan(split));
  }
  return {ValElement(ctx, p), TildeValElement(ctx, q)};
}

}  // namespace hig
