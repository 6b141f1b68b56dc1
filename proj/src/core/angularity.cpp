#include "core/angularity.hpp"

#include "core/errors.hpp"

namespace hig {

namespace {

WeightedPoly tsu() { return WeightedPoly::t() * WeightedPoly::s() * WeightedPoly::u(); }

void require_n(int n) {
  if (n < 2) throw DomainError("Ang-perp is trivial for n = 1; every element is angular");
}

std::optional<AngularityWitness> find_witness(const DualAlgebra& algebra, const DualElement& l,
                                              const Label& n_star) {
  const DualElement prod = algebra.multiply(l, algebra.element(n_star));
  for (std::size_t i = 0; i < prod.coefficients().size(); ++i) {
    const Label& label = algebra.basis()->operator[](i);
    if (label.kind == BasisKind::Delta && !prod[i].is_zero()) {
      return AngularityWitness{n_star, label, prod[i]};
    }
  }
  return std::nullopt;
}

}  // namespace

ValElement angularity_residue_v(const ValElement& p1, const TildeValElement& p2) {
  const WeightedPoly t = WeightedPoly::t();
  const WeightedPoly& a = p1.poly();
  const WeightedPoly& b = p2.poly();
  const WeightedPoly inner = Scalar(-6) * t * b + differentiate(a, Variable::S) -
                             differentiate(b, Variable::S) * t * WeightedPoly::u();
  return {p1.context(), tsu() * inner};
}

ValElement angularity_residue_w(const ValElement& p1, const TildeValElement& p2) {
  const WeightedPoly inner =
      differentiate(p1.poly(), Variable::S) - Scalar(2) * WeightedPoly::t() * p2.poly();
  return {p1.context(), tsu() * inner};
}

ValElement angularity_residue_valuation(const WeightedPoly& p, const LambdaContext& ctx) {
  const WeightedPoly ds = substitute_rescaled(differentiate(p, Variable::S), ctx.lambda(), -1,
                                              2 * ctx.n());
  return {ctx.rings(), tsu() * ds};
}

AngularityReport is_angular_dual(const DualAlgebra& algebra, const DualElement& l,
                                 AngularityMode mode) {
  const int n = algebra.n();
  require_n(n);
  std::optional<AngularityWitness> witness;
  if (mode == AngularityMode::Fast) {
    witness = find_witness(algebra, l, Label::nu(2 * n - 3, n - 2));
  } else {
    for (const Label& label : algebra.basis()->labels()) {
      if (label.kind != BasisKind::N) continue;
      witness = find_witness(algebra, l, label);
      if (witness) break;
    }
  }
  const DualPresentation pres = algebra.to_presentation(l);
  AngularityReport report{!witness, witness, angularity_residue_v(pres.p1, pres.p2)};
  if (report.angular != report.residue.is_zero()) {
    throw InconsistencyError("angularity criterion disagrees with the definition");
  }
  return report;
}

AngularityReport is_angular_presentation(const DualAlgebra& algebra, const ValElement& p1,
                                         const TildeValElement& p2, PresentationForm form) {
  require_n(algebra.n());
  const ValElement residue = form == PresentationForm::V ? angularity_residue_v(p1, p2)
                                                         : angularity_residue_w(p1, p2);
  const DualPresentation v = form == PresentationForm::V
                                 ? DualPresentation{p1, p2}
                                 : to_v_form(WPresentation{p1, p2.poly()});
  const DualElement l = algebra.from_presentation(v);
  std::optional<AngularityWitness> witness =
      find_witness(algebra, l, Label::nu(2 * algebra.n() - 3, algebra.n() - 2));
  AngularityReport report{residue.is_zero(), witness, residue};
  if (report.angular == witness.has_value()) {
    throw InconsistencyError("angularity criterion disagrees with the definition");
  }
  return report;
}

AngularityReport is_angular_valuation(const WeightedPoly& p, const LambdaContext& ctx) {
  require_n(ctx.n());
  const ValElement residue = angularity_residue_valuation(p, ctx);
  const DualElement l = ctx.evaluate_valuation(p);
  const int n = ctx.n();
  std::optional<AngularityWitness> witness =
      find_witness(ctx.dual(), l, Label::nu(2 * n - 3, n - 2));
  AngularityReport report{residue.is_zero(), witness, residue};
  if (report.angular == witness.has_value()) {
    throw InconsistencyError("angularity criterion disagrees with the definition");
  }
  return report;
}

CurvElement angular_measure_from_potential(const CurvSpace& space, const WeightedPoly& g) {
  require_n(space.n());
  if (g.has_v()) throw DomainError("potential must not contain v");
  // g(t, s) = G(t, 4s - t^2), so dG/du = (1/4) dg/ds.
  const WeightedPoly gs = differentiate(g, Variable::S);
  const WeightedPoly q1 = g + Scalar(Rational(1, 2)) * WeightedPoly::u() * gs;
  const WeightedPoly q2 = Scalar::pi_power(-1, 1) * WeightedPoly::t() * gs;
  return space.ell_map(ValElement(space.rings(), q1)) +
         space.en_map(TildeValElement(space.rings(), q2));
}

std::vector<WeightedPoly> angular_valuation_basis(const LambdaContext& ctx, int k) {
  require_n(ctx.n());
  if (k < 0 || k > 2 * ctx.n()) throw DomainError("degree out of range");
  const std::vector<Monomial> monos = RingContext::monomials_of_degree(k);

  std::vector<ScalarVector> residues;
  for (const Monomial& m : monos) {
    residues.push_back(
        val_coordinates(angularity_residue_valuation(WeightedPoly::monomial(m), ctx)));
  }
  const std::size_t rows = residues.empty() ? 0 : residues.front().size();
  const std::vector<ScalarVector> kernel = nullspace(Matrix::from_columns(residues, rows));

  std::vector<WeightedPoly> candidates;
  std::vector<ScalarVector> images;
  for (const ScalarVector& x : kernel) {
    WeightedPoly p;
    for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], x[i]);
    candidates.push_back(p);
    images.push_back(ctx.evaluate_valuation(p).coefficients());
  }
  std::vector<WeightedPoly> out;
  if (candidates.empty()) return out;
  const RowEchelon ech = row_reduce(Matrix::from_columns(images, images.front().size()));
  for (std::size_t c : ech.pivot_columns) out.push_back(candidates[c]);
  return out;
}

}  // namespace hig
