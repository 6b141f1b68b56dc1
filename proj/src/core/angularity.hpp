#pragma once

#include <optional>
#include <vector>

#include "core/space_forms.hpp"

namespace hig {

enum class AngularityMode { Full, Fast };
enum class PresentationForm { V, W };

// The N* label whose product with L has the Delta* component `component`.
struct AngularityWitness {
  Label n_star;
  Label delta_star;
  Scalar coefficient;
};

struct AngularityReport {
  bool angular = false;
  std::optional<AngularityWitness> witness;
  // Criterion polynomial reduced in Val; zero exactly when angular.
  ValElement residue;
};

// tsu(-6 t p2 + dp1/ds - (dp2/ds) t u)
ValElement angularity_residue_v(const ValElement& p1, const TildeValElement& p2);
// tsu(dp1/ds - 2 t p2)
ValElement angularity_residue_w(const ValElement& p1, const TildeValElement& p2);
// tsu (dp/ds)(t / (1 - lambda s)^(1/2), s)
ValElement angularity_residue_valuation(const WeightedPoly& p, const LambdaContext& ctx);

// Full mode multiplies by every N*; fast mode only by N*_{2n-3,n-2}. The
// verdict is cross-checked against the polynomial criterion.
AngularityReport is_angular_dual(const DualAlgebra& algebra, const DualElement& l,
                                 AngularityMode mode = AngularityMode::Full);
AngularityReport is_angular_presentation(const DualAlgebra& algebra, const ValElement& p1,
                                         const TildeValElement& p2, PresentationForm form);
AngularityReport is_angular_valuation(const WeightedPoly& p, const LambdaContext& ctx);

// l(g + 2u dg/du) + n((4t/pi) dg/du) for g written in t and s.
CurvElement angular_measure_from_potential(const CurvSpace& space, const WeightedPoly& g);

// Polynomials of weighted degree k satisfying the angularity condition,
// chosen so their images as valuations are linearly independent.
std::vector<WeightedPoly> angular_valuation_basis(const LambdaContext& ctx, int k);

}  // namespace hig
