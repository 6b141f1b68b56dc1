#pragma once

#include <string_view>

#include "core/dual_algebra.hpp"

namespace hig {

// Grammar: sums and differences of products; '*' may be omitted between
// factors; '/' divides by a nonzero constant; '^' takes an integer exponent,
// negative only for a constant monomial such as pi. Atoms: integers, t, s,
// v, pi, u (= 4s - t^2), parentheses, and basis labels Delta(k,q), N(k,q),
// DeltaStar(k,q), NStar(k,q).

Rational parse_rational(std::string_view text);
Scalar parse_scalar(std::string_view text);
WeightedPoly parse_poly(std::string_view text);
// Constant combination of Delta/N labels.
CurvElement parse_curv_element(std::string_view text, const CurvBasisPtr& basis);
// DeltaStar/NStar labels with polynomial coefficients; a polynomial p in
// t, s, v stands for p(tbar, sbar, vbar) and a coefficient multiplies its
// label in the dual algebra.
DualElement parse_dual_element(std::string_view text, const DualAlgebra& algebra);

}  // namespace hig
