#pragma once

#include <string>

#include <json.hpp>

#include "core/angularity.hpp"

namespace hig {

using Json = nlohmann::ordered_json;

// "t^2 s^1", "1" for the constant monomial.
std::string monomial_to_string(const Monomial& m);

// "c * Delta(k,q) + ..." in basis order; "0" when empty.
std::string element_to_string(const CurvElement& x);
std::string element_to_string(const DualElement& x);

Json label_to_json(const Label& label, bool dual);
Label label_from_json(const Json& j, bool dual);

// {"n": .., "terms": [{"basis": "Delta", "k": .., "q": .., "coeff": ".."}]}
Json element_to_json(const CurvElement& x);
Json element_to_json(const DualElement& x);
CurvElement curv_element_from_json(const Json& j, const CurvBasisPtr& basis);
DualElement dual_element_from_json(const Json& j, const CurvBasisPtr& basis);

std::string scalar_to_latex(const Scalar& c);
std::string label_to_latex(const Label& label);

// One object per target: {"n", "target", "terms": [{"left", "right", "coeff"}]}.
Json local_kinematic_json(const LocalKinematic& k);
std::string local_kinematic_csv(const LocalKinematic& k);
std::string local_kinematic_latex(const LocalKinematic& k);

// One object per source monomial: {"n", "source", "terms": [{"left", "right", "coeff"}]}.
Json global_kinematic_json(const GlobalKinematic& k);
std::string global_kinematic_csv(const GlobalKinematic& k);
std::string global_kinematic_latex(const GlobalKinematic& k);

Json report_to_json(const AngularityReport& r);

}  // namespace hig
