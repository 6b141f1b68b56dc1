#include "io/format.hpp"

#include <cstdlib>
#include <sstream>

#include "core/errors.hpp"
#include "io/parse.hpp"

namespace hig {

namespace {

const char* basis_name(BasisKind kind, bool dual) {
  if (kind == BasisKind::Delta) return dual ? "DeltaStar" : "Delta";
  return dual ? "NStar" : "N";
}

template <class Tag>
std::string to_text(const BasisVector<Tag>& x, bool dual) {
  std::string out;
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = x[i].to_string();
    if (!x[i].is_monomial()) c = "(" + c + ")";
    out += c + " * " + label_name(x.basis()[i], dual);
  }
  return out.empty() ? "0" : out;
}

template <class Tag>
Json to_json(const BasisVector<Tag>& x, bool dual) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    if (x[i].is_zero()) continue;
    Json t = label_to_json(x.basis()[i], dual);
    t["coeff"] = x[i].to_string();
    terms.push_back(std::move(t));
  }
  return Json{{"n", x.n()}, {"terms", std::move(terms)}};
}

template <class Tag>
BasisVector<Tag> from_json(const Json& j, const CurvBasisPtr& basis, bool dual) {
  BasisVector<Tag> out(basis);
  try {
    if (j.at("n").get<int>() != basis->n()) throw DomainError("element JSON has a different n");
    for (const Json& t : j.at("terms")) {
      out.add(label_from_json(t, dual), parse_scalar(t.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed element JSON: ") + e.what());
  }
  return out;
}

std::string monomial_to_latex(const Monomial& m) {
  std::string out;
  auto append = [&out](const char* name, int e) {
    if (e == 0) return;
    out += name;
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  };
  append("t", m.t);
  append("s", m.s);
  append("v", m.v);
  return out.empty() ? "\\chi" : out;
}

std::string term_to_latex(int e, const Rational& c, bool leading) {
  const bool negative = sgn(c) < 0;
  const mpz_class num = abs(c.get_num());
  const mpz_class& den = c.get_den();
  std::string pi;
  if (std::abs(e) == 1) pi = "\\pi";
  if (std::abs(e) > 1) pi = "\\pi^{" + std::to_string(std::abs(e)) + "}";
  std::string top = num.get_str();
  std::string bottom = den.get_str();
  if (e > 0) top = top == "1" ? pi : top + pi;
  if (e < 0) bottom = bottom == "1" ? pi : bottom + pi;
  std::string body = bottom == "1" ? top : "\\frac{" + top + "}{" + bottom + "}";
  std::string sign = negative ? "-" : (leading ? "" : "+");
  if (!leading) sign = " " + sign + " ";
  return sign + body;
}

}  // namespace

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  auto append = [&out](char name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    out += '^' + std::to_string(e);
  };
  append('t', m.t);
  append('s', m.s);
  append('v', m.v);
  return out.empty() ? "1" : out;
}

std::string element_to_string(const CurvElement& x) { return to_text(x, false); }
std::string element_to_string(const DualElement& x) { return to_text(x, true); }

Json label_to_json(const Label& label, bool dual) {
  return Json{{"basis", basis_name(label.kind, dual)}, {"k", label.k}, {"q", label.q}};
}

Label label_from_json(const Json& j, bool dual) {
  try {
    const std::string name = j.at("basis").get<std::string>();
    Label label{BasisKind::Delta, j.at("k").get<int>(), j.at("q").get<int>()};
    if (name == basis_name(BasisKind::Delta, dual)) return label;
    if (name == basis_name(BasisKind::N, dual)) {
      label.kind = BasisKind::N;
      return label;
    }
    throw ParseError("unknown basis name '" + name + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed basis label: ") + e.what());
  }
}

Json element_to_json(const CurvElement& x) { return to_json(x, false); }
Json element_to_json(const DualElement& x) { return to_json(x, true); }

CurvElement curv_element_from_json(const Json& j, const CurvBasisPtr& basis) {
  return from_json<CurvTag>(j, basis, false);
}

DualElement dual_element_from_json(const Json& j, const CurvBasisPtr& basis) {
  return from_json<DualTag>(j, basis, true);
}

std::string scalar_to_latex(const Scalar& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [e, r] : c.terms()) out += term_to_latex(e, r, out.empty());
  return c.is_monomial() ? out : "\\left(" + out + "\\right)";
}

std::string label_to_latex(const Label& label) {
  const char* name = label.kind == BasisKind::Delta ? "\\Delta" : "N";
  return std::string(name) + "_{" + std::to_string(label.k) + "," + std::to_string(label.q) + "}";
}

Json local_kinematic_json(const LocalKinematic& k) {
  const CurvBasis& basis = *k.basis;
  Json out = Json::array();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Json terms = Json::array();
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Scalar& c = k(j, a, b);
        if (c.is_zero()) continue;
        terms.push_back(Json{{"left", label_to_json(basis[a], false)},
                             {"right", label_to_json(basis[b], false)},
                             {"coeff", c.to_string()}});
      }
    }
    out.push_back(Json{{"n", basis.n()},
                       {"target", label_to_json(basis[j], false)},
                       {"terms", std::move(terms)}});
  }
  return out;
}

std::string local_kinematic_csv(const LocalKinematic& k) {
  const CurvBasis& basis = *k.basis;
  std::ostringstream out;
  out << "target_basis,target_k,target_q,left_basis,left_k,left_q,right_basis,right_k,right_q,"
         "coeff_text\n";
  auto cells = [](const Label& l) {
    return std::string(basis_name(l.kind, false)) + "," + std::to_string(l.k) + "," +
           std::to_string(l.q);
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Scalar& c = k(j, a, b);
        if (c.is_zero()) continue;
        out << cells(basis[j]) << ',' << cells(basis[a]) << ',' << cells(basis[b]) << ",\""
            << c.to_string() << "\"\n";
      }
    }
  }
  return out.str();
}

std::string local_kinematic_latex(const LocalKinematic& k) {
  const CurvBasis& basis = *k.basis;
  std::ostringstream out;
  out << "\\begin{align*}\n";
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::string rhs;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Scalar& c = k(j, a, b);
        if (c.is_zero()) continue;
        std::string coeff = scalar_to_latex(c);
        if (!rhs.empty()) coeff = coeff.front() == '-' ? " - " + coeff.substr(1) : " + " + coeff;
        rhs += coeff + " " + label_to_latex(basis[a]) + " \\otimes " + label_to_latex(basis[b]);
      }
    }
    out << "K(" << label_to_latex(basis[j]) << ") &= " << (rhs.empty() ? "0" : rhs);
    out << (j + 1 < basis.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{align*}\n";
  return out.str();
}

Json global_kinematic_json(const GlobalKinematic& k) {
  Json out = Json::array();
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    Json terms = Json::array();
    for (std::size_t a = 0; a < k.basis.size(); ++a) {
      for (std::size_t b = 0; b < k.basis.size(); ++b) {
        const Scalar& c = k.by_source[i](a, b);
        if (c.is_zero()) continue;
        terms.push_back(Json{{"left", monomial_to_string(k.basis[a])},
                             {"right", monomial_to_string(k.basis[b])},
                             {"coeff", c.to_string()}});
      }
    }
    out.push_back(Json{{"n", k.rings->n()},
                       {"source", monomial_to_string(k.basis[i])},
                       {"terms", std::move(terms)}});
  }
  return out;
}

std::string global_kinematic_csv(const GlobalKinematic& k) {
  std::ostringstream out;
  out << "source,left,right,coeff_text\n";
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    for (std::size_t a = 0; a < k.basis.size(); ++a) {
      for (std::size_t b = 0; b < k.basis.size(); ++b) {
        const Scalar& c = k.by_source[i](a, b);
        if (c.is_zero()) continue;
        out << monomial_to_string(k.basis[i]) << ',' << monomial_to_string(k.basis[a]) << ','
            << monomial_to_string(k.basis[b]) << ",\"" << c.to_string() << "\"\n";
      }
    }
  }
  return out.str();
}

std::string global_kinematic_latex(const GlobalKinematic& k) {
  std::ostringstream out;
  out << "\\begin{align*}\n";
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    std::string rhs;
    for (std::size_t a = 0; a < k.basis.size(); ++a) {
      for (std::size_t b = 0; b < k.basis.size(); ++b) {
        const Scalar& c = k.by_source[i](a, b);
        if (c.is_zero()) continue;
        std::string coeff = scalar_to_latex(c);
        if (!rhs.empty()) coeff = coeff.front() == '-' ? " - " + coeff.substr(1) : " + " + coeff;
        rhs += coeff + " " + monomial_to_latex(k.basis[a]) + " \\otimes " +
               monomial_to_latex(k.basis[b]);
      }
    }
    out << "k(" << monomial_to_latex(k.basis[i]) << ") &= " << (rhs.empty() ? "0" : rhs);
    out << (i + 1 < k.basis.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{align*}\n";
  return out.str();
}

Json report_to_json(const AngularityReport& r) {
  Json out{{"angular", r.angular}, {"residue", r.residue.poly().to_string()}};
  if (r.witness) {
    out["witness"] = Json{{"n_star", label_to_json(r.witness->n_star, true)},
                          {"component", label_to_json(r.witness->delta_star, true)},
                          {"coeff", r.witness->coefficient.to_string()}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace hig
