#include "core/poly.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace hig {

WeightedPoly::WeightedPoly(const Scalar& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

WeightedPoly WeightedPoly::monomial(const Monomial& m, const Scalar& coeff) {
  if (m.t < 0 || m.s < 0 || m.v < 0) throw DomainError("negative exponent in monomial");
  WeightedPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
  return p;
}

WeightedPoly WeightedPoly::u() {
  WeightedPoly p;
  p.add_term({0, 1, 0}, Scalar(4));
  p.add_term({2, 0, 0}, Scalar(-1));
  return p;
}

bool WeightedPoly::has_v() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.v != 0; });
}

Scalar WeightedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int WeightedPoly::max_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

int WeightedPoly::min_weight() const {
  if (terms_.empty()) return -1;
  int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_) w = std::min(w, m.weight());
  return w;
}

bool WeightedPoly::is_homogeneous() const { return max_weight() == min_weight(); }

WeightedPoly WeightedPoly::homogeneous_component(int weight) const {
  WeightedPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.weight() == weight) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

WeightedPoly WeightedPoly::truncated(int max_weight) const {
  WeightedPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.weight() <= max_weight) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void WeightedPoly::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (m.t < 0 || m.s < 0 || m.v < 0) throw DomainError("negative exponent in monomial");
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeightedPoly WeightedPoly::operator-() const {
  WeightedPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

WeightedPoly& WeightedPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
  WeightedPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

WeightedPoly WeightedPoly::multiply_truncated(const WeightedPoly& a, const WeightedPoly& b,
                                              int max_weight) {
  WeightedPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.weight() + mb.weight() <= max_weight) out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

std::string WeightedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    std::string coeff = c.to_string();
    if (!c.is_monomial()) coeff = "(" + coeff + ")";
    out += coeff;
    std::string vars;
    auto append = [&vars](char name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += ' ';
      vars += name;
      vars += '^' + std::to_string(e);
    };
    append('t', m.t);
    append('s', m.s);
    append('v', m.v);
    if (!vars.empty()) out += " * " + vars;
  }
  return out;
}

WeightedPoly pow(const WeightedPoly& base, unsigned exponent) {
  WeightedPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

// The weight-k part of a series sum_m a_m (t + s)^m collects t^a s^b with
// a + 2b = k, m = a + b, coefficient a_m C(m, b).
namespace {

template <class SeriesCoeff>
WeightedPoly degree_part_in_t_plus_s(int k, SeriesCoeff a) {
  WeightedPoly out;
  for (int b = 0; 2 * b <= k; ++b) {
    const int t_exp = k - 2 * b;
    const int m = t_exp + b;
    out.add_term({t_exp, b, 0}, Scalar(a(m) * binomial(m, b)));
  }
  return out;
}

}  // namespace

WeightedPoly fu_polynomial(int k) {
  if (k < 1) throw DomainError("fu_polynomial requires k >= 1");
  return degree_part_in_t_plus_s(k, [](int m) {
    return make_rational(m % 2 == 1 ? 1 : -1, m);
  });
}

WeightedPoly wannerer_polynomial(int k) {
  if (k < 0) throw DomainError("wannerer_polynomial requires k >= 0");
  // -1/(1+x)^2 = sum_m (-1)^(m+1) (m+1) x^m
  return degree_part_in_t_plus_s(k, [](int m) {
    return Rational(m % 2 == 1 ? (m + 1) : -(m + 1));
  });
}

WeightedPoly g_polynomial(int k) {
  if (k < 0) throw DomainError("g_polynomial requires k >= 0");
  // (sin r - r cos r) / (2 r^3) = sum_j (-1)^j (j+1) u^j / (2j+3)!
  WeightedPoly out;
  const WeightedPoly u = WeightedPoly::u();
  for (int j = 0; 2 * j <= k; ++j) {
    Rational c = Rational(j % 2 == 0 ? (j + 1) : -(j + 1)) / factorial(2 * j + 3);
    c /= factorial(static_cast<unsigned>(k - 2 * j));
    out += WeightedPoly::monomial({k - 2 * j, 0, 0}, Scalar(c)) *
           pow(u, static_cast<unsigned>(j));
  }
  return out;
}

WeightedPoly differentiate(const WeightedPoly& p, Variable var) {
  WeightedPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial d = m;
    int e = 0;
    switch (var) {
      case Variable::T: e = d.t--; break;
      case Variable::S: e = d.s--; break;
      case Variable::V: e = d.v--; break;
    }
    if (e != 0) out.add_term(d, c * Scalar(e));
  }
  return out;
}

WeightedPoly one_minus_lambda_s_power(const Rational& lambda, const Rational& alpha,
                                      int max_weight) {
  WeightedPoly out;
  Rational neg_lambda_pow(1);
  for (int j = 0; 2 * j <= max_weight; ++j) {
    out.add_term({0, j, 0}, Scalar(binomial(alpha, static_cast<unsigned>(j)) * neg_lambda_pow));
    neg_lambda_pow *= -lambda;
  }
  return out;
}

WeightedPoly substitute_rescaled(const WeightedPoly& p, const Rational& lambda,
                                 int half_power, int truncation_degree) {
  if (p.has_v()) throw DomainError("substitute_rescaled: polynomial contains v");
  WeightedPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() > truncation_degree) continue;
    const Rational alpha = make_rational(m.t * half_power, 2);
    const WeightedPoly factor =
        one_minus_lambda_s_power(lambda, alpha, truncation_degree - m.weight());
    out += WeightedPoly::monomial(m, c) * factor;
  }
  return out;
}

}  // namespace hig
