#include "core/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "core/errors.hpp"

namespace hig {

namespace {

void normalize(std::vector<Scalar::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Scalar::Term> merged;
  merged.reserve(terms.size());
  for (auto& term : terms) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const auto& t) { return sgn(t.second) == 0; });
  terms = std::move(merged);
}

}  // namespace

Scalar::Scalar(long value) {
  if (value != 0) terms_.emplace_back(0, Rational(value));
}

Scalar::Scalar(const Rational& value) {
  if (sgn(value) != 0) {
    Rational r = value;
    r.canonicalize();
    terms_.emplace_back(0, std::move(r));
  }
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  if (sgn(r) != 0) terms_.emplace_back(0, std::move(r));
}

Scalar Scalar::pi_power(int exponent, const Rational& coeff) {
  Scalar out;
  if (sgn(coeff) != 0) {
    Rational r = coeff;
    r.canonicalize();
    out.terms_.emplace_back(exponent, std::move(r));
  }
  return out;
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.second.canonicalize();
  normalize(terms);
  Scalar out;
  out.terms_ = std::move(terms);
  return out;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

Rational Scalar::coefficient(int exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sgn(sum) != 0) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return Scalar::pi_power(a.terms_[0].first + b.terms_[0].first,
                            a.terms_[0].second * b.terms_[0].second);
  }
  std::vector<Scalar::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) terms.emplace_back(ea + eb, ca * cb);
  }
  normalize(terms);
  Scalar out;
  out.terms_ = std::move(terms);
  return out;
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

// Exact Laurent division. A monomial divisor always divides; otherwise both
// sides are shifted to ordinary polynomials in pi with nonzero constant term
// (the divisor is then coprime to pi) and long division must leave no
// remainder.
Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (is_zero()) return *this;
  if (rhs.is_monomial()) {
    const auto& [e, c] = rhs.terms_.front();
    for (auto& t : terms_) {
      t.first -= e;
      t.second /= c;
    }
    return *this;
  }
  const int shift_a = terms_.front().first;
  const int shift_b = rhs.terms_.front().first;
  const int deg_b = rhs.terms_.back().first - shift_b;
  std::map<int, Rational> rem;
  for (const auto& [e, c] : terms_) rem[e - shift_a] = c;
  std::map<int, Rational> divisor;
  for (const auto& [e, c] : rhs.terms_) divisor[e - shift_b] = c;
  const Rational& lead = divisor.rbegin()->second;
  std::vector<Term> quotient;
  while (!rem.empty() && rem.rbegin()->first >= deg_b) {
    const int e = rem.rbegin()->first - deg_b;
    Rational c = rem.rbegin()->second / lead;
    for (const auto& [de, dc] : divisor) {
      Rational& slot = rem[e + de];
      slot -= c * dc;
      if (sgn(slot) == 0) rem.erase(e + de);
    }
    quotient.emplace_back(e + shift_a - shift_b, std::move(c));
  }
  if (!rem.empty()) {
    throw DomainError("inexact division of Laurent polynomials in pi: (" +
                      to_string() + ") / (" + rhs.to_string() + ")");
  }
  normalize(quotient);
  terms_ = std::move(quotient);
  return *this;
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(c);
    if (e != 0) out += " * pi^" + std::to_string(e);
  }
  return out;
}

double Scalar::approximate() const {
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c.get_d() * std::pow(std::numbers::pi, e);
  }
  return sum;
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return Rational(out);
}

Rational binomial(const Rational& alpha, unsigned j) {
  Rational out(1);
  for (unsigned i = 0; i < j; ++i) {
    out *= alpha - Rational(i);
    out /= Rational(i + 1);
  }
  return out;
}

Scalar ball_volume(int i) {
  if (i < 0) throw DomainError("ball_volume of negative dimension");
  const unsigned m = static_cast<unsigned>(i / 2);
  if (i % 2 == 0) return Scalar::pi_power(static_cast<int>(m), 1 / factorial(m));
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * m + 1);
  return Scalar::pi_power(static_cast<int>(m),
                          Rational(two_pow) * factorial(m) / factorial(2 * m + 1));
}

}  // namespace hig
