#pragma once

#include <compare>
#include <map>
#include <string>

#include "core/scalar.hpp"

namespace hig {

enum class Variable { T, S, V };

// t^t s^s v^v. Weighted degree: t has weight 1, s weight 2, v weight 3.
struct Monomial {
  int t = 0;
  int s = 0;
  int v = 0;

  int weight() const { return t + 2 * s + 3 * v; }
  Monomial operator*(const Monomial& o) const { return {t + o.t, s + o.s, v + o.v}; }

  // Lexicographic on (v, s, t); display order is the reverse of this.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.v <=> b.v; c != 0) return c;
    if (auto c = a.s <=> b.s; c != 0) return c;
    return a.t <=> b.t;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class WeightedPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  WeightedPoly() = default;
  WeightedPoly(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  WeightedPoly(long constant) : WeightedPoly(Scalar(constant)) {}  // NOLINT

  static WeightedPoly monomial(const Monomial& m, const Scalar& coeff = Scalar(1));
  static WeightedPoly t() { return monomial({1, 0, 0}); }
  static WeightedPoly s() { return monomial({0, 1, 0}); }
  static WeightedPoly v() { return monomial({0, 0, 1}); }
  // u = 4s - t^2
  static WeightedPoly u();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_v() const;
  Scalar coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int max_weight() const;
  int min_weight() const;
  bool is_homogeneous() const;
  WeightedPoly homogeneous_component(int weight) const;
  // Drops every term of weight > max_weight.
  WeightedPoly truncated(int max_weight) const;

  void add_term(const Monomial& m, const Scalar& coeff);

  WeightedPoly operator-() const;
  WeightedPoly& operator+=(const WeightedPoly& rhs);
  WeightedPoly& operator-=(const WeightedPoly& rhs);
  WeightedPoly& operator*=(const Scalar& c);
  friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
  friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { return a -= b; }
  friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator*(WeightedPoly a, const Scalar& c) { return a *= c; }
  friend WeightedPoly operator*(const Scalar& c, WeightedPoly a) { return a *= c; }
  friend bool operator==(const WeightedPoly&, const WeightedPoly&) = default;

  // Product with terms of weight > max_weight discarded.
  static WeightedPoly multiply_truncated(const WeightedPoly& a, const WeightedPoly& b,
                                         int max_weight);

  // "c * t^a s^b v^c" per term, joined by " + ", in descending (v, s, t)
  // order. Multi-term coefficients are parenthesized. Zero prints as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

WeightedPoly pow(const WeightedPoly& base, unsigned exponent);

// Part of weighted degree k in log(1 + t + s); k >= 1.
WeightedPoly fu_polynomial(int k);
// Part of weighted degree k in -1 / (1 + t + s)^2.
WeightedPoly wannerer_polynomial(int k);
// Part of weighted degree k in e^t (sin r - r cos r) / (2 r^3), r^2 = u,
// written in t and s.
WeightedPoly g_polynomial(int k);

WeightedPoly differentiate(const WeightedPoly& p, Variable var);

// (1 - lambda s)^alpha as a polynomial in s, keeping s-powers j with
// 2j <= max_weight.
WeightedPoly one_minus_lambda_s_power(const Rational& lambda, const Rational& alpha,
                                      int max_weight);

// t -> t (1 - lambda s)^(half_power / 2) applied to p (which must not contain
// v); the binomial series is cut beyond weight truncation_degree.
WeightedPoly substitute_rescaled(const WeightedPoly& p, const Rational& lambda,
                                 int half_power, int truncation_degree);

}  // namespace hig
