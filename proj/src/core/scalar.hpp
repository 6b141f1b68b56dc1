#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hig {

using Rational = mpq_class;

// Exact coefficient: a finite sum  sum_e c_e * pi^e  with rational c_e and
// integer (possibly negative) exponents e. Terms are kept sorted by exponent
// and never hold a zero coefficient, so equality is structural.
class Scalar {
 public:
  using Term = std::pair<int, Rational>;

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  static Scalar pi_power(int exponent, const Rational& coeff = Rational(1));
  // Builds from arbitrary (exponent, coeff) pairs; duplicates are summed.
  static Scalar from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // True for zero and for pure rationals (only the pi^0 term).
  bool is_rational() const;
  // Coefficient of pi^exponent.
  Rational coefficient(int exponent) const;
  std::span<const Term> terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_;
  }

  // Canonical text: "num/den * pi^e" per term, ascending in e, joined by
  // " + "; the pi factor is omitted for e = 0 and zero prints as "0".
  std::string to_string() const;

  // Display only; never used for decisions.
  double approximate() const;

 private:
  std::vector<Term> terms_;
};

Scalar pow(const Scalar& base, unsigned exponent);

// Volume of the i-dimensional unit ball: pi^m / m! for i = 2m and
// pi^m 2^(2m+1) m! / (2m+1)! for i = 2m+1.
Scalar ball_volume(int i);

// Canonicalized num/den; den must be nonzero.
Rational make_rational(long num, long den = 1);

Rational factorial(unsigned k);
Rational binomial(long top, long bottom);
// Generalized binomial coefficient alpha (alpha-1) ... (alpha-j+1) / j!.
Rational binomial(const Rational& alpha, unsigned j);

std::string rational_to_string(const Rational& r);

}  // namespace hig
