#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "core/linalg.hpp"
#include "core/poly.hpp"

namespace hig {

// Val  = C[t,s] / (f_{n+1}, f_{n+2})   (invariant valuations, Alesker product)
// Tilde = C[t,s] / (q_{n-1}, q_n)      (coefficients of the n-map image)
enum class Quotient { Val, Tilde };

// Graded normal-form data for both quotient rings at a fixed n. Each graded
// slice is reduced by exact row reduction of the ideal's slice; pivots are
// taken at the highest s-exponents, so the normal-form monomials are the
// ones with the smallest s-exponent (t^k first).
class RingContext {
 public:
  static std::shared_ptr<const RingContext> create(int n);

  int n() const { return n_; }
  // Highest degree with a nonzero slice; -1 for the zero ring.
  int top_degree(Quotient q) const;

  // t^k, t^(k-2) s, ... in ascending s-exponent.
  static std::vector<Monomial> monomials_of_degree(int k);
  std::span<const Monomial> normal_basis(Quotient q, int k) const;
  std::size_t dimension(Quotient q, int k) const { return normal_basis(q, k).size(); }
  // Dimensions of degrees 0..top_degree(q).
  std::vector<std::size_t> dimensions(Quotient q) const;
  std::size_t total_dimension(Quotient q) const;
  // Normal-form monomials of all degrees, degree-major.
  std::vector<Monomial> all_normal_monomials(Quotient q) const;

  // Coordinates of the weight-k part of p over normal_basis(q, k).
  ScalarVector coordinates(Quotient q, const WeightedPoly& p, int k) const;
  WeightedPoly from_coordinates(Quotient q, int k, std::span<const Scalar> coords) const;
  // Canonical representative; p must not contain v.
  WeightedPoly normal_form(Quotient q, const WeightedPoly& p) const;

  // Evaluation of the weight-2n part: t^(2n-2m) s^m ->
  // C(2n-2m, n-m) / omega_{2n}.
  Scalar top_evaluation(const WeightedPoly& p) const;
  // <PD(a), b> = top_evaluation of (a b).
  Scalar pd_pair(const WeightedPoly& a, const WeightedPoly& b) const;
  // Rows: normal_basis(Val, k); columns: normal_basis(Val, 2n - k).
  const Matrix& gram(int k) const;

 private:
  struct Slice {
    std::vector<Monomial> monomials;
    std::vector<Monomial> basis;
    // reduction[i]: coordinates of monomials[i] over basis.
    std::vector<ScalarVector> reduction;
  };

  explicit RingContext(int n);
  static Slice build_slice(int k, std::span<const WeightedPoly> generators);
  const Slice* slice(Quotient q, int k) const;

  int n_;
  std::array<std::vector<Slice>, 2> slices_;
  std::vector<Matrix> gram_;
};

using RingContextPtr = std::shared_ptr<const RingContext>;

// Residue class in one of the two quotient rings, stored as its normal form.
template <Quotient Q>
class RingElement {
 public:
  RingElement(RingContextPtr ctx, const WeightedPoly& p)
      : ctx_(std::move(ctx)), poly_(ctx_->normal_form(Q, p)) {}

  static RingElement zero(RingContextPtr ctx) { return RingElement(std::move(ctx), {}); }
  static RingElement one(RingContextPtr ctx) { return RingElement(std::move(ctx), 1); }

  const RingContextPtr& context() const { return ctx_; }
  const WeightedPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  ScalarVector coordinates(int k) const { return ctx_->coordinates(Q, poly_, k); }

  RingElement operator-() const { return {ctx_, -poly_}; }
  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    return {a.ctx_, a.poly_ + b.poly_};
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    return {a.ctx_, a.poly_ - b.poly_};
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    return {a.ctx_, a.poly_ * b.poly_};
  }
  friend RingElement operator*(const Scalar& c, const RingElement& a) {
    return {a.ctx_, a.poly_ * c};
  }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ctx_->n() == b.ctx_->n() && a.poly_ == b.poly_;
  }

 private:
  static void check_same(const RingElement& a, const RingElement& b);

  RingContextPtr ctx_;
  WeightedPoly poly_;
};

using ValElement = RingElement<Quotient::Val>;
using TildeValElement = RingElement<Quotient::Tilde>;

ValElement reduce_val(const WeightedPoly& p, const RingContextPtr& ctx);
TildeValElement reduce_tilde(const WeightedPoly& p, const RingContextPtr& ctx);
Scalar pd_pair(const ValElement& a, const ValElement& b);

}  // namespace hig
