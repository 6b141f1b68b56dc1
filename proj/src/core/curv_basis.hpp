#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/linalg.hpp"

namespace hig {

enum class BasisKind { Delta, N };

// Delta_{k,q} or N_{k,q}; the same labels index the dual basis.
struct Label {
  BasisKind kind = BasisKind::Delta;
  int k = 0;
  int q = 0;

  static Label delta(int k, int q) { return {BasisKind::Delta, k, q}; }
  static Label nu(int k, int q) { return {BasisKind::N, k, q}; }

  // Basis order: by k, then q, Delta before N.
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
  friend bool operator==(const Label&, const Label&) = default;
};

// Delta_{k,q}: 0 <= k <= 2n, max(0, k-n) <= q <= floor(k/2).
// N_{k,q}:     1 <= k <= 2n-3, max(0, k-n+1) <= q < k/2.
bool is_legal(int n, const Label& label);

// "Delta(2,1)", "N(3,1)"; with dual = true "DeltaStar(2,1)", "NStar(3,1)".
std::string label_name(const Label& label, bool dual = false);

std::vector<Label> enumerate_basis(int n);

class CurvBasis {
 public:
  static std::shared_ptr<const CurvBasis> create(int n);

  int n() const { return n_; }
  std::span<const Label> labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const Label& operator[](std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(const Label& label) const;
  // Throws RangeError for an illegal label.
  std::size_t index(const Label& label) const;
  std::span<const std::size_t> indices_of_degree(int k) const;

 private:
  explicit CurvBasis(int n);

  int n_;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::vector<std::vector<std::size_t>> by_degree_;
};

using CurvBasisPtr = std::shared_ptr<const CurvBasis>;

// Coordinate vector over the Delta/N basis for a fixed n. Tag separates
// curvature measures from dual curvature measures at the type level.
template <class Tag>
class BasisVector {
 public:
  explicit BasisVector(CurvBasisPtr basis)
      : basis_(std::move(basis)), coeffs_(basis_->size()) {}
  BasisVector(CurvBasisPtr basis, ScalarVector coeffs);

  static BasisVector of(CurvBasisPtr basis, const Label& label, const Scalar& c = Scalar(1)) {
    BasisVector v(std::move(basis));
    v.add(label, c);
    return v;
  }

  int n() const { return basis_->n(); }
  const CurvBasis& basis() const { return *basis_; }
  const CurvBasisPtr& basis_ptr() const { return basis_; }
  const ScalarVector& coefficients() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  Scalar coeff(const Label& label) const { return coeffs_[basis_->index(label)]; }
  bool is_zero() const { return hig::is_zero(coeffs_); }

  // Throws RangeError for an illegal label.
  void add(const Label& label, const Scalar& c) { coeffs_[basis_->index(label)] += c; }
  // Silently ignores illegal labels; the multiplication tables rely on this.
  void add_if_legal(const Label& label, const Scalar& c) {
    if (c.is_zero()) return;
    if (auto i = basis_->find(label)) coeffs_[*i] += c;
  }
  BasisVector degree_part(int k) const;

  BasisVector& operator+=(const BasisVector& rhs);
  BasisVector& operator-=(const BasisVector& rhs);
  BasisVector& operator*=(const Scalar& c);
  friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
  friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
  friend BasisVector operator*(const Scalar& c, BasisVector a) { return a *= c; }
  BasisVector operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const BasisVector& a, const BasisVector& b) {
    return a.n() == b.n() && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same(const BasisVector& rhs) const;

  CurvBasisPtr basis_;
  ScalarVector coeffs_;
};

struct CurvTag {};
struct DualTag {};
using CurvElement = BasisVector<CurvTag>;
using DualElement = BasisVector<DualTag>;

// <L, Phi> in the dual-basis coordinates.
Scalar pairing(const DualElement& l, const CurvElement& phi);

}  // namespace hig
